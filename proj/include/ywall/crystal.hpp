#pragma once

#include "ywall/cartan.hpp"
#include "ywall/report.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ywall {

struct ElementId {
    std::uint32_t value = 0;
    friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

struct Edge {
    ElementId src;
    Color color = 0;
    ElementId dst;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite I-colored crystal graph. f_i and e_i are stored as two partial
/// maps; add_edge keeps them inverse to each other, the raw setters do not
/// (they exist to build deliberately broken graphs for the axiom checker).
///
/// Every element carries an explicit weight. For complete finite crystals it
/// agrees with weight_of(); truncated graphs (e.g. BFS prefixes of B(lambda))
/// carry the weight of the infinite crystal instead.
class CrystalGraph {
public:
    explicit CrystalGraph(AffineType type) : type_(type) {}

    ElementId add_element(std::string label, Weight weight = {});
    void add_edge(ElementId src, Color color, ElementId dst);
    void set_weight(ElementId b, Weight w);

    void set_f(ElementId src, Color color, std::optional<ElementId> dst);
    void set_e(ElementId src, Color color, std::optional<ElementId> dst);

    AffineType type() const { return type_; }
    std::size_t size() const { return labels_.size(); }
    bool contains(ElementId b) const { return b.value < labels_.size(); }

    const std::string& label(ElementId b) const;
    const Weight& weight(ElementId b) const;
    std::optional<ElementId> find(std::string_view label) const;
    /// Like find() but throws GraphError for unknown labels.
    ElementId at(std::string_view label) const;

    std::optional<ElementId> f(ElementId b, Color i) const;
    std::optional<ElementId> e(ElementId b, Color i) const;

    /// All f-arrows, sorted by (src, color).
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    std::vector<ElementId> elements() const;

    /// Copy with one element (and all arrows touching it) removed; ids above
    /// it shift down by one.
    CrystalGraph without_element(ElementId b) const;

private:
    void check(ElementId b) const;
    static std::size_t slot(ElementId b, Color i);

    AffineType type_;
    std::vector<std::string> labels_;
    std::vector<Weight> weights_;
    std::vector<std::optional<ElementId>> f_;
    std::vector<std::optional<ElementId>> e_;
    std::unordered_map<std::string, ElementId> index_;
};

/// Length of the maximal i-string ending at b (number of e_i steps).
int epsilon(const CrystalGraph& g, ElementId b, Color i);
/// Length of the maximal i-string starting at b (number of f_i steps).
int phi(const CrystalGraph& g, ElementId b, Color i);

Weight epsilon_weight(const CrystalGraph& g, ElementId b);
Weight phi_weight(const CrystalGraph& g, ElementId b);

/// Classical weight sum_i (phi_i - epsilon_i) Lambda_i derived from strings.
Weight weight_of(const CrystalGraph& g, ElementId b);

/// Checks the crystal axioms on every element and color. Weight steps along
/// arrows are compared on the classical part, and additionally on the delta
/// part when any element carries a nonzero delta degree.
Report verify_axioms(const CrystalGraph& g);

/// Tensor product with the lowering rule
///   f_i(b (x) b') = f_i b (x) b'  if phi_i(b) > eps_i(b'),  else b (x) f_i b'.
/// Element (a, b) gets id a * |B| + b.
CrystalGraph tensor(const CrystalGraph& a, const CrystalGraph& b);
std::pair<ElementId, ElementId> tensor_factors(const CrystalGraph& a, const CrystalGraph& b, ElementId ab);
ElementId tensor_element(const CrystalGraph& a, const CrystalGraph& b, ElementId x, ElementId y);

struct Components {
    std::vector<std::size_t> component_of;
    std::size_t count = 0;
};

/// Undirected connectivity over the given colors (all colors by default).
Components connected_components(const CrystalGraph& g, std::span<const Color> colors = {});

/// True iff following arrows from the seed pairs yields a total,
/// well-defined, weight- and color-preserving bijection that maps the arrow
/// sets onto each other.
bool is_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2,
                   std::span<const std::pair<ElementId, ElementId>> seeds);

} // namespace ywall
