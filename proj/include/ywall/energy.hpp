#pragma once

#include "ywall/perfect.hpp"
#include "ywall/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ywall {

class EnergyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// H : B (x) B -> Z as a dense |B| x |B| table indexed by element ids.
class EnergyTable {
public:
    EnergyTable(AffineType type, std::size_t size) : type_(type), size_(size), values_(size * size, 0) {}

    AffineType type() const { return type_; }
    std::size_t size() const { return size_; }

    int operator()(ElementId x, ElementId y) const { return values_.at(index(x, y)); }
    int& operator()(ElementId x, ElementId y) { return values_.at(index(x, y)); }

    friend bool operator==(const EnergyTable&, const EnergyTable&) = default;

private:
    std::size_t index(ElementId x, ElementId y) const { return x.value * size_ + y.value; }

    AffineType type_;
    std::size_t size_;
    std::vector<int> values_;
};

/// Propagates H over the connected graph B (x) B from a pinned pair using
/// both f and e arrows: unchanged along i != 0; along f_0, -1 when f_0 acts
/// on the left factor and +1 when it acts on the right.
/// Throws EnergyError if B (x) B is disconnected or the rule is inconsistent.
EnergyTable solve_energy(const PerfectCrystal& b, std::pair<ElementId, ElementId> pinned_to_zero);
/// Pinned at (b_Lambda0, b_Lambda0).
EnergyTable solve_energy(const PerfectCrystal& b);

/// Cached solve_energy(perfect_crystal(type)).
const EnergyTable& energy_table(AffineType type);

/// Hand transcription of the published energy tables (row order as above).
EnergyTable reference_table(AffineType type);

/// H from the closed-form description: 0 on the set A (resp. X), 2 on B (resp. Y),
/// 1 elsewhere. The sets are taken verbatim as published.
EnergyTable closed_form_table(AffineType type);

struct TableMismatch {
    ElementId left;
    ElementId right;
    int expected;
    int actual;
};
std::vector<TableMismatch> compare_tables(const EnergyTable& expected, const EnergyTable& actual);

/// Rows and columns in element-id order, headed by short labels.
std::string format_table(const PerfectCrystal& b, const EnergyTable& h);

/// Short table label: "u_3bar" -> "3bar".
std::string short_label(const std::string& label);

/// b(n) in the affinization B^aff.
struct AffineElement {
    ElementId element;
    int n = 0;
    friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

/// x(m) (x) y(n) in B^aff (x) B^aff.
struct AffinePair {
    AffineElement left;
    AffineElement right;
    friend bool operator==(const AffinePair&, const AffinePair&) = default;
};

/// H(x (x) y) + m - n.
int h_aff(const EnergyTable& h, AffineElement x, AffineElement y);

/// Kashiwara operators on B^aff: f_0 raises n by one, e_0 lowers it.
std::optional<AffineElement> affine_f(const PerfectCrystal& b, AffineElement x, Color i);
std::optional<AffineElement> affine_e(const PerfectCrystal& b, AffineElement x, Color i);

/// Tensor rule on B^aff (x) B^aff (signature data comes from the classical part).
std::optional<AffinePair> affine_tensor_f(const PerfectCrystal& b, AffinePair z, Color i);
std::optional<AffinePair> affine_tensor_e(const PerfectCrystal& b, AffinePair z, Color i);

/// T(x(m)) = x(m+1).
inline AffineElement shift(AffineElement x, int by = 1) { return {x.element, x.n + by}; }

/// R(x(m) (x) y(n)) = x(n - H(x(x)y)) (x) y(m + H(x(x)y)).
AffinePair r_matrix(const EnergyTable& h, AffinePair z);

/// Sweeps all element pairs and |m|, |n| <= range, checking the two shift
/// relations, R commuting with every e_i / f_i, and invariance of h_aff
/// along every Kashiwara arrow.
Report verify_r_matrix(const PerfectCrystal& b, const EnergyTable& h, int range = 3);

} // namespace ywall
