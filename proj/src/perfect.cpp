#include "ywall/perfect.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ywall {

namespace {

struct ElementSpec {
    const char* label;
    const char* coordinates;
};

// Table order (see header).
constexpr ElementSpec kB1Elements[] = {
    {"u_phi", "(0,0,0,0,0,0)"}, {"u_1", "(1,0,0,0,0,0)"},    {"u_2", "(0,1,0,0,0,0)"},
    {"u_3", "(0,0,2,0,0,0)"},   {"u_0", "(0,0,1,1,0,0)"},    {"u_3bar", "(0,0,0,2,0,0)"},
    {"u_2bar", "(0,0,0,0,1,0)"}, {"u_1bar", "(0,0,0,0,0,1)"},
};

constexpr ElementSpec kB1PrimeElements[] = {
    {"v_0", "(0,0,0,0,0,0)"},
    {"v_1", "(1,0,0,0,0,0)"},
    {"v_2", "(0,1,0,0,0,0)"},
    {"v_3", "(0,2/3,2/3,0,0,0)"},
    {"v_4", "(0,1/3,4/3,0,0,0)"},
    {"v_5", "(0,1/3,1/3,1,0,0)"},
    {"v_6", "(0,0,2,0,0,0)"},
    {"v_7", "(0,0,1,1,0,0)"},
    {"v_7bar", "(0,1/3,1/3,1/3,1/3,0)"},
    {"v_6bar", "(0,0,0,2,0,0)"},
    {"v_5bar", "(0,0,1,1/3,1/3,0)"},
    {"v_4bar", "(0,0,0,4/3,1/3,0)"},
    {"v_3bar", "(0,0,0,2/3,2/3,0)"},
    {"v_2bar", "(0,0,0,0,1,0)"},
    {"v_1bar", "(0,0,0,0,0,1)"},
};

struct EdgeSpec {
    const char* src;
    Color color;
    const char* dst;
};

constexpr EdgeSpec kB1Edges[] = {
    {"u_phi", 0, "u_1"},  {"u_1bar", 0, "u_phi"}, {"u_3bar", 0, "u_2"},  {"u_2bar", 0, "u_3"},
    {"u_1", 1, "u_2"},    {"u_3", 1, "u_0"},      {"u_0", 1, "u_3bar"},  {"u_2bar", 1, "u_1bar"},
    {"u_2", 2, "u_3"},    {"u_3bar", 2, "u_2bar"},
};

// The two arrows drawn from bare coordinates next to v_7 / v_7bar are
// resolved as f_1: v_7 -> v_6bar and f_2: v_7bar -> v_5bar; build() asserts
// the consequences (level-0 weights, eps(v_7bar) = phi(v_7bar) = Lambda_2).
constexpr EdgeSpec kB1PrimeEdges[] = {
    {"v_0", 0, "v_1"},      {"v_1bar", 0, "v_0"},   {"v_6bar", 0, "v_2"},   {"v_4bar", 0, "v_3"},
    {"v_3bar", 0, "v_4"},   {"v_2bar", 0, "v_6"},   {"v_1", 1, "v_2"},      {"v_4", 1, "v_5"},
    {"v_6", 1, "v_7"},      {"v_7", 1, "v_6bar"},   {"v_5bar", 1, "v_4bar"}, {"v_2bar", 1, "v_1bar"},
    {"v_2", 2, "v_3"},      {"v_3", 2, "v_4"},      {"v_4", 2, "v_6"},      {"v_5", 2, "v_7bar"},
    {"v_7bar", 2, "v_5bar"}, {"v_6bar", 2, "v_4bar"}, {"v_4bar", 2, "v_3bar"}, {"v_3bar", 2, "v_2bar"},
};

template <std::size_t NE, std::size_t NA>
PerfectCrystal build(AffineType type, const ElementSpec (&elements)[NE], const EdgeSpec (&edges)[NA])
{
    PerfectCrystal p{CrystalGraph(type), {}, {}};
    for (const auto& spec : elements) {
        p.graph.add_element(spec.label);
        p.coordinates.emplace_back(spec.coordinates);
    }
    for (const auto& edge : edges)
        p.graph.add_edge(p.graph.at(edge.src), edge.color, p.graph.at(edge.dst));
    for (auto b : p.graph.elements()) {
        p.graph.set_weight(b, weight_of(p.graph, b));
        if (level(type, p.graph.weight(b)) != 0)
            throw std::logic_error("perfect crystal element " + p.graph.label(b) + " is not of level 0");
    }

    for (const auto& lambda : dominant_weights_of_level(type, 1)) {
        std::vector<ElementId> found;
        for (auto b : p.graph.elements())
            if (phi_weight(p.graph, b) == lambda)
                found.push_back(b);
        if (found.size() != 1)
            throw std::logic_error("no unique minimal vector for " + lambda.to_string());
        // The constant ground-state path relies on eps(b_lambda) = phi(b_lambda).
        if (epsilon_weight(p.graph, found.front()) != lambda)
            throw std::logic_error("minimal vector " + p.graph.label(found.front()) + " has eps != phi");
        p.minimal_by_weight.emplace_back(lambda, found.front());
    }
    return p;
}

template <std::size_t N>
std::vector<std::tuple<std::string, Color, std::string>> as_tuples(const EdgeSpec (&edges)[N])
{
    std::vector<std::tuple<std::string, Color, std::string>> out;
    for (const auto& e : edges)
        out.emplace_back(e.src, e.color, e.dst);
    return out;
}

} // namespace

ElementId PerfectCrystal::minimal(const Weight& lambda) const
{
    for (const auto& [w, b] : minimal_by_weight)
        if (w == lambda)
            return b;
    throw std::invalid_argument("weight " + lambda.to_string() + " is not a level-1 dominant weight for " +
                                std::string(to_string(type())));
}

PerfectCrystal build_b1()
{
    return build(AffineType::D4_3, kB1Elements, kB1Edges);
}

PerfectCrystal build_b1_prime()
{
    return build(AffineType::G2_1, kB1PrimeElements, kB1PrimeEdges);
}

const PerfectCrystal& perfect_crystal(AffineType type)
{
    static const PerfectCrystal b1 = build_b1();
    static const PerfectCrystal b1_prime = build_b1_prime();
    return type == AffineType::D4_3 ? b1 : b1_prime;
}

std::vector<std::tuple<std::string, Color, std::string>> perfect_edge_list(AffineType type)
{
    return type == AffineType::D4_3 ? as_tuples(kB1Edges) : as_tuples(kB1PrimeEdges);
}

std::vector<Weight> dominant_weights_of_level(AffineType type, int lvl)
{
    const auto c = central_element(type);
    std::vector<Weight> out;
    for (int m0 = 0; m0 * c[0] <= lvl; ++m0)
        for (int m1 = 0; m0 * c[0] + m1 * c[1] <= lvl; ++m1)
            for (int m2 = 0; m0 * c[0] + m1 * c[1] + m2 * c[2] <= lvl; ++m2)
                if (m0 * c[0] + m1 * c[1] + m2 * c[2] == lvl)
                    out.push_back(Weight{{m0, m1, m2}, 0});
    return out;
}

namespace {

// Solves mu = -(k1 cl(alpha_1) + k2 cl(alpha_2)); nullopt when no integer
// solution exists. The {1,2} principal minor has determinant 1 for both types.
std::optional<std::pair<int, int>> finite_root_coordinates(AffineType type, const Weight& mu)
{
    const auto& a = cartan_matrix(type);
    const int p = a[1][1], q = a[1][2], r = a[2][1], s = a[2][2];
    const int det = p * s - q * r;
    const int y1 = -mu.lambda[1], y2 = -mu.lambda[2];
    const int n1 = s * y1 - q * y2, n2 = -r * y1 + p * y2;
    if (n1 % det != 0 || n2 % det != 0)
        return std::nullopt;
    const int k1 = n1 / det, k2 = n2 / det;
    if (a[0][1] * k1 + a[0][2] * k2 != -mu.lambda[0])
        return std::nullopt;
    return std::pair{k1, k2};
}

} // namespace

Report verify_perfect(const PerfectCrystal& p, int lvl)
{
    const auto& g = p.graph;
    const auto type = p.type();
    Report report;
    report.add("perfect (1)", true, "assumed (out of scope): crystal basis of an irreducible module");

    const auto square = tensor(g, g);
    const auto comps = connected_components(square);
    report.add("perfect (2)", comps.count == 1,
               "B (x) B has " + std::to_string(comps.count) + " component(s) on " + std::to_string(square.size()) +
                   " elements");

    {
        std::string found;
        for (auto candidate : g.elements()) {
            const auto& top = g.weight(candidate);
            bool ok = true;
            int same = 0;
            for (auto b : g.elements()) {
                auto coords = finite_root_coordinates(type, g.weight(b) - top);
                if (!coords || coords->first < 0 || coords->second < 0) {
                    ok = false;
                    break;
                }
                same += g.weight(b) == top ? 1 : 0;
            }
            if (ok && same == 1) {
                found = g.label(candidate) + " " + top.to_string();
                break;
            }
        }
        report.add("perfect (3)", !found.empty(), found.empty() ? "no extremal weight" : "lambda_0 = wt(" + found + ")");
    }

    {
        const auto c = central_element(type);
        int worst = std::numeric_limits<int>::max();
        std::string at;
        for (auto b : g.elements()) {
            const auto eps = epsilon_weight(g, b);
            int value = 0;
            for (std::size_t i = 0; i < kRank; ++i)
                value += c[i] * eps.lambda[i];
            if (value < worst) {
                worst = value;
                at = g.label(b);
            }
        }
        report.add("perfect (4)", worst >= lvl, "min eps(b)(c) = " + std::to_string(worst) + " at " + at);
    }

    {
        bool ok = true;
        std::ostringstream detail;
        for (const auto& lambda : dominant_weights_of_level(type, lvl)) {
            std::vector<ElementId> upper, lower;
            for (auto b : g.elements()) {
                if (epsilon_weight(g, b) == lambda)
                    upper.push_back(b);
                if (phi_weight(g, b) == lambda)
                    lower.push_back(b);
            }
            detail << lambda.to_string() << ": ";
            if (upper.size() == 1 && lower.size() == 1) {
                detail << "b^ = " << g.label(upper[0]) << ", b_ = " << g.label(lower[0]) << "; ";
            } else {
                ok = false;
                detail << upper.size() << " upper / " << lower.size() << " lower candidates; ";
            }
        }
        report.add("perfect (5)", ok, detail.str());
    }
    return report;
}

ElementId ground_state_path(AffineType type, const Weight& lambda)
{
    if (!is_level_one_dominant(type, lambda))
        throw std::invalid_argument("weight " + lambda.to_string() + " is not level-1 dominant for " +
                                    std::string(to_string(type)));
    return perfect_crystal(type).minimal(lambda);
}

} // namespace ywall
