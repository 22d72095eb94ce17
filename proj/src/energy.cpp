#include "ywall/energy.hpp"

#include <deque>
#include <functional>
#include <initializer_list>
#include <set>
#include <sstream>

namespace ywall {

EnergyTable solve_energy(const PerfectCrystal& b, std::pair<ElementId, ElementId> pinned_to_zero)
{
    const auto& g = b.graph;
    const auto square = tensor(g, g);
    std::vector<std::optional<int>> value(square.size());

    // Change of H along the f_i arrow leaving `src`.
    auto step = [&](ElementId src, Color i, ElementId dst) {
        if (i != 0)
            return 0;
        return tensor_factors(g, g, src).first != tensor_factors(g, g, dst).first ? -1 : +1;
    };

    const auto start = tensor_element(g, g, pinned_to_zero.first, pinned_to_zero.second);
    value[start.value] = 0;
    std::deque<ElementId> queue{start};
    auto assign = [&](ElementId target, int v, ElementId from, Color i) {
        if (!value[target.value]) {
            value[target.value] = v;
            queue.push_back(target);
        } else if (*value[target.value] != v) {
            throw EnergyError("energy rule inconsistent at " + square.label(target) + " (reached from " +
                              square.label(from) + " along color " + std::to_string(i) + ": " + std::to_string(v) +
                              " vs " + std::to_string(*value[target.value]) + ")");
        }
    };
    while (!queue.empty()) {
        auto z = queue.front();
        queue.pop_front();
        const int hz = *value[z.value];
        for (Color i = 0; i < kRank; ++i) {
            if (auto fz = square.f(z, i))
                assign(*fz, hz + step(z, i, *fz), z, i);
            if (auto ez = square.e(z, i))
                assign(*ez, hz - step(*ez, i, z), z, i);
        }
    }

    EnergyTable h(b.type(), g.size());
    for (auto x : g.elements()) {
        for (auto y : g.elements()) {
            const auto& v = value[tensor_element(g, g, x, y).value];
            if (!v)
                throw EnergyError("B (x) B is disconnected; " + g.label(x) + " (x) " + g.label(y) + " unreachable");
            h(x, y) = *v;
        }
    }
    return h;
}

EnergyTable solve_energy(const PerfectCrystal& b)
{
    const auto ground = b.minimal(Weight::fundamental(0));
    return solve_energy(b, {ground, ground});
}

const EnergyTable& energy_table(AffineType type)
{
    static const EnergyTable d4 = solve_energy(perfect_crystal(AffineType::D4_3));
    static const EnergyTable g2 = solve_energy(perfect_crystal(AffineType::G2_1));
    return type == AffineType::D4_3 ? d4 : g2;
}

namespace {

// Rows: phi,1,2,3,0,3bar,2bar,1bar (both indices).
constexpr int kTableD4[8][8] = {
    {0, 1, 1, 1, 1, 1, 1, 1}, {1, 2, 1, 1, 0, 0, 0, 0}, {1, 2, 2, 1, 1, 1, 0, 0}, {1, 2, 2, 2, 1, 1, 1, 0},
    {1, 2, 2, 2, 1, 1, 1, 0}, {1, 2, 2, 2, 2, 2, 1, 1}, {1, 2, 2, 2, 2, 2, 2, 1}, {1, 2, 2, 2, 2, 2, 2, 2},
};

// Rows: 0,1,...,7,7bar,6bar,...,1bar.
constexpr int kTableG2[15][15] = {
    {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 2, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 2, 2, 1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0}, {1, 2, 2, 1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0},
    {1, 2, 2, 1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0}, {1, 2, 2, 1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0},
    {1, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1, 1, 1, 0}, {1, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1, 1, 1, 0},
    {1, 2, 2, 1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0}, {1, 2, 2, 2, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1},
    {1, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1, 1, 1, 0}, {1, 2, 2, 2, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1},
    {1, 2, 2, 2, 2, 2, 2, 2, 1, 2, 1, 1, 1, 1, 1}, {1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1},
    {1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
};

using Set = std::set<std::string>;
using PairSet = std::set<std::pair<std::string, std::string>>;

void add_product(PairSet& out, const Set& lhs, const Set& rhs)
{
    for (const auto& x : lhs)
        for (const auto& y : rhs)
            out.emplace(x, y);
}

EnergyTable table_from_sets(AffineType type, const PairSet& zero, const PairSet& two)
{
    const auto& b = perfect_crystal(type);
    EnergyTable h(type, b.size());
    for (auto x : b.graph.elements()) {
        for (auto y : b.graph.elements()) {
            const auto key = std::pair{short_label(b.graph.label(x)), short_label(b.graph.label(y))};
            h(x, y) = zero.contains(key) ? 0 : two.contains(key) ? 2 : 1;
        }
    }
    return h;
}

EnergyTable closed_form_d4()
{
    const Set a0{"0", "1", "2", "3"};
    const Set a0_bar{"0", "1bar", "2bar", "3bar"};
    const Set a1{"1", "2", "3", "0", "3bar", "2bar", "1bar"};
    const Set a2{"2", "3", "0", "3bar", "2bar"};
    const Set a3{"3", "0", "3bar"};

    PairSet zero{{"phi", "phi"}, {"2", "2bar"}};
    add_product(zero, a0, {"1bar"});
    add_product(zero, {"1"}, a0_bar);

    PairSet two;
    const Set* a[] = {&a1, &a2, &a3};
    for (int i = 1; i <= 3; ++i) {
        const auto ci = std::to_string(i);
        add_product(two, *a[i - 1], {ci});
        add_product(two, {ci + "bar"}, *a[i - 1]);
    }
    return table_from_sets(AffineType::D4_3, zero, two);
}

EnergyTable closed_form_g2()
{
    const Set all{"0", "1", "2", "3", "4", "5", "6", "7", "7bar", "6bar", "5bar", "4bar", "3bar", "2bar", "1bar"};
    auto minus = [](Set s, std::initializer_list<const char*> drop) {
        for (const char* d : drop)
            s.erase(d);
        return s;
    };
    const Set d0{"1", "2", "3", "4", "5", "7bar"};
    const Set d0_bar{"1bar", "2bar", "3bar", "4bar", "5bar", "7bar"};
    const Set d0_prime{"5", "7", "3bar"};
    const Set d0_prime_bar{"3", "7", "5bar"};

    const Set d1 = minus(all, {"0"});
    const Set d2 = minus(all, {"0", "1", "1bar"});
    const Set d3{"5bar", "6", "7", "6bar", "4bar", "3bar"};
    const Set d3_bar{"6bar", "5", "7", "6", "4", "3"};
    const Set d4 = minus(d3, {"3bar"});
    const Set d4_bar = minus(d3_bar, {"3"});
    const Set d5{"6bar"};
    const Set d5_bar{"6"};
    const Set d6{"6", "7", "6bar"};

    PairSet zero{{"0", "0"}};
    add_product(zero, d0, d0_bar);
    add_product(zero, {"1"}, d0_prime);
    add_product(zero, d0_prime_bar, {"1bar"});

    const Set* d[] = {&d1, &d2, &d3, &d4, &d5, &d6};
    const Set* d_bar[] = {&d1, &d2, &d3_bar, &d4_bar, &d5_bar, &d6};
    PairSet two;
    for (int i = 1; i <= 6; ++i) {
        const auto ci = std::to_string(i);
        add_product(two, *d[i - 1], {ci});
        add_product(two, {ci + "bar"}, *d_bar[i - 1]);
    }
    return table_from_sets(AffineType::G2_1, zero, two);
}

} // namespace

EnergyTable reference_table(AffineType type)
{
    const auto n = perfect_crystal(type).size();
    EnergyTable h(type, n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            h(ElementId{x}, ElementId{y}) = type == AffineType::D4_3 ? kTableD4[x][y] : kTableG2[x][y];
    return h;
}

EnergyTable closed_form_table(AffineType type)
{
    return type == AffineType::D4_3 ? closed_form_d4() : closed_form_g2();
}

std::vector<TableMismatch> compare_tables(const EnergyTable& expected, const EnergyTable& actual)
{
    if (expected.type() != actual.type() || expected.size() != actual.size())
        throw EnergyError("comparing energy tables of different shapes");
    std::vector<TableMismatch> out;
    for (std::uint32_t x = 0; x < expected.size(); ++x)
        for (std::uint32_t y = 0; y < expected.size(); ++y)
            if (expected(ElementId{x}, ElementId{y}) != actual(ElementId{x}, ElementId{y}))
                out.push_back({ElementId{x}, ElementId{y}, expected(ElementId{x}, ElementId{y}),
                               actual(ElementId{x}, ElementId{y})});
    return out;
}

std::string short_label(const std::string& label)
{
    auto pos = label.find('_');
    return pos == std::string::npos ? label : label.substr(pos + 1);
}

std::string format_table(const PerfectCrystal& b, const EnergyTable& h)
{
    std::ostringstream out;
    out << "H";
    for (auto y : b.graph.elements())
        out << '\t' << short_label(b.graph.label(y));
    out << '\n';
    for (auto x : b.graph.elements()) {
        out << short_label(b.graph.label(x));
        for (auto y : b.graph.elements())
            out << '\t' << h(x, y);
        out << '\n';
    }
    return out.str();
}

int h_aff(const EnergyTable& h, AffineElement x, AffineElement y)
{
    return h(x.element, y.element) + x.n - y.n;
}

std::optional<AffineElement> affine_f(const PerfectCrystal& b, AffineElement x, Color i)
{
    if (auto fx = b.graph.f(x.element, i))
        return AffineElement{*fx, x.n + (i == 0 ? 1 : 0)};
    return std::nullopt;
}

std::optional<AffineElement> affine_e(const PerfectCrystal& b, AffineElement x, Color i)
{
    if (auto ex = b.graph.e(x.element, i))
        return AffineElement{*ex, x.n - (i == 0 ? 1 : 0)};
    return std::nullopt;
}

std::optional<AffinePair> affine_tensor_f(const PerfectCrystal& b, AffinePair z, Color i)
{
    if (phi(b.graph, z.left.element, i) > epsilon(b.graph, z.right.element, i)) {
        if (auto fx = affine_f(b, z.left, i))
            return AffinePair{*fx, z.right};
        return std::nullopt;
    }
    if (auto fy = affine_f(b, z.right, i))
        return AffinePair{z.left, *fy};
    return std::nullopt;
}

std::optional<AffinePair> affine_tensor_e(const PerfectCrystal& b, AffinePair z, Color i)
{
    if (phi(b.graph, z.left.element, i) >= epsilon(b.graph, z.right.element, i)) {
        if (auto ex = affine_e(b, z.left, i))
            return AffinePair{*ex, z.right};
        return std::nullopt;
    }
    if (auto ey = affine_e(b, z.right, i))
        return AffinePair{z.left, *ey};
    return std::nullopt;
}

AffinePair r_matrix(const EnergyTable& h, AffinePair z)
{
    const int energy = h(z.left.element, z.right.element);
    return {{z.left.element, z.right.n - energy}, {z.right.element, z.left.n + energy}};
}

namespace {

struct Tally {
    std::string name;
    long checked = 0;
    long violations = 0;
    std::string first;

    void record(bool ok, const std::function<std::string()>& where)
    {
        ++checked;
        if (!ok && violations++ == 0)
            first = where();
    }

    void into(Report& report) const
    {
        std::string detail = std::to_string(violations) + " violation(s) in " + std::to_string(checked) + " checks";
        if (violations)
            detail += "; first at " + first;
        report.add(name, violations == 0, detail);
    }
};

} // namespace

Report verify_r_matrix(const PerfectCrystal& b, const EnergyTable& h, int range)
{
    const auto& g = b.graph;
    auto show = [&](AffinePair z) {
        std::ostringstream out;
        out << g.label(z.left.element) << '(' << z.left.n << ") (x) " << g.label(z.right.element) << '(' << z.right.n
            << ')';
        return out.str();
    };

    Tally shift_right{"(T (x) id) R = R (id (x) T)"};
    Tally shift_left{"(id (x) T) R = R (T (x) id)"};
    Tally involution{"R R = id"};
    Tally commute_f{"R f_i = f_i R"};
    Tally commute_e{"R e_i = e_i R"};
    Tally invariant{"h_aff constant along Kashiwara arrows"};

    for (auto x : g.elements()) {
        for (auto y : g.elements()) {
            for (int m = -range; m <= range; ++m) {
                for (int n = -range; n <= range; ++n) {
                    const AffinePair z{{x, m}, {y, n}};
                    const auto rz = r_matrix(h, z);
                    const auto where = [&] { return show(z); };

                    shift_right.record(AffinePair{shift(rz.left), rz.right} ==
                                           r_matrix(h, {z.left, shift(z.right)}),
                                       where);
                    shift_left.record(AffinePair{rz.left, shift(rz.right)} == r_matrix(h, {shift(z.left), z.right}),
                                      where);
                    involution.record(r_matrix(h, rz) == z, where);

                    for (Color i = 0; i < kRank; ++i) {
                        const auto tag = [&] { return show(z) + " color " + std::to_string(i); };
                        auto fz = affine_tensor_f(b, z, i);
                        auto f_rz = affine_tensor_f(b, rz, i);
                        commute_f.record(fz.has_value() == f_rz.has_value() && (!fz || r_matrix(h, *fz) == *f_rz),
                                         tag);
                        auto ez = affine_tensor_e(b, z, i);
                        auto e_rz = affine_tensor_e(b, rz, i);
                        commute_e.record(ez.has_value() == e_rz.has_value() && (!ez || r_matrix(h, *ez) == *e_rz),
                                         tag);
                        const int base = h_aff(h, z.left, z.right);
                        if (fz)
                            invariant.record(h_aff(h, fz->left, fz->right) == base, tag);
                        if (ez)
                            invariant.record(h_aff(h, ez->left, ez->right) == base, tag);
                    }
                }
            }
        }
    }

    Report report;
    for (const auto* t : {&shift_right, &shift_left, &involution, &commute_f, &commute_e, &invariant})
        t->into(report);
    return report;
}

} // namespace ywall
