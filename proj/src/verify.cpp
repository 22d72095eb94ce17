#include "ywall/verify.hpp"

#include "ywall/column.hpp"
#include "ywall/energy.hpp"
#include "ywall/fixtures.hpp"
#include "ywall/path.hpp"
#include "ywall/perfect.hpp"
#include "ywall/wall.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ywall {

namespace {

std::string case_name(AffineType type, const Weight& lambda)
{
    std::string name(to_string(type));
    for (Color i = 0; i < kRank; ++i)
        if (lambda.pair(i) == 1)
            name += "/L" + std::to_string(i);
    return name;
}

template <typename Fn>
void guarded(Report& report, const std::string& name, Fn&& fn)
{
    try {
        fn();
    } catch (const std::exception& err) {
        report.add(name, false, std::string("exception: ") + err.what());
    }
}

std::string describe(const PerfectCrystal& b, const std::vector<TableMismatch>& diff)
{
    std::ostringstream out;
    for (std::size_t k = 0; k < diff.size() && k < 8; ++k)
        out << (k ? ", " : "") << "H(" << short_label(b.graph.label(diff[k].left)) << " (x) "
            << short_label(b.graph.label(diff[k].right)) << ") expected " << diff[k].expected << " got "
            << diff[k].actual;
    return out.str();
}

// The published G2_1 sets omit (c'_1, c'_6bar) from {c'_1} x D'_0 and
// (c'_6, c'_1bar) from D'_0bar x {c'_1bar}; both table entries are 0.
bool is_known_closed_form_misprint(const PerfectCrystal& b, const std::vector<TableMismatch>& diff)
{
    if (b.type() != AffineType::G2_1 || diff.size() != 2)
        return false;
    auto is = [&](const TableMismatch& m, const char* x, const char* y) {
        return short_label(b.graph.label(m.left)) == x && short_label(b.graph.label(m.right)) == y &&
               m.expected == 0 && m.actual == 1;
    };
    return is(diff[0], "1", "6bar") && is(diff[1], "6", "1bar");
}

} // namespace

std::vector<std::pair<AffineType, Weight>> level_one_cases()
{
    std::vector<std::pair<AffineType, Weight>> out;
    for (auto type : {AffineType::D4_3, AffineType::G2_1})
        for (const auto& lambda : dominant_weights_of_level(type, 1))
            out.emplace_back(type, lambda);
    return out;
}

Report verify_energy_suite()
{
    Report report;
    for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
        const std::string tag(to_string(type));
        const auto& b = perfect_crystal(type);
        const auto total = std::to_string(b.size() * b.size());
        guarded(report, tag + " energy", [&] {
            const auto reference = reference_table(type);
            const auto solved = solve_energy(b);
            auto diff = compare_tables(reference, solved);
            report.add(tag + " solved vs reference table", diff.empty(),
                       std::to_string(b.size() * b.size() - diff.size()) + "/" + total + " entries matched" +
                           (diff.empty() ? "" : "; " + describe(b, diff)));

            const auto fixture = read_table_fixture(energy_fixture_path(type));
            bool same = fixture.size() == b.size();
            for (std::uint32_t x = 0; same && x < b.size(); ++x) {
                same = fixture[x].size() == b.size();
                for (std::uint32_t y = 0; same && y < b.size(); ++y)
                    same = fixture[x][y] == reference(ElementId{x}, ElementId{y});
            }
            report.add(tag + " reference table vs fixture file", same, energy_fixture_path(type).string());

            diff = compare_tables(reference, closed_form_table(type));
            const bool known = is_known_closed_form_misprint(b, diff);
            report.add(tag + " closed-form sets vs reference table", diff.empty() || known,
                       std::to_string(b.size() * b.size() - diff.size()) + "/" + total + " entries matched" +
                           (diff.empty() ? "" : "; " + describe(b, diff)) +
                           (known ? " (known misprint in the published sets)" : ""));
        });
    }
    return report;
}

Report verify_perfect_suite()
{
    Report report;
    for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
        const std::string tag(to_string(type));
        guarded(report, tag + " perfect", [&] {
            const auto& b = perfect_crystal(type);
            report.merge(verify_axioms(b.graph), tag + " ");
            report.merge(verify_perfect(b), tag + " ");

            std::set<std::tuple<std::string, Color, std::string>> built, fixture;
            for (const auto& e : b.graph.edges())
                built.emplace(b.graph.label(e.src), e.color, b.graph.label(e.dst));
            for (auto& e : read_edge_fixture(edge_fixture_path(type)))
                fixture.insert(std::move(e));
            report.add(tag + " edge list vs fixture file", built == fixture,
                       std::to_string(built.size()) + " built / " + std::to_string(fixture.size()) + " in " +
                           edge_fixture_path(type).string());

            std::ostringstream minimal;
            for (const auto& [lambda, elem] : b.minimal_by_weight)
                minimal << lambda.to_string() << " -> " << b.graph.label(elem) << "; ";
            report.add(tag + " minimal vectors", !b.minimal_by_weight.empty(), minimal.str());
        });
    }
    return report;
}

Report verify_rmatrix_suite(int range)
{
    Report report;
    for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
        const std::string tag(to_string(type));
        guarded(report, tag + " r-matrix",
                [&] { report.merge(verify_r_matrix(perfect_crystal(type), energy_table(type), range), tag + " "); });
    }
    return report;
}

Report verify_columns_suite()
{
    Report report;
    for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
        const std::string tag(to_string(type));
        guarded(report, tag + " columns", [&] {
            const auto& b = perfect_crystal(type);
            const auto columns = column_class_graph(type);
            const auto ground = ground_column(type, Weight::fundamental(0));
            const std::pair<ElementId, ElementId> seed{ground.index, psi(ground)};
            report.add(tag + " column classes isomorphic to perfect crystal",
                       is_isomorphic(columns, b.graph, std::span(&seed, 1)),
                       std::to_string(columns.size()) + " classes");

            const auto pairs = enumerate_reduced_adjacent_pairs(type);
            std::size_t valid = 0;
            for (const auto& pr : pairs) {
                YoungWall fragment = ground_wall(type, Weight::fundamental(0));
                const int n0 = energy_table(type)(psi(ground), psi(pr.left));
                fragment.columns = {{pr.left, n0}, {pr.right, n0 + pr.n_difference}};
                valid += is_reduced(fragment) ? 1 : 0;
            }
            report.add(tag + " reduced adjacent pairs", valid == pairs.size(),
                       std::to_string(pairs.size()) + " pairs, " + std::to_string(valid) + " reduced");
        });
    }

    guarded(report, "d4_3 signatures", [&] {
        const auto& drawn = drawn_signatures_d4();
        int matched = 0;
        std::string first;
        for (auto c : column_classes(AffineType::D4_3)) {
            for (Color i = 0; i < kRank; ++i) {
                if (signature(c, i) == drawn[c.index.value][static_cast<std::size_t>(i)])
                    ++matched;
                else if (first.empty())
                    first = column_label(c) + " color " + std::to_string(i);
            }
        }
        report.add("d4_3 drawn signatures vs string statistics", matched == 24,
                   std::to_string(matched) + "/24 entries" + (first.empty() ? "" : "; first mismatch " + first));
    });

    guarded(report, "d4_3 chain", [&] {
        const auto& g = perfect_crystal(AffineType::D4_3).graph;
        bool edges_ok = true;
        int zero_steps = 0;
        for (const auto& step : chain_of_classes(AffineType::D4_3)) {
            edges_ok = edges_ok && g.f(psi(step.from), step.color) == psi(step.to);
            zero_steps += step.color == 0 ? 1 : 0;
        }
        report.add("d4_3 chain steps are f-arrows of B1", edges_ok);
        report.add("d4_3 chain period raises |y|_0 by 2", zero_steps == 2, std::to_string(zero_steps) + " 0-steps");
    });

    guarded(report, "d4_3 adjacency blocks", [&] {
        int worst = std::numeric_limits<int>::max();
        bool shift_invariant = true;
        for (auto left : column_classes(AffineType::D4_3)) {
            for (auto right : column_classes(AffineType::D4_3)) {
                const int d = adjacency_delta_blocks(left, right, 1);
                worst = std::min(worst, d);
                shift_invariant = shift_invariant && adjacency_delta_blocks(left, right, 2) == d;
            }
        }
        report.add("d4_3 |y_i| - |y_i+1| >= 0 for all 64 pairs", worst >= 0, "minimum " + std::to_string(worst));
        report.add("d4_3 |y_i| - |y_i+1| independent of n", shift_invariant);
    });

    guarded(report, "g2_1 special columns", [&] {
        const auto c5 = column_class(AffineType::G2_1, "5");
        const auto c7 = column_class(AffineType::G2_1, "7");
        report.add("g2_1 sign_2(c'_5) = (0,2)", signature(c5, 2) == Signature{0, 2});
        report.add("g2_1 c'_7 has no 2-blocks to add or remove", signature(c7, 2) == Signature{0, 0});
    });
    return report;
}

Report verify_walls_suite(int depth)
{
    Report report;
    for (const auto& [type, lambda] : level_one_cases()) {
        const auto tag = case_name(type, lambda);
        guarded(report, tag + " walls", [&, type = type, lambda = lambda] {
            const auto crystal = generate_crystal(type, lambda, depth);
            std::map<std::vector<ColumnState>, std::size_t> index;
            for (std::size_t k = 0; k < crystal.walls.size(); ++k)
                index.emplace(crystal.walls[k].columns, k);

            long closure = 0, inverse = 0, stats = 0, tail = 0, sources = 0, checks = 0;
            std::string first;
            auto fail = [&](long& counter, const std::string& what) {
                if (counter++ == 0 && first.empty())
                    first = what;
            };
            for (std::size_t k = 0; k < crystal.walls.size(); ++k) {
                const auto& w = crystal.walls[k];
                const auto wt = crystal.graph.weight(ElementId{static_cast<std::uint32_t>(k)});
                bool any_e = false;
                for (Color i = 0; i < kRank; ++i) {
                    ++checks;
                    const auto label = w.to_string() + " color " + std::to_string(i);
                    auto fw = apply_f(w, i);
                    auto ew = apply_e(w, i);
                    any_e = any_e || ew.has_value();
                    for (const auto* r : {&fw, &ew})
                        if (*r && (!is_reduced(**r) || !is_normalized(**r)))
                            fail(closure, "closure at " + label);
                    if (ew && !index.contains(ew->columns))
                        fail(closure, "E escapes the generated set at " + label);
                    if (fw && apply_e(*fw, i) != w)
                        fail(inverse, "E F != id at " + label);
                    if (ew && apply_f(*ew, i) != w)
                        fail(inverse, "F E != id at " + label);
                    const auto [eps, ph] = epsilon_phi(w, i);
                    if (ph - eps != wt.pair(i))
                        fail(stats, "phi - eps != <h_i, wt> at " + label);
                    if (apply_f(with_materialized_ground(w), i) != fw ||
                        apply_e(with_materialized_ground(w), i) != ew)
                        fail(tail, "virtual tail differs from explicit ground column at " + label);
                }
                if (!any_e && !w.columns.empty())
                    fail(sources, "extra highest weight element " + w.to_string());
            }
            const auto weight_lambda = std::count_if(crystal.walls.begin(), crystal.walls.end(),
                                                     [&](const YoungWall& w) { return weight(w) == lambda; });

            // Incremental weights along BFS arrows against the closed form.
            std::vector<std::optional<Weight>> incremental(crystal.walls.size());
            incremental[0] = lambda;
            long weight_mismatch = 0;
            for (std::size_t k = 0; k < crystal.walls.size(); ++k) {
                if (!incremental[k])
                    ++weight_mismatch;
                else if (*incremental[k] != weight(crystal.walls[k]))
                    ++weight_mismatch;
                for (Color i = 0; i < kRank; ++i)
                    if (auto t = crystal.graph.f(ElementId{static_cast<std::uint32_t>(k)}, i); t && !incremental[t->value])
                        incremental[t->value] = incremental[k].value_or(Weight{}) - simple_root_as_weight(type, i);
            }

            const auto n = std::to_string(crystal.walls.size()) + " walls";
            report.add(tag + " closure under E/F (reduced, normalized)", closure == 0,
                       closure ? first : n + ", " + std::to_string(checks) + " operator checks");
            report.add(tag + " E/F inverse property", inverse == 0, inverse ? first : n);
            report.add(tag + " unique highest weight element", sources == 0 && weight_lambda == 1,
                       std::to_string(weight_lambda) + " wall(s) of weight lambda");
            report.add(tag + " phi_i - eps_i = <h_i, wt>", stats == 0, stats ? first : n);
            report.add(tag + " virtual tail matches explicit ground column", tail == 0, tail ? first : n);
            report.add(tag + " incremental and closed-form weights agree", weight_mismatch == 0,
                       std::to_string(weight_mismatch) + " mismatch(es)");

            // Weyl symmetry for i = 1, 2 where both weights lie in the prefix.
            std::map<Weight, int> mult;
            for (auto b : crystal.graph.elements())
                ++mult[crystal.graph.weight(b)];
            auto depth_of = [&](const Weight& mu) {
                const auto diff = lambda - mu; // sum k_i alpha_i
                const int k0 = diff.delta;
                Weight rest = diff - k0 * simple_root_as_weight(type, 0);
                const auto& a = cartan_matrix(type);
                const int det = a[1][1] * a[2][2] - a[1][2] * a[2][1];
                const int k1 = (a[2][2] * rest.lambda[1] - a[1][2] * rest.lambda[2]) / det;
                const int k2 = (-a[2][1] * rest.lambda[1] + a[1][1] * rest.lambda[2]) / det;
                return k0 + k1 + k2;
            };
            long weyl_checked = 0, weyl_bad = 0;
            for (const auto& [mu, m] : mult) {
                for (Color i : {1, 2}) {
                    const Weight image = mu - mu.pair(i) * simple_root_as_weight(type, i);
                    if (depth_of(image) > depth)
                        continue;
                    ++weyl_checked;
                    auto it = mult.find(image);
                    if (it == mult.end() || it->second != m)
                        ++weyl_bad;
                }
            }
            report.add(tag + " Weyl symmetry of multiplicities (i = 1, 2)", weyl_bad == 0,
                       std::to_string(weyl_checked) + " weights checked, " + std::to_string(weyl_bad) + " bad");
        });
    }
    return report;
}

Report verify_paths_suite(int depth)
{
    Report report;
    for (const auto& [type, lambda] : level_one_cases()) {
        const auto tag = case_name(type, lambda);
        guarded(report, tag + " paths", [&, type = type, lambda = lambda] {
            const auto walls = generate_crystal(type, lambda, depth);
            const auto paths = generate_path_crystal(type, lambda, depth);
            const std::pair<ElementId, ElementId> seed{ElementId{0}, ElementId{0}};
            report.add(tag + " wall and path prefixes isomorphic",
                       is_isomorphic(walls.graph, paths.graph, std::span(&seed, 1)),
                       std::to_string(walls.graph.size()) + " walls / " + std::to_string(paths.graph.size()) +
                           " paths, " + std::to_string(walls.graph.edge_count()) + " arrows");

            const PathModel model(type, lambda);
            long round_trip = 0, intertwine = 0;
            for (const auto& w : walls.walls) {
                const auto p = to_path(w);
                if (from_path(type, lambda, p) != w)
                    ++round_trip;
                const PathState ps{p};
                for (Color i = 0; i < kRank; ++i) {
                    auto fw = apply_f(w, i);
                    auto fp = model.f(ps, i);
                    if (fw.has_value() != fp.has_value() || (fw && to_path(*fw) != fp->factors))
                        ++intertwine;
                    auto ew = apply_e(w, i);
                    auto ep = model.e(ps, i);
                    if (ew.has_value() != ep.has_value() || (ew && to_path(*ew) != ep->factors))
                        ++intertwine;
                }
            }
            report.add(tag + " from_path(to_path(Y)) = Y", round_trip == 0,
                       std::to_string(round_trip) + " failure(s)");
            report.add(tag + " to_path intertwines E_i/F_i with e_i/f_i", intertwine == 0,
                       std::to_string(intertwine) + " failure(s)");
        });
    }
    return report;
}

Report run_suite(std::string_view name, int depth, int range)
{
    if (name == "energy")
        return verify_energy_suite();
    if (name == "perfect")
        return verify_perfect_suite();
    if (name == "rmatrix")
        return verify_rmatrix_suite(range);
    if (name == "columns")
        return verify_columns_suite();
    if (name == "walls")
        return verify_walls_suite(depth);
    if (name == "paths")
        return verify_paths_suite(depth);
    if (name == "all") {
        Report report;
        for (auto suite : {"perfect", "energy", "rmatrix", "columns", "walls", "paths"})
            report.merge(run_suite(suite, depth, range), std::string(suite) + ": ");
        return report;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace ywall
