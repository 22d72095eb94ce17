// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "ywall/column.hpp"
#include "ywall/energy.hpp"
#include "ywall/path.hpp"
#include "ywall/verify.hpp"
#include "ywall/wall.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace ywall;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            passed = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body)
{
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.passed = false;
        outcome.detail << "[exception: " << e.what() << "] ";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && seconds >= budget_seconds) {
        outcome.passed = false;
        outcome.detail << "[over budget " << budget_seconds << " s] ";
    }
    if (!outcome.passed)
        ++failures;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  criterion " << number << " (" << title << ", "
              << std::fixed << std::setprecision(3) << seconds << " s";
    if (budget_seconds > 0)
        std::cout << " < " << budget_seconds << " s";
    std::cout << "): " << outcome.detail.str() << '\n';
}

std::string describe(const PerfectCrystal& b, const std::vector<TableMismatch>& diff)
{
    std::ostringstream out;
    for (const auto& m : diff)
        out << " H(" << short_label(b.graph.label(m.left)) << "," << short_label(b.graph.label(m.right)) << ") "
            << m.expected << " vs " << m.actual << ";";
    return out.str();
}

void merge_report(Outcome& o, const Report& report, const std::string& tag)
{
    const auto* bad = report.first_failure();
    o.require(bad == nullptr, bad ? tag + ": " + bad->name + ": " + bad->detail : std::string());
    o.detail << tag << " " << report.checks.size() << " checks; ";
}

const Weight L0 = Weight::fundamental(0);
const Weight L2 = Weight::fundamental(2);

} // namespace

int main()
{
    criterion(1, "energy tables", 1.0, [](Outcome& o) {
        for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
            const auto& b = perfect_crystal(type);
            const auto solved = solve_energy(b);
            const auto reference = reference_table(type);
            const auto closed = closed_form_table(type);
            const std::string tag(to_string(type));
            const auto vs_solved = compare_tables(reference, solved);
            const auto vs_closed = compare_tables(reference, closed);
            const auto closed_vs_solved = compare_tables(solved, closed);
            const auto n = b.size() * b.size();
            o.detail << tag << " solved " << n - vs_solved.size() << "/" << n << ", closed form "
                     << n - vs_closed.size() << "/" << n << "; ";
            o.require(vs_solved.empty(), tag + " solver vs table:" + describe(b, vs_solved));
            o.require(vs_closed.empty(), tag + " closed-form sets vs table:" + describe(b, vs_closed));
            o.require(closed_vs_solved.empty(), tag + " closed-form sets vs solver:" + describe(b, closed_vs_solved));
        }
    });

    criterion(2, "perfect crystal conditions", 1.0, [](Outcome& o) {
        const std::array<std::tuple<AffineType, Weight, const char*>, 3> minimal{
            {{AffineType::D4_3, L0, "u_phi"}, {AffineType::G2_1, L0, "v_0"}, {AffineType::G2_1, L2, "v_7bar"}}};
        for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
            const auto& p = perfect_crystal(type);
            const auto report = verify_perfect(p, 1);
            merge_report(o, report, std::string(to_string(type)));
            const auto first = std::find_if(report.checks.begin(), report.checks.end(),
                                            [](const auto& c) { return c.name == "perfect (1)"; });
            o.require(first != report.checks.end() && first->detail.find("out of scope") != std::string::npos,
                      "condition (1) not reported as out of scope");
            o.require(p.minimal_by_weight.size() == (type == AffineType::D4_3 ? 1u : 2u), "minimal vector count");
        }
        for (const auto& [type, lambda, label] : minimal) {
            const auto& g = perfect_crystal(type).graph;
            o.require(perfect_crystal(type).minimal(lambda) == g.at(label),
                      std::string(label) + " is not b_" + lambda.to_string());
        }
    });

    criterion(3, "R-matrix and affine energy, |m|,|n| <= 3", 10.0, [](Outcome& o) {
        for (auto type : {AffineType::D4_3, AffineType::G2_1})
            merge_report(o, verify_r_matrix(perfect_crystal(type), solve_energy(perfect_crystal(type)), 3),
                         std::string(to_string(type)));
    });

    criterion(4, "psi isomorphism and signatures", 0, [](Outcome& o) {
        for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
            const auto& b = perfect_crystal(type);
            const auto ground = ground_column(type, L0);
            const std::array seeds{std::pair{ground.index, psi(ground)}};
            o.require(is_isomorphic(column_class_graph(type), b.graph, seeds),
                      std::string(to_string(type)) + " column classes not isomorphic");
        }
        int matched = 0;
        for (auto cls : column_classes(AffineType::D4_3))
            for (Color i = 0; i < kRank; ++i)
                matched += signature(cls, i) == drawn_signatures_d4()[cls.index.value][static_cast<std::size_t>(i)];
        o.require(matched == 24, "signature table");
        o.detail << "2 isomorphisms, " << matched << "/24 signatures";
    });

    criterion(5, "reduced adjacent pairs", 0, [](Outcome& o) {
        for (auto [type, expected] : {std::pair{AffineType::D4_3, 64u}, std::pair{AffineType::G2_1, 225u}}) {
            const auto pairs = enumerate_reduced_adjacent_pairs(type);
            const auto& h = solve_energy(perfect_crystal(type));
            const auto ground = ground_column(type, L0);
            std::size_t reduced = 0;
            for (const auto& p : pairs) {
                // fragment (ground(0), left(n_l), right(n_r)) with n_l = H(ground (x) left)
                const int n_left = h(ground.index, p.left.index);
                const YoungWall fragment{type, L0, {{p.left, n_left}, {p.right, n_left + p.n_difference}}};
                reduced += is_reduced(fragment) && n_left + p.n_difference >= 0;
            }
            o.require(pairs.size() == expected, std::string(to_string(type)) + " count");
            o.require(reduced == pairs.size(), std::string(to_string(type)) + " fragments reduced");
            o.detail << to_string(type) << " " << pairs.size() << " pairs (" << reduced << " reduced); ";
        }
        int minimum = 1 << 30;
        for (auto l : column_classes(AffineType::D4_3))
            for (auto r : column_classes(AffineType::D4_3))
                minimum = std::min(minimum, adjacency_delta_blocks(l, r));
        o.require(minimum >= 0, "negative |y_i| - |y_i+1|");
        o.detail << "min |y_i|-|y_i+1| = " << minimum;
    });

    criterion(6, "wall crystal properties at depth 10", 60.0,
              [](Outcome& o) { merge_report(o, verify_walls_suite(10), "walls"); });

    criterion(7, "wall/path isomorphism at depth 8", 0, [](Outcome& o) {
        for (const auto& [type, lambda] : level_one_cases()) {
            const auto walls = generate_crystal(type, lambda, 8);
            const auto paths = generate_path_crystal(type, lambda, 8);
            const std::array seeds{std::pair{ElementId{0}, ElementId{0}}};
            const bool iso = is_isomorphic(walls.graph, paths.graph, seeds);
            const std::string tag = std::string(to_string(type)) + "/" + lambda.to_string();
            o.require(iso, tag);
            o.detail << tag << " " << walls.graph.size() << " vertices " << (iso ? "isomorphic" : "differ") << "; ";
        }
    });

    criterion(8, "hand-derived spot values", 0, [](Outcome& o) {
        const auto crystal = generate_crystal(AffineType::D4_3, L0, 6);
        std::vector<int> profile(7, 0);
        for (int d : crystal.depth)
            ++profile[static_cast<std::size_t>(d)];
        std::ostringstream shown;
        for (std::size_t d = 0; d < profile.size(); ++d)
            shown << (d ? "," : "") << profile[d];
        o.detail << "depth profile " << shown.str() << "; ";
        o.require(profile == std::vector<int>{1, 1, 1, 1, 1, 1, 2}, "profile expected 1,1,1,1,1,1,2");

        std::vector<std::string> deepest;
        for (std::size_t k = 0; k < crystal.walls.size(); ++k)
            if (crystal.depth[k] == 6)
                deepest.push_back(crystal.walls[k].to_string());
        std::sort(deepest.begin(), deepest.end());
        o.require(deepest == std::vector<std::string>{"(..., c_1(1), c_3bar(1))", "(..., c_2bar(1))"},
                  "depth-6 walls");
        o.detail << "depth 6: " << deepest.size() << " walls; ";

        const auto f0 = apply_f(ground_wall(AffineType::D4_3, L0), 0);
        o.require(f0 && f0->to_string() == "(..., c_1(1))", "F_0(ground)");
        o.require(f0 && weight(*f0) == L0 - simple_root_as_weight(AffineType::D4_3, 0), "wt F_0(ground)");
        if (f0)
            o.detail << "F_0(ground) = " << f0->to_string() << " of weight " << weight(*f0).to_string();
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion/criteria failed")
              << '\n';
    return failures == 0 ? 0 : 1;
}
