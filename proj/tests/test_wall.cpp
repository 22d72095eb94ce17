#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ywall/energy.hpp"
#include "ywall/wall.hpp"

#include <random>

using namespace ywall;

namespace {

const Weight L0 = Weight::fundamental(0);
const Weight L2 = Weight::fundamental(2);

ColumnClass c(const char* s) { return column_class(AffineType::D4_3, s); }

YoungWall d4_wall(std::vector<ColumnState> columns)
{
    return YoungWall{AffineType::D4_3, L0, std::move(columns)};
}

Weight alpha(AffineType type, Color i) { return simple_root_as_weight(type, i); }

} // namespace

TEST_CASE("ground walls")
{
    const auto g = ground_wall(AffineType::D4_3, L0);
    CHECK(g.columns.empty());
    CHECK(g.ground() == c("phi"));
    const auto g2 = ground_wall(AffineType::G2_1, L2);
    CHECK(g2.ground() == column_class(AffineType::G2_1, "7bar"));
    CHECK(ground_wall(AffineType::G2_1, L0).ground() == column_class(AffineType::G2_1, "0"));
    CHECK_THROWS_AS(ground_wall(AffineType::D4_3, L2), std::invalid_argument);
    CHECK(is_reduced(g));
    CHECK(is_normalized(g));
    CHECK(weight(g) == L0);
    CHECK(g.to_string() == "(...)");
}

TEST_CASE("reducedness")
{
    CHECK(is_reduced(d4_wall({{c("phi"), 0}, {c("1"), 1}})));
    CHECK_FALSE(is_reduced(d4_wall({{c("phi"), 0}, {c("1"), 0}})));
    CHECK(is_reduced(d4_wall({{c("1"), 1}, {c("3bar"), 1}})));
    CHECK_FALSE(is_reduced(d4_wall({{c("1"), 1}, {c("3bar"), 2}})));
    CHECK(normalized(d4_wall({{c("phi"), 0}, {c("1"), 1}})) == d4_wall({{c("1"), 1}}));
    CHECK_FALSE(is_normalized(d4_wall({{c("phi"), 0}, {c("1"), 1}})));
}

TEST_CASE("signatures of walls")
{
    const auto g = ground_wall(AffineType::D4_3, L0);
    const auto s0 = i_signature(g, 0);
    REQUIRE(s0.reduced.size() == 1);
    CHECK(s0.reduced[0] == WallSignature::Symbol{true, WallSignature::kTail});
    CHECK(i_signature(g, 1).reduced.empty());

    const auto w = d4_wall({{c("phi"), 0}, {c("3bar"), 1}});
    const auto s = i_signature(w, 0);
    REQUIRE(s.reduced.size() == 2);
    CHECK(s.minuses() == 0);
    CHECK(s.pluses() == 2);
    CHECK(s.reduced[0] == WallSignature::Symbol{true, 0});
}

TEST_CASE("Kashiwara operators on walls")
{
    const auto g = ground_wall(AffineType::D4_3, L0);
    const auto f0 = apply_f(g, 0);
    REQUIRE(f0.has_value());
    CHECK(*f0 == d4_wall({{c("1"), 1}}));
    CHECK(f0->to_string() == "(..., c_1(1))");
    CHECK(weight(*f0) == L0 - alpha(AffineType::D4_3, 0));
    CHECK_FALSE(apply_f(g, 1).has_value());
    CHECK_FALSE(apply_e(g, 0).has_value());

    const auto f1 = apply_f(*f0, 1);
    REQUIRE(f1.has_value());
    const auto back = apply_e(*apply_e(*f1, 1), 0);
    REQUIRE(back.has_value());
    CHECK(*back == g);
}

TEST_CASE("epsilon and phi on walls")
{
    const auto g = ground_wall(AffineType::D4_3, L0);
    CHECK(epsilon_phi(g, 0) == std::pair{0, 1});
    CHECK(epsilon_phi(d4_wall({{c("1"), 1}}), 0) == std::pair{1, 0});
}

TEST_CASE("weights")
{
    auto w = ground_wall(AffineType::D4_3, L0);
    for (Color i : {0, 1, 2, 1, 1, 2, 1, 0}) {
        auto next = apply_f(w, i);
        REQUIRE(next.has_value());
        CHECK(weight(*next) == weight(w) - alpha(AffineType::D4_3, i));
        w = *next;
    }
    CHECK(block_counts(w).k == std::array{2, 4, 2});
    CHECK(weight(w) == L0 - 2 * root_to_weight(AffineType::D4_3, null_root(AffineType::D4_3)));
}

TEST_CASE("reduced adjacent pairs")
{
    for (auto [type, count] : {std::pair{AffineType::D4_3, 64u}, std::pair{AffineType::G2_1, 225u}}) {
        const auto pairs = enumerate_reduced_adjacent_pairs(type);
        CHECK(pairs.size() == count);
        const auto& h = energy_table(type);
        for (const auto& p : pairs) {
            CHECK(p.n_difference == h(p.left.index, p.right.index));
            // a two-column fragment sitting on a high enough left column
            const int base = 2;
            CHECK(h_aff(h, {p.left.index, base}, {p.right.index, base + p.n_difference}) == 0);
        }
    }
}

TEST_CASE("depth profile of the D4(3) crystal")
{
    const auto crystal = generate_crystal(AffineType::D4_3, L0, 6);
    std::vector<int> profile(7, 0);
    for (int d : crystal.depth)
        ++profile[static_cast<std::size_t>(d)];
    // Lambda_0 - delta at depth 4 pairs to 1 with h_0, so F_0 acts there too
    CHECK(profile == std::vector<int>{1, 1, 1, 1, 1, 2, 2});
    std::vector<std::string> deepest;
    for (std::size_t k = 0; k < crystal.walls.size(); ++k)
        if (crystal.depth[k] == 6)
            deepest.push_back(crystal.walls[k].to_string());
    CHECK(deepest == std::vector<std::string>{"(..., c_1(1), c_3bar(1))", "(..., c_2bar(1))"});
}

TEST_CASE("generated walls are reduced and weights agree")
{
    for (auto [type, lambda] : {std::pair{AffineType::D4_3, L0}, std::pair{AffineType::G2_1, L0},
                                std::pair{AffineType::G2_1, L2}}) {
        const auto crystal = generate_crystal(type, lambda, 8);
        for (const auto& e : crystal.graph.edges())
            CHECK(crystal.graph.weight(e.dst) == crystal.graph.weight(e.src) - alpha(type, e.color));
        for (std::size_t k = 0; k < crystal.walls.size(); ++k) {
            const auto& w = crystal.walls[k];
            CHECK(is_reduced(w));
            CHECK(is_normalized(w));
            CHECK(crystal.graph.weight(ElementId{static_cast<std::uint32_t>(k)}) == weight(w));
        }
    }
}

TEST_CASE("random walks respect the crystal axioms")
{
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<Color> color(0, kRank - 1);
    for (auto [type, lambda] : {std::pair{AffineType::D4_3, L0}, std::pair{AffineType::G2_1, L0},
                                std::pair{AffineType::G2_1, L2}}) {
        for (int walk = 0; walk < 20; ++walk) {
            auto w = ground_wall(type, lambda);
            for (int step = 0; step < 40; ++step) {
                const Color i = color(rng);
                const auto next = apply_f(w, i);
                if (!next)
                    continue;
                CHECK(is_reduced(*next));
                CHECK(apply_e(*next, i) == w);
                CHECK(weight(*next) == weight(w) - alpha(type, i));
                for (Color j = 0; j < kRank; ++j) {
                    const auto [eps, ph] = epsilon_phi(*next, j);
                    CHECK(ph - eps == weight(*next).pair(j));
                }
                // materializing one more ground column changes nothing
                CHECK(normalized(*apply_f(with_materialized_ground(w), i)) == *next);
                w = *next;
            }
            CHECK(from_path(type, lambda, to_path(w)) == w);
        }
    }
}

TEST_CASE("path conversion")
{
    const auto g = ground_wall(AffineType::D4_3, L0);
    CHECK(to_path(g).empty());
    const auto& b1 = perfect_crystal(AffineType::D4_3).graph;
    const std::vector<ElementId> path{b1.at("u_phi"), b1.at("u_1"), b1.at("u_3bar")};
    CHECK(from_path(AffineType::D4_3, L0, path) == d4_wall({{c("1"), 1}, {c("3bar"), 1}}));
}
