#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ywall/column.hpp"
#include "ywall/energy.hpp"

#include <array>
#include <map>

using namespace ywall;

namespace {

ColumnClass c(const char* s) { return column_class(AffineType::D4_3, s); }
ColumnClass cp(const char* s) { return column_class(AffineType::G2_1, s); }

} // namespace

TEST_CASE("class sets and labels")
{
    CHECK(column_classes(AffineType::D4_3).size() == 8);
    CHECK(column_classes(AffineType::G2_1).size() == 15);
    CHECK(column_label(c("3bar")) == "c_3bar");
    CHECK(column_label(cp("7bar")) == "c'_7bar");
}

TEST_CASE("psi")
{
    const auto& b1 = perfect_crystal(AffineType::D4_3).graph;
    const auto& b1p = perfect_crystal(AffineType::G2_1).graph;
    CHECK(psi(c("phi")) == b1.at("u_phi"));
    CHECK(psi(cp("7bar")) == b1p.at("v_7bar"));
    for (auto b : b1.elements())
        CHECK(psi(psi_inverse(AffineType::D4_3, b)) == b);
    CHECK_THROWS_AS(psi_inverse(AffineType::D4_3, ElementId{8}), std::invalid_argument);
}

TEST_CASE("column class graphs are isomorphic to the perfect crystals")
{
    for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
        const auto graph = column_class_graph(type);
        const auto& b = perfect_crystal(type);
        const auto g = ground_column(type, Weight::fundamental(0));
        const std::array seeds{std::pair{g.index, psi(g)}};
        CHECK(is_isomorphic(graph, b.graph, seeds));
    }
}

TEST_CASE("signatures")
{
    CHECK(signature(c("1"), 0) == Signature{2, 0});
    CHECK(signature(c("3"), 1) == Signature{0, 2});
    CHECK(signature(cp("5"), 2) == Signature{0, 2});
    CHECK(signature(cp("7"), 2) == Signature{0, 0});
    const auto& drawn = drawn_signatures_d4();
    for (auto cls : column_classes(AffineType::D4_3))
        for (Color i = 0; i < kRank; ++i)
            CHECK(signature(cls, i) == drawn[cls.index.value][static_cast<std::size_t>(i)]);
}

TEST_CASE("chain of classes")
{
    const auto chain = chain_of_classes(AffineType::D4_3);
    REQUIRE(chain.size() == 8);
    std::array<Color, 8> colors{};
    std::map<Color, int> per_color;
    const auto& b1 = perfect_crystal(AffineType::D4_3).graph;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        colors[k] = chain[k].color;
        ++per_color[chain[k].color];
        CHECK(b1.f(psi(chain[k].from), chain[k].color) == psi(chain[k].to));
        CHECK(chain[k].to == chain[(k + 1) % chain.size()].from);
    }
    CHECK(colors == std::array<Color, 8>{0, 1, 2, 1, 1, 2, 1, 0});
    CHECK(chain.front().from == c("phi"));
    // two copies of delta = alpha_0 + 2 alpha_1 + alpha_2 per period
    CHECK(per_color == std::map<Color, int>{{0, 2}, {1, 4}, {2, 2}});
    CHECK_THROWS_AS(chain_of_classes(AffineType::G2_1), std::invalid_argument);
}

TEST_CASE("block ledger")
{
    const auto& ledger = block_ledger_d4();
    CHECK(ledger.pattern_colors == std::array<Color, 8>{0, 1, 2, 1, 1, 2, 1, 0});
    CHECK(blocks_added({c("phi"), 0}) == 0);
    CHECK(blocks_added({c("3"), 1}) == 3);
    CHECK(blocks_added({c("3"), 2}) == 7);
    CHECK(blocks_added({c("2bar"), 1}) == 6);
    CHECK_THROWS_AS(blocks_added({c("3"), 0}), std::invalid_argument);
    CHECK_THROWS_AS(blocks_added({cp("3"), 1}), std::invalid_argument);
}

TEST_CASE("block differences of reduced adjacent columns")
{
    CHECK(adjacency_delta_blocks(c("phi"), c("phi")) == 0);
    CHECK(adjacency_delta_blocks(c("1"), c("0")) == 3);
    for (auto left : column_classes(AffineType::D4_3))
        for (auto right : column_classes(AffineType::D4_3)) {
            const int d = adjacency_delta_blocks(left, right, 1);
            CHECK(d >= 0);
            CHECK(adjacency_delta_blocks(left, right, 2) == d);
        }
}
