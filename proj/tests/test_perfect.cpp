#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ywall/fixtures.hpp"
#include "ywall/perfect.hpp"

#include <algorithm>
#include <set>

using namespace ywall;

TEST_CASE("B1")
{
    const auto p = build_b1();
    CHECK(p.size() == 8);
    CHECK(p.graph.edge_count() == 10);
    CHECK(p.graph.f(p.graph.at("u_2"), 2) == p.graph.at("u_3"));
    CHECK(p.coordinates[1] == "(1,0,0,0,0,0)");
    CHECK(verify_axioms(p.graph).passed());
    CHECK(p.minimal(Weight::fundamental(0)) == p.graph.at("u_phi"));
    CHECK_THROWS_AS(p.minimal(Weight::fundamental(2)), std::invalid_argument);
}

TEST_CASE("B'1")
{
    const auto p = build_b1_prime();
    CHECK(p.size() == 15);
    CHECK(p.graph.edge_count() == 20);
    const auto& g = p.graph;
    CHECK(phi(g, g.at("v_6bar"), 2) == 3);
    CHECK_FALSE(g.f(g.at("v_7"), 2).has_value());
    CHECK_FALSE(g.e(g.at("v_7"), 2).has_value());
    const auto v7b = g.at("v_7bar");
    for (Color i = 0; i < kRank; ++i) {
        CHECK(epsilon(g, v7b, i) == Weight::fundamental(2).pair(i));
        CHECK(phi(g, v7b, i) == Weight::fundamental(2).pair(i));
    }
    for (auto b : g.elements())
        CHECK(level(AffineType::G2_1, weight_of(g, b)) == 0);
    CHECK(verify_axioms(g).passed());
}

TEST_CASE("perfectness")
{
    for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
        const auto report = verify_perfect(perfect_crystal(type));
        CHECK(report.passed());
        const auto assumed = std::find_if(report.checks.begin(), report.checks.end(),
                                          [](const auto& c) { return c.name == "perfect (1)"; });
        REQUIRE(assumed != report.checks.end());
        CHECK(assumed->detail.find("out of scope") != std::string::npos);
    }
    const auto& g2 = perfect_crystal(AffineType::G2_1);
    CHECK(g2.minimal(Weight::fundamental(0)) == g2.graph.at("v_0"));
    CHECK(g2.minimal(Weight::fundamental(2)) == g2.graph.at("v_7bar"));
}

TEST_CASE("removing the minimal element breaks perfectness")
{
    auto p = build_b1();
    p.graph = p.graph.without_element(p.graph.at("u_phi"));
    p.minimal_by_weight.clear();
    const auto report = verify_perfect(p);
    CHECK_FALSE(report.passed());
    const auto bad = std::find_if(report.checks.begin(), report.checks.end(),
                                  [](const auto& c) { return c.name == "perfect (5)"; });
    REQUIRE(bad != report.checks.end());
    CHECK_FALSE(bad->passed);
}

TEST_CASE("ground-state paths")
{
    CHECK(ground_state_path(AffineType::D4_3, Weight::fundamental(0)) == build_b1().graph.at("u_phi"));
    CHECK(ground_state_path(AffineType::G2_1, Weight::fundamental(2)) == build_b1_prime().graph.at("v_7bar"));
    CHECK_THROWS_AS(ground_state_path(AffineType::D4_3, Weight::fundamental(1)), std::invalid_argument);
    CHECK_THROWS_AS(ground_state_path(AffineType::D4_3, Weight::fundamental(2)), std::invalid_argument);
}

TEST_CASE("dominant weights of level one")
{
    CHECK(dominant_weights_of_level(AffineType::D4_3, 1) == std::vector{Weight::fundamental(0)});
    const auto g2 = dominant_weights_of_level(AffineType::G2_1, 1);
    CHECK(std::set(g2.begin(), g2.end()) == std::set{Weight::fundamental(0), Weight::fundamental(2)});
}

TEST_CASE("edge lists match the fixture files")
{
    for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
        const auto built = perfect_edge_list(type);
        const auto fixture = read_edge_fixture(edge_fixture_path(type));
        CHECK(std::set(built.begin(), built.end()) == std::set(fixture.begin(), fixture.end()));
    }
    CHECK_THROWS_AS(read_edge_fixture("/nonexistent/file.edges"), std::runtime_error);
}
