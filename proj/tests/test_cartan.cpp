#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ywall/cartan.hpp"

using namespace ywall;

namespace {

std::array<int, kRank> times(const CartanMatrix& a, const std::array<int, kRank>& v, bool transpose = false)
{
    std::array<int, kRank> out{};
    for (int i = 0; i < kRank; ++i)
        for (int j = 0; j < kRank; ++j)
            out[i] += (transpose ? a[j][i] : a[i][j]) * v[j];
    return out;
}

} // namespace

TEST_CASE("cartan matrices")
{
    CHECK(cartan_matrix(AffineType::D4_3) == CartanMatrix{{{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}}});
    CHECK(cartan_matrix(AffineType::G2_1) == CartanMatrix{{{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}}});
    for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
        const auto& a = cartan_matrix(type);
        for (int i = 0; i < kRank; ++i) {
            CHECK(a[i][i] == 2);
            for (int j = 0; j < kRank; ++j)
                if (i != j) {
                    CHECK(a[i][j] <= 0);
                    CHECK((a[i][j] == 0) == (a[j][i] == 0));
                }
        }
    }
}

TEST_CASE("null root and central element")
{
    CHECK(null_root(AffineType::D4_3).coeffs == std::array{1, 2, 1});
    CHECK(null_root(AffineType::G2_1).coeffs == std::array{1, 2, 3});
    CHECK(central_element(AffineType::D4_3) == CorootVector{1, 2, 3});
    CHECK(central_element(AffineType::G2_1) == CorootVector{1, 2, 1});
    for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
        CHECK(times(cartan_matrix(type), null_root(type).coeffs) == std::array{0, 0, 0});
        CHECK(times(cartan_matrix(type), central_element(type), true) == std::array{0, 0, 0});
    }
}

TEST_CASE("kernel of a corrupt matrix is rejected")
{
    CHECK_THROWS_AS(detail::primitive_kernel(CartanMatrix{{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}}), CartanError);
    CHECK_THROWS_AS(detail::primitive_kernel(CartanMatrix{{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}}), CartanError);
}

TEST_CASE("simple roots as weights")
{
    const auto a1 = simple_root_as_weight(AffineType::D4_3, 1);
    CHECK(a1.lambda == std::array{-1, 2, -1});
    CHECK(a1.delta == 0);
    const auto a0 = simple_root_as_weight(AffineType::D4_3, 0);
    CHECK(a0.lambda == std::array{2, -1, 0});
    CHECK(a0.delta == 1);
    CHECK_THROWS(simple_root_as_weight(AffineType::D4_3, 3));
    for (auto type : {AffineType::D4_3, AffineType::G2_1}) {
        const auto& a = cartan_matrix(type);
        for (int i = 0; i < kRank; ++i) {
            const auto alpha = simple_root_as_weight(type, i);
            CHECK(level(type, alpha) == 0);
            for (int j = 0; j < kRank; ++j)
                CHECK(alpha.pair(j) == a[j][i]);
            for (int j = 0; j < i; ++j)
                CHECK(alpha != simple_root_as_weight(type, j));
        }
        // delta maps to the pure delta weight
        const auto d = root_to_weight(type, null_root(type));
        CHECK(d.lambda == std::array{0, 0, 0});
        CHECK(d.delta == 1);
    }
}

TEST_CASE("levels")
{
    CHECK(level(AffineType::D4_3, Weight::fundamental(0)) == 1);
    CHECK(level(AffineType::G2_1, Weight::fundamental(0)) == 1);
    CHECK(level(AffineType::D4_3, Weight::fundamental(1)) == 2);
    CHECK(level(AffineType::G2_1, Weight::fundamental(1)) == 2);
    CHECK(level(AffineType::D4_3, Weight::fundamental(2)) == 3);
    CHECK(level(AffineType::G2_1, Weight::fundamental(2)) == 1);
    CHECK(level(AffineType::G2_1, Weight{{0, 0, 0}, 1}) == 0);
    CHECK(is_level_one_dominant(AffineType::G2_1, Weight::fundamental(2)));
    CHECK_FALSE(is_level_one_dominant(AffineType::D4_3, Weight::fundamental(2)));
    CHECK_FALSE(is_level_one_dominant(AffineType::D4_3, Weight{{1, 0, 0}, -1}));
}

TEST_CASE("type names")
{
    CHECK(parse_affine_type("d4_3") == AffineType::D4_3);
    CHECK(parse_affine_type("G2_1") == AffineType::G2_1);
    CHECK(to_string(AffineType::G2_1) == "g2_1");
    CHECK_THROWS_AS(parse_affine_type("a2_2"), std::invalid_argument);
    CHECK((Weight{{1, 0, 0}, -2}).to_string() == "[1,0,0;-2]");
}
