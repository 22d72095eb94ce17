#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ywall {

/// Affine types handled by the library. Both have index set I = {0, 1, 2}.
enum class AffineType { D4_3, G2_1 };

inline constexpr int kRank = 3;
using Color = int;

std::string_view to_string(AffineType type);
/// Accepts "d4_3" / "g2_1" (case-insensitive).
AffineType parse_affine_type(std::string_view text);

using CartanMatrix = std::array<std::array<int, kRank>, kRank>;

/// Integer coefficients over (alpha_0, alpha_1, alpha_2).
struct RootVector {
    std::array<int, kRank> coeffs{};
    friend bool operator==(const RootVector&, const RootVector&) = default;
};

/// Coefficients over (h_0, h_1, h_2).
using CorootVector = std::array<int, kRank>;

/// An affine weight sum_i m_i Lambda_i + d * delta.
///
/// The pairing with the simple coroots ignores the delta part, since
/// <h_i, delta> = 0 for every i.
struct Weight {
    std::array<int, kRank> lambda{};
    int delta = 0;

    static Weight fundamental(Color i);

    int pair(Color i) const { return lambda.at(static_cast<std::size_t>(i)); }

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight w);

    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string to_string() const;
};

class CartanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const CartanMatrix& cartan_matrix(AffineType type);

/// Primitive positive generator of ker(A) with first coefficient 1.
RootVector null_root(AffineType type);

/// Primitive positive generator of ker(A^T) with first coefficient 1.
CorootVector central_element(AffineType type);

/// alpha_i = sum_j a_ji Lambda_j (+ delta when i = 0).
Weight simple_root_as_weight(AffineType type, Color i);

Weight root_to_weight(AffineType type, const RootVector& root);

int level(AffineType type, const Weight& w);

/// True iff w has no delta part, non-negative coefficients and level 1.
bool is_level_one_dominant(AffineType type, const Weight& w);

namespace detail {
// Kernel generator of a 3x3 integer matrix of corank 1; throws CartanError
// when the kernel is not spanned by a positive vector with first entry 1.
std::array<int, kRank> primitive_kernel(const CartanMatrix& m);
} // namespace detail

} // namespace ywall
