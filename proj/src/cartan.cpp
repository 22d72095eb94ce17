#include "ywall/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ywall {

std::string_view to_string(AffineType type)
{
    return type == AffineType::D4_3 ? "d4_3" : "g2_1";
}

AffineType parse_affine_type(std::string_view text)
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "d4_3")
        return AffineType::D4_3;
    if (lower == "g2_1")
        return AffineType::G2_1;
    throw std::invalid_argument("unknown affine type '" + std::string(text) + "' (expected d4_3 or g2_1)");
}

Weight Weight::fundamental(Color i)
{
    if (i < 0 || i >= kRank)
        throw std::out_of_range("fundamental weight index out of range");
    Weight w;
    w.lambda[static_cast<std::size_t>(i)] = 1;
    return w;
}

Weight& Weight::operator+=(const Weight& other)
{
    for (std::size_t i = 0; i < kRank; ++i)
        lambda[i] += other.lambda[i];
    delta += other.delta;
    return *this;
}

Weight& Weight::operator-=(const Weight& other)
{
    for (std::size_t i = 0; i < kRank; ++i)
        lambda[i] -= other.lambda[i];
    delta -= other.delta;
    return *this;
}

Weight operator*(int k, Weight w)
{
    for (auto& m : w.lambda)
        m *= k;
    w.delta *= k;
    return w;
}

std::string Weight::to_string() const
{
    std::ostringstream out;
    out << '[' << lambda[0] << ',' << lambda[1] << ',' << lambda[2] << ';' << delta << ']';
    return out.str();
}

const CartanMatrix& cartan_matrix(AffineType type)
{
    static const CartanMatrix d4_3{{{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}}};
    static const CartanMatrix g2_1{{{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}}};
    return type == AffineType::D4_3 ? d4_3 : g2_1;
}

namespace detail {

std::array<int, kRank> primitive_kernel(const CartanMatrix& m)
{
    // Cross product of two rows spans the kernel when the matrix has rank 2.
    auto cross = [](const std::array<int, kRank>& a, const std::array<int, kRank>& b) {
        return std::array<int, kRank>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                      a[0] * b[1] - a[1] * b[0]};
    };
    std::array<int, kRank> v{};
    for (std::size_t r = 0; r < kRank && v == std::array<int, kRank>{}; ++r)
        for (std::size_t s = r + 1; s < kRank && v == std::array<int, kRank>{}; ++s)
            v = cross(m[r], m[s]);
    if (v == std::array<int, kRank>{})
        throw CartanError("Cartan matrix has rank below 2");

    int g = std::gcd(std::gcd(v[0], v[1]), v[2]);
    for (auto& x : v)
        x /= g;
    if (v[0] < 0)
        for (auto& x : v)
            x = -x;

    for (std::size_t r = 0; r < kRank; ++r) {
        int dot = 0;
        for (std::size_t c = 0; c < kRank; ++c)
            dot += m[r][c] * v[c];
        if (dot != 0)
            throw CartanError("Cartan matrix is nonsingular; no null vector");
    }
    if (v[0] != 1 || std::any_of(v.begin(), v.end(), [](int x) { return x <= 0; }))
        throw CartanError("kernel generator is not positive with leading coefficient 1");
    return v;
}

} // namespace detail

RootVector null_root(AffineType type)
{
    return RootVector{detail::primitive_kernel(cartan_matrix(type))};
}

CorootVector central_element(AffineType type)
{
    const auto& a = cartan_matrix(type);
    CartanMatrix t{};
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j)
            t[i][j] = a[j][i];
    return detail::primitive_kernel(t);
}

Weight simple_root_as_weight(AffineType type, Color i)
{
    if (i < 0 || i >= kRank)
        throw std::out_of_range("simple root index out of range");
    const auto& a = cartan_matrix(type);
    Weight w;
    for (std::size_t j = 0; j < kRank; ++j)
        w.lambda[j] = a[j][static_cast<std::size_t>(i)];
    w.delta = i == 0 ? 1 : 0;
    return w;
}

Weight root_to_weight(AffineType type, const RootVector& root)
{
    Weight w;
    for (Color i = 0; i < kRank; ++i)
        w += root.coeffs[static_cast<std::size_t>(i)] * simple_root_as_weight(type, i);
    return w;
}

int level(AffineType type, const Weight& w)
{
    const auto c = central_element(type);
    int total = 0;
    for (std::size_t i = 0; i < kRank; ++i)
        total += c[i] * w.lambda[i];
    return total;
}

bool is_level_one_dominant(AffineType type, const Weight& w)
{
    return w.delta == 0 && std::all_of(w.lambda.begin(), w.lambda.end(), [](int m) { return m >= 0; }) &&
           level(type, w) == 1;
}

} // namespace ywall
