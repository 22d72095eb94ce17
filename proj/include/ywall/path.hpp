#pragma once

#include "ywall/crystal.hpp"
#include "ywall/perfect.hpp"

#include <optional>
#include <vector>

namespace ywall {

/// A lambda-path ... (x) b (x) b (x) p(N-1) (x) ... (x) p(0) truncated to its
/// non-constant part. Factors are stored leftmost first; everything to the
/// left is b_lambda, which in turn is absorbed into a virtual highest weight
/// element u_lambda (eps = 0, phi = lambda).
struct PathState {
    std::vector<ElementId> factors;
    friend auto operator<=>(const PathState&, const PathState&) = default;
};

/// Kashiwara operators on lambda-paths, evaluated with the two-factor
/// tensor rule applied to the left-nested product
///   ((u_lambda (x) p(N-1)) (x) p(N-2)) (x) ... (x) p(0).
class PathModel {
public:
    PathModel(AffineType type, const Weight& lambda);

    AffineType type() const { return type_; }
    const Weight& highest_weight() const { return lambda_; }
    ElementId ground() const { return ground_; }

    std::optional<PathState> f(const PathState& p, Color i) const;
    std::optional<PathState> e(const PathState& p, Color i) const;

    /// lambda + sum_k (wt p(k) - wt b_lambda) - (sum_{k>=1} k H(p(k) (x) p(k-1))) delta.
    Weight weight(const PathState& p) const;

    PathState normalized(PathState p) const;

private:
    // Acts on factor index `k` or returns nullopt when the action falls on
    // the virtual head.
    std::optional<std::size_t> target_factor(const PathState& p, Color i, bool lowering) const;

    AffineType type_;
    Weight lambda_;
    ElementId ground_;
    const PerfectCrystal* crystal_;
};

struct PathCrystal {
    CrystalGraph graph;
    std::vector<PathState> states;
    std::vector<int> depth;
};

/// BFS prefix of P(lambda) to the given number of f-steps; ids ordered by
/// (depth, factors). Asserts weight(f_i p) = weight(p) - alpha_i.
PathCrystal generate_path_crystal(AffineType type, const Weight& lambda, int max_depth);

} // namespace ywall
