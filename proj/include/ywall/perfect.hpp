#pragma once

#include "ywall/crystal.hpp"
#include "ywall/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ywall {

/// A level-1 perfect crystal together with its minimal vectors.
///
/// Element ids follow the row order of the energy tables:
///   B1  (D4_3): phi, 1, 2, 3, 0, 3bar, 2bar, 1bar
///   B'1 (G2_1): 0, 1, ..., 7, 7bar, 6bar, ..., 1bar
struct PerfectCrystal {
    CrystalGraph graph;
    /// Coordinate tuples, display only.
    std::vector<std::string> coordinates;
    /// (lambda, b_lambda) for every level-1 dominant lambda.
    std::vector<std::pair<Weight, ElementId>> minimal_by_weight;

    AffineType type() const { return graph.type(); }
    std::size_t size() const { return graph.size(); }
    /// b_lambda for a level-1 dominant weight; throws std::invalid_argument otherwise.
    ElementId minimal(const Weight& lambda) const;
};

PerfectCrystal build_b1();
PerfectCrystal build_b1_prime();

/// Shared immutable instance (B1 for D4_3, B'1 for G2_1).
const PerfectCrystal& perfect_crystal(AffineType type);

/// The f-arrows as (src label, color, dst label), in the order the
/// crystal is built.
std::vector<std::tuple<std::string, Color, std::string>> perfect_edge_list(AffineType type);

/// Dominant weights sum m_i Lambda_i with sum c_i m_i = level.
std::vector<Weight> dominant_weights_of_level(AffineType type, int level);

/// Checks the perfectness conditions (2)-(5) at the given level; condition
/// (1) concerns the quantum module itself and is reported as assumed.
Report verify_perfect(const PerfectCrystal& p, int level = 1);

/// The ground-state path of a level-1 weight is constant at b_lambda here,
/// because eps(b_lambda) = phi(b_lambda) = lambda for both crystals.
ElementId ground_state_path(AffineType type, const Weight& lambda);

} // namespace ywall
