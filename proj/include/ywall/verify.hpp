#pragma once

#include "ywall/cartan.hpp"
#include "ywall/report.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace ywall {

/// The three (type, lambda) pairs with level-1 lambda.
std::vector<std::pair<AffineType, Weight>> level_one_cases();

/// Solver vs reference tables vs text fixtures vs closed-form sets.
Report verify_energy_suite();
/// Axioms and perfectness of B1 / B'1, edge lists against fixtures.
Report verify_perfect_suite();
/// Combinatorial R-matrix and affine energy over |m|, |n| <= range.
Report verify_rmatrix_suite(int range = 3);
/// Column classes: psi, drawn signatures, D4_3 ledger, reduced adjacencies.
Report verify_columns_suite();
/// Wall crystal properties on BFS prefixes of the given depth.
Report verify_walls_suite(int depth = 8);
/// Wall model against the path model on BFS prefixes of the given depth.
Report verify_paths_suite(int depth = 8);

/// Runs a named suite ("all", "energy", "perfect", "rmatrix", "columns",
/// "walls", "paths"). Throws std::invalid_argument for unknown names.
Report run_suite(std::string_view name, int depth = 8, int range = 3);

} // namespace ywall
