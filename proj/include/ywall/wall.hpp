#pragma once

#include "ywall/column.hpp"
#include "ywall/crystal.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ywall {

/// A Young wall (..., y_2, y_1, y_0) built on the ground-state wall of a
/// level-1 weight. Only a finite list of columns is stored, left to right
/// with columns.back() = y_0; everything further left is the ground-state
/// column with n = 0.
struct YoungWall {
    AffineType type = AffineType::D4_3;
    Weight highest_weight;
    std::vector<ColumnState> columns;

    ColumnClass ground() const;

    friend bool operator==(const YoungWall& a, const YoungWall& b)
    {
        return a.type == b.type && a.highest_weight == b.highest_weight && a.columns == b.columns;
    }

    std::string to_string() const;
};

YoungWall ground_wall(AffineType type, const Weight& lambda);

/// Leftmost column is not (ground, 0), or the list is empty.
bool is_normalized(const YoungWall& w);
YoungWall normalized(YoungWall w);

/// n_k - n_{k+1} = H(y_{k+1} (x) y_k) for every adjacent pair, including the
/// ground tail against the leftmost stored column, and all n_k >= 0.
bool is_reduced(const YoungWall& w);

/// Same wall with one more ground column stored explicitly on the left.
YoungWall with_materialized_ground(const YoungWall& w);

struct WallSignature {
    /// Owner index into YoungWall::columns, or kTail for the virtual element
    /// standing in for the infinite ground tail (no minuses, lambda(h_i) pluses).
    static constexpr int kTail = -1;

    struct Symbol {
        bool plus = false;
        int owner = kTail;
        friend bool operator==(const Symbol&, const Symbol&) = default;
    };

    int tail_pluses = 0;
    std::vector<Signature> per_column;
    /// After cancelling (+, -) pairs: all minuses, then all pluses.
    std::vector<Symbol> reduced;

    int minuses() const;
    int pluses() const;
};

WallSignature i_signature(const YoungWall& w, Color i);

/// Kashiwara operators. F adds an i-block to the column owning the leftmost
/// surviving +, E removes one from the column owning the rightmost
/// surviving -. Results are normalized and checked to be reduced (a
/// violation throws std::logic_error).
std::optional<YoungWall> apply_f(const YoungWall& w, Color i);
std::optional<YoungWall> apply_e(const YoungWall& w, Color i);

/// (eps_i, phi_i) = (surviving minuses, surviving pluses).
std::pair<int, int> epsilon_phi(const YoungWall& w, Color i);

/// k_i: the number of added i-blocks.
struct BlockCounts {
    std::array<int, kRank> k{};
    friend bool operator==(const BlockCounts&, const BlockCounts&) = default;
};

/// k_0 = sum of n over columns; k_1, k_2 from the classical weight of the
/// column classes. Throws std::logic_error if they are not non-negative integers.
BlockCounts block_counts(const YoungWall& w);

/// lambda - sum_i k_i alpha_i (closed form).
Weight weight(const YoungWall& w);

struct ReducedPair {
    ColumnClass left;
    ColumnClass right;
    /// n_right - n_left.
    int n_difference = 0;
};

/// Every ordered class pair admits exactly one reduced adjacency up to a
/// common shift of n; returns all of them.
std::vector<ReducedPair> enumerate_reduced_adjacent_pairs(AffineType type);

/// The BFS prefix of Y(lambda) up to a number of added blocks.
struct WallCrystal {
    CrystalGraph graph;
    std::vector<YoungWall> walls;
    std::vector<int> depth;
};

/// Node ids are ordered by (depth, column list). Node weights are the closed
/// form; the BFS also asserts they equal parent weight - alpha_i.
WallCrystal generate_crystal(AffineType type, const Weight& lambda, int max_depth);

/// Columnwise psi on the stored columns (leftmost first); the path continues
/// with b_lambda to the left.
std::vector<ElementId> to_path(const YoungWall& w);

/// Rebuilds the wall from a path given leftmost first: n is accumulated from
/// the ground tail inward by the reduced-adjacency rule. Leading ground
/// entries are allowed and dropped.
YoungWall from_path(AffineType type, const Weight& lambda, std::span<const ElementId> path);

} // namespace ywall
