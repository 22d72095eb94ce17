#pragma once

#include "ywall/crystal.hpp"
#include "ywall/perfect.hpp"

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace ywall {

/// An equivalence class of Young columns (up to the half-turn about the
/// vertical axis). Classes are indexed like the perfect crystal elements they
/// correspond to, so psi is the identity on indices.
struct ColumnClass {
    AffineType type = AffineType::D4_3;
    ElementId index;
    friend auto operator<=>(const ColumnClass&, const ColumnClass&) = default;
};

/// A column of a wall: its class and n = |y|_0, the number of 0-blocks added
/// above the ground-state column.
struct ColumnState {
    ColumnClass cls;
    int n = 0;
    friend auto operator<=>(const ColumnState&, const ColumnState&) = default;
};

/// i-signature of a column: r minuses (removable and second removable
/// i-blocks) followed by a pluses (admissible and second admissible slots).
struct Signature {
    int removable = 0;
    int admissible = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<ColumnClass> column_classes(AffineType type);
/// "c_3bar" for D4_3, "c'_3bar" for G2_1.
std::string column_label(ColumnClass c);
/// Lookup by the short index ("phi", "1", "7bar", ...).
ColumnClass column_class(AffineType type, std::string_view index);

ElementId psi(ColumnClass c);
ColumnClass psi_inverse(AffineType type, ElementId b);

/// The ground-state column for a level-1 weight.
ColumnClass ground_column(AffineType type, const Weight& lambda);

/// (eps_i, phi_i) of psi(c).
Signature signature(ColumnClass c, Color i);

/// The drawn D4_3 signature table, indexed [class][color].
const std::array<std::array<Signature, kRank>, 8>& drawn_signatures_d4();

struct ChainStep {
    ColumnClass from;
    Color color;
    ColumnClass to;
};

/// The D4_3 cycle c_phi -0-> c_1 -1-> c_2 -2-> c_3 -1-> c_0 -1-> c_3bar -2-> c_2bar -1-> c_1bar -0-> c_phi,
/// one block added per step. Throws std::invalid_argument for G2_1, whose
/// class graph branches.
std::vector<ChainStep> chain_of_classes(AffineType type);

/// Half-block bookkeeping for D4_3 columns above the Lambda_0 ground column.
struct BlockLedgerD4 {
    /// Bottom-up colors of one period of the column pattern.
    std::array<Color, 8> pattern_colors;
    /// Blocks added in the smallest column of each class, and its |y|_0.
    std::array<int, 8> base_blocks;
    std::array<int, 8> base_n;
};

const BlockLedgerD4& block_ledger_d4();

/// |y| for a D4_3 column; throws std::invalid_argument for G2_1 or when n
/// is below the class's smallest column.
int blocks_added(ColumnState c);

/// |y_right| - |y_left| for reduced adjacent columns (left, right), with
/// the left column taken at |y|_0 = left_n.
int adjacency_delta_blocks(ColumnClass left, ColumnClass right, int left_n = 1);

/// The crystal graph on column classes. For D4_3 the arrows come from the
/// block ledger (adding one block along the pattern) plus the two 0-arrows
/// that close up only after the half-turn, and weights come from the drawn
/// signature table. For G2_1 the classes are abstract and the graph is B'1
/// relabelled.
CrystalGraph column_class_graph(AffineType type);

} // namespace ywall
