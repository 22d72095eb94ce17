#include "ywall/column.hpp"

#include "ywall/energy.hpp"

#include <stdexcept>

namespace ywall {

std::vector<ColumnClass> column_classes(AffineType type)
{
    std::vector<ColumnClass> out;
    for (auto b : perfect_crystal(type).graph.elements())
        out.push_back({type, b});
    return out;
}

std::string column_label(ColumnClass c)
{
    const auto& g = perfect_crystal(c.type).graph;
    return (c.type == AffineType::D4_3 ? "c_" : "c'_") + short_label(g.label(c.index));
}

ColumnClass column_class(AffineType type, std::string_view index)
{
    const auto& g = perfect_crystal(type).graph;
    return {type, g.at((type == AffineType::D4_3 ? "u_" : "v_") + std::string(index))};
}

ElementId psi(ColumnClass c)
{
    return c.index;
}

ColumnClass psi_inverse(AffineType type, ElementId b)
{
    if (!perfect_crystal(type).graph.contains(b))
        throw std::invalid_argument("psi_inverse: element not in the perfect crystal");
    return {type, b};
}

ColumnClass ground_column(AffineType type, const Weight& lambda)
{
    return psi_inverse(type, ground_state_path(type, lambda));
}

Signature signature(ColumnClass c, Color i)
{
    const auto& g = perfect_crystal(c.type).graph;
    return {epsilon(g, psi(c), i), phi(g, psi(c), i)};
}

const std::array<std::array<Signature, kRank>, 8>& drawn_signatures_d4()
{
    // Rows in class order phi, 1, 2, 3, 0, 3bar, 2bar, 1bar; columns sign_0, sign_1, sign_2.
    static const std::array<std::array<Signature, kRank>, 8> table{{
        {{{1, 1}, {0, 0}, {0, 0}}},
        {{{2, 0}, {0, 1}, {0, 0}}},
        {{{1, 0}, {1, 0}, {0, 1}}},
        {{{1, 0}, {0, 2}, {1, 0}}},
        {{{0, 0}, {1, 1}, {0, 0}}},
        {{{0, 1}, {2, 0}, {0, 1}}},
        {{{0, 1}, {0, 1}, {1, 0}}},
        {{{0, 2}, {1, 0}, {0, 0}}},
    }};
    return table;
}

const BlockLedgerD4& block_ledger_d4()
{
    static const BlockLedgerD4 ledger = [] {
        BlockLedgerD4 l{{0, 1, 2, 1, 1, 2, 1, 0}, {}, {}};
        // Class k (in table order) is reached from c_phi after k blocks.
        int zeros = 0;
        for (std::size_t k = 0; k < l.pattern_colors.size(); ++k) {
            l.base_blocks[k] = static_cast<int>(k);
            l.base_n[k] = zeros;
            zeros += l.pattern_colors[k] == 0 ? 1 : 0;
        }
        return l;
    }();
    return ledger;
}

std::vector<ChainStep> chain_of_classes(AffineType type)
{
    if (type != AffineType::D4_3)
        throw std::invalid_argument("chain_of_classes: only D4_3 columns form a single chain");
    const auto& ledger = block_ledger_d4();
    std::vector<ChainStep> out;
    const auto n = static_cast<std::uint32_t>(ledger.pattern_colors.size());
    for (std::uint32_t k = 0; k < n; ++k)
        out.push_back({{type, ElementId{k}}, ledger.pattern_colors[k], {type, ElementId{(k + 1) % n}}});
    return out;
}

int blocks_added(ColumnState c)
{
    if (c.cls.type != AffineType::D4_3)
        throw std::invalid_argument("blocks_added: block counts are only modelled for D4_3");
    const auto& ledger = block_ledger_d4();
    const auto k = c.cls.index.value;
    if (c.n < ledger.base_n[k])
        throw std::invalid_argument("blocks_added: " + column_label(c.cls) + " needs at least " +
                                    std::to_string(ledger.base_n[k]) + " 0-blocks");
    // One further unit of |y|_0 means half a period: 1 + 2 + 1 = 4 half-blocks.
    return ledger.base_blocks[k] + 4 * (c.n - ledger.base_n[k]);
}

int adjacency_delta_blocks(ColumnClass left, ColumnClass right, int left_n)
{
    const int right_n = left_n + energy_table(left.type)(psi(left), psi(right));
    return blocks_added({right, right_n}) - blocks_added({left, left_n});
}

CrystalGraph column_class_graph(AffineType type)
{
    CrystalGraph g(type);
    if (type == AffineType::D4_3) {
        const auto& drawn = drawn_signatures_d4();
        for (auto c : column_classes(type)) {
            Weight w;
            for (std::size_t i = 0; i < kRank; ++i)
                w.lambda[i] = drawn[c.index.value][i].admissible - drawn[c.index.value][i].removable;
            g.add_element(column_label(c), w);
        }
        for (const auto& step : chain_of_classes(type))
            g.add_edge(step.from.index, step.color, step.to.index);
        // A 0-block on c_3bar (resp. c_2bar) gives a column equivalent to
        // c_2 (resp. c_3) after the half-turn.
        g.add_edge(column_class(type, "3bar").index, 0, column_class(type, "2").index);
        g.add_edge(column_class(type, "2bar").index, 0, column_class(type, "3").index);
        return g;
    }
    const auto& b = perfect_crystal(type).graph;
    for (auto c : column_classes(type))
        g.add_element(column_label(c), b.weight(psi(c)));
    for (const auto& edge : b.edges())
        g.add_edge(edge.src, edge.color, edge.dst);
    return g;
}

} // namespace ywall
