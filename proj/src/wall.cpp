#include "ywall/wall.hpp"

#include "ywall/energy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ywall {

ColumnClass YoungWall::ground() const
{
    return ground_column(type, highest_weight);
}

std::string YoungWall::to_string() const
{
    std::ostringstream out;
    out << "(...";
    for (const auto& c : columns)
        out << ", " << column_label(c.cls) << '(' << c.n << ')';
    out << ')';
    return out.str();
}

YoungWall ground_wall(AffineType type, const Weight& lambda)
{
    YoungWall w{type, lambda, {}};
    const auto g = w.ground();
    if (energy_table(type)(psi(g), psi(g)) != 0)
        throw std::logic_error("ground pair has nonzero energy; ground-state wall would not be reduced");
    return w;
}

bool is_normalized(const YoungWall& w)
{
    return w.columns.empty() || w.columns.front() != ColumnState{w.ground(), 0};
}

YoungWall normalized(YoungWall w)
{
    const ColumnState ground{w.ground(), 0};
    auto first = std::find_if(w.columns.begin(), w.columns.end(), [&](const ColumnState& c) { return c != ground; });
    w.columns.erase(w.columns.begin(), first);
    return w;
}

bool is_reduced(const YoungWall& w)
{
    const auto& h = energy_table(w.type);
    ColumnState left{w.ground(), 0};
    for (const auto& right : w.columns) {
        if (right.n < 0 || right.n - left.n != h(psi(left.cls), psi(right.cls)))
            return false;
        left = right;
    }
    return true;
}

YoungWall with_materialized_ground(const YoungWall& w)
{
    YoungWall out = w;
    out.columns.insert(out.columns.begin(), ColumnState{w.ground(), 0});
    return out;
}

int WallSignature::minuses() const
{
    return static_cast<int>(std::count_if(reduced.begin(), reduced.end(), [](const Symbol& s) { return !s.plus; }));
}

int WallSignature::pluses() const
{
    return static_cast<int>(reduced.size()) - minuses();
}

WallSignature i_signature(const YoungWall& w, Color i)
{
    WallSignature sig;
    sig.tail_pluses = w.highest_weight.pair(i);

    std::vector<WallSignature::Symbol> minus_run;
    std::vector<WallSignature::Symbol> plus_stack(static_cast<std::size_t>(sig.tail_pluses),
                                                  {true, WallSignature::kTail});
    for (std::size_t k = 0; k < w.columns.size(); ++k) {
        const auto s = signature(w.columns[k].cls, i);
        sig.per_column.push_back(s);
        for (int m = 0; m < s.removable; ++m) {
            if (!plus_stack.empty())
                plus_stack.pop_back();
            else
                minus_run.push_back({false, static_cast<int>(k)});
        }
        for (int p = 0; p < s.admissible; ++p)
            plus_stack.push_back({true, static_cast<int>(k)});
    }
    sig.reduced = std::move(minus_run);
    sig.reduced.insert(sig.reduced.end(), plus_stack.begin(), plus_stack.end());
    return sig;
}

namespace {

YoungWall checked(YoungWall w, const char* op)
{
    w = normalized(std::move(w));
    if (!is_reduced(w))
        throw std::logic_error(std::string(op) + " produced a non-reduced wall " + w.to_string());
    return w;
}

} // namespace

std::optional<YoungWall> apply_f(const YoungWall& w, Color i)
{
    const auto sig = i_signature(w, i);
    auto it = std::find_if(sig.reduced.begin(), sig.reduced.end(), [](const auto& s) { return s.plus; });
    if (it == sig.reduced.end())
        return std::nullopt;

    YoungWall out = w;
    std::size_t k = 0;
    if (it->owner == WallSignature::kTail)
        out = with_materialized_ground(w);
    else
        k = static_cast<std::size_t>(it->owner);
    auto& column = out.columns[k];
    const auto& g = perfect_crystal(w.type).graph;
    const auto next = g.f(psi(column.cls), i);
    if (!next)
        throw std::logic_error("signature + without an admissible slot in " + column_label(column.cls));
    column = {psi_inverse(w.type, *next), column.n + (i == 0 ? 1 : 0)};
    return checked(std::move(out), "F");
}

std::optional<YoungWall> apply_e(const YoungWall& w, Color i)
{
    const auto sig = i_signature(w, i);
    auto it = std::find_if(sig.reduced.rbegin(), sig.reduced.rend(), [](const auto& s) { return !s.plus; });
    if (it == sig.reduced.rend())
        return std::nullopt;

    YoungWall out = w;
    auto& column = out.columns[static_cast<std::size_t>(it->owner)];
    const auto& g = perfect_crystal(w.type).graph;
    const auto prev = g.e(psi(column.cls), i);
    if (!prev)
        throw std::logic_error("signature - without a removable block in " + column_label(column.cls));
    column = {psi_inverse(w.type, *prev), column.n - (i == 0 ? 1 : 0)};
    return checked(std::move(out), "E");
}

std::pair<int, int> epsilon_phi(const YoungWall& w, Color i)
{
    const auto sig = i_signature(w, i);
    return {sig.minuses(), sig.pluses()};
}

BlockCounts block_counts(const YoungWall& w)
{
    const auto& g = perfect_crystal(w.type).graph;
    const auto ground_weight = g.weight(psi(w.ground()));
    BlockCounts counts;
    Weight classical_drop; // sum_i k_i cl(alpha_i)
    for (const auto& c : w.columns) {
        counts.k[0] += c.n;
        classical_drop += ground_weight - g.weight(psi(c.cls));
    }
    // Remove the alpha_0 part, then invert the {1,2} principal minor
    // (determinant 1 for both types).
    const auto& a = cartan_matrix(w.type);
    for (std::size_t j = 0; j < kRank; ++j)
        classical_drop.lambda[j] -= counts.k[0] * a[j][0];
    const int p = a[1][1], q = a[1][2], r = a[2][1], s = a[2][2];
    const int det = p * s - q * r;
    const int y1 = classical_drop.lambda[1], y2 = classical_drop.lambda[2];
    const int n1 = s * y1 - q * y2, n2 = -r * y1 + p * y2;
    if (n1 % det != 0 || n2 % det != 0)
        throw std::logic_error("non-integral block counts for " + w.to_string());
    counts.k[1] = n1 / det;
    counts.k[2] = n2 / det;
    if (a[0][1] * counts.k[1] + a[0][2] * counts.k[2] != classical_drop.lambda[0])
        throw std::logic_error("classical weight of " + w.to_string() + " is not lambda minus a root combination");
    if (std::any_of(counts.k.begin(), counts.k.end(), [](int k) { return k < 0; }))
        throw std::logic_error("negative block count in " + w.to_string());
    return counts;
}

Weight weight(const YoungWall& w)
{
    const auto counts = block_counts(w);
    Weight out = w.highest_weight;
    for (Color i = 0; i < kRank; ++i)
        out -= counts.k[static_cast<std::size_t>(i)] * simple_root_as_weight(w.type, i);
    return out;
}

std::vector<ReducedPair> enumerate_reduced_adjacent_pairs(AffineType type)
{
    const auto& h = energy_table(type);
    std::vector<ReducedPair> out;
    for (auto left : column_classes(type))
        for (auto right : column_classes(type))
            out.push_back({left, right, h(psi(left), psi(right))});
    return out;
}

namespace {

int total_blocks(const YoungWall& w)
{
    const auto counts = block_counts(w);
    return counts.k[0] + counts.k[1] + counts.k[2];
}

} // namespace

WallCrystal generate_crystal(AffineType type, const Weight& lambda, int max_depth)
{
    if (max_depth < 0)
        throw std::invalid_argument("depth must be non-negative");

    using Key = std::vector<ColumnState>;
    std::vector<std::set<Key>> layers(static_cast<std::size_t>(max_depth) + 1);
    const auto root = ground_wall(type, lambda);
    layers[0].insert(root.columns);
    for (int d = 0; d < max_depth; ++d) {
        for (const auto& key : layers[static_cast<std::size_t>(d)]) {
            const YoungWall w{type, lambda, key};
            for (Color i = 0; i < kRank; ++i)
                if (auto child = apply_f(w, i))
                    layers[static_cast<std::size_t>(d) + 1].insert(child->columns);
        }
    }

    WallCrystal out{CrystalGraph(type), {}, {}};
    std::map<Key, ElementId> ids;
    for (int d = 0; d <= max_depth; ++d) {
        for (const auto& key : layers[static_cast<std::size_t>(d)]) {
            YoungWall w{type, lambda, key};
            if (total_blocks(w) != d)
                throw std::logic_error("wall " + w.to_string() + " found at the wrong depth");
            ids.emplace(key, out.graph.add_element(w.to_string(), weight(w)));
            out.walls.push_back(std::move(w));
            out.depth.push_back(d);
        }
    }
    for (std::size_t id = 0; id < out.walls.size(); ++id) {
        if (out.depth[id] == max_depth)
            continue;
        for (Color i = 0; i < kRank; ++i) {
            if (auto child = apply_f(out.walls[id], i)) {
                const auto target = ids.at(child->columns);
                if (out.graph.weight(target) != out.graph.weight(ElementId{static_cast<std::uint32_t>(id)}) -
                                                   simple_root_as_weight(type, i))
                    throw std::logic_error("closed-form weight disagrees with F_" + std::to_string(i) + " step at " +
                                           out.walls[id].to_string());
                out.graph.add_edge(ElementId{static_cast<std::uint32_t>(id)}, i, target);
            }
        }
    }
    return out;
}

std::vector<ElementId> to_path(const YoungWall& w)
{
    std::vector<ElementId> out;
    for (const auto& c : w.columns)
        out.push_back(psi(c.cls));
    return out;
}

YoungWall from_path(AffineType type, const Weight& lambda, std::span<const ElementId> path)
{
    YoungWall w = ground_wall(type, lambda);
    const auto& h = energy_table(type);
    ColumnState left{w.ground(), 0};
    for (auto b : path) {
        ColumnState next{psi_inverse(type, b), 0};
        next.n = left.n + h(psi(left.cls), b);
        w.columns.push_back(next);
        left = next;
    }
    return normalized(std::move(w));
}

} // namespace ywall
