#include "ywall/path.hpp"

#include "ywall/energy.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ywall {

PathModel::PathModel(AffineType type, const Weight& lambda)
    : type_(type), lambda_(lambda), ground_(ground_state_path(type, lambda)), crystal_(&perfect_crystal(type))
{
}

std::optional<std::size_t> PathModel::target_factor(const PathState& p, Color i, bool lowering) const
{
    const auto& g = crystal_->graph;
    const std::size_t n = p.factors.size();
    // prefix_phi[k] = phi_i of u_lambda (x) p(N-1) (x) ... (x) factor k-1 (stored order).
    std::vector<int> prefix_phi(n + 1);
    prefix_phi[0] = lambda_.pair(i);
    for (std::size_t k = 0; k < n; ++k) {
        const auto b = p.factors[k];
        prefix_phi[k + 1] = std::max(phi(g, b, i), prefix_phi[k] + g.weight(b).pair(i));
    }
    // Peel factors off the right end: X (x) b acts on X iff phi(X) > eps(b)
    // for f, phi(X) >= eps(b) for e.
    for (std::size_t k = n; k-- > 0;) {
        const int eps_b = epsilon(g, p.factors[k], i);
        const bool on_left = lowering ? prefix_phi[k] > eps_b : prefix_phi[k] >= eps_b;
        if (!on_left)
            return k;
    }
    return std::nullopt;
}

std::optional<PathState> PathModel::f(const PathState& p, Color i) const
{
    const auto& g = crystal_->graph;
    auto k = target_factor(p, i, true);
    PathState q = p;
    if (!k) {
        // Lands on u_lambda: expose one more ground factor and retry. Since
        // eps(b_lambda) = phi(b_lambda) = lambda the action then stays inside.
        q.factors.insert(q.factors.begin(), ground_);
        k = target_factor(q, i, true);
        if (!k)
            throw std::logic_error("path f_i did not resolve after exposing a ground factor");
    }
    auto next = g.f(q.factors[*k], i);
    if (!next)
        return std::nullopt;
    q.factors[*k] = *next;
    return normalized(std::move(q));
}

std::optional<PathState> PathModel::e(const PathState& p, Color i) const
{
    const auto& g = crystal_->graph;
    auto k = target_factor(p, i, false);
    if (!k)
        return std::nullopt; // e_i u_lambda = 0
    auto prev = g.e(p.factors[*k], i);
    if (!prev)
        return std::nullopt;
    PathState q = p;
    q.factors[*k] = *prev;
    return normalized(std::move(q));
}

Weight PathModel::weight(const PathState& p) const
{
    const auto& g = crystal_->graph;
    const auto& h = energy_table(type_);
    Weight w = lambda_;
    for (auto b : p.factors)
        w += g.weight(b) - g.weight(ground_);
    // Position of stored factor k counted from the right is n-1-k; the pair
    // (p(j), p(j-1)) contributes j * H. The factor left of the list is b_lambda.
    const auto n = static_cast<int>(p.factors.size());
    int energy = 0;
    ElementId left = ground_;
    for (int k = 0; k < n; ++k) {
        const int j = n - k; // index of `left` in path numbering
        energy += j * h(left, p.factors[static_cast<std::size_t>(k)]);
        left = p.factors[static_cast<std::size_t>(k)];
    }
    w.delta -= energy;
    return w;
}

PathState PathModel::normalized(PathState p) const
{
    std::size_t lead = 0;
    while (lead < p.factors.size() && p.factors[lead] == ground_)
        ++lead;
    p.factors.erase(p.factors.begin(), p.factors.begin() + static_cast<std::ptrdiff_t>(lead));
    return p;
}

namespace {

std::string path_label(const PerfectCrystal& b, const PathState& p)
{
    std::ostringstream out;
    out << "(...";
    for (auto x : p.factors)
        out << " ⊗ " << b.graph.label(x);
    out << ')';
    return out.str();
}

} // namespace

PathCrystal generate_path_crystal(AffineType type, const Weight& lambda, int max_depth)
{
    if (max_depth < 0)
        throw std::invalid_argument("depth must be non-negative");
    const PathModel model(type, lambda);
    std::vector<std::set<PathState>> layers(static_cast<std::size_t>(max_depth) + 1);
    layers[0].insert(PathState{});
    for (int d = 0; d < max_depth; ++d)
        for (const auto& p : layers[static_cast<std::size_t>(d)])
            for (Color i = 0; i < kRank; ++i)
                if (auto q = model.f(p, i))
                    layers[static_cast<std::size_t>(d) + 1].insert(*q);

    PathCrystal out{CrystalGraph(type), {}, {}};
    std::map<PathState, ElementId> ids;
    const auto& b = perfect_crystal(type);
    for (int d = 0; d <= max_depth; ++d) {
        for (const auto& p : layers[static_cast<std::size_t>(d)]) {
            ids.emplace(p, out.graph.add_element(path_label(b, p), model.weight(p)));
            out.states.push_back(p);
            out.depth.push_back(d);
        }
    }
    for (std::size_t id = 0; id < out.states.size(); ++id) {
        if (out.depth[id] == max_depth)
            continue;
        const ElementId src{static_cast<std::uint32_t>(id)};
        for (Color i = 0; i < kRank; ++i) {
            if (auto q = model.f(out.states[id], i)) {
                const auto dst = ids.at(*q);
                if (out.graph.weight(dst) != out.graph.weight(src) - simple_root_as_weight(type, i))
                    throw std::logic_error("path weight disagrees with f_" + std::to_string(i) + " step at " +
                                           out.graph.label(src));
                out.graph.add_edge(src, i, dst);
            }
        }
    }
    return out;
}

} // namespace ywall
