#include "lllshift/separated.hpp"

#include "lllshift/error.hpp"

#include <algorithm>

namespace lllshift {

CollisionGraph::CollisionGraph(ElementSet vertices, std::vector<std::vector<std::size_t>> adjacency)
    : vertices_(std::move(vertices)), adjacency_(std::move(adjacency))
{
    if (adjacency_.size() != vertices_.size())
        throw InvalidArgument("adjacency list count does not match vertex count");
    for (std::size_t i = 0; i < adjacency_.size(); ++i) {
        auto& row = adjacency_[i];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        for (auto j : row)
            if (j == i || j >= vertices_.size())
                throw InvalidArgument("collision graph adjacency must be irreflexive and in range");
        max_degree_ = std::max(max_degree_, row.size());
    }
    for (std::size_t i = 0; i < adjacency_.size(); ++i)
        for (auto j : adjacency_[i])
            if (!adjacent(j, i))
                throw InvalidArgument("collision graph adjacency must be symmetric");
}

bool CollisionGraph::adjacent(std::size_t i, std::size_t j) const
{
    const auto& row = adjacency_[i];
    return std::binary_search(row.begin(), row.end(), j);
}

std::size_t CollisionGraph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (const auto& row : adjacency_)
        twice += row.size();
    return twice / 2;
}

CollisionGraph collision_graph(const GroupContext& ctx, const ElementSet& f, const ElementSet& d, Side side)
{
    if (d.empty())
        throw InvalidArgument("translate set must be nonempty");
    // left:  D s meets D s'  <=>  s' in D^{-1} D s
    // right: s T meets s' T  <=>  s' in s T T^{-1}
    const auto shifts = side == Side::left ? ctx.set_product(ctx.set_inverse(d), d)
                                           : ctx.set_product(d, ctx.set_inverse(d));
    std::vector<std::vector<std::size_t>> adjacency(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (const auto& s : shifts) {
            const auto other = side == Side::left ? ctx.multiply(s, f[i]) : ctx.multiply(f[i], s);
            const auto j = f.index_of(other);
            if (j != f.size() && j != i)
                adjacency[i].push_back(j);
        }
    }
    return CollisionGraph(f, std::move(adjacency));
}

ElementSet greedy_independent_set(const CollisionGraph& g)
{
    const auto n = g.vertices().size();
    std::vector<bool> removed(n, false);
    std::vector<GroupElement> chosen;
    for (std::size_t i = 0; i < n; ++i) {
        if (removed[i])
            continue;
        chosen.push_back(g.vertices()[i]);
        for (auto j : g.neighbours(i))
            removed[j] = true;
    }
    return ElementSet(std::move(chosen));
}

namespace {

ElementSet separated_subset(const GroupContext& ctx, const ElementSet& f, const ElementSet& d, Side side)
{
    if (f.empty() || d.empty())
        throw InvalidArgument("separated subset needs nonempty F and translate set");
    const auto graph = collision_graph(ctx, f, d, side);
    auto result = greedy_independent_set(graph);
    // |F| <= |result| * (maxdeg + 1) <= |result| * |D|^2
    if (result.size() * d.size() * d.size() < f.size())
        throw BoundViolation("greedy independent set is smaller than |F|/|D|^2");
    return result;
}

} // namespace

ElementSet left_separated_subset(const GroupContext& ctx, const ElementSet& f, const ElementSet& d)
{
    return separated_subset(ctx, f, d, Side::left);
}

ElementSet right_separated_subset(const GroupContext& ctx, const ElementSet& f, const ElementSet& t)
{
    return separated_subset(ctx, f, t, Side::right);
}

bool is_left_separated(const GroupContext& ctx, const ElementSet& l, const ElementSet& d)
{
    std::vector<ElementSet> translates;
    translates.reserve(l.size());
    for (const auto& x : l)
        translates.push_back(ctx.translate_right(d, x));
    for (std::size_t i = 0; i < translates.size(); ++i)
        for (std::size_t j = i + 1; j < translates.size(); ++j)
            if (translates[i].intersects(translates[j]))
                return false;
    return true;
}

bool is_right_separated(const GroupContext& ctx, const ElementSet& l, const ElementSet& t)
{
    std::vector<ElementSet> translates;
    translates.reserve(l.size());
    for (const auto& x : l)
        translates.push_back(ctx.translate_left(x, t));
    for (std::size_t i = 0; i < translates.size(); ++i)
        for (std::size_t j = i + 1; j < translates.size(); ++j)
            if (translates[i].intersects(translates[j]))
                return false;
    return true;
}

} // namespace lllshift
