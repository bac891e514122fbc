#pragma once

#include "lllshift/group.hpp"

#include <cstddef>
#include <vector>

namespace lllshift {

enum class Side { left, right };

/// Vertices are the elements of F; two distinct vertices collide when their
/// translates meet (left: D s and D s', right: s T and s' T).
class CollisionGraph {
public:
    CollisionGraph(ElementSet vertices, std::vector<std::vector<std::size_t>> adjacency);

    [[nodiscard]] const ElementSet& vertices() const noexcept { return vertices_; }
    /// Neighbour indices of vertex i, ascending.
    [[nodiscard]] const std::vector<std::size_t>& neighbours(std::size_t i) const { return adjacency_[i]; }
    [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::size_t max_degree() const noexcept { return max_degree_; }
    [[nodiscard]] std::size_t edge_count() const noexcept;

private:
    ElementSet vertices_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::size_t max_degree_ = 0;
};

CollisionGraph collision_graph(const GroupContext& ctx, const ElementSet& f, const ElementSet& d, Side side);

/// Scans vertices in canonical order, keeps each surviving vertex and discards its
/// neighbours. The result has at least ceil(|V| / (max_degree + 1)) vertices.
ElementSet greedy_independent_set(const CollisionGraph& g);

/// L subset of F with D l1 and D l2 disjoint for distinct l1, l2; |L| >= |F| / |D|^2.
ElementSet left_separated_subset(const GroupContext& ctx, const ElementSet& f, const ElementSet& d);

/// L subset of F with l1 T and l2 T disjoint for distinct l1, l2; |L| >= |F| / |T|^2.
ElementSet right_separated_subset(const GroupContext& ctx, const ElementSet& f, const ElementSet& t);

/// Exhaustive pairwise check of translate disjointness.
bool is_left_separated(const GroupContext& ctx, const ElementSet& l, const ElementSet& d);
bool is_right_separated(const GroupContext& ctx, const ElementSet& l, const ElementSet& t);

} // namespace lllshift
