#pragma once

// Test-only helpers: nonabelian group tables and random generators.

#include "lllshift/group.hpp"
#include "lllshift/lll.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace lllshift::testing {

/// Cayley table of the symmetric group S_n, elements indexed by lexicographic rank
/// of their permutation. Composition (p * q)(i) = p(q(i)).
inline GroupContext symmetric_group(std::size_t n)
{
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const auto m = perms.size();
    auto index = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<std::size_t>> mul(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<std::size_t> c(n);
            for (std::size_t i = 0; i < n; ++i)
                c[i] = perms[a][perms[b][i]];
            mul[a][b] = index(c);
        }
    return GroupContext::table(std::move(mul), 0);
}

/// Dihedral group of order 2n: element r^i s^j has index i + n j.
inline GroupContext dihedral_group(std::size_t n)
{
    const auto m = 2 * n;
    std::vector<std::vector<std::size_t>> mul(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const auto i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
            // r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
            const auto i = j1 == 0 ? (i1 + i2) % n : (i1 + n - i2) % n;
            mul[a][b] = i + n * ((j1 + j2) % 2);
        }
    return GroupContext::table(std::move(mul), 0);
}

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random subset of `pool` of the given size (size clamped to |pool|).
inline ElementSet random_subset(Rng& rng, const ElementSet& pool, std::size_t size)
{
    std::vector<GroupElement> elems(pool.begin(), pool.end());
    std::shuffle(elems.begin(), elems.end(), rng);
    elems.resize(std::min(size, elems.size()));
    return ElementSet(std::move(elems));
}

inline GroupElement random_element(Rng& rng, const ElementSet& pool)
{
    return pool[uniform(rng, 0, pool.size() - 1)];
}

} // namespace lllshift::testing
