#include "lllshift/solve.hpp"

#include "lllshift/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace lllshift {

Symbol SymbolSampler::draw(Symbol k)
{
    if (k < 1)
        throw InvalidArgument("alphabet size must be >= 1");
    if (k == 1)
        return 0;
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    // 2^64 mod k computed without overflow
    const std::uint64_t rem = (max % k + 1) % k;
    const std::uint64_t limit = max - rem; // accept u <= limit, i.e. u < 2^64 - rem
    while (true) {
        const std::uint64_t u = engine_();
        if (rem == 0 || u <= limit)
            return static_cast<Symbol>(u % k);
    }
}

std::string to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::solved:
        return "solved";
    case SolveStatus::budget_exhausted:
        return "budget_exhausted";
    case SolveStatus::unsatisfiable:
        return "unsatisfiable";
    }
    return "?";
}

namespace {

void ensure_valid(const Instance& inst, const SolveResult& result)
{
    if (!verify_solution(inst, result.assignment).empty())
        throw BoundViolation("solver produced an assignment that violates an event");
}

} // namespace

SolveResult solve_moser_tardos(const Instance& inst, const MoserTardosOptions& options)
{
    const auto k = inst.alphabet_size();
    SymbolSampler sampler(options.seed);
    SolveResult result;
    result.assignment.resize(inst.universe().size());
    for (auto& s : result.assignment)
        s = sampler.draw(k);

    std::set<std::size_t> violated;
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (!inst.events()[i].avoided_by(result.assignment))
            violated.insert(i);

    auto recheck = [&](std::size_t j) {
        if (inst.events()[j].avoided_by(result.assignment))
            violated.erase(j);
        else
            violated.insert(j);
    };

    while (!violated.empty()) {
        if (result.resamples >= options.max_resamples) {
            result.status = SolveStatus::budget_exhausted;
            result.assignment.clear();
            return result;
        }
        const auto i = *violated.begin();
        for (auto v : inst.events()[i].domain())
            result.assignment[v] = sampler.draw(k);
        ++result.resamples;
        if (options.record_trace)
            result.trace.push_back(i);
        recheck(i);
        for (auto j : inst.neighbourhood(i))
            recheck(j);
    }
    ensure_valid(inst, result);
    return result;
}

SolveResult solve_backtracking(const Instance& inst, const BacktrackingOptions& options)
{
    const auto n = inst.universe().size();
    const auto k = inst.alphabet_size();
    SolveResult result;

    // Events become checkable once their largest variable is assigned.
    std::vector<std::vector<std::size_t>> ready(n);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& dom = inst.events()[i].domain();
        if (dom.empty()) {
            if (inst.events()[i].forbids({})) {
                result.status = SolveStatus::unsatisfiable;
                return result;
            }
            continue;
        }
        ready[*std::max_element(dom.begin(), dom.end())].push_back(i);
    }

    Assignment x(n, 0);
    auto consistent_at = [&](std::size_t v) {
        for (auto i : ready[v])
            if (!inst.events()[i].avoided_by(x))
                return false;
        return true;
    };

    if (n == 0) {
        result.assignment = std::move(x);
        return result;
    }

    // Iterative DFS; x[v] holds the value currently tried at depth v.
    std::size_t depth = 0;
    x[0] = 0;
    while (true) {
        if (++result.nodes > options.max_nodes)
            throw ResourceLimit("backtracking search exceeded " + std::to_string(options.max_nodes) + " nodes");
        if (consistent_at(depth)) {
            if (depth + 1 == n) {
                result.assignment = std::move(x);
                ensure_valid(inst, result);
                return result;
            }
            ++depth;
            x[depth] = 0;
            continue;
        }
        // advance to the next value, popping exhausted levels
        while (true) {
            if (x[depth] + 1 < k) {
                ++x[depth];
                break;
            }
            if (depth == 0) {
                result.status = SolveStatus::unsatisfiable;
                return result;
            }
            x[depth] = 0;
            --depth;
        }
    }
}

} // namespace lllshift
