#pragma once

#include "lllshift/lll.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace lllshift {

/// Uniform symbols in {0, ..., k-1} from a std::mt19937_64 stream. A draw takes 64-bit
/// outputs u, rejects u >= 2^64 - (2^64 mod k), and returns u mod k. Both pieces are
/// fully specified, so trajectories reproduce across platforms and implementations.
class SymbolSampler {
public:
    explicit SymbolSampler(std::uint64_t seed) : engine_(seed) {}

    Symbol draw(Symbol k);

private:
    std::mt19937_64 engine_;
};

enum class SolveStatus { solved, budget_exhausted, unsatisfiable };

struct SolveResult {
    SolveStatus status = SolveStatus::solved;
    /// Valid solution when status == solved, empty otherwise.
    Assignment assignment;
    std::uint64_t resamples = 0;
    std::uint64_t nodes = 0;
    /// Resampled event indices in order (only filled when requested).
    std::vector<std::size_t> trace;

    [[nodiscard]] bool solved() const noexcept { return status == SolveStatus::solved; }
};

struct MoserTardosOptions {
    std::uint64_t seed = 0;
    std::uint64_t max_resamples = 1'000'000;
    bool record_trace = false;
};

/// Draws every variable in universe order, then repeatedly resamples the domain of
/// the lowest-index violated event until no event is violated or the budget runs out.
SolveResult solve_moser_tardos(const Instance& inst, const MoserTardosOptions& options = {});

struct BacktrackingOptions {
    /// Search nodes visited before giving up with ResourceLimit.
    std::uint64_t max_nodes = std::uint64_t{1} << 28;
};

/// Exhaustive depth-first search in variable order. An event is checked as soon as
/// its last domain variable is assigned.
SolveResult solve_backtracking(const Instance& inst, const BacktrackingOptions& options = {});

std::string to_string(SolveStatus s);

} // namespace lllshift
