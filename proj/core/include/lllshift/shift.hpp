#pragma once

#include "lllshift/group.hpp"
#include "lllshift/lll.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lllshift {

/// A finite pattern phi: D -> {0, ..., k-1}. Its cylinder is the set of
/// configurations x with x(delta) = phi(delta) for every delta in D.
class Pattern {
public:
    /// `values[i]` is the symbol at `support[i]` in canonical order.
    Pattern(ElementSet support, std::vector<Symbol> values, Symbol alphabet_size);

    [[nodiscard]] const ElementSet& support() const noexcept { return support_; }
    [[nodiscard]] const std::vector<Symbol>& values() const noexcept { return values_; }
    [[nodiscard]] Symbol alphabet_size() const noexcept { return k_; }
    [[nodiscard]] Symbol value(std::size_t i) const { return values_.at(i); }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    ElementSet support_;
    std::vector<Symbol> values_;
    Symbol k_;
};

// ---------------------------------------------------------------------------
// Threshold: f(l) = e * (1 - k^-|D|)^l * |D|^2 * l^2

/// Certified enclosure of f(l).
Enclosure endgame_value(Symbol k, std::size_t d_size, std::uint64_t ell);

/// Smallest l0 with f(l) < 1 for every l >= l0: the first l where f(l) < 1 is certified
/// and the step ratio (1 - k^-|D|) ((l+1)/l)^2 is below one, which makes f decreasing
/// from there on. Returns 1 for k == 1.
std::uint64_t compute_ell0(Symbol k, std::size_t d_size);

/// n = l0 |D|^2.
std::uint64_t compute_n(Symbol k, std::size_t d_size);

/// Block probability bound (1 - k^-|D|)^|L|, exact.
Rational block_event_probability(Symbol k, std::size_t d_size, std::size_t l_size);

// ---------------------------------------------------------------------------
// Bad events B_gamma

/// L subset of F with L^{-1} left D-separated and |L| >= |F| / |D|^2.
ElementSet select_l(const GroupContext& ctx, const ElementSet& f, const ElementSet& d);

/// D L^{-1} gamma. Has exactly |D| |L| elements when L^{-1} is left D-separated.
ElementSet block_domain(const GroupContext& ctx, const GroupElement& gamma, const ElementSet& l, const ElementSet& d);

/// Forbidden iff every block D lambda^{-1} gamma (lambda in L) disagrees with the
/// pattern somewhere.
class ShiftBlockEvent final : public ImplicitBody {
public:
    ShiftBlockEvent(std::shared_ptr<const GroupContext> ctx, GroupElement gamma, ElementSet l, Pattern pattern);

    [[nodiscard]] bool forbids(std::span<const Symbol> values) const override;
    [[nodiscard]] BigInt forbidden_count() const override;
    [[nodiscard]] std::string kind() const override { return "shift_block"; }
    [[nodiscard]] bool equals(const ImplicitBody& other) const override;

    [[nodiscard]] const GroupContext& group() const noexcept { return *ctx_; }
    [[nodiscard]] const std::shared_ptr<const GroupContext>& group_ptr() const noexcept { return ctx_; }
    [[nodiscard]] const GroupElement& gamma() const noexcept { return gamma_; }
    [[nodiscard]] const ElementSet& l() const noexcept { return l_; }
    [[nodiscard]] const Pattern& pattern() const noexcept { return pattern_; }
    /// The event domain, canonically sorted.
    [[nodiscard]] const ElementSet& domain() const noexcept { return domain_; }

private:
    std::shared_ptr<const GroupContext> ctx_;
    GroupElement gamma_;
    ElementSet l_;
    Pattern pattern_;
    ElementSet domain_;
    // blocks_[j][i]: position in domain_ of support[i] * l[j]^{-1} * gamma
    std::vector<std::vector<std::size_t>> blocks_;
};

/// B_gamma with variables looked up in `universe`. Throws InvalidArgument when L^{-1}
/// is not left D-separated and WindowError when the domain leaves the universe.
BadEvent build_bad_event(std::shared_ptr<const GroupContext> ctx, const GroupElement& gamma, const ElementSet& l,
                         const Pattern& pattern, const ElementSet& universe);

/// Variable name used for a group element in instance and assignment files.
std::string variable_name(const GroupElement& g);

// ---------------------------------------------------------------------------
// Instances over a window

struct ShiftConfig {
    GroupContext group;
    Pattern pattern;
    ElementSet translates; // F
    ElementSet core_window;
    ElementSet universe;
    /// Replaces the computed L (adversarial tests only).
    std::optional<ElementSet> explicit_l;
};

/// Whole group for finite families; ball(core_radius) / ball(universe_radius) otherwise.
ShiftConfig make_shift_config(GroupContext group, Pattern pattern, ElementSet translates, std::size_t core_radius,
                              std::size_t universe_radius);

/// A universe radius large enough to contain D T^{-1} gamma for every gamma in
/// ball(core_radius): core_radius + max |delta| + max |t^{-1}|. Pass T = F so trapping
/// can be checked against every translate.
std::size_t required_universe_radius(const GroupContext& ctx, const ElementSet& d, const ElementSet& t,
                                std::size_t core_radius);

struct ShiftInstance {
    Instance instance;
    std::shared_ptr<const GroupContext> group;
    /// Event i is B_gamma for gamma = core_window[i]; variable v is universe[v].
    ElementSet core_window;
    ElementSet universe;
    ElementSet l;
    std::uint64_t ell0 = 0;
    std::uint64_t n = 0;
    std::vector<std::string> warnings;
};

ShiftInstance build_instance(const ShiftConfig& config);

struct BoundsReport {
    std::size_t d_size = 0;
    std::size_t l_size = 0;
    std::uint64_t ell0 = 0;
    std::size_t measured_degree = 0;
    BigInt degree_bound = 0; // |D|^2 |L|^2 - 1
    bool degree_ok = true;
    Rational closed_form_probability = 0;
    Rational measured_probability = 0;
    bool probability_ok = true;
    bool hypothesis_met = false; // |L| >= l0
    Enclosure endgame;           // e (1 - k^-|D|)^|L| |D|^2 |L|^2
    bool endgame_holds = false;
    CorrectnessReport correctness;
    std::vector<std::string> notes;
};

/// Measures the instance against the degree bound, the closed-form probability and,
/// when |L| >= l0, the final inequality. Throws BoundViolation when a proven bound fails.
BoundsReport check_bounds(const ShiftInstance& built, const ShiftConfig& config);

// ---------------------------------------------------------------------------
// Trapping

/// Symbols on a finite window of the group.
class Configuration {
public:
    Configuration(ElementSet support, std::vector<Symbol> values);

    [[nodiscard]] const ElementSet& support() const noexcept { return support_; }
    [[nodiscard]] const std::vector<Symbol>& values() const noexcept { return values_; }
    /// Throws WindowError outside the support.
    [[nodiscard]] Symbol at(const GroupElement& g) const;
    void set(const GroupElement& g, Symbol s);

private:
    ElementSet support_;
    std::vector<Symbol> values_;
};

/// The first lambda in F (canonical order) with x(delta lambda^{-1} gamma) = phi(delta)
/// for all delta in D, i.e. gamma . x lies in lambda . V_phi.
std::optional<GroupElement> is_trapped_at(const GroupContext& ctx, const Configuration& x, const GroupElement& gamma,
                                          const ElementSet& f, const Pattern& pattern);

struct TrapVerdict {
    GroupElement gamma;
    std::optional<GroupElement> witness;
};

struct TrapReport {
    std::vector<TrapVerdict> verdicts;
    std::size_t trapped = 0;
    std::size_t untrapped = 0;

    [[nodiscard]] bool all_trapped() const noexcept { return untrapped == 0; }
};

TrapReport verify_trapping(const GroupContext& ctx, const Configuration& x, const ElementSet& f,
                           const Pattern& pattern, const ElementSet& core_window);

/// Trapping check for a solution candidate of a built instance. Throws BoundViolation
/// if `x` solves the instance but some gamma of the core window is not trapped.
TrapReport verify_trapping(const ShiftInstance& built, const ShiftConfig& config, const Assignment& x);

Configuration to_configuration(const ShiftInstance& built, const Assignment& x);

} // namespace lllshift
