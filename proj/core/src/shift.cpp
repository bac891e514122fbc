#include "lllshift/shift.hpp"

#include "lllshift/error.hpp"
#include "lllshift/separated.hpp"

#include <algorithm>
#include <cmath>

namespace lllshift {

Pattern::Pattern(ElementSet support, std::vector<Symbol> values, Symbol alphabet_size)
    : support_(std::move(support)), values_(std::move(values)), k_(alphabet_size)
{
    if (k_ < 1)
        throw InvalidArgument("alphabet size must be >= 1");
    if (support_.empty())
        throw InvalidArgument("pattern support must be nonempty");
    if (values_.size() != support_.size())
        throw InvalidArgument("pattern needs exactly one value per support element");
    for (auto v : values_)
        if (v >= k_)
            throw InvalidArgument("pattern value " + std::to_string(v) + " outside the alphabet");
}

// ---------------------------------------------------------------------------

namespace {

void check_threshold_args(Symbol k, std::size_t d_size)
{
    if (k < 1)
        throw InvalidArgument("alphabet size must be >= 1");
    if (d_size < 1)
        throw InvalidArgument("pattern support size must be >= 1");
}

Rational block_miss_probability(Symbol k, std::size_t d_size)
{
    return 1 - Rational(BigInt(1), ipow(BigInt(k), d_size));
}

bool certified_below_one(Symbol k, std::size_t d_size, std::uint64_t ell)
{
    return compare_below_one(endgame_value(k, d_size, ell)) == Verdict::correct;
}

// log f(l), used only to locate the crossing before certifying it
long double approx_log_endgame(Symbol k, std::size_t d_size, std::uint64_t ell)
{
    const long double miss = std::pow(static_cast<long double>(k), -static_cast<long double>(d_size));
    const auto l = static_cast<long double>(ell);
    const auto d = static_cast<long double>(d_size);
    return 1.0L + l * std::log1p(-miss) + 2.0L * std::log(d * l);
}

} // namespace

Enclosure endgame_value(Symbol k, std::size_t d_size, std::uint64_t ell)
{
    check_threshold_args(k, d_size);
    const auto pw = power_enclosure(block_miss_probability(k, d_size), ell);
    const Rational scale = Rational(BigInt(d_size) * d_size) * Rational(BigInt(ell) * ell);
    return {e_lower() * pw.lower * scale, e_upper() * pw.upper * scale};
}

std::uint64_t compute_ell0(Symbol k, std::size_t d_size)
{
    check_threshold_args(k, d_size);
    if (k == 1)
        return 1;

    // f is log-concave in l and f(1) = e q |D|^2 >= e/2 > 1, so {l : f(l) < 1} is an
    // up-set starting past the peak at l* = -2 / log q. Locate the crossing in floating
    // point, then settle it with certified evaluations.
    const long double log_q =
        std::log1p(-std::pow(static_cast<long double>(k), -static_cast<long double>(d_size)));
    auto lo = static_cast<std::uint64_t>(std::max(1.0L, std::floor(-2.0L / log_q)));
    auto hi = std::max<std::uint64_t>(lo, 2);
    while (approx_log_endgame(k, d_size, hi) >= 0)
        hi *= 2;
    while (lo < hi) {
        const auto mid = lo + (hi - lo) / 2;
        if (approx_log_endgame(k, d_size, mid) < 0)
            hi = mid;
        else
            lo = mid + 1;
    }

    auto ell = std::max<std::uint64_t>(lo, 1);
    while (!certified_below_one(k, d_size, ell))
        ++ell;
    while (ell > 1 && certified_below_one(k, d_size, ell - 1))
        --ell;

    const auto q = block_miss_probability(k, d_size);
    const Rational ratio = q * Rational(BigInt(ell + 1) * (ell + 1), BigInt(ell) * ell);
    if (ratio >= 1)
        throw BoundViolation("endgame threshold found before f starts decreasing");
    return ell;
}

std::uint64_t compute_n(Symbol k, std::size_t d_size)
{
    return compute_ell0(k, d_size) * d_size * d_size;
}

Rational block_event_probability(Symbol k, std::size_t d_size, std::size_t l_size)
{
    check_threshold_args(k, d_size);
    const auto total = ipow(BigInt(k), d_size);
    return Rational(ipow(total - 1, l_size), ipow(total, l_size));
}

// ---------------------------------------------------------------------------

ElementSet select_l(const GroupContext& ctx, const ElementSet& f, const ElementSet& d)
{
    if (f.empty() || d.empty())
        throw InvalidArgument("select_l needs nonempty F and D");
    return ctx.set_inverse(left_separated_subset(ctx, ctx.set_inverse(f), d));
}

ElementSet block_domain(const GroupContext& ctx, const GroupElement& gamma, const ElementSet& l, const ElementSet& d)
{
    return ctx.translate_right(ctx.set_product(d, ctx.set_inverse(l)), gamma);
}

ShiftBlockEvent::ShiftBlockEvent(std::shared_ptr<const GroupContext> ctx, GroupElement gamma, ElementSet l,
                                 Pattern pattern)
    : ctx_(std::move(ctx)), gamma_(std::move(gamma)), l_(std::move(l)), pattern_(std::move(pattern))
{
    if (!ctx_)
        throw InvalidArgument("shift event needs a group");
    if (l_.empty())
        throw InvalidArgument("shift event needs a nonempty L");
    const auto& d = pattern_.support();
    domain_ = block_domain(*ctx_, gamma_, l_, d);
    if (domain_.size() != d.size() * l_.size())
        throw InvalidArgument("L^-1 is not left D-separated: blocks of the event domain overlap");
    blocks_.reserve(l_.size());
    for (const auto& lambda : l_) {
        const auto shift = ctx_->multiply(ctx_->inverse(lambda), gamma_);
        std::vector<std::size_t> block;
        block.reserve(d.size());
        for (const auto& delta : d)
            block.push_back(domain_.index_of(ctx_->multiply(delta, shift)));
        blocks_.push_back(std::move(block));
    }
}

bool ShiftBlockEvent::forbids(std::span<const Symbol> values) const
{
    if (values.size() != domain_.size())
        throw InvalidArgument("shift event evaluated on a tuple of the wrong length");
    for (const auto& block : blocks_) {
        bool matches = true;
        for (std::size_t i = 0; i < block.size() && matches; ++i)
            matches = values[block[i]] == pattern_.values()[i];
        if (matches)
            return false;
    }
    return true;
}

BigInt ShiftBlockEvent::forbidden_count() const
{
    return ipow(ipow(BigInt(pattern_.alphabet_size()), pattern_.support().size()) - 1, l_.size());
}

bool ShiftBlockEvent::equals(const ImplicitBody& other) const
{
    const auto* o = dynamic_cast<const ShiftBlockEvent*>(&other);
    return o && *ctx_ == *o->ctx_ && gamma_ == o->gamma_ && l_ == o->l_ && pattern_ == o->pattern_;
}

BadEvent build_bad_event(std::shared_ptr<const GroupContext> ctx, const GroupElement& gamma, const ElementSet& l,
                         const Pattern& pattern, const ElementSet& universe)
{
    auto body = std::make_shared<const ShiftBlockEvent>(std::move(ctx), gamma, l, pattern);
    std::vector<VariableId> vars;
    vars.reserve(body->domain().size());
    for (const auto& g : body->domain()) {
        const auto v = universe.index_of(g);
        if (v == universe.size())
            throw WindowError("domain of B_" + to_string(gamma) + " leaves the universe at " + to_string(g));
        vars.push_back(v);
    }
    return BadEvent::make_implicit(std::move(vars), std::move(body));
}

std::string variable_name(const GroupElement& g) { return to_string(g); }

// ---------------------------------------------------------------------------

ShiftConfig make_shift_config(GroupContext group, Pattern pattern, ElementSet translates, std::size_t core_radius,
                              std::size_t universe_radius)
{
    auto core = group.ball(core_radius);
    auto universe = group.ball(universe_radius);
    return ShiftConfig{std::move(group), std::move(pattern), std::move(translates), std::move(core),
                       std::move(universe), std::nullopt};
}

std::size_t required_universe_radius(const GroupContext& ctx, const ElementSet& d, const ElementSet& t,
                                std::size_t core_radius)
{
    std::size_t d_len = 0;
    std::size_t t_len = 0;
    for (const auto& g : d)
        d_len = std::max(d_len, ctx.length(g));
    for (const auto& g : t)
        t_len = std::max(t_len, ctx.length(ctx.inverse(g)));
    return core_radius + d_len + t_len;
}

ShiftInstance build_instance(const ShiftConfig& config)
{
    const auto& ctx = config.group;
    const auto& pattern = config.pattern;
    const auto& d = pattern.support();
    for (const auto* set : {&d, &config.translates, &config.core_window, &config.universe})
        for (const auto& g : *set)
            ctx.validate(g);
    if (config.translates.empty())
        throw InvalidArgument("translate set F must be nonempty");
    if (config.explicit_l)
        for (const auto& g : *config.explicit_l)
            ctx.validate(g);

    auto group = std::make_shared<const GroupContext>(ctx);
    const auto k = pattern.alphabet_size();
    auto l = config.explicit_l ? *config.explicit_l : select_l(ctx, config.translates, d);
    const auto ell0 = compute_ell0(k, d.size());
    const auto n = ell0 * d.size() * d.size();

    std::vector<std::string> warnings;
    if (config.translates.size() < n)
        warnings.push_back("|F| = " + std::to_string(config.translates.size()) + " is below n = " + std::to_string(n));
    if (l.size() < ell0)
        warnings.push_back("|L| = " + std::to_string(l.size()) + " is below l0 = " + std::to_string(ell0)
                           + "; the instance may not satisfy the LLL criterion");
    if (config.explicit_l && !l.is_subset_of(config.translates))
        warnings.push_back("explicit L is not a subset of F");

    // Trapping is checked against every translate in F, so the window must hold
    // D F^-1 gamma, which contains the event domain D L^-1 gamma.
    for (const auto& gamma : config.core_window)
        if (!block_domain(ctx, gamma, config.translates, d).is_subset_of(config.universe))
            throw WindowError("universe does not contain D F^-1 " + to_string(gamma));

    std::vector<std::string> names;
    names.reserve(config.universe.size());
    for (const auto& g : config.universe)
        names.push_back(variable_name(g));

    std::vector<BadEvent> events;
    events.reserve(config.core_window.size());
    for (const auto& gamma : config.core_window)
        events.push_back(build_bad_event(group, gamma, l, pattern, config.universe));

    return ShiftInstance{Instance(VariableUniverse(std::move(names), k), std::move(events)),
                         std::move(group),
                         config.core_window,
                         config.universe,
                         std::move(l),
                         ell0,
                         n,
                         std::move(warnings)};
}

BoundsReport check_bounds(const ShiftInstance& built, const ShiftConfig& config)
{
    const auto& inst = built.instance;
    const auto k = config.pattern.alphabet_size();
    BoundsReport r;
    r.d_size = config.pattern.support().size();
    r.l_size = built.l.size();
    r.ell0 = built.ell0;
    r.measured_degree = inst.max_degree();
    const BigInt dl = BigInt(r.d_size) * r.l_size;
    r.degree_bound = dl * dl - 1;
    r.degree_ok = BigInt(r.measured_degree) <= r.degree_bound;

    r.closed_form_probability = block_event_probability(k, r.d_size, r.l_size);
    r.measured_probability = inst.max_probability();
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (inst.probability(i) != r.closed_form_probability)
            r.probability_ok = false;

    r.hypothesis_met = r.l_size >= r.ell0;
    r.endgame = e_times(r.closed_form_probability * Rational(dl * dl));
    r.endgame_holds = compare_below_one(r.endgame) == Verdict::correct;
    r.correctness = check_correctness(inst);

    if (inst.size() == 0)
        r.notes.emplace_back("empty instance: all bounds hold vacuously");
    if (!r.hypothesis_met)
        r.notes.push_back("|L| = " + std::to_string(r.l_size) + " < l0 = " + std::to_string(r.ell0)
                          + ": the final inequality is not guaranteed");

    if (!r.degree_ok)
        throw BoundViolation("measured degree " + std::to_string(r.measured_degree) + " exceeds |D|^2|L|^2 - 1 = "
                             + r.degree_bound.str());
    if (!r.probability_ok)
        throw BoundViolation("an event probability differs from (1 - k^-|D|)^|L|");
    if (r.hypothesis_met && !r.endgame_holds)
        throw BoundViolation("|L| >= l0 but e (1 - k^-|D|)^|L| |D|^2 |L|^2 < 1 fails");
    if (r.hypothesis_met && inst.size() > 0 && r.correctness.verdict != Verdict::correct)
        throw BoundViolation("|L| >= l0 but the instance is not certified correct");
    return r;
}

// ---------------------------------------------------------------------------

Configuration::Configuration(ElementSet support, std::vector<Symbol> values)
    : support_(std::move(support)), values_(std::move(values))
{
    if (support_.size() != values_.size())
        throw InvalidArgument("configuration needs one symbol per window element");
}

Symbol Configuration::at(const GroupElement& g) const
{
    const auto i = support_.index_of(g);
    if (i == support_.size())
        throw WindowError("position " + to_string(g) + " lies outside the configuration window");
    return values_[i];
}

void Configuration::set(const GroupElement& g, Symbol s)
{
    const auto i = support_.index_of(g);
    if (i == support_.size())
        throw WindowError("position " + to_string(g) + " lies outside the configuration window");
    values_[i] = s;
}

std::optional<GroupElement> is_trapped_at(const GroupContext& ctx, const Configuration& x, const GroupElement& gamma,
                                          const ElementSet& f, const Pattern& pattern)
{
    const auto& d = pattern.support();
    for (const auto& lambda : f) {
        const auto shift = ctx.multiply(ctx.inverse(lambda), gamma);
        bool matches = true;
        for (std::size_t i = 0; i < d.size() && matches; ++i)
            matches = x.at(ctx.multiply(d[i], shift)) == pattern.value(i);
        if (matches)
            return lambda;
    }
    return std::nullopt;
}

TrapReport verify_trapping(const GroupContext& ctx, const Configuration& x, const ElementSet& f,
                           const Pattern& pattern, const ElementSet& core_window)
{
    TrapReport report;
    report.verdicts.reserve(core_window.size());
    for (const auto& gamma : core_window) {
        auto witness = is_trapped_at(ctx, x, gamma, f, pattern);
        if (witness)
            ++report.trapped;
        else
            ++report.untrapped;
        report.verdicts.push_back({gamma, std::move(witness)});
    }
    return report;
}

Configuration to_configuration(const ShiftInstance& built, const Assignment& x)
{
    check_assignment(built.instance, x);
    return Configuration(built.universe, x);
}

TrapReport verify_trapping(const ShiftInstance& built, const ShiftConfig& config, const Assignment& x)
{
    const auto conf = to_configuration(built, x);
    auto report = verify_trapping(*built.group, conf, config.translates, config.pattern, built.core_window);
    // Avoiding B_gamma means some block D l^-1 gamma (l in L, L in F) matches the pattern.
    if (!built.l.is_subset_of(config.translates))
        return report;
    for (std::size_t i = 0; i < report.verdicts.size(); ++i)
        if (!report.verdicts[i].witness && built.instance.event(i).avoided_by(x))
            throw BoundViolation("x avoids B_" + to_string(report.verdicts[i].gamma) + " but is not trapped there");
    return report;
}

} // namespace lllshift
