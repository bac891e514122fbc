#include "doctest.h"

#include "lllshift/error.hpp"
#include "lllshift/separated.hpp"
#include "lllshift/shift.hpp"
#include "lllshift/solve.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lllshift;

namespace {

ElementSet range(std::int64_t lo, std::int64_t hi)
{
    std::vector<GroupElement> out;
    for (auto i = lo; i <= hi; ++i)
        out.push_back({i});
    return ElementSet(std::move(out));
}

Rational miss(Symbol k, std::size_t d)
{
    return 1 - Rational(BigInt(1), ipow(BigInt(k), d));
}

ShiftConfig z100_config()
{
    return make_shift_config(GroupContext::cyclic({100}), Pattern({{0}}, {0}, 2), range(0, 7), 0, 0);
}

} // namespace

TEST_CASE("threshold for k = 2, |D| = 1")
{
    CHECK(compute_ell0(2, 1) == 8);
    CHECK(compute_n(2, 1) == 8);

    // f(7) = e * 49/128 >= 1 and f(8) = e/4 < 1, certified
    CHECK(compare_below_one(endgame_value(2, 1, 7)) == Verdict::incorrect);
    CHECK(compare_below_one(endgame_value(2, 1, 8)) == Verdict::correct);
    CHECK(to_double(endgame_value(2, 1, 7).lower) == doctest::Approx(1.0405).epsilon(1e-4));
    const auto f8 = endgame_value(2, 1, 8);
    CHECK(f8.lower <= e_lower() / 4);
    CHECK(f8.upper >= e_upper() / 4);
    CHECK(to_double(f8.upper) == doctest::Approx(0.6796).epsilon(1e-4));
    // decrease ratio at l0
    CHECK(Rational(1, 2) * Rational(81, 64) < 1);
}

TEST_CASE("certified endgame values agree with exact evaluation for l = 1..100")
{
    for (std::uint64_t ell = 1; ell <= 100; ++ell) {
        const auto exact = oracle::endgame_exact(2, 1, ell);
        const auto got = endgame_value(2, 1, ell);
        CHECK(got.lower <= exact.lower);
        CHECK(got.upper >= exact.upper);
        CHECK(compare_below_one(got) == compare_below_one(exact));
        CHECK((exact.upper < 1) == (ell >= 8));
    }
    // a case where the power is not exact in binary
    for (std::uint64_t ell : {1, 5, 40, 123}) {
        const auto exact = oracle::endgame_exact(3, 2, ell);
        const auto got = endgame_value(3, 2, ell);
        CHECK(got.lower <= exact.lower);
        CHECK(got.upper >= exact.upper);
        CHECK(to_double(got.upper - got.lower) <= 1e-12 * to_double(exact.upper));
    }
}

TEST_CASE("threshold for k = 2, |D| = 2 matches the scan oracle")
{
    const auto scan = oracle::ell0_scan(2, 2);
    REQUIRE(scan.ell0 < 10000);
    CHECK(compute_ell0(2, 2) == scan.ell0);
    CHECK(compute_n(2, 2) == 4 * scan.ell0);
}

TEST_CASE("threshold certification and monotonicity over k = 2..10, |D| = 1..6")
{
    for (std::size_t d = 1; d <= 6; ++d) {
        // a larger alphabet makes the base 1 - k^-|D| larger, so l0 grows with k
        std::uint64_t prev = 0;
        for (Symbol k = 2; k <= 10; ++k) {
            CAPTURE(k);
            CAPTURE(d);
            const auto ell0 = compute_ell0(k, d);
            const auto scan = oracle::ell0_scan(k, d);
            if (scan.margin > 1e-12L)
                CHECK(ell0 == scan.ell0);
            else
                CHECK(ell0 + 1 >= scan.ell0);
            CHECK(compare_below_one(endgame_value(k, d, ell0)) == Verdict::correct);
            if (ell0 > 1)
                CHECK(compare_below_one(endgame_value(k, d, ell0 - 1)) != Verdict::correct);
            const Rational step(BigInt(ell0 + 1), BigInt(ell0));
            CHECK(miss(k, d) * step * step < 1);
            CHECK(ell0 >= prev);
            prev = ell0;
        }
    }
}

TEST_CASE("degenerate alphabet")
{
    CHECK(compute_ell0(1, 3) == 1);
    CHECK(compute_n(1, 3) == 9);
    CHECK_THROWS_AS(compute_ell0(0, 1), InvalidArgument);
    CHECK_THROWS_AS(compute_ell0(2, 0), InvalidArgument);
}

TEST_CASE("select_l")
{
    auto z = GroupContext::lattice(1);
    CHECK(select_l(z, range(0, 7), {{0}}) == range(0, 7));

    const ElementSet d{{0}, {1}};
    const auto l = select_l(z, range(0, 7), d);
    CHECK(l.size() >= 2);
    CHECK(l.is_subset_of(range(0, 7)));
    // blocks D - lambda pairwise disjoint
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
            CHECK_FALSE(z.translate_right(d, z.inverse(l[i])).intersects(z.translate_right(d, z.inverse(l[j]))));

    auto z6 = GroupContext::cyclic({6});
    CHECK(select_l(z6, {{0}, {3}}, d) == ElementSet{{0}, {3}});
    CHECK_THROWS_AS(select_l(z6, {}, d), InvalidArgument);
}

TEST_CASE("select_l bound on random inputs")
{
    testing::Rng rng(31);
    std::vector<GroupContext> groups{GroupContext::lattice(2), GroupContext::free_group(2), testing::symmetric_group(4)};
    for (int trial = 0; trial < 100; ++trial) {
        const auto& ctx = groups[testing::uniform(rng, 0, groups.size() - 1)];
        const auto pool = ctx.ball(2);
        const auto f = testing::random_subset(rng, pool, testing::uniform(rng, 1, 16));
        const auto d = testing::random_subset(rng, pool, testing::uniform(rng, 1, 3));
        const auto l = select_l(ctx, f, d);
        CHECK(l.is_subset_of(f));
        CHECK(l.size() * d.size() * d.size() >= f.size());
        CHECK(is_left_separated(ctx, ctx.set_inverse(l), d));
    }
}

TEST_CASE("block event on Z6")
{
    auto ctx = std::make_shared<const GroupContext>(GroupContext::cyclic({6}));
    const Pattern phi({{0}, {1}}, {1, 0}, 2);
    const ElementSet l{{0}, {3}};
    CHECK(block_domain(*ctx, {0}, l, phi.support()) == ElementSet{{0}, {1}, {3}, {4}});

    const auto universe = ctx->all_elements();
    const auto b = build_bad_event(ctx, {0}, l, phi, universe);
    CHECK(b.domain() == std::vector<VariableId>{0, 1, 3, 4});
    CHECK(b.forbidden_count() == 9);
    CHECK(oracle::count_block_event(*ctx, {0}, l, phi) == 9);
    CHECK(enumerate_forbidden_count(b, 2) == 9);
    CHECK(event_probability(b, 2) == Rational(9, 16));
    CHECK(block_event_probability(2, 2, 2) == Rational(9, 16));

    // matching phi on the block lambda = 3, i.e. positions {3, 4}
    CHECK(b.avoided_by({0, 0, 0, 1, 0, 0}));
    CHECK_FALSE(b.avoided_by({0, 0, 0, 1, 1, 0}));
    // matching on lambda = 0, i.e. positions {0, 1}
    CHECK(b.avoided_by({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("single block events")
{
    auto ctx = std::make_shared<const GroupContext>(GroupContext::cyclic({12}));
    for (Symbol k = 2; k <= 3; ++k) {
        const Pattern phi({{0}, {2}}, {1, 1}, k);
        const auto b = build_bad_event(ctx, {5}, {{0}}, phi, ctx->all_elements());
        CHECK(event_probability(b, k) == miss(k, 2));
    }
}

TEST_CASE("overlapping blocks are rejected")
{
    auto ctx = std::make_shared<const GroupContext>(GroupContext::cyclic({6}));
    const Pattern phi({{0}, {1}}, {1, 0}, 2);
    CHECK_THROWS_AS(build_bad_event(ctx, {0}, {{0}, {1}}, phi, ctx->all_elements()), InvalidArgument);
    CHECK_THROWS_AS(build_bad_event(ctx, {0}, {}, phi, ctx->all_elements()), InvalidArgument);
    CHECK_THROWS_AS(build_bad_event(ctx, {0}, {{0}}, phi, {{0}}), WindowError);
}

TEST_CASE("closed-form count matches enumeration on random small events")
{
    testing::Rng rng(8);
    std::vector<std::shared_ptr<const GroupContext>> groups{
        std::make_shared<const GroupContext>(GroupContext::cyclic({12})),
        std::make_shared<const GroupContext>(GroupContext::cyclic({3, 4})),
        std::make_shared<const GroupContext>(testing::symmetric_group(3)),
        std::make_shared<const GroupContext>(testing::dihedral_group(4))};
    int built = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto& ctx = groups[testing::uniform(rng, 0, groups.size() - 1)];
        const auto all = ctx->all_elements();
        const auto k = static_cast<Symbol>(testing::uniform(rng, 2, 3));
        const auto d = testing::random_subset(rng, all, testing::uniform(rng, 1, 3));
        std::vector<Symbol> values;
        for (std::size_t i = 0; i < d.size(); ++i)
            values.push_back(static_cast<Symbol>(testing::uniform(rng, 0, k - 1)));
        const Pattern phi(d, values, k);
        const auto l = select_l(*ctx, testing::random_subset(rng, all, testing::uniform(rng, 1, 6)), d);
        const auto gamma = testing::random_element(rng, all);
        if (d.size() * l.size() > 8)
            continue;
        const auto b = build_bad_event(ctx, gamma, l, phi, all);
        ++built;
        CHECK(b.domain().size() == d.size() * l.size());
        const auto expected = ipow(ipow(BigInt(k), d.size()) - 1, l.size());
        CHECK(b.forbidden_count() == expected);
        CHECK(oracle::count_block_event(*ctx, gamma, l, phi) == expected);
        CHECK(enumerate_forbidden_count(b, k) == expected);
    }
    CHECK(built > 50);
}

TEST_CASE("instance on Z100")
{
    const auto config = z100_config();
    const auto built = build_instance(config);
    CHECK(built.instance.size() == 100);
    CHECK(built.l == range(0, 7));
    CHECK(built.ell0 == 8);
    CHECK(built.n == 8);
    CHECK(built.warnings.empty());
    for (std::size_t i = 0; i < 100; ++i) {
        CHECK(built.instance.event(i).domain().size() == 8);
        CHECK(built.instance.probability(i) == Rational(1, 256));
        CHECK(built.instance.degree(i) == 14);
    }

    const auto report = check_bounds(built, config);
    CHECK(report.measured_degree == 14);
    CHECK(report.degree_bound == 63);
    CHECK(report.closed_form_probability == Rational(1, 256));
    CHECK(report.hypothesis_met);
    CHECK(report.endgame_holds);
    CHECK(to_double(report.endgame.upper) == doctest::Approx(0.6796).epsilon(1e-4));
    CHECK(report.correctness.verdict == Verdict::correct);
    CHECK(to_double(report.correctness.product.upper) == doctest::Approx(0.15927).epsilon(1e-4));
}

TEST_CASE("lattice window")
{
    auto z = GroupContext::lattice(1);
    const Pattern phi({{0}}, {0}, 2);
    CHECK(required_universe_radius(z, phi.support(), range(0, 7), 24) == 31);

    const auto config = make_shift_config(z, phi, range(0, 7), 24, 32);
    const auto built = build_instance(config);
    CHECK(built.instance.size() == 49);
    CHECK(built.universe.size() == 65);
    for (std::size_t i = 0; i < built.instance.size(); ++i)
        for (auto v : built.instance.event(i).domain())
            CHECK(v < built.universe.size());
    CHECK_NOTHROW(check_bounds(built, config));

    CHECK_THROWS_AS(build_instance(make_shift_config(z, phi, range(0, 7), 24, 28)), WindowError);
}

TEST_CASE("empty core window")
{
    auto config = z100_config();
    config.core_window = {};
    const auto built = build_instance(config);
    CHECK(built.instance.size() == 0);
    CHECK(is_correct(built.instance) == Verdict::correct);
    const auto report = check_bounds(built, config);
    CHECK(report.measured_degree == 0);
    CHECK_FALSE(report.notes.empty());

    const auto trap = verify_trapping(built, config, Assignment(100, 1));
    CHECK(trap.all_trapped());
    CHECK(trap.verdicts.empty());
}

TEST_CASE("undersized L is reported, not rejected")
{
    auto config = z100_config();
    config.explicit_l = ElementSet{{0}};
    const auto built = build_instance(config);
    CHECK_FALSE(built.warnings.empty());
    const auto report = check_bounds(built, config);
    CHECK_FALSE(report.hypothesis_met);
    CHECK(report.degree_bound == 0);
    CHECK(report.measured_degree == 0);
    CHECK(report.correctness.verdict == Verdict::incorrect);
    CHECK_FALSE(report.notes.empty());

    auto small = make_shift_config(GroupContext::cyclic({100}), Pattern({{0}}, {0}, 2), range(0, 1), 0, 0);
    const auto small_built = build_instance(small);
    CHECK(small_built.warnings.size() == 2);
    CHECK_FALSE(check_bounds(small_built, small).hypothesis_met);
}

TEST_CASE("trapping basics")
{
    auto z6 = GroupContext::cyclic({6});
    const Pattern phi({{0}, {1}}, {1, 0}, 2);
    Configuration x(z6.all_elements(), {1, 0, 1, 1, 1, 1});
    CHECK(is_trapped_at(z6, x, {0}, {{0}}, phi) == GroupElement{0});
    CHECK_FALSE(is_trapped_at(z6, x, {2}, {{0}}, phi).has_value());

    CHECK(x.at({1}) == 0);
    x.set({1}, 1);
    CHECK(x.at({1}) == 1);
    Configuration partial({{0}}, {1});
    CHECK_THROWS_AS((void)partial.at({3}), WindowError);
    CHECK_THROWS_AS(is_trapped_at(z6, partial, {0}, {{0}}, phi), WindowError);

    auto z100 = GroupContext::cyclic({100});
    const auto all = z100.all_elements();
    const Configuration ones(all, std::vector<Symbol>(100, 1));
    const auto rep = verify_trapping(z100, ones, range(0, 7), Pattern({{0}}, {0}, 2), all);
    CHECK(rep.untrapped == 100);
}

TEST_CASE("Z100 solutions are trapped everywhere and corruption breaks both sides")
{
    const auto config = z100_config();
    const auto built = build_instance(config);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = solve_moser_tardos(built.instance, {.seed = seed, .max_resamples = 100000});
        REQUIRE(r.solved());
        const auto trap = verify_trapping(built, config, r.assignment);
        CHECK(trap.trapped == 100);

        // no 8 consecutive 1s cyclically
        for (int s = 0; s < 100; ++s) {
            bool all_one = true;
            for (int t = 0; t < 8; ++t)
                all_one = all_one && r.assignment[static_cast<std::size_t>((s + t) % 100)] == 1;
            CHECK_FALSE(all_one);
        }

        // wipe every zero in the window gamma - 7 .. gamma for gamma = 50
        auto bad = r.assignment;
        for (int t = 43; t <= 50; ++t)
            bad[static_cast<std::size_t>(t)] = 1;
        const auto bad_trap = verify_trapping(built, config, bad);
        CHECK_FALSE(bad_trap.verdicts[50].witness.has_value());
        const auto violated = verify_solution(built.instance, bad);
        CHECK(std::find(violated.begin(), violated.end(), 50U) != violated.end());
        for (std::size_t g = 0; g < 100; ++g) {
            const bool untrapped = !bad_trap.verdicts[g].witness.has_value();
            CHECK(untrapped == !built.instance.event(g).avoided_by(bad));
        }
    }
}

TEST_CASE("avoiding an event is the same as being trapped by L")
{
    testing::Rng rng(19);
    std::vector<GroupContext> groups{GroupContext::cyclic({20}), testing::symmetric_group(3),
                                     testing::dihedral_group(5), GroupContext::cyclic({2, 6})};
    for (int trial = 0; trial < 60; ++trial) {
        const auto& g = groups[testing::uniform(rng, 0, groups.size() - 1)];
        const auto all = g.all_elements();
        const auto k = static_cast<Symbol>(testing::uniform(rng, 2, 3));
        const auto d = testing::random_subset(rng, all, testing::uniform(rng, 1, 2));
        std::vector<Symbol> values;
        for (std::size_t i = 0; i < d.size(); ++i)
            values.push_back(static_cast<Symbol>(testing::uniform(rng, 0, k - 1)));
        const auto f = testing::random_subset(rng, all, testing::uniform(rng, 1, 6));
        const auto config = make_shift_config(g, Pattern(d, values, k), f, 0, 0);
        const auto built = build_instance(config);
        for (int sample = 0; sample < 5; ++sample) {
            Assignment x(all.size());
            for (auto& s : x)
                s = static_cast<Symbol>(testing::uniform(rng, 0, k - 1));
            const auto conf = to_configuration(built, x);
            for (std::size_t i = 0; i < built.core_window.size(); ++i) {
                const auto by_l = is_trapped_at(g, conf, built.core_window[i], built.l, config.pattern);
                CHECK(by_l.has_value() == built.instance.event(i).avoided_by(x));
            }
            CHECK_NOTHROW(verify_trapping(built, config, x));
        }
    }
}

TEST_CASE("pattern validation")
{
    CHECK_THROWS_AS(Pattern({}, {}, 2), InvalidArgument);
    CHECK_THROWS_AS(Pattern({{0}}, {2}, 2), InvalidArgument);
    CHECK_THROWS_AS(Pattern({{0}, {1}}, {0}, 2), InvalidArgument);
    CHECK_THROWS_AS(Pattern({{0}}, {0}, 0), InvalidArgument);
    CHECK(variable_name(GroupElement{3}) == "[3]");
}
