#include "doctest.h"

#include "lllshift/error.hpp"
#include "lllshift/lll.hpp"
#include "lllshift/shift.hpp"
#include "support/fixtures.hpp"

using namespace lllshift;

namespace {

VariableUniverse vars(std::size_t n, Symbol k)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("v" + std::to_string(i));
    return VariableUniverse(std::move(names), k);
}

} // namespace

TEST_CASE("event probability")
{
    const auto one = BadEvent::make_explicit({0}, {{1}});
    CHECK(event_probability(one, 2) == Rational(1, 2));

    const auto certain = BadEvent::make_explicit({}, {{}});
    CHECK(event_probability(certain, 2) == 1);
    CHECK(event_probability(certain, 7) == 1);

    CHECK_THROWS_AS(BadEvent::make_explicit({0}, {}), InvalidArgument);

    // three of the 27 ternary triples
    const auto three = BadEvent::make_explicit({0, 1, 2}, {{0, 0, 0}, {1, 2, 0}, {2, 2, 2}});
    CHECK(event_probability(three, 3) == Rational(3, 27));
}

TEST_CASE("implicit shift event probability matches enumeration")
{
    // |D| = 2, |L| = 3, k = 2 on Z_12
    auto ctx = std::make_shared<const GroupContext>(GroupContext::cyclic({12}));
    const Pattern phi({{0}, {1}}, {1, 0}, 2);
    const ElementSet l{{0}, {4}, {8}};
    const auto universe = ctx->all_elements();
    const auto b = build_bad_event(ctx, {0}, l, phi, universe);
    CHECK(b.domain().size() == 6);
    CHECK(event_probability(b, 2) == Rational(27, 64));
    CHECK(enumerate_forbidden_count(b, 2) == 27);
}

TEST_CASE("explicit event validation")
{
    CHECK_THROWS_AS(BadEvent::make_explicit({0, 0}, {{0, 1}}), InvalidArgument);       // repeated variable
    CHECK_THROWS_AS(BadEvent::make_explicit({0, 1}, {{0}}), InvalidArgument);           // wrong tuple length
    CHECK_THROWS_AS(BadEvent::make_explicit({0}, {{1}, {1}}), InvalidArgument);         // duplicate tuple
    CHECK_THROWS_AS(Instance(vars(1, 2), {BadEvent::make_explicit({0}, {{2}})}), InvalidArgument); // symbol >= k
    CHECK_THROWS_AS(Instance(vars(1, 2), {BadEvent::make_explicit({3}, {{0}})}), InvalidArgument); // unknown var
    CHECK_THROWS_AS(VariableUniverse({"a", "a"}, 2), InvalidArgument);
    CHECK_THROWS_AS(VariableUniverse({"a"}, 0), InvalidArgument);
}

TEST_CASE("neighbourhoods")
{
    const Instance single(vars(2, 2), {BadEvent::make_explicit({0, 1}, {{1, 1}})});
    CHECK(single.neighbourhood(0).empty());
    CHECK(single.max_degree() == 0);

    const Instance disjoint(vars(4, 2), {BadEvent::make_explicit({0, 1}, {{1, 1}}),
                                         BadEvent::make_explicit({2, 3}, {{0, 0}})});
    CHECK(disjoint.neighbourhood(0).empty());
    CHECK(disjoint.neighbourhood(1).empty());

    const Instance chain(vars(4, 2), {BadEvent::make_explicit({0, 1}, {{1, 1}}),
                                      BadEvent::make_explicit({1, 2}, {{0, 0}}),
                                      BadEvent::make_explicit({2, 3}, {{0, 1}})});
    CHECK(chain.neighbourhood(1) == std::vector<std::size_t>{0, 2});
    CHECK(chain.max_degree() == 2);
    CHECK_THROWS_AS((void)chain.neighbourhood(3), InvalidArgument);
}

TEST_CASE("neighbourhood symmetry and instance stats on random instances")
{
    testing::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = testing::uniform(rng, 1, 12);
        std::vector<BadEvent> events;
        const auto m = testing::uniform(rng, 0, 8);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<VariableId> dom;
            for (VariableId v = 0; v < n; ++v)
                if (testing::uniform(rng, 0, 2) == 0)
                    dom.push_back(v);
            std::vector<Symbol> t(dom.size(), 1);
            events.push_back(BadEvent::make_explicit(dom, {t}));
        }
        const Instance inst(vars(n, 2), events);
        Rational p = 0;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            CHECK(inst.degree(i) <= inst.max_degree());
            CHECK(inst.probability(i) <= inst.max_probability());
            p = std::max(p, inst.probability(i));
            for (auto j : inst.neighbourhood(i)) {
                const auto& back = inst.neighbourhood(j);
                CHECK(std::find(back.begin(), back.end(), i) != back.end());
            }
        }
        CHECK(p == inst.max_probability());
    }
}

TEST_CASE("correctness criterion")
{
    // e * 15/256 ~ 0.1593
    const auto ok = check_correctness(Rational(1, 256), 14);
    CHECK(ok.verdict == Verdict::correct);
    CHECK(to_double(ok.product.lower) == doctest::Approx(0.15927).epsilon(1e-4));

    CHECK(check_correctness(Rational(1, 2), 1).verdict == Verdict::incorrect);
    CHECK(check_correctness(Rational(0), 1000).verdict == Verdict::correct);
    CHECK(is_correct(Instance(vars(0, 2), {})) == Verdict::correct);

    // 0.3678794411714423 lies between 1/e_upper and 1/e_lower, so neither verdict
    // can be certified
    const Rational x(BigInt("3678794411714423"), BigInt("10000000000000000"));
    CHECK(e_lower() * x < 1);
    CHECK(e_upper() * x >= 1);
    CHECK(check_correctness(x, 0).verdict == Verdict::borderline);
}

TEST_CASE("avoids and verify_solution")
{
    const auto certain = BadEvent::make_explicit({}, {{}});
    CHECK_FALSE(avoids({0}, certain));
    CHECK_FALSE(avoids({1}, certain));

    const auto b = BadEvent::make_explicit({0}, {{1}});
    CHECK(avoids({0}, b));
    CHECK_FALSE(avoids({1}, b));

    const Instance inst(vars(3, 2), {BadEvent::make_explicit({0}, {{1}}), BadEvent::make_explicit({1, 2}, {{0, 0}})});
    CHECK(verify_solution(inst, {0, 1, 0}).empty());
    CHECK(verify_solution(inst, {0, 0, 0}) == std::vector<std::size_t>{1});
    CHECK(verify_solution(Instance(vars(2, 2), {}), {1, 1}).empty());
    CHECK_THROWS_AS(verify_solution(inst, {0, 1}), InvalidArgument);
    CHECK_THROWS_AS(verify_solution(inst, {0, 1, 2}), InvalidArgument);
}

TEST_CASE("enumeration reproduces explicit counts")
{
    const auto b = BadEvent::make_explicit({0, 1}, {{0, 1}, {2, 2}, {1, 0}});
    CHECK(enumerate_forbidden_count(b, 3) == 3);
    CHECK_THROWS_AS(enumerate_forbidden_count(b, 3, 8), ResourceLimit);
}
