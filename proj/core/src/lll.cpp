#include "lllshift/lll.hpp"

#include "lllshift/error.hpp"

#include <algorithm>

namespace lllshift {

VariableUniverse::VariableUniverse(std::vector<std::string> names, Symbol alphabet_size)
    : names_(std::move(names)), k_(alphabet_size)
{
    if (k_ < 1)
        throw InvalidArgument("alphabet size must be >= 1");
    for (VariableId v = 0; v < names_.size(); ++v)
        if (!index_.emplace(names_[v], v).second)
            throw InvalidArgument("duplicate variable name '" + names_[v] + "'");
}

VariableId VariableUniverse::index_of(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        throw InvalidArgument("unknown variable '" + name + "'");
    return it->second;
}

namespace {

void check_domain(const std::vector<VariableId>& domain)
{
    auto sorted = domain;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("bad event domain repeats a variable");
}

} // namespace

BadEvent BadEvent::make_explicit(std::vector<VariableId> domain, std::vector<std::vector<Symbol>> forbidden)
{
    check_domain(domain);
    if (forbidden.empty())
        throw InvalidArgument("explicit bad event needs at least one forbidden assignment");
    for (const auto& tuple : forbidden)
        if (tuple.size() != domain.size())
            throw InvalidArgument("forbidden assignment does not match the event domain");
    std::sort(forbidden.begin(), forbidden.end());
    if (std::adjacent_find(forbidden.begin(), forbidden.end()) != forbidden.end())
        throw InvalidArgument("explicit bad event lists a forbidden assignment twice");
    BadEvent b;
    b.domain_ = std::move(domain);
    b.forbidden_ = std::move(forbidden);
    return b;
}

BadEvent BadEvent::make_implicit(std::vector<VariableId> domain, std::shared_ptr<const ImplicitBody> body)
{
    check_domain(domain);
    if (!body)
        throw InvalidArgument("implicit bad event needs a body");
    BadEvent b;
    b.domain_ = std::move(domain);
    b.body_ = std::move(body);
    return b;
}

BigInt BadEvent::forbidden_count() const
{
    if (body_)
        return body_->forbidden_count();
    return BigInt(forbidden_.size());
}

bool BadEvent::forbids(std::span<const Symbol> values) const
{
    if (body_)
        return body_->forbids(values);
    return std::binary_search(forbidden_.begin(), forbidden_.end(), values,
                              [](const auto& a, const auto& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                              });
}

bool BadEvent::avoided_by(const Assignment& f) const
{
    thread_local std::vector<Symbol> values;
    values.clear();
    for (auto v : domain_)
        values.push_back(f.at(v));
    return !forbids(values);
}

bool operator==(const BadEvent& a, const BadEvent& b)
{
    if (a.domain_ != b.domain_ || a.is_explicit() != b.is_explicit())
        return false;
    if (a.is_explicit())
        return a.forbidden_ == b.forbidden_;
    return a.body_->equals(*b.body_);
}

Rational event_probability(const BadEvent& b, Symbol k)
{
    if (k < 1)
        throw InvalidArgument("alphabet size must be >= 1");
    return Rational(b.forbidden_count(), ipow(BigInt(k), b.domain().size()));
}

bool avoids(const Assignment& f, const BadEvent& b) { return b.avoided_by(f); }

BigInt enumerate_forbidden_count(const BadEvent& b, Symbol k, std::uint64_t max_maps)
{
    const auto total = ipow(BigInt(k), b.domain().size());
    if (total > max_maps)
        throw ResourceLimit("event domain too large to enumerate");
    std::vector<Symbol> values(b.domain().size(), 0);
    BigInt count = 0;
    while (true) {
        if (b.forbids(values))
            ++count;
        std::size_t j = values.size();
        while (j-- > 0) {
            if (++values[j] < k)
                break;
            values[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1))
            break;
    }
    return count;
}

Instance::Instance(VariableUniverse universe, std::vector<BadEvent> events)
    : universe_(std::move(universe)), events_(std::move(events)), incidence_(universe_.size())
{
    const auto k = universe_.alphabet_size();
    const auto n = universe_.size();
    probabilities_.reserve(events_.size());
    for (std::size_t i = 0; i < events_.size(); ++i) {
        const auto& b = events_[i];
        for (auto v : b.domain()) {
            if (v >= n)
                throw InvalidArgument("event " + std::to_string(i) + " references a variable outside the universe");
            incidence_[v].push_back(i);
        }
        for (const auto& tuple : b.forbidden())
            for (auto s : tuple)
                if (s >= k)
                    throw InvalidArgument("event " + std::to_string(i) + " forbids a symbol outside the alphabet");
        auto prob = event_probability(b, k);
        if (prob > 1)
            throw InvalidArgument("event " + std::to_string(i) + " forbids more assignments than exist");
        p_ = std::max(p_, prob);
        probabilities_.push_back(std::move(prob));
    }

    neighbours_.resize(events_.size());
    std::vector<std::size_t> mark(events_.size(), events_.size());
    for (std::size_t i = 0; i < events_.size(); ++i) {
        auto& row = neighbours_[i];
        for (auto v : events_[i].domain())
            for (auto j : incidence_[v])
                if (j != i && mark[j] != i) {
                    mark[j] = i;
                    row.push_back(j);
                }
        std::sort(row.begin(), row.end());
        d_ = std::max(d_, row.size());
    }
}

const BadEvent& Instance::event(std::size_t i) const
{
    if (i >= events_.size())
        throw InvalidArgument("event index " + std::to_string(i) + " out of range");
    return events_[i];
}

const std::vector<std::size_t>& Instance::neighbourhood(std::size_t i) const
{
    if (i >= events_.size())
        throw InvalidArgument("event index " + std::to_string(i) + " out of range");
    return neighbours_[i];
}

const Rational& Instance::probability(std::size_t i) const
{
    if (i >= events_.size())
        throw InvalidArgument("event index " + std::to_string(i) + " out of range");
    return probabilities_[i];
}

void check_assignment(const Instance& inst, const Assignment& f)
{
    if (f.size() != inst.universe().size())
        throw InvalidArgument("assignment covers " + std::to_string(f.size()) + " variables, universe has "
                              + std::to_string(inst.universe().size()));
    for (auto s : f)
        if (s >= inst.alphabet_size())
            throw InvalidArgument("assignment uses symbol " + std::to_string(s) + " outside the alphabet");
}

std::vector<std::size_t> verify_solution(const Instance& inst, const Assignment& f)
{
    check_assignment(inst, f);
    std::vector<std::size_t> violated;
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (!inst.events()[i].avoided_by(f))
            violated.push_back(i);
    return violated;
}

CorrectnessReport check_correctness(const Rational& p, std::size_t d)
{
    auto product = e_times(p * Rational(d + 1));
    const auto verdict = compare_below_one(product);
    return {verdict, p, d, std::move(product)};
}

CorrectnessReport check_correctness(const Instance& inst)
{
    return check_correctness(inst.max_probability(), inst.max_degree());
}

Verdict is_correct(const Instance& inst) { return check_correctness(inst).verdict; }

} // namespace lllshift
