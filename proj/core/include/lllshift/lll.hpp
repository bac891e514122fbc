#pragma once

#include "lllshift/certified.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lllshift {

using Symbol = std::uint32_t;
using VariableId = std::size_t;

/// Total map from variables to symbols, indexed by VariableId.
using Assignment = std::vector<Symbol>;

/// Ordered, duplicate-free set of named variables sharing one alphabet {0, ..., k-1}.
class VariableUniverse {
public:
    VariableUniverse(std::vector<std::string> names, Symbol alphabet_size);

    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    [[nodiscard]] Symbol alphabet_size() const noexcept { return k_; }
    [[nodiscard]] const std::string& name(VariableId v) const { return names_.at(v); }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }
    /// Throws InvalidArgument for unknown names.
    [[nodiscard]] VariableId index_of(const std::string& name) const;

    friend bool operator==(const VariableUniverse& a, const VariableUniverse& b)
    {
        return a.k_ == b.k_ && a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, VariableId> index_;
    Symbol k_;
};

/// Membership test for bad events too large to enumerate. The forbidden count must
/// agree exactly with the predicate over all k^|domain| assignments to the domain.
class ImplicitBody {
public:
    virtual ~ImplicitBody() = default;

    /// `values[i]` is the symbol at the i-th variable of the event's domain.
    [[nodiscard]] virtual bool forbids(std::span<const Symbol> values) const = 0;
    [[nodiscard]] virtual BigInt forbidden_count() const = 0;
    [[nodiscard]] virtual std::string kind() const = 0;
    [[nodiscard]] virtual bool equals(const ImplicitBody& other) const = 0;
};

/// A set of forbidden assignments sharing one finite domain.
class BadEvent {
public:
    /// Forbidden tuples are listed in domain order; the list must be nonempty and
    /// duplicate-free. An empty domain with the single empty tuple is the certain event.
    static BadEvent make_explicit(std::vector<VariableId> domain, std::vector<std::vector<Symbol>> forbidden);
    static BadEvent make_implicit(std::vector<VariableId> domain, std::shared_ptr<const ImplicitBody> body);

    [[nodiscard]] const std::vector<VariableId>& domain() const noexcept { return domain_; }
    [[nodiscard]] bool is_explicit() const noexcept { return body_ == nullptr; }
    /// Sorted forbidden tuples; empty for implicit events.
    [[nodiscard]] const std::vector<std::vector<Symbol>>& forbidden() const noexcept { return forbidden_; }
    [[nodiscard]] const ImplicitBody* body() const noexcept { return body_.get(); }
    [[nodiscard]] BigInt forbidden_count() const;

    [[nodiscard]] bool forbids(std::span<const Symbol> values) const;
    /// True iff the restriction of `f` to the domain is not forbidden.
    [[nodiscard]] bool avoided_by(const Assignment& f) const;

    friend bool operator==(const BadEvent& a, const BadEvent& b);

private:
    BadEvent() = default;

    std::vector<VariableId> domain_;
    std::vector<std::vector<Symbol>> forbidden_;
    std::shared_ptr<const ImplicitBody> body_;
};

/// |B| / k^|dom B|, exact.
Rational event_probability(const BadEvent& b, Symbol k);

bool avoids(const Assignment& f, const BadEvent& b);

/// Enumerates all k^|domain| assignments to the domain and counts forbidden ones.
/// Throws ResourceLimit when more than `max_maps` assignments would be visited.
BigInt enumerate_forbidden_count(const BadEvent& b, Symbol k, std::uint64_t max_maps = std::uint64_t{1} << 24);

/// A collection of bad events over one universe, with its dependency structure.
class Instance {
public:
    Instance(VariableUniverse universe, std::vector<BadEvent> events);

    [[nodiscard]] const VariableUniverse& universe() const noexcept { return universe_; }
    [[nodiscard]] Symbol alphabet_size() const noexcept { return universe_.alphabet_size(); }
    [[nodiscard]] const std::vector<BadEvent>& events() const noexcept { return events_; }
    [[nodiscard]] const BadEvent& event(std::size_t i) const;
    [[nodiscard]] std::size_t size() const noexcept { return events_.size(); }

    /// Other events whose domains meet the domain of event i, ascending.
    [[nodiscard]] const std::vector<std::size_t>& neighbourhood(std::size_t i) const;
    [[nodiscard]] std::size_t degree(std::size_t i) const { return neighbourhood(i).size(); }
    [[nodiscard]] const Rational& probability(std::size_t i) const;
    /// Events whose domain contains variable v, ascending.
    [[nodiscard]] const std::vector<std::size_t>& events_on(VariableId v) const { return incidence_.at(v); }

    /// p: maximum event probability (0 for an empty instance).
    [[nodiscard]] const Rational& max_probability() const noexcept { return p_; }
    /// d: maximum degree (0 for an empty instance).
    [[nodiscard]] std::size_t max_degree() const noexcept { return d_; }

    friend bool operator==(const Instance& a, const Instance& b)
    {
        return a.universe_ == b.universe_ && a.events_ == b.events_;
    }

private:
    VariableUniverse universe_;
    std::vector<BadEvent> events_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::vector<std::vector<std::size_t>> neighbours_;
    std::vector<Rational> probabilities_;
    Rational p_ = 0;
    std::size_t d_ = 0;
};

/// Indices of events not avoided by f; empty iff f is a solution.
std::vector<std::size_t> verify_solution(const Instance& inst, const Assignment& f);

/// Throws InvalidArgument unless f is total on the universe with values below k.
void check_assignment(const Instance& inst, const Assignment& f);

struct CorrectnessReport {
    Verdict verdict;
    Rational p;
    std::size_t d;
    Enclosure product; // e * p * (d + 1)
};

/// Certified test of e * p * (d + 1) < 1.
CorrectnessReport check_correctness(const Rational& p, std::size_t d);
CorrectnessReport check_correctness(const Instance& inst);
Verdict is_correct(const Instance& inst);

} // namespace lllshift
