#include "lllshift/group.hpp"

#include "lllshift/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lllshift {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

// Cancels adjacent g g^{-1} pairs; one left-to-right pass with a stack is enough.
std::vector<std::int64_t> reduce_word(std::span<const std::int64_t> word)
{
    std::vector<std::int64_t> out;
    out.reserve(word.size());
    for (auto letter : word) {
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

void check_table(const FiniteTable& t)
{
    const auto n = t.mul.size();
    if (n == 0)
        throw InvalidArgument("group table must be nonempty");
    for (const auto& row : t.mul) {
        if (row.size() != n)
            throw InvalidArgument("group table must be square");
        for (auto v : row)
            if (v >= n)
                throw InvalidArgument("group table entry out of range");
    }
    if (t.identity >= n)
        throw InvalidArgument("identity index out of range");
    for (std::size_t a = 0; a < n; ++a)
        if (t.mul[t.identity][a] != a || t.mul[a][t.identity] != a)
            throw InvalidArgument("table identity is not neutral for element " + std::to_string(a));
    if (t.inv.size() != n)
        throw InvalidArgument("inverse table has wrong size");
    for (std::size_t a = 0; a < n; ++a) {
        if (t.inv[a] >= n || t.mul[a][t.inv[a]] != t.identity || t.mul[t.inv[a]][a] != t.identity)
            throw InvalidArgument("element " + std::to_string(a) + " has no two-sided inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
                    throw InvalidArgument("group table is not associative at (" + std::to_string(a) + ","
                                          + std::to_string(b) + "," + std::to_string(c) + ")");
}

} // namespace

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b)
{
    if (auto c = a.coords_.size() <=> b.coords_.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                  b.coords_.end());
}

std::string to_string(const GroupElement& g)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < g.size(); ++i)
        os << (i ? "," : "") << g[i];
    os << ']';
    return os.str();
}

ElementSet::ElementSet(std::vector<GroupElement> elements) : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

ElementSet::ElementSet(std::initializer_list<GroupElement> elements)
    : ElementSet(std::vector<GroupElement>(elements))
{
}

bool ElementSet::contains(const GroupElement& g) const
{
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::size_t ElementSet::index_of(const GroupElement& g) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || *it != g)
        return elements_.size();
    return static_cast<std::size_t>(it - elements_.begin());
}

bool ElementSet::is_subset_of(const ElementSet& other) const
{
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

bool ElementSet::intersects(const ElementSet& other) const
{
    auto a = elements_.begin();
    auto b = other.elements_.begin();
    while (a != elements_.end() && b != other.elements_.end()) {
        if (*a == *b)
            return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

GroupContext::GroupContext(GroupFamily family) : family_(std::move(family))
{
    std::visit(overloaded{
                   [](const IntegerLattice& l) {
                       if (l.dimension == 0)
                           throw InvalidArgument("lattice dimension must be >= 1");
                   },
                   [](const CyclicProduct& c) {
                       if (c.moduli.empty())
                           throw InvalidArgument("cyclic product needs at least one modulus");
                       for (auto m : c.moduli)
                           if (m < 2)
                               throw InvalidArgument("cyclic moduli must be >= 2");
                   },
                   [](const FreeGroup& f) {
                       if (f.rank == 0)
                           throw InvalidArgument("free group rank must be >= 1");
                   },
                   [](const FiniteTable& t) { check_table(t); },
               },
               family_);
}

GroupContext GroupContext::lattice(std::size_t dimension) { return GroupContext(IntegerLattice{dimension}); }

GroupContext GroupContext::cyclic(std::vector<std::int64_t> moduli)
{
    return GroupContext(CyclicProduct{std::move(moduli)});
}

GroupContext GroupContext::free_group(std::size_t rank) { return GroupContext(FreeGroup{rank}); }

GroupContext GroupContext::table(std::vector<std::vector<std::size_t>> mul, std::size_t identity,
                                 std::vector<std::size_t> inv)
{
    if (inv.empty() && !mul.empty() && identity < mul.size()) {
        const auto n = mul.size();
        inv.assign(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n && b < mul[a].size(); ++b)
                if (mul[a][b] == identity) {
                    inv[a] = b;
                    break;
                }
    }
    return GroupContext(FiniteTable{std::move(mul), std::move(inv), identity});
}

bool GroupContext::is_finite() const noexcept
{
    return std::holds_alternative<CyclicProduct>(family_) || std::holds_alternative<FiniteTable>(family_);
}

std::size_t GroupContext::order() const
{
    return std::visit(overloaded{
                          [](const CyclicProduct& c) {
                              return std::accumulate(c.moduli.begin(), c.moduli.end(), std::size_t{1},
                                                     [](std::size_t acc, std::int64_t m) {
                                                         return acc * static_cast<std::size_t>(m);
                                                     });
                          },
                          [](const FiniteTable& t) { return t.mul.size(); },
                          [](const auto&) -> std::size_t { throw InvalidArgument("infinite group has no finite order"); },
                      },
                      family_);
}

GroupElement GroupContext::identity() const
{
    return std::visit(overloaded{
                          [](const IntegerLattice& l) { return GroupElement(std::vector<std::int64_t>(l.dimension, 0)); },
                          [](const CyclicProduct& c) { return GroupElement(std::vector<std::int64_t>(c.moduli.size(), 0)); },
                          [](const FreeGroup&) { return GroupElement(); },
                          [](const FiniteTable& t) {
                              return GroupElement({static_cast<std::int64_t>(t.identity)});
                          },
                      },
                      family_);
}

bool GroupContext::is_valid(const GroupElement& a) const noexcept
{
    return std::visit(overloaded{
                          [&](const IntegerLattice& l) { return a.size() == l.dimension; },
                          [&](const CyclicProduct& c) {
                              if (a.size() != c.moduli.size())
                                  return false;
                              for (std::size_t i = 0; i < a.size(); ++i)
                                  if (a[i] < 0 || a[i] >= c.moduli[i])
                                      return false;
                              return true;
                          },
                          [&](const FreeGroup& f) {
                              const auto rank = static_cast<std::int64_t>(f.rank);
                              for (std::size_t i = 0; i < a.size(); ++i) {
                                  if (a[i] == 0 || a[i] > rank || a[i] < -rank)
                                      return false;
                                  if (i > 0 && a[i] == -a[i - 1])
                                      return false;
                              }
                              return true;
                          },
                          [&](const FiniteTable& t) {
                              return a.size() == 1 && a[0] >= 0 && static_cast<std::size_t>(a[0]) < t.mul.size();
                          },
                      },
                      family_);
}

void GroupContext::validate(const GroupElement& a) const
{
    if (!is_valid(a))
        throw ElementMismatch("element " + to_string(a) + " is not a canonical element of " + describe());
}

GroupElement GroupContext::canonicalize(const GroupElement& a) const
{
    return std::visit(overloaded{
                          [&](const IntegerLattice& l) {
                              if (a.size() != l.dimension)
                                  throw ElementMismatch("lattice element " + to_string(a) + " has wrong dimension");
                              return a;
                          },
                          [&](const CyclicProduct& c) {
                              if (a.size() != c.moduli.size())
                                  throw ElementMismatch("cyclic element " + to_string(a) + " has wrong length");
                              std::vector<std::int64_t> out(a.size());
                              for (std::size_t i = 0; i < a.size(); ++i)
                                  out[i] = floor_mod(a[i], c.moduli[i]);
                              return GroupElement(std::move(out));
                          },
                          [&](const FreeGroup& f) {
                              const auto rank = static_cast<std::int64_t>(f.rank);
                              for (auto letter : a.coords())
                                  if (letter == 0 || letter > rank || letter < -rank)
                                      throw ElementMismatch("free word " + to_string(a) + " uses an unknown generator");
                              return GroupElement(reduce_word(a.coords()));
                          },
                          [&](const FiniteTable&) {
                              validate(a);
                              return a;
                          },
                      },
                      family_);
}

GroupElement GroupContext::multiply(const GroupElement& a, const GroupElement& b) const
{
    validate(a);
    validate(b);
    return std::visit(overloaded{
                          [&](const IntegerLattice&) {
                              std::vector<std::int64_t> out(a.size());
                              for (std::size_t i = 0; i < a.size(); ++i)
                                  out[i] = a[i] + b[i];
                              return GroupElement(std::move(out));
                          },
                          [&](const CyclicProduct& c) {
                              std::vector<std::int64_t> out(a.size());
                              for (std::size_t i = 0; i < a.size(); ++i)
                                  out[i] = (a[i] + b[i]) % c.moduli[i];
                              return GroupElement(std::move(out));
                          },
                          [&](const FreeGroup&) {
                              std::vector<std::int64_t> word(a.coords().begin(), a.coords().end());
                              word.insert(word.end(), b.coords().begin(), b.coords().end());
                              return GroupElement(reduce_word(word));
                          },
                          [&](const FiniteTable& t) {
                              const auto p = t.mul[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])];
                              return GroupElement({static_cast<std::int64_t>(p)});
                          },
                      },
                      family_);
}

GroupElement GroupContext::inverse(const GroupElement& a) const
{
    validate(a);
    return std::visit(overloaded{
                          [&](const IntegerLattice&) {
                              std::vector<std::int64_t> out(a.size());
                              for (std::size_t i = 0; i < a.size(); ++i)
                                  out[i] = -a[i];
                              return GroupElement(std::move(out));
                          },
                          [&](const CyclicProduct& c) {
                              std::vector<std::int64_t> out(a.size());
                              for (std::size_t i = 0; i < a.size(); ++i)
                                  out[i] = floor_mod(-a[i], c.moduli[i]);
                              return GroupElement(std::move(out));
                          },
                          [&](const FreeGroup&) {
                              std::vector<std::int64_t> out(a.coords().rbegin(), a.coords().rend());
                              for (auto& letter : out)
                                  letter = -letter;
                              return GroupElement(std::move(out));
                          },
                          [&](const FiniteTable& t) {
                              return GroupElement({static_cast<std::int64_t>(t.inv[static_cast<std::size_t>(a[0])])});
                          },
                      },
                      family_);
}

std::size_t GroupContext::length(const GroupElement& a) const
{
    validate(a);
    return std::visit(overloaded{
                          [&](const IntegerLattice&) {
                              std::size_t m = 0;
                              for (auto c : a.coords())
                                  m = std::max(m, static_cast<std::size_t>(c < 0 ? -c : c));
                              return m;
                          },
                          [&](const FreeGroup&) { return a.size(); },
                          [](const auto&) { return std::size_t{0}; },
                      },
                      family_);
}

ElementSet GroupContext::set_product(const ElementSet& a, const ElementSet& b) const
{
    std::vector<GroupElement> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(multiply(x, y));
    return ElementSet(std::move(out));
}

ElementSet GroupContext::set_inverse(const ElementSet& a) const
{
    std::vector<GroupElement> out;
    out.reserve(a.size());
    for (const auto& x : a)
        out.push_back(inverse(x));
    return ElementSet(std::move(out));
}

ElementSet GroupContext::translate_right(const ElementSet& a, const GroupElement& g) const
{
    std::vector<GroupElement> out;
    out.reserve(a.size());
    for (const auto& x : a)
        out.push_back(multiply(x, g));
    return ElementSet(std::move(out));
}

ElementSet GroupContext::translate_left(const GroupElement& g, const ElementSet& a) const
{
    std::vector<GroupElement> out;
    out.reserve(a.size());
    for (const auto& x : a)
        out.push_back(multiply(g, x));
    return ElementSet(std::move(out));
}

ElementSet GroupContext::all_elements() const
{
    return std::visit(overloaded{
                          [&](const CyclicProduct& c) {
                              std::vector<GroupElement> out;
                              std::vector<std::int64_t> cur(c.moduli.size(), 0);
                              const auto n = order();
                              out.reserve(n);
                              for (std::size_t i = 0; i < n; ++i) {
                                  out.emplace_back(cur);
                                  for (std::size_t j = cur.size(); j-- > 0;) {
                                      if (++cur[j] < c.moduli[j])
                                          break;
                                      cur[j] = 0;
                                  }
                              }
                              return ElementSet(std::move(out));
                          },
                          [&](const FiniteTable& t) {
                              std::vector<GroupElement> out;
                              for (std::size_t i = 0; i < t.mul.size(); ++i)
                                  out.push_back(GroupElement({static_cast<std::int64_t>(i)}));
                              return ElementSet(std::move(out));
                          },
                          [](const auto&) -> ElementSet {
                              throw InvalidArgument("cannot enumerate an infinite group");
                          },
                      },
                      family_);
}

ElementSet GroupContext::ball(std::size_t radius) const
{
    if (is_finite())
        return all_elements();
    return std::visit(overloaded{
                          [&](const IntegerLattice& l) {
                              const auto r = static_cast<std::int64_t>(radius);
                              std::vector<GroupElement> out;
                              std::vector<std::int64_t> cur(l.dimension, -r);
                              while (true) {
                                  out.emplace_back(cur);
                                  std::size_t j = cur.size();
                                  while (j-- > 0) {
                                      if (++cur[j] <= r)
                                          break;
                                      cur[j] = -r;
                                  }
                                  if (j == static_cast<std::size_t>(-1))
                                      break;
                              }
                              return ElementSet(std::move(out));
                          },
                          [&](const FreeGroup& f) {
                              const auto rank = static_cast<std::int64_t>(f.rank);
                              std::vector<GroupElement> out{GroupElement()};
                              std::vector<std::vector<std::int64_t>> frontier{{}};
                              for (std::size_t len = 1; len <= radius; ++len) {
                                  std::vector<std::vector<std::int64_t>> next;
                                  for (const auto& w : frontier)
                                      for (std::int64_t g = -rank; g <= rank; ++g) {
                                          if (g == 0 || (!w.empty() && w.back() == -g))
                                              continue;
                                          auto ext = w;
                                          ext.push_back(g);
                                          out.emplace_back(ext);
                                          next.push_back(std::move(ext));
                                      }
                                  frontier = std::move(next);
                              }
                              return ElementSet(std::move(out));
                          },
                          [](const auto&) -> ElementSet { return {}; },
                      },
                      family_);
}

ElementSet GroupContext::make_set(std::vector<GroupElement> elements) const
{
    for (const auto& e : elements)
        validate(e);
    return ElementSet(std::move(elements));
}

std::string GroupContext::describe() const
{
    return std::visit(overloaded{
                          [](const IntegerLattice& l) { return "Z^" + std::to_string(l.dimension); },
                          [](const CyclicProduct& c) {
                              std::string s;
                              for (std::size_t i = 0; i < c.moduli.size(); ++i)
                                  s += (i ? " x Z_" : "Z_") + std::to_string(c.moduli[i]);
                              return s;
                          },
                          [](const FreeGroup& f) { return "F_" + std::to_string(f.rank); },
                          [](const FiniteTable& t) { return "table group of order " + std::to_string(t.mul.size()); },
                      },
                      family_);
}

std::size_t lattice_ball_size(std::size_t dimension, std::size_t radius)
{
    std::size_t n = 1;
    for (std::size_t i = 0; i < dimension; ++i)
        n *= 2 * radius + 1;
    return n;
}

std::size_t free_ball_size(std::size_t rank, std::size_t radius)
{
    // 1 + sum_{j=1..r} 2R (2R-1)^{j-1}
    std::size_t total = 1;
    std::size_t sphere = 2 * rank;
    for (std::size_t j = 1; j <= radius; ++j) {
        total += sphere;
        sphere *= 2 * rank - 1;
    }
    return total;
}

} // namespace lllshift
