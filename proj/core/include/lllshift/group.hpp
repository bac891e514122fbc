#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace lllshift {

/// A group element in the coordinates of its family:
///  - lattice: integer vector
///  - cyclic product: residue vector, each entry in [0, m_i)
///  - free group: reduced word; entry +i is generator g_i, -i is its inverse (i >= 1)
///  - table: a single index into the multiplication table
///
/// Ordering is shortlex (length first, then lexicographic), which is the canonical
/// order used by ElementSet.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    GroupElement(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

    [[nodiscard]] std::span<const std::int64_t> coords() const noexcept { return coords_; }
    [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return coords_[i]; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

private:
    std::vector<std::int64_t> coords_;
};

std::string to_string(const GroupElement& g);

/// Finite, duplicate-free, canonically sorted collection of elements.
class ElementSet {
public:
    using const_iterator = std::vector<GroupElement>::const_iterator;

    ElementSet() = default;
    explicit ElementSet(std::vector<GroupElement> elements);
    ElementSet(std::initializer_list<GroupElement> elements);

    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
    [[nodiscard]] const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
    [[nodiscard]] const_iterator begin() const noexcept { return elements_.begin(); }
    [[nodiscard]] const_iterator end() const noexcept { return elements_.end(); }
    [[nodiscard]] const std::vector<GroupElement>& elements() const noexcept { return elements_; }

    [[nodiscard]] bool contains(const GroupElement& g) const;
    /// Position of g in canonical order, or size() when absent.
    [[nodiscard]] std::size_t index_of(const GroupElement& g) const;
    [[nodiscard]] bool is_subset_of(const ElementSet& other) const;
    [[nodiscard]] bool intersects(const ElementSet& other) const;

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    std::vector<GroupElement> elements_;
};

struct IntegerLattice {
    std::size_t dimension = 1;
    friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;
};

struct CyclicProduct {
    std::vector<std::int64_t> moduli;
    friend bool operator==(const CyclicProduct&, const CyclicProduct&) = default;
};

struct FreeGroup {
    std::size_t rank = 1;
    friend bool operator==(const FreeGroup&, const FreeGroup&) = default;
};

/// Arbitrary finite group given by its Cayley table. Elements are 0..order-1.
struct FiniteTable {
    std::vector<std::vector<std::size_t>> mul;
    std::vector<std::size_t> inv;
    std::size_t identity = 0;
    friend bool operator==(const FiniteTable&, const FiniteTable&) = default;
};

using GroupFamily = std::variant<IntegerLattice, CyclicProduct, FreeGroup, FiniteTable>;

/// A concrete group with exact element arithmetic. Immutable after construction;
/// constructing a FiniteTable context checks the group axioms exhaustively.
class GroupContext {
public:
    explicit GroupContext(GroupFamily family);

    static GroupContext lattice(std::size_t dimension);
    static GroupContext cyclic(std::vector<std::int64_t> moduli);
    static GroupContext free_group(std::size_t rank);
    /// Builds a table group; the inverse table is derived from `mul` when empty.
    static GroupContext table(std::vector<std::vector<std::size_t>> mul, std::size_t identity,
                              std::vector<std::size_t> inv = {});

    [[nodiscard]] const GroupFamily& family() const noexcept { return family_; }
    [[nodiscard]] bool is_finite() const noexcept;
    /// Number of elements; only meaningful for finite families.
    [[nodiscard]] std::size_t order() const;

    [[nodiscard]] GroupElement identity() const;
    [[nodiscard]] GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    [[nodiscard]] GroupElement inverse(const GroupElement& a) const;

    /// Throws ElementMismatch unless `a` is a canonical element of this group.
    void validate(const GroupElement& a) const;
    [[nodiscard]] bool is_valid(const GroupElement& a) const noexcept;
    /// Brings raw coordinates into canonical form (reduces residues and free words).
    [[nodiscard]] GroupElement canonicalize(const GroupElement& a) const;

    /// Word length w.r.t. the standard generators for free groups, l-infinity norm for
    /// lattices. Zero for finite families, whose windows are always the whole group.
    [[nodiscard]] std::size_t length(const GroupElement& a) const;

    [[nodiscard]] ElementSet set_product(const ElementSet& a, const ElementSet& b) const;
    [[nodiscard]] ElementSet set_inverse(const ElementSet& a) const;
    [[nodiscard]] ElementSet translate_right(const ElementSet& a, const GroupElement& g) const;
    [[nodiscard]] ElementSet translate_left(const GroupElement& g, const ElementSet& a) const;
    /// Elements of length <= radius; every element for finite families.
    [[nodiscard]] ElementSet ball(std::size_t radius) const;
    [[nodiscard]] ElementSet all_elements() const;
    [[nodiscard]] ElementSet make_set(std::vector<GroupElement> elements) const;

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const GroupContext&, const GroupContext&) = default;

private:
    GroupFamily family_;
};

/// Closed-form ball sizes used as an oracle for ball().
std::size_t lattice_ball_size(std::size_t dimension, std::size_t radius);
std::size_t free_ball_size(std::size_t rank, std::size_t radius);

} // namespace lllshift
