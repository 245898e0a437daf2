#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "amalgam/element_set.hpp"
#include "amalgam/ring_table.hpp"

namespace amalgam {

/// An ideal of a specific ring, stored as its sorted member list plus a
/// membership bitset. Only constructible through operations that establish
/// the ideal invariants.
class IdealSet {
public:
    /// Validates closure (contains zero, closed under +, -, and R-multiples)
    /// and throws Error if `members` is not an ideal of `ring`.
    static IdealSet from_members(RingPtr ring, std::span<const Element> members);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Element>& members() const noexcept { return members_; }
    const ElementSet& bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(Element x) const noexcept { return bits_.contains(x); }
    bool is_zero() const noexcept { return members_.size() == 1; }
    bool is_whole() const noexcept { return members_.size() == ring_->order(); }

    /// Equality requires the same owning ring object.
    friend bool operator==(const IdealSet& a, const IdealSet& b) noexcept {
        return a.ring_ == b.ring_ && a.members_ == b.members_;
    }

    /// Validated construction from a bitset already known to be closed.
    static IdealSet adopt(RingPtr ring, ElementSet bits);

private:
    IdealSet(RingPtr ring, ElementSet bits);

    RingPtr ring_;
    ElementSet bits_;
    std::vector<Element> members_;
};

/// True iff `s` satisfies the ideal closure invariants in `r`.
bool is_ideal(const RingTable& r, const ElementSet& s);

/// Canonical order: by size, then lexicographically by sorted member list.
bool canonical_less(const IdealSet& a, const IdealSet& b);

/// Additive closure of the union of R*g over all generators.
IdealSet ideal_from_generators(const RingPtr& r, std::span<const Element> gens);

/// R*a.
IdealSet principal_ideal(const RingPtr& r, Element a);

/// {x : x*s = 0 for all s in `s`}.
IdealSet annihilator(const RingPtr& r, std::span<const Element> s);

IdealSet ideal_sum(const IdealSet& a, const IdealSet& b);
IdealSet ideal_intersection(const IdealSet& a, const IdealSet& b);

/// Small generating set: ascending members, keeping each one not already in the
/// ideal generated by those kept so far.
std::vector<Element> greedy_generators(const IdealSet& i);

/// Per-element annihilator bitsets Z(x) = {y : x*y = 0}.
class AnnihilatorTable {
public:
    explicit AnnihilatorTable(const RingTable& r);
    const ElementSet& of(Element x) const noexcept { return rows_[x]; }
    /// Intersection of Z(g) over `gens`; the whole ring for an empty list.
    ElementSet annihilate(std::span<const Element> gens) const;

private:
    std::size_t order_;
    std::vector<ElementSet> rows_;
};

/// The complete ideal lattice in canonical order, with a generating set kept
/// for every ideal (a sum of principal ideals along the discovery path).
struct IdealLattice {
    RingPtr ring;
    std::vector<ElementSet> ideals;
    std::vector<std::vector<Element>> generators;

    std::optional<std::size_t> find(const ElementSet& s) const;

    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
};

/// Closure of {0} and all principal ideals under sums with principal ideals.
/// Throws CapacityError when the lattice exceeds limits.max_ideals.
IdealLattice enumerate_ideal_lattice(const RingPtr& r, const Limits& limits = {});

std::vector<IdealSet> enumerate_ideals(const RingPtr& r, const Limits& limits = {});

struct LocalVerdict {
    bool local = false;
    std::optional<IdealSet> maximal_ideal;
};

/// Local iff the non-units form an additively closed set (they are then the
/// unique maximal ideal). The order-1 ring has no maximal ideal and is not
/// local.
LocalVerdict is_local(const RingPtr& r);

/// x + y for x in `a`, y in `b`, where `a` is an additive subgroup given by its
/// bitset and member list.
ElementSet subgroup_sum(const RingTable& r, const ElementSet& a, std::span<const Element> a_members,
                        std::span<const Element> b_members);

}  // namespace amalgam
