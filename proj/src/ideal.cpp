#include "amalgam/ideal.hpp"

#include <algorithm>
#include <deque>

#include "amalgam/errors.hpp"

namespace amalgam {

IdealSet::IdealSet(RingPtr ring, ElementSet bits)
    : ring_(std::move(ring)), bits_(std::move(bits)), members_(bits_.members()) {}

IdealSet IdealSet::adopt(RingPtr ring, ElementSet bits) {
    if (!is_ideal(*ring, bits)) throw Error("element set is not an ideal");
    return IdealSet(std::move(ring), std::move(bits));
}

IdealSet IdealSet::from_members(RingPtr ring, std::span<const Element> members) {
    ElementSet bits(ring->order());
    for (auto m : members) {
        if (m >= ring->order())
            throw Error("element index " + std::to_string(m) + " out of range");
        bits.insert(m);
    }
    return adopt(std::move(ring), std::move(bits));
}

bool is_ideal(const RingTable& r, const ElementSet& s) {
    if (s.universe() != r.order() || !s.contains(r.zero())) return false;
    const auto m = s.members();
    for (auto x : m) {
        if (!s.contains(r.neg(x))) return false;
        for (auto y : m)
            if (!s.contains(r.add(x, y))) return false;
        for (auto v : r.mul_row(x))
            if (!s.contains(v)) return false;
    }
    return true;
}

bool canonical_less(const IdealSet& a, const IdealSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
}

ElementSet subgroup_sum(const RingTable& r, const ElementSet& a, std::span<const Element> a_members,
                        std::span<const Element> b_members) {
    ElementSet out = a;
    for (auto y : b_members) {
        if (out.contains(y)) continue;
        // a is a subgroup and `out` is a union of a-cosets, so y missing means
        // the whole coset a + y is missing.
        for (auto x : a_members) out.insert(r.add(x, y));
    }
    return out;
}

namespace {

ElementSet principal_bits(const RingTable& r, Element a) {
    ElementSet s(r.order());
    for (auto v : r.mul_row(a)) s.insert(v);
    return s;
}

ElementSet zero_bits(const RingTable& r) {
    ElementSet s(r.order());
    s.insert(r.zero());
    return s;
}

ElementSet generated_bits(const RingTable& r, std::span<const Element> gens) {
    ElementSet acc = zero_bits(r);
    for (auto g : gens) {
        if (g >= r.order()) throw Error("generator index " + std::to_string(g) + " out of range");
        if (acc.contains(g)) continue;
        const auto p = principal_bits(r, g).members();
        acc = subgroup_sum(r, acc, acc.members(), p);
    }
    return acc;
}

void require_same_ring(const IdealSet& a, const IdealSet& b) {
    if (a.ring() != b.ring()) throw RingMismatchError("ideals belong to different rings");
}

}  // namespace

IdealSet ideal_from_generators(const RingPtr& r, std::span<const Element> gens) {
    return IdealSet::adopt(r, generated_bits(*r, gens));
}

IdealSet principal_ideal(const RingPtr& r, Element a) {
    return IdealSet::adopt(r, principal_bits(*r, a));
}

AnnihilatorTable::AnnihilatorTable(const RingTable& r) : order_(r.order()) {
    rows_.reserve(order_);
    for (std::size_t x = 0; x < order_; ++x) {
        ElementSet z(order_);
        const auto row = r.mul_row(static_cast<Element>(x));
        for (std::size_t y = 0; y < order_; ++y)
            if (row[y] == r.zero()) z.insert(static_cast<Element>(y));
        rows_.push_back(std::move(z));
    }
}

ElementSet AnnihilatorTable::annihilate(std::span<const Element> gens) const {
    ElementSet acc(order_);
    acc.fill();
    for (auto g : gens) acc &= rows_[g];
    return acc;
}

IdealSet annihilator(const RingPtr& r, std::span<const Element> s) {
    ElementSet acc(r->order());
    for (std::size_t x = 0; x < r->order(); ++x) {
        const auto row = r->mul_row(static_cast<Element>(x));
        bool kills = true;
        for (auto g : s) {
            if (g >= r->order()) throw Error("element index " + std::to_string(g) + " out of range");
            if (row[g] != r->zero()) {
                kills = false;
                break;
            }
        }
        if (kills) acc.insert(static_cast<Element>(x));
    }
    return IdealSet::adopt(r, std::move(acc));
}

IdealSet ideal_sum(const IdealSet& a, const IdealSet& b) {
    require_same_ring(a, b);
    return IdealSet::adopt(a.ring(), subgroup_sum(*a.ring(), a.bits(), a.members(), b.members()));
}

IdealSet ideal_intersection(const IdealSet& a, const IdealSet& b) {
    require_same_ring(a, b);
    ElementSet s = a.bits();
    s &= b.bits();
    return IdealSet::adopt(a.ring(), std::move(s));
}

std::vector<Element> greedy_generators(const IdealSet& i) {
    const auto& r = *i.ring();
    std::vector<Element> gens;
    ElementSet acc = zero_bits(r);
    for (auto x : i.members()) {
        if (acc.contains(x)) continue;
        gens.push_back(x);
        acc = subgroup_sum(r, acc, acc.members(), principal_bits(r, x).members());
    }
    return gens;
}

std::optional<std::size_t> IdealLattice::find(const ElementSet& s) const {
    auto it = index.find(s);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

IdealLattice enumerate_ideal_lattice(const RingPtr& r, const Limits& limits) {
    const RingTable& ring = *r;
    const std::size_t n = ring.order();

    struct Principal {
        ElementSet bits;
        std::vector<Element> members;
        Element generator;
    };
    std::vector<Principal> principals;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen_principal;
    for (std::size_t a = 0; a < n; ++a) {
        auto bits = principal_bits(ring, static_cast<Element>(a));
        if (seen_principal.emplace(bits, principals.size()).second) {
            auto members = bits.members();
            principals.push_back({std::move(bits), std::move(members), static_cast<Element>(a)});
        }
    }

    std::vector<ElementSet> found;
    std::vector<std::vector<Element>> gens;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
    auto add = [&](ElementSet s, std::vector<Element> g) {
        if (index.contains(s)) return;
        if (found.size() >= limits.max_ideals)
            throw CapacityError("ideal lattice exceeds the cap of " +
                                std::to_string(limits.max_ideals) + " ideals");
        index.emplace(s, found.size());
        found.push_back(std::move(s));
        gens.push_back(std::move(g));
    };

    add(zero_bits(ring), {});
    for (const auto& p : principals)
        add(p.bits, p.generator == ring.zero() ? std::vector<Element>{} : std::vector{p.generator});

    for (std::size_t k = 0; k < found.size(); ++k) {
        const auto members = found[k].members();
        for (const auto& p : principals) {
            if (found[k].contains(p.generator)) continue;
            auto s = subgroup_sum(ring, found[k], members, p.members);
            if (index.contains(s)) continue;
            auto g = gens[k];
            g.push_back(p.generator);
            add(std::move(s), std::move(g));
        }
    }

    // Canonical order: size, then lexicographic member list.
    std::vector<std::vector<Element>> member_lists;
    member_lists.reserve(found.size());
    for (const auto& s : found) member_lists.push_back(s.members());
    std::vector<std::size_t> perm(found.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (member_lists[a].size() != member_lists[b].size())
            return member_lists[a].size() < member_lists[b].size();
        return member_lists[a] < member_lists[b];
    });

    IdealLattice lat;
    lat.ring = r;
    lat.ideals.reserve(found.size());
    lat.generators.reserve(found.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        auto g = std::move(gens[perm[k]]);
        std::sort(g.begin(), g.end());
        lat.index.emplace(found[perm[k]], k);
        lat.ideals.push_back(std::move(found[perm[k]]));
        lat.generators.push_back(std::move(g));
    }
    return lat;
}

std::vector<IdealSet> enumerate_ideals(const RingPtr& r, const Limits& limits) {
    auto lat = enumerate_ideal_lattice(r, limits);
    std::vector<IdealSet> out;
    out.reserve(lat.ideals.size());
    for (auto& s : lat.ideals) out.push_back(IdealSet::adopt(r, std::move(s)));
    return out;
}

LocalVerdict is_local(const RingPtr& r) {
    const RingTable& ring = *r;
    if (ring.order() == 1) return {};
    ElementSet nonunits(ring.order());
    for (std::size_t x = 0; x < ring.order(); ++x)
        if (!ring.is_unit(static_cast<Element>(x))) nonunits.insert(static_cast<Element>(x));
    const auto m = nonunits.members();
    for (auto x : m)
        for (auto y : m)
            if (!nonunits.contains(ring.add(x, y))) return {};
    return {true, IdealSet::adopt(r, std::move(nonunits))};
}

}  // namespace amalgam
