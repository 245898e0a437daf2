#include "amalgam/iso_maps.hpp"

#include <string>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

void require_iso(const RingMap& m, const char* name) {
    const auto v = verify_ring_map(m, true, true);
    if (!v.ok)
        throw Error(std::string(name) + " failed verification: " + v.property + " at (" +
                    std::to_string(v.x) + ", " + std::to_string(v.y) + ")");
}

std::pair<Element, Element> require_split(const RingPtr& r, const IdealSet& i, const IdealSet& j) {
    if (i.ring() != r || j.ring() != r) throw RingMismatchError("ideals do not belong to R");
    if (!ideal_intersection(i, j).is_zero()) throw HypothesisError("I ∩ J is not the zero ideal");
    auto w = comaximal_witness(i, j);
    if (!w) throw HypothesisError("I + J is not the whole ring");
    return *w;
}

}  // namespace

RingMap map_zeta(const Duplication& d1, const Duplication& d2, const Limits& limits) {
    const auto& r2 = *d2.base;
    auto domain = make_product(d1.ring, d2.ring, limits);
    auto base = make_product(d1.base, d2.base, limits);

    const std::size_t n2 = r2.order();
    std::vector<Element> gens;
    for (auto a : d1.ideal.members())
        for (auto b : d2.ideal.members()) gens.push_back(static_cast<Element>(a * n2 + b));
    auto target = make_duplication(base, gens, limits);

    RingMap m{domain, target.ring, std::vector<Element>(domain->order()), true};
    const std::size_t m2 = d2.ring->order();
    for (std::size_t z = 0; z < domain->order(); ++z) {
        const auto [x1, i1] = d1.decode(static_cast<Element>(z / m2));
        const auto [x2, i2] = d2.decode(static_cast<Element>(z % m2));
        m.table[z] = target.encode(static_cast<Element>(x1 * n2 + x2),
                                   static_cast<Element>(i1 * n2 + i2));
    }
    require_iso(m, "zeta");
    return m;
}

std::optional<std::pair<Element, Element>> comaximal_witness(const IdealSet& i, const IdealSet& j) {
    const auto& r = *i.ring();
    for (auto a : i.members()) {
        const Element b = r.sub(r.one(), a);
        if (j.contains(b)) return std::pair{a, b};
    }
    return std::nullopt;
}

RingMap map_psi(const RingPtr& r, const IdealSet& i, const IdealSet& j, const Limits& limits) {
    const auto [i0, j0] = require_split(r, i, j);
    const RingTable& R = *r;
    auto dup = make_duplication(r, i.members(), limits);
    auto qi = make_quotient(r, i.members(), limits);
    auto qj = make_quotient(r, j.members(), limits);
    auto rj2 = make_product(qj.ring, qj.ring, limits);
    auto target = make_product(qi.ring, rj2, limits);

    const std::size_t nj = qj.ring->order();
    auto pack = [&](Element a, Element b, Element c) {
        return static_cast<Element>(a * (nj * nj) + b * nj + c);
    };
    RingMap m{dup.ring, target, std::vector<Element>(dup.ring->order()), true};
    for (std::size_t z = 0; z < dup.ring->order(); ++z) {
        const auto x = dup.first(static_cast<Element>(z));
        const auto y = dup.second(static_cast<Element>(z));
        m.table[z] = pack(qi.projection(x), qj.projection(x), qj.projection(y));
    }
    require_iso(m, "psi");

    // Surjectivity through the explicit preimage (r j0 + r' i0, r j0 + r' i0 + r'' i0).
    // Its image is (r mod I, r' mod J, (r' + r'') mod J); as r'' ranges over
    // the coset representatives this still covers every target exactly once.
    ElementSet hit(target->order());
    const auto& ri = qi.ring->order();
    std::vector<Element> rep_i(ri), rep_j(nj);
    for (std::size_t x = R.order(); x-- > 0;) {
        rep_i[qi.projection(static_cast<Element>(x))] = static_cast<Element>(x);
        rep_j[qj.projection(static_cast<Element>(x))] = static_cast<Element>(x);
    }
    for (std::size_t a = 0; a < ri; ++a)
        for (std::size_t b = 0; b < nj; ++b)
            for (std::size_t c = 0; c < nj; ++c) {
                const Element x =
                    R.add(R.mul(rep_i[a], j0), R.mul(rep_j[b], i0));
                const Element inc = R.mul(rep_j[c], i0);
                const Element z = dup.encode(x, inc);
                const auto expect = pack(static_cast<Element>(a), static_cast<Element>(b),
                                         qj.ring->add(static_cast<Element>(b), static_cast<Element>(c)));
                if (m.table[z] != expect) throw Error("psi preimage formula mismatch");
                hit.insert(m.table[z]);
            }
    if (hit.count() != target->order()) throw Error("psi preimage formula is not onto");
    return m;
}

RingMap map_phi(const RingPtr& r, const IdealSet& i, const IdealSet& j, const Limits& limits) {
    const auto [i0, j0] = require_split(r, i, j);
    const RingTable& R = *r;
    auto qi = make_quotient(r, i.members(), limits);
    auto qj = make_quotient(r, j.members(), limits);
    auto target = make_product(qi.ring, qj.ring, limits);
    const std::size_t nj = qj.ring->order();

    RingMap m{r, target, std::vector<Element>(R.order()), true};
    for (std::size_t x = 0; x < R.order(); ++x)
        m.table[x] = static_cast<Element>(qi.projection(static_cast<Element>(x)) * nj +
                                          qj.projection(static_cast<Element>(x)));
    require_iso(m, "phi");

    // Surjectivity through phi(j0 r + i0 r') = (r mod I, r' mod J).
    for (std::size_t a = 0; a < R.order(); ++a)
        for (std::size_t b = 0; b < R.order(); ++b) {
            const auto ea = static_cast<Element>(a), eb = static_cast<Element>(b);
            const Element x = R.add(R.mul(j0, ea), R.mul(i0, eb));
            const auto expect =
                static_cast<Element>(qi.projection(ea) * nj + qj.projection(eb));
            if (m.table[x] != expect) throw Error("phi preimage formula mismatch");
        }
    return m;
}

RingMap map_epsilon(const Duplication& d) {
    RingMap m{d.ring, d.base, std::vector<Element>(d.ring->order()), true};
    for (std::size_t z = 0; z < d.ring->order(); ++z) m.table[z] = d.first(static_cast<Element>(z));
    return m;
}

const IdealSet& map_iota(const Duplication& d) { return d.embedded; }

IdealSet kernel(const RingMap& m) {
    ElementSet s(m.domain->order());
    for (std::size_t x = 0; x < m.table.size(); ++x)
        if (m.table[x] == m.codomain->zero()) s.insert(static_cast<Element>(x));
    return IdealSet::adopt(m.domain, std::move(s));
}

PiSplitting map_pi(const RingPtr& r, Element e, const Limits& limits) {
    const RingTable& R = *r;
    if (e >= R.order() || R.mul(e, e) != e)
        throw HypothesisError("element " + std::to_string(e) + " is not idempotent");
    const Element gens[] = {e};
    auto dup = make_duplication(r, gens, limits);
    const Element one_minus_e = R.sub(R.one(), e);

    RingMap pi{r, dup.ring, std::vector<Element>(R.order()), e == R.zero()};
    for (std::size_t x = 0; x < R.order(); ++x) {
        const auto ex = static_cast<Element>(x);
        // (x, x(1-e)) = (x, x + i) with i = -x e.
        pi.table[x] = dup.encode(ex, R.sub(R.mul(ex, one_minus_e), ex));
    }
    auto eps = map_epsilon(dup);
    return {std::move(dup), std::move(pi), std::move(eps)};
}

bool splits_projection(const PiSplitting& s) {
    for (std::size_t x = 0; x < s.pi.table.size(); ++x)
        if (s.epsilon(s.pi(static_cast<Element>(x))) != x) return false;
    return true;
}

bool is_module_linear(const PiSplitting& s) {
    const RingTable& R = *s.dup.base;
    const RingTable& D = *s.dup.ring;
    for (std::size_t z = 0; z < D.order(); ++z) {
        const auto ez = static_cast<Element>(z);
        for (std::size_t x = 0; x < R.order(); ++x) {
            const auto ex = static_cast<Element>(x);
            if (s.pi(R.mul(s.epsilon(ez), ex)) != D.mul(ez, s.pi(ex))) return false;
        }
    }
    return true;
}

}  // namespace amalgam
