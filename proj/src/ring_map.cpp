#include "amalgam/ring_map.hpp"

#include "amalgam/errors.hpp"
#include "amalgam/element_set.hpp"

namespace amalgam {

MapVerdict verify_ring_map(const RingMap& m, bool require_unital, bool require_bijective) {
    const RingTable& d = *m.domain;
    const RingTable& c = *m.codomain;
    const std::size_t n = d.order();
    MapVerdict v;
    auto fail = [&v](const char* what, Element x, Element y) {
        v.ok = false;
        v.property = what;
        v.x = x;
        v.y = y;
        return v;
    };

    if (m.table.size() != n) return fail("table size", 0, 0);
    for (std::size_t x = 0; x < n; ++x)
        if (m.table[x] >= c.order()) return fail("codomain range", static_cast<Element>(x), 0);

    for (std::size_t i = 0; i < n; ++i) {
        const auto x = static_cast<Element>(i);
        const auto fx = m.table[x];
        for (std::size_t j = i; j < n; ++j) {
            const auto y = static_cast<Element>(j);
            if (m.table[d.add(x, y)] != c.add(fx, m.table[y])) return fail("additive", x, y);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = static_cast<Element>(i);
        const auto fx = m.table[x];
        for (std::size_t j = i; j < n; ++j) {
            const auto y = static_cast<Element>(j);
            if (m.table[d.mul(x, y)] != c.mul(fx, m.table[y])) return fail("multiplicative", x, y);
        }
    }
    if (require_unital && m.table[d.one()] != c.one()) return fail("unital", d.one(), 0);
    if (require_bijective) {
        if (n != c.order()) return fail("bijective", 0, 0);
        ElementSet hit(c.order());
        for (std::size_t x = 0; x < n; ++x) {
            if (hit.contains(m.table[x])) {
                for (std::size_t y = 0; y < x; ++y)
                    if (m.table[y] == m.table[x])
                        return fail("injective", static_cast<Element>(y), static_cast<Element>(x));
            }
            hit.insert(m.table[x]);
        }
    }
    return v;
}

RingMap identity_map(const RingPtr& r) {
    RingMap m{r, r, std::vector<Element>(r->order()), true};
    for (std::size_t x = 0; x < r->order(); ++x) m.table[x] = static_cast<Element>(x);
    return m;
}

RingMap compose(const RingMap& g, const RingMap& f) {
    if (f.codomain != g.domain) throw RingMismatchError("composed maps do not share a ring");
    RingMap out{f.domain, g.codomain, std::vector<Element>(f.table.size()), f.unital && g.unital};
    for (std::size_t x = 0; x < f.table.size(); ++x) out.table[x] = g.table[f.table[x]];
    return out;
}

RingMap inverse(const RingMap& m) {
    if (m.domain->order() != m.codomain->order()) throw Error("map is not bijective");
    RingMap out{m.codomain, m.domain, std::vector<Element>(m.codomain->order()), m.unital};
    ElementSet hit(m.codomain->order());
    for (std::size_t x = 0; x < m.table.size(); ++x) {
        if (hit.contains(m.table[x])) throw Error("map is not bijective");
        hit.insert(m.table[x]);
        out.table[m.table[x]] = static_cast<Element>(x);
    }
    return out;
}

std::uint64_t fingerprint(const RingMap& m) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](std::uint64_t v) {
        for (int b = 0; b < 2; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    feed(m.domain->order());
    feed(m.codomain->order());
    for (auto e : m.table) feed(e);
    return h;
}

}  // namespace amalgam
