#pragma once

// Brute-force reference rings for tests. A TupleRing is a subring of
// Z/m1 × ... × Z/mk given by its element list; every operation is computed
// directly on residues, never through operation tables, and ideals are found
// by naive fixpoint closure. Kept independent of the library's algorithms.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Tuple = std::vector<unsigned>;

struct TupleRing {
    std::vector<unsigned> moduli;
    std::vector<Tuple> elements;  // sorted

    Tuple add(const Tuple& a, const Tuple& b) const {
        Tuple c(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) c[k] = (a[k] + b[k]) % moduli[k];
        return c;
    }
    Tuple mul(const Tuple& a, const Tuple& b) const {
        Tuple c(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) c[k] = (a[k] * b[k]) % moduli[k];
        return c;
    }
    Tuple neg(const Tuple& a) const {
        Tuple c(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) c[k] = (moduli[k] - a[k]) % moduli[k];
        return c;
    }
    Tuple zero() const { return Tuple(moduli.size(), 0); }
    Tuple one() const {
        Tuple c(moduli.size());
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = 1 % moduli[k];
        return c;
    }
    std::size_t order() const { return elements.size(); }
};

using Subset = std::set<Tuple>;

inline TupleRing zmod(unsigned n) {
    TupleRing r{{n}, {}};
    for (unsigned k = 0; k < n; ++k) r.elements.push_back({k});
    return r;
}

inline TupleRing product(const TupleRing& a, const TupleRing& b) {
    TupleRing r;
    r.moduli = a.moduli;
    r.moduli.insert(r.moduli.end(), b.moduli.begin(), b.moduli.end());
    for (const auto& x : a.elements)
        for (const auto& y : b.elements) {
            Tuple t = x;
            t.insert(t.end(), y.begin(), y.end());
            r.elements.push_back(t);
        }
    std::sort(r.elements.begin(), r.elements.end());
    return r;
}

/// Smallest subset containing `seed` closed under +, and multiplication by R.
inline Subset closure(const TupleRing& r, Subset s) {
    s.insert(r.zero());
    for (bool grew = true; grew;) {
        grew = false;
        const std::vector<Tuple> cur(s.begin(), s.end());
        for (const auto& x : cur) {
            for (const auto& y : cur)
                if (s.insert(r.add(x, y)).second) grew = true;
            for (const auto& z : r.elements)
                if (s.insert(r.mul(z, x)).second) grew = true;
        }
    }
    return s;
}

/// {(x, x+i) : x in R, i in I} inside R × R.
inline TupleRing duplication(const TupleRing& r, const Subset& ideal) {
    TupleRing d;
    d.moduli = r.moduli;
    d.moduli.insert(d.moduli.end(), r.moduli.begin(), r.moduli.end());
    for (const auto& x : r.elements)
        for (const auto& i : ideal) {
            Tuple t = x;
            const auto y = r.add(x, i);
            t.insert(t.end(), y.begin(), y.end());
            d.elements.push_back(t);
        }
    std::sort(d.elements.begin(), d.elements.end());
    return d;
}

/// Every ideal, by growing from {0} one element at a time.
inline std::vector<Subset> all_ideals(const TupleRing& r) {
    std::set<Subset> seen;
    std::vector<Subset> todo{closure(r, {})};
    seen.insert(todo.front());
    while (!todo.empty()) {
        const Subset j = todo.back();
        todo.pop_back();
        for (const auto& x : r.elements) {
            if (j.count(x)) continue;
            Subset k = j;
            k.insert(x);
            k = closure(r, std::move(k));
            if (seen.insert(k).second) todo.push_back(k);
        }
    }
    return {seen.begin(), seen.end()};
}

inline Subset annihilator(const TupleRing& r, const Subset& s) {
    Subset out;
    for (const auto& x : r.elements) {
        bool kills = true;
        for (const auto& y : s)
            if (r.mul(x, y) != r.zero()) {
                kills = false;
                break;
            }
        if (kills) out.insert(x);
    }
    return out;
}

inline bool is_qf(const TupleRing& r) {
    for (const auto& j : all_ideals(r))
        if (annihilator(r, annihilator(r, j)) != j) return false;
    return true;
}

inline std::vector<Tuple> idempotents(const TupleRing& r) {
    std::vector<Tuple> out;
    for (const auto& x : r.elements)
        if (r.mul(x, x) == x) out.push_back(x);
    return out;
}

inline bool is_local(const TupleRing& r) {
    if (r.order() == 1) return false;
    std::vector<Tuple> nonunits;
    for (const auto& x : r.elements) {
        bool unit = false;
        for (const auto& y : r.elements)
            if (r.mul(x, y) == r.one()) unit = true;
        if (!unit) nonunits.push_back(x);
    }
    const Subset n(nonunits.begin(), nonunits.end());
    for (const auto& x : nonunits)
        for (const auto& y : nonunits)
            if (!n.count(r.add(x, y))) return false;
    return true;
}

/// Ideal of Z/n generated by residue g, as a subset of zmod(n).
inline Subset zmod_ideal(unsigned n, unsigned g) {
    return closure(zmod(n), {Tuple{g % n}});
}

inline std::size_t divisor_count(unsigned n) {
    std::size_t c = 0;
    for (unsigned d = 1; d <= n; ++d) c += n % d == 0;
    return c;
}

}  // namespace oracle
