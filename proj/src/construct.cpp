#include "amalgam/construct.hpp"

#include <string>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

std::vector<Element> as_vector(std::span<const Element> s) { return {s.begin(), s.end()}; }

}  // namespace

Quotient make_quotient(const RingPtr& r, std::span<const Element> gens, const Limits& limits) {
    const RingTable& base = *r;
    auto ideal = ideal_from_generators(r, gens);
    const std::size_t n = base.order();

    std::vector<int> cls(n, -1);
    std::vector<Element> reps;
    for (std::size_t x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        const int k = static_cast<int>(reps.size());
        reps.push_back(static_cast<Element>(x));
        for (auto i : ideal.members()) cls[base.add(static_cast<Element>(x), i)] = k;
    }
    const std::size_t q = reps.size();
    if (q > limits.max_order) throw CapacityError("quotient exceeds the order cap");

    std::vector<Element> add(q * q), mul(q * q), neg(q);
    std::vector<std::string> labels(q);
    for (std::size_t a = 0; a < q; ++a) {
        neg[a] = static_cast<Element>(cls[base.neg(reps[a])]);
        labels[a] = base.label(reps[a]);
        for (std::size_t b = 0; b < q; ++b) {
            add[a * q + b] = static_cast<Element>(cls[base.add(reps[a], reps[b])]);
            mul[a * q + b] = static_cast<Element>(cls[base.mul(reps[a], reps[b])]);
        }
    }
    // The induced operations must not depend on the representatives.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
            const auto cx = static_cast<std::size_t>(cls[x]), cy = static_cast<std::size_t>(cls[y]);
            if (add[cx * q + cy] != cls[base.add(ex, ey)] || mul[cx * q + cy] != cls[base.mul(ex, ey)])
                throw Error("quotient operations are not well defined");
        }

    auto ring = RingTable::from_tables(q, std::move(add), std::move(mul), std::move(neg),
                                       static_cast<Element>(cls[base.zero()]),
                                       static_cast<Element>(cls[base.one()]), std::move(labels),
                                       RingExpr::quot(base.origin(), as_vector(gens)));
    RingMap proj{r, ring, std::vector<Element>(n), true};
    for (std::size_t x = 0; x < n; ++x) proj.table[x] = static_cast<Element>(cls[x]);
    return {ring, std::move(ideal), std::move(proj)};
}

Element Duplication::encode(Element r, Element i) const {
    const int k = rank.at(i);
    if (k < 0) throw Error("second component is not in the duplicated ideal");
    return static_cast<Element>(r * ideal.size() + static_cast<std::size_t>(k));
}

std::pair<Element, Element> Duplication::decode(Element z) const {
    const std::size_t m = ideal.size();
    return {static_cast<Element>(z / m), ideal.members()[z % m]};
}

Element Duplication::second(Element z) const {
    const auto [r, i] = decode(z);
    return base->add(r, i);
}

Duplication make_duplication(const RingPtr& r, std::span<const Element> gens, const Limits& limits) {
    const RingTable& base = *r;
    auto ideal = ideal_from_generators(r, gens);
    const std::size_t nb = base.order(), m = ideal.size(), n = nb * m;
    if (n > limits.max_order || n > 65535)
        throw CapacityError("duplication of order " + std::to_string(n) + " exceeds the order cap " +
                            std::to_string(limits.max_order));

    std::vector<int> rank(nb, -1);
    for (std::size_t k = 0; k < m; ++k) rank[ideal.members()[k]] = static_cast<int>(k);
    const auto& im = ideal.members();
    auto enc = [&](Element x, Element i) {
        return static_cast<Element>(x * m + static_cast<std::size_t>(rank[i]));
    };

    std::vector<Element> add(n * n), mul(n * n), neg(n);
    std::vector<std::string> labels(n);
    for (std::size_t p = 0; p < n; ++p) {
        const auto r1 = static_cast<Element>(p / m);
        const Element i1 = im[p % m];
        const Element s1 = base.add(r1, i1);
        neg[p] = enc(base.neg(r1), base.neg(i1));
        labels[p] = "(" + base.label(r1) + "," + base.label(r1) +
                    (i1 == base.zero() ? "" : "+" + base.label(i1)) + ")";
        for (std::size_t q = 0; q < n; ++q) {
            const auto r2 = static_cast<Element>(q / m);
            const Element i2 = im[q % m];
            add[p * n + q] = enc(base.add(r1, r2), base.add(i1, i2));
            // Componentwise in R×R: (r1 r2, (r1+i1)(r2+i2)); the ideal part is
            // the difference of the two coordinates.
            const Element first = base.mul(r1, r2);
            const Element second = base.mul(s1, base.add(r2, i2));
            mul[p * n + q] = enc(first, base.sub(second, first));
        }
    }

    auto ring = RingTable::from_tables(n, std::move(add), std::move(mul), std::move(neg),
                                       enc(base.zero(), base.zero()), enc(base.one(), base.zero()),
                                       std::move(labels), RingExpr::dup(base.origin(), as_vector(gens)));

    ElementSet emb(n);
    for (auto i : im) emb.insert(enc(base.zero(), i));
    auto embedded = IdealSet::adopt(ring, std::move(emb));
    return {ring, r, std::move(ideal), std::move(embedded), std::move(rank)};
}

IdealSet make_bowtie_ideal(const Duplication& d, const IdealSet& j) {
    if (j.ring() != d.base)
        throw RingMismatchError("J is not an ideal of the duplication's base ring");
    ElementSet s(d.ring->order());
    for (auto x : j.members())
        for (auto i : d.ideal.members()) s.insert(d.encode(x, i));
    return IdealSet::adopt(d.ring, std::move(s));
}

}  // namespace amalgam
