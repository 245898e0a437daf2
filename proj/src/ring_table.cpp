#include "amalgam/ring_table.hpp"

#include <random>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

void check_order(std::size_t order, const Limits& limits) {
    if (order == 0) throw Error("ring order must be positive");
    if (order > limits.max_order || order > 65535)
        throw CapacityError("ring of order " + std::to_string(order) + " exceeds the order cap " +
                            std::to_string(limits.max_order));
}

}  // namespace

RingPtr RingTable::from_tables(std::size_t order, std::vector<Element> add, std::vector<Element> mul,
                               std::vector<Element> neg, Element zero, Element one,
                               std::vector<std::string> labels, ExprPtr origin) {
    if (add.size() != order * order || mul.size() != order * order || neg.size() != order ||
        labels.size() != order)
        throw Error("operation table sizes do not match the ring order");
    std::shared_ptr<RingTable> r(new RingTable());
    r->order_ = order;
    r->add_ = std::move(add);
    r->mul_ = std::move(mul);
    r->neg_ = std::move(neg);
    r->zero_ = zero;
    r->one_ = one;
    r->labels_ = std::move(labels);
    r->origin_ = std::move(origin);
    return r;
}

bool RingTable::is_unit(Element x) const noexcept {
    for (auto v : mul_row(x))
        if (v == one_) return true;
    return false;
}

bool RingTable::same_tables(const RingTable& other) const noexcept {
    return order_ == other.order_ && zero_ == other.zero_ && one_ == other.one_ &&
           add_ == other.add_ && mul_ == other.mul_;
}

RingPtr make_zmod(unsigned n, const Limits& limits) {
    if (n == 0) throw Error("zmod(0) rejected: modulus must be at least 1");
    check_order(n, limits);
    std::vector<Element> add(std::size_t{n} * n), mul(std::size_t{n} * n), neg(n);
    std::vector<std::string> labels(n);
    for (unsigned x = 0; x < n; ++x) {
        neg[x] = static_cast<Element>((n - x) % n);
        labels[x] = std::to_string(x);
        for (unsigned y = 0; y < n; ++y) {
            add[x * n + y] = static_cast<Element>((x + y) % n);
            mul[x * n + y] = static_cast<Element>((x * y) % n);
        }
    }
    return RingTable::from_tables(n, std::move(add), std::move(mul), std::move(neg), 0,
                                  static_cast<Element>(1 % n), std::move(labels),
                                  RingExpr::zmod(n));
}

RingPtr make_product(const RingPtr& a, const RingPtr& b, const Limits& limits) {
    const std::size_t na = a->order(), nb = b->order(), n = na * nb;
    check_order(n, limits);
    auto idx = [nb](std::size_t x, std::size_t y) { return static_cast<Element>(x * nb + y); };
    std::vector<Element> add(n * n), mul(n * n), neg(n);
    std::vector<std::string> labels(n);
    for (std::size_t p = 0; p < n; ++p) {
        const auto x1 = static_cast<Element>(p / nb), y1 = static_cast<Element>(p % nb);
        neg[p] = idx(a->neg(x1), b->neg(y1));
        labels[p] = "(" + a->label(x1) + "," + b->label(y1) + ")";
        for (std::size_t q = 0; q < n; ++q) {
            const auto x2 = static_cast<Element>(q / nb), y2 = static_cast<Element>(q % nb);
            add[p * n + q] = idx(a->add(x1, x2), b->add(y1, y2));
            mul[p * n + q] = idx(a->mul(x1, x2), b->mul(y1, y2));
        }
    }
    return RingTable::from_tables(n, std::move(add), std::move(mul), std::move(neg),
                                  idx(a->zero(), b->zero()), idx(a->one(), b->one()),
                                  std::move(labels), RingExpr::prod(a->origin(), b->origin()));
}

LawVerdict verify_ring_laws(const RingTable& r, const Limits& limits) {
    const std::size_t n = r.order();
    LawVerdict v;
    auto fail = [&v](const char* law, std::size_t x, std::size_t y, std::size_t z) {
        v.ok = false;
        v.law = law;
        v.x = static_cast<Element>(x);
        v.y = static_cast<Element>(y);
        v.z = static_cast<Element>(z);
        return v;
    };

    if (r.zero() >= n || r.one() >= n) return fail("constants in range", r.zero(), r.one(), 0);
    for (std::size_t x = 0; x < n; ++x) {
        if (r.neg(static_cast<Element>(x)) >= n) return fail("closure", x, 0, 0);
        for (std::size_t y = 0; y < n; ++y)
            if (r.add(static_cast<Element>(x), static_cast<Element>(y)) >= n ||
                r.mul(static_cast<Element>(x), static_cast<Element>(y)) >= n)
                return fail("closure", x, y, 0);
    }
    if (n > 1 && r.zero() == r.one()) return fail("zero != one", r.zero(), r.one(), 0);

    for (std::size_t i = 0; i < n; ++i) {
        const auto x = static_cast<Element>(i);
        if (r.add(x, r.zero()) != x) return fail("additive identity", x, r.zero(), 0);
        if (r.add(x, r.neg(x)) != r.zero()) return fail("additive inverse", x, r.neg(x), 0);
        if (r.mul(x, r.one()) != x) return fail("multiplicative identity", x, r.one(), 0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto y = static_cast<Element>(j);
            if (r.add(x, y) != r.add(y, x)) return fail("additive commutativity", x, y, 0);
            if (r.mul(x, y) != r.mul(y, x)) return fail("multiplicative commutativity", x, y, 0);
        }
    }

    auto cubic = [&](Element x, Element y, Element z) -> bool {
        if (r.add(r.add(x, y), z) != r.add(x, r.add(y, z))) {
            fail("additive associativity", x, y, z);
            return false;
        }
        if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z))) {
            fail("multiplicative associativity", x, y, z);
            return false;
        }
        if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z))) {
            fail("distributivity", x, y, z);
            return false;
        }
        return true;
    };

    if (n <= limits.law_check_order) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    if (!cubic(static_cast<Element>(x), static_cast<Element>(y),
                               static_cast<Element>(z)))
                        return v;
        return v;
    }

    v.exhaustive = false;
    std::mt19937_64 rng(0x5eed5eedull);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < limits.law_samples; ++s) {
        const auto x = static_cast<Element>(pick(rng));
        const auto y = static_cast<Element>(pick(rng));
        const auto z = static_cast<Element>(pick(rng));
        if (!cubic(x, y, z)) return v;
    }
    return v;
}

}  // namespace amalgam
