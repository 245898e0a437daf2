#include "doctest.h"

#include "amalgam/construct.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/iso_maps.hpp"
#include "amalgam/qf.hpp"

using namespace amalgam;

namespace {

Duplication dup(unsigned n, std::vector<Element> gens) { return make_duplication(make_zmod(n), gens); }

IdealSet ideal(const RingPtr& r, std::vector<Element> gens) { return ideal_from_generators(r, gens); }

}  // namespace

TEST_CASE("zeta") {
    auto small = map_zeta(dup(2, {}), dup(2, {}));
    CHECK(small.domain->order() == 4);
    CHECK(small.codomain->order() == 4);
    CHECK(verify_ring_map(small, true, true).ok);

    auto z72 = map_zeta(dup(4, {2}), dup(3, {1}));
    CHECK(z72.domain->order() == 72);
    CHECK(z72.codomain->order() == 72);
    auto back = compose(inverse(z72), z72);
    for (Element x = 0; x < 72; ++x) CHECK(back(x) == x);

    auto z = map_zeta(dup(4, {2}), dup(3, {0}));
    CHECK(z.domain->order() == 8 * 3);
    CHECK(z.codomain->order() == 24);
    CHECK(verify_ring_map(z, true, true).ok);

    auto big = map_zeta(dup(12, {4}), dup(2, {1}));
    CHECK(big.domain->order() == 36 * 4);
    CHECK(verify_ring_map(big, true, true).ok);

    auto w = map_zeta(dup(6, {2}), dup(4, {2}));
    CHECK(w.domain->order() == 18 * 8);
    CHECK(w.codomain->order() == 144);

    auto trivial = map_zeta(dup(1, {}), dup(5, {1}));
    CHECK(trivial.domain->order() == 25);
    CHECK(verify_ring_map(trivial, true, true).ok);
}

TEST_CASE("a corrupted map is rejected") {
    auto z = map_zeta(dup(4, {2}), dup(3, {0}));
    std::swap(z.table[1], z.table[2]);
    const auto v = verify_ring_map(z, true, true);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.property.empty());

    auto id = identity_map(make_zmod(6));
    id.table[5] = 0;
    CHECK_FALSE(verify_ring_map(id, false, false).ok);
    id.table.pop_back();
    CHECK(verify_ring_map(id, false, false).property == "table size");
}

TEST_CASE("psi and phi on complementary idempotent ideals") {
    auto r = make_zmod(12);
    auto i = ideal(r, {4});
    auto j = ideal(r, {9});
    CHECK(comaximal_witness(i, j) == std::pair<Element, Element>{4, 9});

    auto psi = map_psi(r, i, j);
    CHECK(psi.domain->order() == 36);
    CHECK(psi.codomain->order() == 4 * 3 * 3);
    CHECK(verify_ring_map(psi, true, true).ok);

    auto phi = map_phi(r, i, j);
    CHECK(phi.codomain->order() == 12);
    CHECK(verify_ring_map(phi, true, true).ok);

    CHECK(is_quasi_frobenius(psi.domain).qf == is_quasi_frobenius(psi.codomain).qf);
}

TEST_CASE("psi hypotheses") {
    auto r = make_zmod(12);
    CHECK_THROWS_AS(map_psi(r, ideal(r, {2}), ideal(r, {3})), HypothesisError);
    CHECK_THROWS_AS(map_psi(r, ideal(r, {4}), ideal(r, {6})), HypothesisError);
    CHECK_THROWS_AS(map_phi(r, ideal(r, {4}), ideal(r, {8})), HypothesisError);
    auto other = make_zmod(12);
    CHECK_THROWS_AS(map_phi(r, ideal(r, {4}), ideal(other, {9})), RingMismatchError);
}

TEST_CASE("psi degenerate split I = 0, J = R") {
    auto r = make_zmod(6);
    auto psi = map_psi(r, ideal(r, {}), ideal(r, {1}));
    CHECK(psi.domain->order() == 6);
    CHECK(psi.codomain->order() == 6);
    CHECK(verify_ring_map(psi, true, true).ok);
}

TEST_CASE("epsilon and iota") {
    auto d = dup(12, {4});
    auto eps = map_epsilon(d);
    CHECK(verify_ring_map(eps, true, false).ok);
    CHECK(kernel(eps) == map_iota(d));
    CHECK(kernel(eps).size() == 3);
    for (Element x = 0; x < 12; ++x) CHECK(eps(d.encode(x, 0)) == x);
}

TEST_CASE("pi splittings") {
    auto r = make_zmod(12);
    auto s0 = map_pi(r, 0);
    CHECK(s0.pi.unital);
    CHECK(splits_projection(s0));
    CHECK(is_module_linear(s0));
    CHECK(verify_ring_map(s0.pi, true, false).ok);

    auto s4 = map_pi(r, 4);
    CHECK_FALSE(s4.pi.unital);
    const auto p1 = s4.pi(1);
    CHECK(s4.dup.first(p1) == 1);
    CHECK(s4.dup.second(p1) == 9);
    CHECK(splits_projection(s4));
    CHECK(is_module_linear(s4));
    CHECK(verify_ring_map(s4.pi, false, false).ok);
    const auto v = verify_ring_map(s4.pi, true, false);
    CHECK_FALSE(v.ok);
    CHECK(v.property == "unital");

    auto s1 = map_pi(r, 1);
    CHECK(s1.dup.ring->order() == 144);
    CHECK(splits_projection(s1));
    CHECK(s1.dup.second(s1.pi(7)) == 0);

    CHECK_THROWS_AS(map_pi(r, 2), HypothesisError);
}

TEST_CASE("pi agrees with splitting witness") {
    auto r = make_zmod(12);
    for (auto e : idempotents(*r)) {
        auto s = map_pi(r, e);
        auto j = splits_epsilon(s.dup.ideal);
        REQUIRE(j.has_value());
        const Element j2 = r->mul(*j, *j);
        CHECK(r->mul(j2, j2) == j2);
        CHECK(ideal(r, {j2}) == s.dup.ideal);
    }
}
