#include "doctest.h"

#include "amalgam/construct.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/ring_table.hpp"

using namespace amalgam;

namespace {

RingPtr with_mul_entry(const RingTable& r, Element x, Element y, Element v) {
    auto mul = r.mul_table();
    mul[x * r.order() + y] = v;
    return RingTable::from_tables(r.order(), r.add_table(), std::move(mul), r.neg_table(), r.zero(),
                                  r.one(), r.labels(), r.origin());
}

}  // namespace

TEST_CASE("zmod basics") {
    auto z1 = make_zmod(1);
    CHECK(z1->order() == 1);
    CHECK(z1->zero() == z1->one());

    auto z6 = make_zmod(6);
    CHECK(z6->mul(2, 3) == 0);
    CHECK(z6->label(5) == "5");

    auto z12 = make_zmod(12);
    CHECK(z12->mul(4, 4) == 4);
    CHECK(z12->neg(5) == 7);

    CHECK_THROWS_AS(make_zmod(0), Error);
}

TEST_CASE("zmod passes the ring laws up to 64") {
    for (unsigned n = 1; n <= 64; ++n) {
        const auto v = verify_ring_laws(*make_zmod(n));
        CHECK_MESSAGE(v.ok, "zmod(" << n << ") failed " << v.law);
        CHECK(v.exhaustive);
    }
}

TEST_CASE("product layout and identity") {
    auto p = make_product(make_zmod(2), make_zmod(3));
    CHECK(p->order() == 6);
    CHECK(p->label(p->one()) == "(1,1)");
    CHECK(p->one() == 1 * 3 + 1);

    auto q = make_product(make_zmod(2), make_zmod(2));
    // (1,0)·(0,1) = (0,0)
    CHECK(q->mul(2, 1) == q->zero());

    auto unit = make_product(make_zmod(1), make_zmod(5));
    CHECK(unit->order() == 5);
    CHECK(verify_ring_laws(*unit).ok);
}

TEST_CASE("construction cap") {
    Limits tight;
    tight.max_order = 100;
    CHECK_THROWS_AS(make_product(make_zmod(10), make_zmod(11), tight), CapacityError);
    CHECK_THROWS_AS(make_zmod(101, tight), CapacityError);
}

TEST_CASE("fault injection is caught with a witness") {
    auto z6 = make_zmod(6);
    auto bad = with_mul_entry(*z6, 2, 3, 1);
    const auto v = verify_ring_laws(*bad);
    REQUIRE_FALSE(v.ok);
    CHECK(v.law == "multiplicative commutativity");
    CHECK(v.x == 2);
    CHECK(v.y == 3);

    // Symmetric corruption survives commutativity and must be caught by a cubic law.
    auto mul = z6->mul_table();
    mul[2 * 6 + 3] = 1;
    mul[3 * 6 + 2] = 1;
    auto bad2 = RingTable::from_tables(6, z6->add_table(), mul, z6->neg_table(), 0, 1, z6->labels(),
                                       z6->origin());
    const auto v2 = verify_ring_laws(*bad2);
    REQUIRE_FALSE(v2.ok);
    CHECK((v2.law == "multiplicative associativity" || v2.law == "distributivity"));
    const auto& r = *bad2;
    if (v2.law == "distributivity")
        CHECK(r.mul(v2.x, r.add(v2.y, v2.z)) != r.add(r.mul(v2.x, v2.y), r.mul(v2.x, v2.z)));
    else
        CHECK(r.mul(r.mul(v2.x, v2.y), v2.z) != r.mul(v2.x, r.mul(v2.y, v2.z)));
}

TEST_CASE("sampled law check above the exhaustive cap") {
    const Element g[] = {2};
    auto d = make_duplication(make_zmod(20), g);  // order 200
    const auto v = verify_ring_laws(*d.ring);
    CHECK(v.ok);
    CHECK_FALSE(v.exhaustive);
}
