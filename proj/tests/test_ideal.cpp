#include "doctest.h"

#include <algorithm>

#include "amalgam/construct.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/ideal.hpp"
#include "oracle.hpp"

using namespace amalgam;

namespace {

std::vector<Element> v(std::initializer_list<Element> xs) { return xs; }

}  // namespace

TEST_CASE("ideal generation") {
    auto z12 = make_zmod(12);
    const Element four[] = {4};
    CHECK(ideal_from_generators(z12, four).members() == v({0, 4, 8}));
    CHECK(ideal_from_generators(z12, {}).members() == v({0}));
    const Element one[] = {1};
    CHECK(ideal_from_generators(z12, one).is_whole());

    const Element two_three[] = {4, 6};
    CHECK(ideal_from_generators(z12, two_three).members() == v({0, 2, 4, 6, 8, 10}));
    CHECK_THROWS_AS(ideal_from_generators(z12, std::vector<Element>{12}), Error);
}

TEST_CASE("from_members rejects non-ideals") {
    auto z12 = make_zmod(12);
    CHECK_THROWS_AS(IdealSet::from_members(z12, v({0, 4})), Error);
    CHECK_THROWS_AS(IdealSet::from_members(z12, v({4, 8})), Error);
    CHECK(IdealSet::from_members(z12, v({0, 6})).size() == 2);
}

TEST_CASE("ideal enumeration in Z/12") {
    auto z12 = make_zmod(12);
    const auto ideals = enumerate_ideals(z12);
    REQUIRE(ideals.size() == 6);
    // generated by 0, 6, 4, 3, 2, 1 in canonical (size, lex) order
    CHECK(ideals[0].members() == v({0}));
    CHECK(ideals[1].members() == v({0, 6}));
    CHECK(ideals[2].members() == v({0, 4, 8}));
    CHECK(ideals[3].members() == v({0, 3, 6, 9}));
    CHECK(ideals[4].members() == v({0, 2, 4, 6, 8, 10}));
    CHECK(ideals[5].is_whole());
}

TEST_CASE("ideal counts match divisor counts and the naive oracle") {
    for (unsigned n = 1; n <= 40; ++n) {
        const auto lib = enumerate_ideals(make_zmod(n)).size();
        CHECK(lib == oracle::divisor_count(n));
    }
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const auto ideals = enumerate_ideals(make_zmod(p));
        REQUIRE(ideals.size() == 2);
        CHECK(ideals[0].is_zero());
        CHECK(ideals[1].is_whole());
    }
    CHECK(enumerate_ideals(make_zmod(1)).size() == 1);

    struct Case {
        unsigned n, g;
    };
    for (auto c : {Case{4, 2}, Case{8, 4}, Case{12, 4}, Case{12, 6}, Case{6, 3}, Case{9, 3}}) {
        const Element gen[] = {static_cast<Element>(c.g)};
        auto d = make_duplication(make_zmod(c.n), gen);
        const auto expect = oracle::all_ideals(oracle::duplication(oracle::zmod(c.n), oracle::zmod_ideal(c.n, c.g)));
        CHECK(enumerate_ideals(d.ring).size() == expect.size());
    }
}

TEST_CASE("ideal capacity error") {
    Limits tight;
    tight.max_ideals = 4;
    CHECK_THROWS_AS(enumerate_ideals(make_zmod(12), tight), CapacityError);
}

TEST_CASE("annihilators") {
    auto z12 = make_zmod(12);
    const Element four[] = {4};
    CHECK(annihilator(z12, four).members() == v({0, 3, 6, 9}));
    const Element zero[] = {0};
    CHECK(annihilator(z12, zero).is_whole());
    const Element one[] = {1};
    CHECK(annihilator(z12, one).is_zero());
}

TEST_CASE("sum and intersection") {
    auto z12 = make_zmod(12);
    auto a = IdealSet::from_members(z12, v({0, 4, 8}));
    auto b = IdealSet::from_members(z12, v({0, 6}));
    CHECK(ideal_sum(a, b).members() == v({0, 2, 4, 6, 8, 10}));
    auto zero = IdealSet::from_members(z12, v({0}));
    CHECK(ideal_intersection(a, zero).is_zero());
    auto whole = ideal_from_generators(z12, std::vector<Element>{1});
    CHECK(ideal_sum(a, whole).is_whole());

    auto other = make_zmod(12);
    auto c = IdealSet::from_members(other, v({0, 6}));
    CHECK_THROWS_AS(ideal_sum(a, c), RingMismatchError);
    CHECK_THROWS_AS(ideal_intersection(a, c), RingMismatchError);
}

TEST_CASE("locality") {
    auto z4 = is_local(make_zmod(4));
    CHECK(z4.local);
    REQUIRE(z4.maximal_ideal);
    CHECK(z4.maximal_ideal->members() == v({0, 2}));

    CHECK_FALSE(is_local(make_zmod(6)).local);
    CHECK_FALSE(is_local(make_zmod(1)).local);
    for (unsigned q : {2u, 4u, 8u, 16u, 3u, 9u, 27u, 5u, 25u, 7u, 49u})
        CHECK_MESSAGE(is_local(make_zmod(q)).local, "zmod(" << q << ")");

    for (unsigned a = 2; a <= 6; ++a)
        for (unsigned b = 2; b <= 6; ++b)
            CHECK_FALSE(is_local(make_product(make_zmod(a), make_zmod(b))).local);
}

TEST_CASE("bowtie ideal J⋈I") {
    const Element two[] = {2};
    auto base = make_zmod(4);
    auto d = make_duplication(base, two);
    auto zero = ideal_from_generators(base, {});
    auto jz = make_bowtie_ideal(d, zero);
    CHECK(jz.size() == 2);
    CHECK(jz == d.embedded);

    auto whole = ideal_from_generators(base, std::vector<Element>{1});
    CHECK(make_bowtie_ideal(d, whole).is_whole());

    auto j = ideal_from_generators(base, two);
    auto jj = make_bowtie_ideal(d, j);
    CHECK(jj.size() == 4);
    CHECK(is_ideal(*d.ring, jj.bits()));

    auto foreign = ideal_from_generators(make_zmod(4), two);
    CHECK_THROWS_AS(make_bowtie_ideal(d, foreign), RingMismatchError);
}

TEST_CASE("lattice structure of enumerated ideals") {
    const Element g[] = {2};
    for (auto r : {make_zmod(12), make_zmod(30), make_duplication(make_zmod(8), g).ring,
                   make_product(make_zmod(4), make_zmod(6))}) {
        const auto ideals = enumerate_ideals(r);
        for (std::size_t a = 0; a < ideals.size(); ++a) {
            for (std::size_t b = a + 1; b < ideals.size(); ++b) {
                CHECK(ideals[a] != ideals[b]);
                CHECK(canonical_less(ideals[a], ideals[b]));
                const auto s = ideal_sum(ideals[a], ideals[b]);
                const auto i = ideal_intersection(ideals[a], ideals[b]);
                CHECK(std::find(ideals.begin(), ideals.end(), s) != ideals.end());
                CHECK(std::find(ideals.begin(), ideals.end(), i) != ideals.end());
            }
        }
        CHECK(ideals.front().is_zero());
        CHECK(ideals.back().is_whole());
    }
}
