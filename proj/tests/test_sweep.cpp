#include "doctest.h"

#include <sstream>

#include "amalgam/corpus.hpp"
#include "amalgam/sweep.hpp"

using namespace amalgam;

TEST_CASE("corpus shape") {
    CorpusConfig cfg;
    cfg.max_order = 16;
    cfg.base_order = 6;
    cfg.max_depth = 1;
    const auto c = generate_corpus(cfg);
    std::size_t depth0 = 0;
    for (const auto& r : c) {
        CHECK(r.ring->order() <= 16);
        CHECK(r.ideals.size() > 0);
        if (r.depth == 0) ++depth0;
    }
    CHECK(depth0 == 6);
    CHECK(c.front().expr->to_string() == "zmod(1)");
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b)
            CHECK_FALSE(c[a].ring->same_tables(*c[b].ring));
}

TEST_CASE("corpus is deterministic") {
    CorpusConfig cfg;
    cfg.max_order = 24;
    cfg.base_order = 8;
    const auto a = generate_corpus(cfg);
    const auto b = generate_corpus(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(*a[k].expr == *b[k].expr);
}

TEST_CASE("ordered pool emits in index order") {
    std::vector<std::size_t> seen;
    run_ordered(
        200, 4, [](std::size_t i) { return std::to_string(i); },
        [&](std::size_t i, std::string&& s) {
            CHECK(s == std::to_string(i));
            seen.push_back(i);
        });
    REQUIRE(seen.size() == 200);
    for (std::size_t i = 0; i < 200; ++i) CHECK(seen[i] == i);
}

TEST_CASE("sweep output does not depend on worker count") {
    SweepConfig cfg;
    cfg.max_order = 32;
    cfg.base_order = 10;
    cfg.include_full_ideal = true;
    std::ostringstream one, four;
    cfg.worker_count = 1;
    const auto s1 = run_sweep(cfg, one);
    cfg.worker_count = 4;
    const auto s4 = run_sweep(cfg, four);
    CHECK(one.str() == four.str());
    CHECK(s1.failures() == 0);
    CHECK(s1.pairs == s4.pairs);
    CHECK(s1.full_ideal_pairs == s1.rings - s1.rings_skipped);
    CHECK(s1.pairs == s1.pairs_zero_ideal + s1.pairs_nonzero_ideal);
    CHECK(s1.local_pairs > 0);
}

TEST_CASE("structured sweep emits one JSON object per line") {
    SweepConfig cfg;
    cfg.max_order = 8;
    cfg.base_order = 4;
    cfg.format = Format::Structured;
    std::ostringstream out;
    const auto s = run_sweep(cfg, out);
    std::istringstream in(out.str());
    std::string line, last;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        CHECK(line.front() == '{');
        CHECK(line.back() == '}');
        last = line;
        ++n;
    }
    CHECK(n == s.rings + s.pairs + 1);
    CHECK(last.find("\"kind\":\"summary\"") != std::string::npos);
}

TEST_CASE("sweep over the order-1 ring only") {
    SweepConfig cfg;
    cfg.max_order = 1;
    std::ostringstream out;
    const auto s = run_sweep(cfg, out);
    CHECK(s.rings == 1);
    CHECK(s.pairs == 0);
    CHECK(s.failures() == 0);
}

TEST_CASE("excluding the zero ideal") {
    SweepConfig cfg;
    cfg.max_order = 12;
    cfg.base_order = 6;
    std::ostringstream a, b;
    const auto with = run_sweep(cfg, a);
    cfg.include_zero_ideal = false;
    const auto without = run_sweep(cfg, b);
    CHECK(without.pairs_zero_ideal == 0);
    CHECK(without.pairs == with.pairs_nonzero_ideal);
}
