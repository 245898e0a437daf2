#include "amalgam/corpus.hpp"

#include <unordered_map>

#include "amalgam/construct.hpp"
#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

std::uint64_t table_hash(const RingTable& r) {
    std::uint64_t h = 0xcbf29ce484222325ull ^ r.order();
    auto feed = [&h](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ull;
    };
    for (auto v : r.add_table()) feed(v);
    for (auto v : r.mul_table()) feed(v);
    feed(r.one());
    return h;
}

class Builder {
public:
    explicit Builder(const CorpusConfig& cfg) : cfg_(cfg) {}

    void offer(ExprPtr expr, RingPtr ring, int depth) {
        if (ring->order() > cfg_.max_order) return;
        const auto h = table_hash(*ring);
        auto [lo, hi] = seen_.equal_range(h);
        for (auto it = lo; it != hi; ++it)
            if (out_[it->second].ring->same_tables(*ring)) return;
        seen_.emplace(h, out_.size());
        CorpusRing c{std::move(expr), std::move(ring), depth, {}, std::nullopt};
        try {
            c.ideals = enumerate_ideals(c.ring, cfg_.limits);
        } catch (const CapacityError& e) {
            c.capacity_error = e.what();
        }
        out_.push_back(std::move(c));
    }

    std::vector<CorpusRing>& rings() { return out_; }

private:
    const CorpusConfig& cfg_;
    std::unordered_multimap<std::uint64_t, std::size_t> seen_;
    std::vector<CorpusRing> out_;
};

}  // namespace

std::vector<CorpusRing> generate_corpus(const CorpusConfig& cfg) {
    const std::size_t base = cfg.base_order ? std::min(cfg.base_order, cfg.max_order) : cfg.max_order;
    Builder b(cfg);

    for (unsigned n = 1; n <= base; ++n) {
        auto r = make_zmod(n, cfg.limits);
        b.offer(r->origin(), r, 0);
    }
    for (unsigned x = 2; x <= base; ++x)
        for (unsigned y = x; std::size_t{x} * y <= base; ++y) {
            auto r = make_product(make_zmod(x, cfg.limits), make_zmod(y, cfg.limits), cfg.limits);
            b.offer(r->origin(), r, 1);
        }

    for (int d = 1; d <= cfg.max_depth; ++d) {
        const std::size_t count = b.rings().size();
        for (std::size_t k = 0; k < count; ++k) {
            if (b.rings()[k].depth != d - 1) continue;
            // Copy: offer() may reallocate the vector.
            const RingPtr parent = b.rings()[k].ring;
            const std::vector<IdealSet> ideals = b.rings()[k].ideals;
            for (const auto& i : ideals) {
                if (i.is_zero()) continue;
                const auto gens = greedy_generators(i);
                if (!i.is_whole()) {
                    auto q = make_quotient(parent, gens, cfg.limits);
                    b.offer(q.ring->origin(), q.ring, d);
                }
                if (parent->order() * i.size() <= cfg.max_order) {
                    auto dup = make_duplication(parent, gens, cfg.limits);
                    b.offer(dup.ring->origin(), dup.ring, d);
                }
            }
        }
    }
    return std::move(b.rings());
}

}  // namespace amalgam
