#include "amalgam/sweep.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <ostream>
#include <thread>

#include "amalgam/construct.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/qf.hpp"

namespace amalgam {

void run_ordered(std::size_t count, unsigned workers,
                 const std::function<std::string(std::size_t)>& job,
                 const std::function<void(std::size_t, std::string&&)>& emit) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::optional<std::string>> slots(count);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= count) return;
            std::string s;
            try {
                s = job(k);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
                next = count;
            }
            {
                std::lock_guard lock(mu);
                slots[k] = std::move(s);
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);

    for (std::size_t k = 0; k < count; ++k) {
        std::string s;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return slots[k].has_value() || failure; });
            if (failure) break;
            s = std::move(*slots[k]);
            slots[k].reset();
        }
        emit(k, std::move(s));
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

struct Task {
    std::size_t ring;
    std::optional<std::size_t> ideal;
};

struct TaskStats {
    bool ring_task = false;
    bool skipped = false;
    bool law_failure = false;
    bool law_sampled = false;
    bool pair = false;
    bool zero_ideal = false;
    bool disagreement = false;
    bool splitting_mismatch = false;
    bool local_pair = false;
    bool local_violation = false;
    bool full_pair = false;
    bool full_violation = false;
    std::size_t uncertified = 0;
    std::optional<std::string> counterexample;
    std::size_t counterexample_order = 0;
};

std::size_t uncertified(const QfVerdict& v) { return v.certified ? 0 : 1; }

}  // namespace

SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& out) {
    CorpusConfig cc;
    cc.max_order = cfg.max_order;
    cc.base_order = cfg.base_order;
    cc.max_depth = cfg.max_depth;
    cc.limits = cfg.limits;
    const auto corpus = generate_corpus(cc);

    std::vector<Task> tasks;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        tasks.push_back({k, std::nullopt});
        for (std::size_t i = 0; i < corpus[k].ideals.size(); ++i) {
            const auto& I = corpus[k].ideals[i];
            if (I.is_whole() && !cfg.include_full_ideal) continue;
            if (I.is_zero() && !I.is_whole() && !cfg.include_zero_ideal) continue;
            tasks.push_back({k, i});
        }
    }
    std::vector<TaskStats> stats(tasks.size());

    auto job = [&](std::size_t t) -> std::string {
        const auto& task = tasks[t];
        const auto& c = corpus[task.ring];
        TaskStats& st = stats[t];
        Record rec;

        if (!task.ideal) {
            st.ring_task = true;
            rec["kind"] = "ring";
            rec["ring"] = task.ring;
            rec["expr"] = c.expr->to_string();
            rec["order"] = c.ring->order();
            rec["depth"] = c.depth;
            const auto law = verify_ring_laws(*c.ring, cfg.limits);
            st.law_failure = !law.ok;
            if (!law.ok) {
                st.counterexample = c.expr->to_string();
                st.counterexample_order = c.ring->order();
            }
            st.law_sampled = !law.exhaustive;
            rec["laws"] = law.ok ? "ok" : law.law;
            rec["law_check"] = law.exhaustive ? "exhaustive" : "sampled";
            if (c.capacity_error) {
                st.skipped = true;
                rec["skipped"] = "capacity";
                return render(rec, cfg.format, true);
            }
            const auto qf = is_quasi_frobenius(c.ring, cfg.limits, QfMethod::Auto);
            st.uncertified = uncertified(qf);
            rec["local"] = is_local(c.ring).local;
            rec["qf"] = qf.qf;
            rec["qf_method"] = to_string(qf.method);
            rec["ideal_count"] = c.ideals.size();
            rec["idempotents"] = idempotents(*c.ring).size();
            return render(rec, cfg.format, true);
        }

        const auto& I = c.ideals[*task.ideal];
        const auto gens = greedy_generators(I);
        const std::string dup_expr = RingExpr::dup(c.expr, gens)->to_string();
        rec["kind"] = "pair";
        rec["ring"] = task.ring;
        rec["expr"] = dup_expr;
        rec["ideal_size"] = I.size();
        rec["ideal_class"] = I.is_whole() ? "full" : (I.is_zero() ? "zero" : "nonzero");

        auto flag = [&](const char* why) {
            if (!st.counterexample) {
                st.counterexample = dup_expr;
                st.counterexample_order = c.ring->order() * I.size();
            }
            rec["failure"] = why;
        };

        try {
            if (I.is_whole()) {
                st.full_pair = true;
                const auto dup = make_duplication(c.ring, gens, cfg.limits);
                const auto lhs = is_quasi_frobenius(dup.ring, cfg.limits, QfMethod::Auto);
                const auto base = is_quasi_frobenius(c.ring, cfg.limits, QfMethod::Auto);
                st.uncertified = uncertified(lhs) + uncertified(base);
                rec["dup_qf"] = lhs.qf;
                rec["ring_qf"] = base.qf;
                // R⋈R = R×R: QF of the duplication must descend to R and, by
                // the product rule, coincide with it.
                const bool ok = lhs.qf == base.qf;
                rec["descends"] = ok;
                if (!ok) {
                    st.full_violation = true;
                    flag("full-ideal descent");
                }
                return render(rec, cfg.format, true);
            }

            st.pair = true;
            st.zero_ideal = I.is_zero();
            const auto v = check_main_theorem(I, cfg.limits, QfMethod::Auto);
            st.uncertified = v.certified ? 0 : 1;
            rec["lhs_dup_qf"] = v.lhs;
            rec["rhs_ring_qf"] = v.rhs_qf;
            if (v.rhs_idem)
                rec["idempotent"] = c.ring->label(*v.rhs_idem);
            else
                rec["idempotent"] = nullptr;
            rec["agrees"] = v.agrees;
            if (!v.agrees) {
                st.disagreement = true;
                flag("theorem");
            }

            const auto w = splits_epsilon(I);
            if (w)
                rec["split_witness"] = c.ring->label(*w);
            else
                rec["split_witness"] = nullptr;
            const bool split_ok = w.has_value() == v.rhs_idem.has_value();
            rec["split_agrees"] = split_ok;
            if (!split_ok) {
                st.splitting_mismatch = true;
                flag("splitting");
            }

            if (!I.is_zero() && is_local(c.ring).local) {
                st.local_pair = true;
                rec["local_obstruction"] = !v.lhs;
                if (v.lhs) {
                    st.local_violation = true;
                    flag("local obstruction");
                }
            }
        } catch (const CapacityError& e) {
            st.skipped = true;
            rec["skipped"] = "capacity";
        }
        return render(rec, cfg.format, true);
    };

    run_ordered(tasks.size(), cfg.worker_count, job,
                [&](std::size_t, std::string&& line) { out << line << '\n'; });

    SweepSummary s;
    for (const auto& st : stats) {
        if (st.ring_task) {
            ++s.rings;
            s.rings_skipped += st.skipped;
            s.law_failures += st.law_failure;
            s.law_sampled += st.law_sampled;
        } else {
            s.pairs_skipped += st.skipped;
            if (st.pair && !st.skipped) {
                ++s.pairs;
                (st.zero_ideal ? s.pairs_zero_ideal : s.pairs_nonzero_ideal) += 1;
            }
            s.theorem_disagreements += st.disagreement;
            s.theorem_disagreements_zero_ideal += st.disagreement && st.zero_ideal;
            s.splitting_mismatches += st.splitting_mismatch;
            s.local_pairs += st.local_pair;
            s.local_violations += st.local_violation;
            s.full_ideal_pairs += st.full_pair && !st.skipped;
            s.full_ideal_violations += st.full_violation;
        }
        s.uncertified_qf += st.uncertified;
        if (st.counterexample &&
            (!s.minimal_counterexample || st.counterexample_order < s.minimal_counterexample_order)) {
            s.minimal_counterexample = st.counterexample;
            s.minimal_counterexample_order = st.counterexample_order;
        }
    }

    Record sum;
    sum["kind"] = "summary";
    sum["rings"] = s.rings;
    sum["rings_skipped"] = s.rings_skipped;
    sum["law_failures"] = s.law_failures;
    sum["law_sampled"] = s.law_sampled;
    sum["pairs"] = s.pairs;
    sum["pairs_zero_ideal"] = s.pairs_zero_ideal;
    sum["pairs_nonzero_ideal"] = s.pairs_nonzero_ideal;
    sum["pairs_skipped"] = s.pairs_skipped;
    sum["theorem_disagreements"] = s.theorem_disagreements;
    sum["theorem_disagreements_zero_ideal"] = s.theorem_disagreements_zero_ideal;
    sum["splitting_mismatches"] = s.splitting_mismatches;
    sum["local_pairs"] = s.local_pairs;
    sum["local_violations"] = s.local_violations;
    sum["full_ideal_pairs"] = s.full_ideal_pairs;
    sum["full_ideal_violations"] = s.full_ideal_violations;
    sum["uncertified_qf"] = s.uncertified_qf;
    if (s.minimal_counterexample)
        sum["minimal_counterexample"] = *s.minimal_counterexample;
    else
        sum["minimal_counterexample"] = nullptr;
    out << render(sum, cfg.format, true) << '\n';
    return s;
}

}  // namespace amalgam
