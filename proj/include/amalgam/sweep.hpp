#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/corpus.hpp"
#include "amalgam/report.hpp"

namespace amalgam {

struct SweepConfig {
    std::size_t max_order = 64;
    std::size_t base_order = 0;  ///< 0: same as max_order
    int max_depth = 2;
    bool include_zero_ideal = true;
    bool include_full_ideal = false;
    unsigned worker_count = 1;  ///< 0: hardware concurrency
    Format format = Format::Text;
    Limits limits{};
};

struct SweepSummary {
    std::size_t rings = 0;
    std::size_t rings_skipped = 0;  ///< ideal lattice over capacity
    std::size_t law_failures = 0;
    std::size_t law_sampled = 0;    ///< rings above the exhaustive law-check cap
    std::size_t pairs = 0;          ///< (ring, proper ideal) theorem checks
    std::size_t pairs_zero_ideal = 0;
    std::size_t pairs_nonzero_ideal = 0;
    std::size_t pairs_skipped = 0;  ///< capacity errors inside a pair task
    std::size_t theorem_disagreements = 0;
    std::size_t theorem_disagreements_zero_ideal = 0;
    std::size_t splitting_mismatches = 0;
    std::size_t local_pairs = 0;
    std::size_t local_violations = 0;
    std::size_t full_ideal_pairs = 0;
    std::size_t full_ideal_violations = 0;
    std::size_t uncertified_qf = 0;  ///< tasks with a QF verdict resting on principal ideals only
    std::optional<std::string> minimal_counterexample;
    std::size_t minimal_counterexample_order = 0;

    std::size_t failures() const noexcept {
        return law_failures + theorem_disagreements + splitting_mismatches + local_violations +
               full_ideal_violations;
    }
};

/// Generates the corpus, runs every ring and (ring, ideal) task on a worker
/// pool, and writes one record per task to `out` in canonical task order,
/// followed by a summary record. Output is independent of worker_count.
SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& out);

/// Runs `count` independent jobs on `workers` threads and hands each result to
/// `emit` in index order as soon as all earlier results are available.
void run_ordered(std::size_t count, unsigned workers,
                 const std::function<std::string(std::size_t)>& job,
                 const std::function<void(std::size_t, std::string&&)>& emit);

}  // namespace amalgam
