#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/ideal.hpp"
#include "amalgam/ring_table.hpp"

namespace amalgam {

struct CorpusConfig {
    std::size_t max_order = 64;  ///< cap on every corpus ring
    std::size_t base_order = 0;  ///< cap on zmod(n) and zmod products; 0 means max_order
    int max_depth = 2;           ///< quotient/duplication nesting
    Limits limits{};
};

struct CorpusRing {
    ExprPtr expr;
    RingPtr ring;
    int depth = 0;
    /// Canonical ideal list; empty with `capacity_error` set when the lattice
    /// exceeded the cap.
    std::vector<IdealSet> ideals;
    std::optional<std::string> capacity_error;
};

/// Deterministic corpus:
///   depth 0: zmod(n), 1 <= n <= base_order;
///   depth 1: prod(zmod(a), zmod(b)), 2 <= a <= b, ab <= base_order;
///   depth d <= max_depth: quot(X; I) for nonzero proper I and dup(X; I) for
///   nonzero I, over every ring X of depth d-1.
/// Rings above max_order are dropped; rings whose tables coincide with an
/// earlier entry are dropped. Ideals are named by greedy generators.
std::vector<CorpusRing> generate_corpus(const CorpusConfig& cfg);

}  // namespace amalgam
