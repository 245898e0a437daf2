#pragma once

#include <string>
#include <vector>

#include "amalgam/ring_table.hpp"

namespace amalgam {

/// Element-level map between two rings. `unital` records whether the map is
/// meant to send 1 to 1; splitting maps such as pi are additive and
/// multiplicative but not unital.
struct RingMap {
    RingPtr domain;
    RingPtr codomain;
    std::vector<Element> table;
    bool unital = true;

    Element operator()(Element x) const { return table.at(x); }
};

struct MapVerdict {
    bool ok = true;
    std::string property;  ///< first violated property when !ok
    Element x = 0, y = 0;
};

/// Checks, in order: table shape, additivity, multiplicativity, then
/// unitality and bijectivity when requested. Exhaustive over all pairs.
MapVerdict verify_ring_map(const RingMap& m, bool require_unital, bool require_bijective);

RingMap identity_map(const RingPtr& r);

/// g after f; requires f.codomain == g.domain.
RingMap compose(const RingMap& g, const RingMap& f);

/// Inverse of a bijective map.
RingMap inverse(const RingMap& m);

/// FNV-1a over the map table, for report fingerprints.
std::uint64_t fingerprint(const RingMap& m);

}  // namespace amalgam
