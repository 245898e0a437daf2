#pragma once

#include <span>
#include <utility>
#include <vector>

#include "amalgam/ideal.hpp"
#include "amalgam/ring_map.hpp"
#include "amalgam/ring_table.hpp"

namespace amalgam {

/// R/I together with the coset projection R -> R/I. Cosets are indexed in
/// order of their smallest member.
struct Quotient {
    RingPtr ring;
    IdealSet ideal;
    RingMap projection;
};

/// Quotient by the ideal generated by `gens` (empty list: the zero ideal).
Quotient make_quotient(const RingPtr& r, std::span<const Element> gens, const Limits& limits = {});

/// The amalgamated duplication R⋈I = {(r, r+i) : r in R, i in I} inside R×R,
/// stored with (r, r+i) at index r*|I| + rank(i), members of I ranked by index.
struct Duplication {
    RingPtr ring;
    RingPtr base;
    IdealSet ideal;     ///< I, an ideal of `base`
    IdealSet embedded;  ///< 0×I as an ideal of `ring`

    Element encode(Element r, Element i) const;
    /// (r, i) with the element equal to (r, r+i).
    std::pair<Element, Element> decode(Element z) const;
    Element first(Element z) const { return decode(z).first; }
    Element second(Element z) const;

    std::vector<int> rank;  ///< rank of each base element in I, -1 if absent
};

/// R⋈I for I = ideal generated by `gens`. I = R is allowed (R⋈R is R×R).
Duplication make_duplication(const RingPtr& r, std::span<const Element> gens,
                             const Limits& limits = {});

/// J⋈I = {(x, x+i) : x in J, i in I} as an ideal of the duplication.
IdealSet make_bowtie_ideal(const Duplication& d, const IdealSet& j);

}  // namespace amalgam
