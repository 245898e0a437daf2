#pragma once

#include <optional>
#include <utility>

#include "amalgam/construct.hpp"
#include "amalgam/ideal.hpp"
#include "amalgam/ring_map.hpp"

namespace amalgam {

/// (R1⋈I1)×(R2⋈I2) -> (R1×R2)⋈(I1×I2),
/// ((r1,r1+i1),(r2,r2+i2)) |-> ((r1,r2),(r1,r2)+(i1,i2)).
/// Verified to be a bijective unital homomorphism before it is returned.
RingMap map_zeta(const Duplication& d1, const Duplication& d2, const Limits& limits = {});

/// First (i0, j0) in canonical order with i0 in I, j0 in J, i0 + j0 = 1.
std::optional<std::pair<Element, Element>> comaximal_witness(const IdealSet& i, const IdealSet& j);

/// R⋈I -> R/I × (R/J × R/J), (r, r+i) |-> (r mod I, (r mod J, r+i mod J)).
/// Requires I ∩ J = 0 and I + J = R (HypothesisError otherwise).
RingMap map_psi(const RingPtr& r, const IdealSet& i, const IdealSet& j, const Limits& limits = {});

/// R -> R/I × R/J, r |-> (r mod I, r mod J), under the same hypotheses.
RingMap map_phi(const RingPtr& r, const IdealSet& i, const IdealSet& j, const Limits& limits = {});

/// (r, r+i) |-> r. Surjective, kernel exactly 0×I.
RingMap map_epsilon(const Duplication& d);

/// 0×I inside R⋈I.
const IdealSet& map_iota(const Duplication& d);

/// Preimage of zero.
IdealSet kernel(const RingMap& m);

/// The splitting of 0 -> 0×I -> R⋈I -> R -> 0 for I = Re.
struct PiSplitting {
    Duplication dup;
    RingMap pi;       ///< r |-> (r, r(1-e)); unital only when e = 0
    RingMap epsilon;  ///< projection out of dup
};

/// Throws HypothesisError unless e*e = e.
PiSplitting map_pi(const RingPtr& r, Element e, const Limits& limits = {});

/// eps(pi(x)) = x for every x in R.
bool splits_projection(const PiSplitting& s);

/// pi(eps(z)*x) = z*pi(x) for every z in R⋈I and x in R: pi is linear over
/// R⋈I acting on R through eps.
bool is_module_linear(const PiSplitting& s);

}  // namespace amalgam
