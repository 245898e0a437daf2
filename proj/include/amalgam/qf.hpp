#pragma once

#include <optional>
#include <vector>

#include "amalgam/ideal.hpp"
#include "amalgam/ring_map.hpp"
#include "amalgam/ring_table.hpp"

namespace amalgam {

/// How is_quasi_frobenius decides the double-annihilator condition.
enum class QfMethod {
    /// Ann(Ann(J)) = J over the full ideal lattice.
    FullLattice,
    /// Ann(Ann(Ra)) = Ra over principal ideals only. Equivalent for finite
    /// commutative rings: a local factor with non-simple socle always has a
    /// principal witness Rs, s in the socle, with Ann(Ann(Rs)) = socle.
    PrincipalIdeals,
    /// PrincipalIdeals first; a principal counterexample decides non-QF.
    /// Otherwise FullLattice, keeping the principal verdict (uncertified) if
    /// the lattice exceeds the cap.
    Auto,
};

const char* to_string(QfMethod m);

struct QfVerdict {
    bool qf = true;
    /// First violating ideal in canonical order (within the ideals the method
    /// inspects) when !qf.
    std::optional<IdealSet> counterexample;
    QfMethod method = QfMethod::FullLattice;  ///< method actually used
    std::size_t ideal_count = 0;              ///< lattice size (FullLattice only)
    /// False only for a QF verdict resting on principal ideals alone.
    bool certified = true;
};

QfVerdict is_quasi_frobenius(const RingPtr& r, const Limits& limits = {},
                             QfMethod method = QfMethod::FullLattice);

/// Sorted list of all a with a*a = a.
std::vector<Element> idempotents(const RingTable& r);

/// The idempotent e with R*e = I, if any. Throws std::logic_error if two
/// distinct idempotents generate I.
std::optional<Element> idempotent_generator(const IdealSet& i);

struct TheoremVerdict {
    bool lhs = false;     ///< R⋈I is QF
    bool rhs_qf = false;  ///< R is QF
    std::optional<Element> rhs_idem;
    bool agrees = false;
    QfMethod lhs_method = QfMethod::FullLattice;
    QfMethod rhs_method = QfMethod::FullLattice;
    bool certified = true;  ///< both QF verdicts certified
};

/// Evaluates both sides of "R⋈I is QF iff R is QF and I = Ra, a idempotent"
/// independently. Throws ScopeError for I = R.
TheoremVerdict check_main_theorem(const IdealSet& i, const Limits& limits = {},
                                  QfMethod method = QfMethod::FullLattice);

/// A j in I with x(1+j) = 0 for all x in I, the first in index order; such a
/// j exists exactly when 0 -> 0×I -> R⋈I -> R -> 0 splits. Before returning,
/// asserts that j^2 is idempotent and R j^2 = I (std::logic_error otherwise).
std::optional<Element> splits_epsilon(const IdealSet& i);

struct LocalFactor {
    RingPtr ring;
    RingMap projection;  ///< R -> factor
};

/// Splits R along its first nontrivial idempotent e into R/Re × R/R(1-e)
/// (verified through map_phi) and recurses. Every returned factor is local;
/// the order-1 ring yields an empty list.
std::vector<LocalFactor> local_decomposition(const RingPtr& r, const Limits& limits = {});

/// R -> F1 × (F2 × (... × Fk)) assembled from the factor projections.
RingMap assemble_decomposition(const RingPtr& r, const std::vector<LocalFactor>& factors,
                               const Limits& limits = {});

struct QfReport {
    ExprPtr expr;
    std::size_t order = 0;
    bool is_local = false;
    std::size_t ideal_count = 0;
    std::vector<Element> idempotents;
    bool is_qf = false;
    std::optional<IdealSet> counterexample;
};

/// Full-lattice analysis; throws CapacityError when the lattice exceeds the cap.
QfReport analyze(const RingPtr& r, const Limits& limits = {});

}  // namespace amalgam
