#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "amalgam/ring_expr.hpp"
#include "amalgam/types.hpp"

namespace amalgam {

/// A finite commutative unital ring given by explicit operation tables over
/// the element indices 0..order-1. Immutable once built.
class RingTable {
public:
    /// Wraps raw tables without checking the ring laws; run
    /// verify_ring_laws on anything that did not come from a constructor.
    static std::shared_ptr<const RingTable> from_tables(std::size_t order, std::vector<Element> add,
                                                        std::vector<Element> mul,
                                                        std::vector<Element> neg, Element zero,
                                                        Element one, std::vector<std::string> labels,
                                                        ExprPtr origin);

    std::size_t order() const noexcept { return order_; }
    Element zero() const noexcept { return zero_; }
    Element one() const noexcept { return one_; }

    Element add(Element x, Element y) const noexcept { return add_[x * order_ + y]; }
    Element mul(Element x, Element y) const noexcept { return mul_[x * order_ + y]; }
    Element neg(Element x) const noexcept { return neg_[x]; }
    Element sub(Element x, Element y) const noexcept { return add(x, neg(y)); }

    std::span<const Element> add_row(Element x) const noexcept {
        return {add_.data() + x * order_, order_};
    }
    std::span<const Element> mul_row(Element x) const noexcept {
        return {mul_.data() + x * order_, order_};
    }

    const std::string& label(Element x) const { return labels_.at(x); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const ExprPtr& origin() const noexcept { return origin_; }

    bool is_unit(Element x) const noexcept;

    /// Raw tables, exposed for fault-injection copies and fingerprints.
    const std::vector<Element>& add_table() const noexcept { return add_; }
    const std::vector<Element>& mul_table() const noexcept { return mul_; }
    const std::vector<Element>& neg_table() const noexcept { return neg_; }

    /// True when both rings have identical add/mul tables and constants.
    bool same_tables(const RingTable& other) const noexcept;

private:
    RingTable() = default;

    std::size_t order_ = 0;
    std::vector<Element> add_, mul_, neg_;
    Element zero_ = 0, one_ = 0;
    std::vector<std::string> labels_;
    ExprPtr origin_;
};

using RingPtr = std::shared_ptr<const RingTable>;

/// Z/nZ; element k is the residue k.
RingPtr make_zmod(unsigned n, const Limits& limits = {});

/// a × b with (x, y) at index x*|b| + y.
RingPtr make_product(const RingPtr& a, const RingPtr& b, const Limits& limits = {});

struct LawVerdict {
    bool ok = true;
    bool exhaustive = true;  ///< false when associativity/distributivity were sampled
    std::string law;         ///< name of the violated law when !ok
    Element x = 0, y = 0, z = 0;
};

/// Checks the commutative unital ring axioms. Exhaustive for
/// order <= limits.law_check_order; above that the cubic laws are checked on
/// limits.law_samples random triples drawn from a fixed seed.
LawVerdict verify_ring_laws(const RingTable& r, const Limits& limits = {});

}  // namespace amalgam
