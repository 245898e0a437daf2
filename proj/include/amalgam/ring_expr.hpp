#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "amalgam/types.hpp"

namespace amalgam {

class RingExpr;
using ExprPtr = std::shared_ptr<const RingExpr>;

/// Construction recipe for a ring: Z/n, binary products, quotients and
/// amalgamated duplications along the ideal generated by `gens`.
class RingExpr {
public:
    struct ZMod {
        unsigned n;
    };
    struct Prod {
        ExprPtr left, right;
    };
    struct Quot {
        ExprPtr base;
        std::vector<Element> gens;
    };
    struct Dup {
        ExprPtr base;
        std::vector<Element> gens;
    };
    using Node = std::variant<ZMod, Prod, Quot, Dup>;

    static ExprPtr zmod(unsigned n);
    static ExprPtr prod(ExprPtr left, ExprPtr right);
    static ExprPtr quot(ExprPtr base, std::vector<Element> gens);
    static ExprPtr dup(ExprPtr base, std::vector<Element> gens);

    const Node& node() const noexcept { return node_; }

    /// Constructor nesting depth; zmod is depth 0.
    int depth() const;

    /// Canonical text form, e.g. "dup(zmod(12); 4)". Reparses to an equal
    /// expression.
    std::string to_string() const;

    friend bool operator==(const RingExpr& a, const RingExpr& b);

private:
    explicit RingExpr(Node node) : node_(std::move(node)) {}
    Node node_;
};

}  // namespace amalgam
