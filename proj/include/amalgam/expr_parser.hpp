#pragma once

#include <string_view>

#include "amalgam/ring_expr.hpp"
#include "amalgam/ring_table.hpp"

namespace amalgam {

struct BuiltExpr {
    ExprPtr expr;
    RingPtr ring;
};

/// Parses and builds
///   expr := zmod(INT) | prod(expr, expr) | quot(expr; INT-list) | dup(expr; INT-list)
/// where INT-list is a possibly empty comma-separated list of element indices
/// of the base ring. Throws ParseError (byte offset) on syntax errors and on
/// element indices outside the base ring.
BuiltExpr parse_and_build(std::string_view src, const Limits& limits = {});

/// As parse_and_build, returning only the expression.
ExprPtr parse_expr(std::string_view src, const Limits& limits = {});

/// Syntax only: no rings are built and element indices are not range-checked.
ExprPtr parse_expr_syntax(std::string_view src);

/// Evaluates an expression tree.
RingPtr build(const RingExpr& expr, const Limits& limits = {});

}  // namespace amalgam
