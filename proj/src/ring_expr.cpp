#include "amalgam/ring_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace amalgam {

namespace {

std::string join(const std::vector<Element>& gens) {
    std::string out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) out += ", ";
        out += std::to_string(gens[k]);
    }
    return out;
}

}  // namespace

ExprPtr RingExpr::zmod(unsigned n) {
    if (n == 0) throw std::invalid_argument("zmod(0) is not a ring with identity");
    return ExprPtr(new RingExpr(ZMod{n}));
}

ExprPtr RingExpr::prod(ExprPtr left, ExprPtr right) {
    return ExprPtr(new RingExpr(Prod{std::move(left), std::move(right)}));
}

ExprPtr RingExpr::quot(ExprPtr base, std::vector<Element> gens) {
    return ExprPtr(new RingExpr(Quot{std::move(base), std::move(gens)}));
}

ExprPtr RingExpr::dup(ExprPtr base, std::vector<Element> gens) {
    return ExprPtr(new RingExpr(Dup{std::move(base), std::move(gens)}));
}

int RingExpr::depth() const {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ZMod>) {
                return 0;
            } else if constexpr (std::is_same_v<T, Prod>) {
                return 1 + std::max(n.left->depth(), n.right->depth());
            } else {
                return 1 + n.base->depth();
            }
        },
        node_);
}

std::string RingExpr::to_string() const {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ZMod>) {
                return "zmod(" + std::to_string(n.n) + ")";
            } else if constexpr (std::is_same_v<T, Prod>) {
                return "prod(" + n.left->to_string() + ", " + n.right->to_string() + ")";
            } else {
                const char* head = std::is_same_v<T, Quot> ? "quot(" : "dup(";
                const std::string list = join(n.gens);
                return head + n.base->to_string() + ";" + (list.empty() ? "" : " " + list) + ")";
            }
        },
        node_);
}

bool operator==(const RingExpr& a, const RingExpr& b) {
    if (a.node_.index() != b.node_.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node_);
            if constexpr (std::is_same_v<T, RingExpr::ZMod>) {
                return x.n == y.n;
            } else if constexpr (std::is_same_v<T, RingExpr::Prod>) {
                return *x.left == *y.left && *x.right == *y.right;
            } else {
                return x.gens == y.gens && *x.base == *y.base;
            }
        },
        a.node_);
}

}  // namespace amalgam
