#include "amalgam/expr_parser.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "amalgam/construct.hpp"
#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

class Parser {
public:
    Parser(std::string_view src, const Limits& limits, bool evaluate)
        : src_(src), limits_(limits), evaluate_(evaluate) {}

    BuiltExpr parse() {
        auto out = expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    std::string_view word() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    unsigned long integer() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", start);
        unsigned long v = 0;
        const auto [p, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (ec != std::errc() || v > 0xffffffffu) throw ParseError("integer out of range", start);
        return v;
    }

    std::vector<Element> index_list(const RingPtr& base) {
        std::vector<Element> out;
        if (peek(')')) return out;
        for (;;) {
            const auto at = (skip_ws(), pos_);
            const auto v = integer();
            if (evaluate_ && v >= base->order())
                throw ParseError("element index " + std::to_string(v) + " out of range for order " +
                                     std::to_string(base->order()),
                                 at);
            if (v > 65535) throw ParseError("element index " + std::to_string(v) + " out of range", at);
            out.push_back(static_cast<Element>(v));
            if (!peek(',')) break;
            expect(',');
        }
        return out;
    }

    template <class F>
    auto guarded(std::size_t at, F&& f) {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const CapacityError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), at);
        }
    }

    BuiltExpr expr() {
        skip_ws();
        const auto at = pos_;
        const auto head = word();
        if (head == "zmod") {
            expect('(');
            const auto n_at = (skip_ws(), pos_);
            const auto n = integer();
            if (n == 0) throw ParseError("zmod modulus must be at least 1", n_at);
            expect(')');
            auto e = RingExpr::zmod(static_cast<unsigned>(n));
            RingPtr r;
            if (evaluate_) r = guarded(at, [&] { return make_zmod(static_cast<unsigned>(n), limits_); });
            return {e, r};
        }
        if (head == "prod") {
            expect('(');
            auto a = expr();
            expect(',');
            auto b = expr();
            expect(')');
            RingPtr r;
            if (evaluate_) r = guarded(at, [&] { return make_product(a.ring, b.ring, limits_); });
            return {RingExpr::prod(a.expr, b.expr), r};
        }
        if (head == "quot" || head == "dup") {
            expect('(');
            auto base = expr();
            expect(';');
            auto gens = index_list(base.ring);
            expect(')');
            RingPtr r;
            if (head == "quot") {
                if (evaluate_)
                    r = guarded(at, [&] { return make_quotient(base.ring, gens, limits_).ring; });
                return {RingExpr::quot(base.expr, std::move(gens)), r};
            }
            if (evaluate_)
                r = guarded(at, [&] { return make_duplication(base.ring, gens, limits_).ring; });
            return {RingExpr::dup(base.expr, std::move(gens)), r};
        }
        throw ParseError(head.empty() ? "expected a constructor"
                                      : "unknown constructor '" + std::string(head) + "'",
                         at);
    }

    std::string_view src_;
    const Limits& limits_;
    bool evaluate_;
    std::size_t pos_ = 0;
};

}  // namespace

BuiltExpr parse_and_build(std::string_view src, const Limits& limits) {
    return Parser(src, limits, true).parse();
}

ExprPtr parse_expr(std::string_view src, const Limits& limits) {
    return parse_and_build(src, limits).expr;
}

ExprPtr parse_expr_syntax(std::string_view src) {
    const Limits limits;
    return Parser(src, limits, false).parse().expr;
}

RingPtr build(const RingExpr& expr, const Limits& limits) {
    return std::visit(
        [&](const auto& n) -> RingPtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, RingExpr::ZMod>) {
                return make_zmod(n.n, limits);
            } else if constexpr (std::is_same_v<T, RingExpr::Prod>) {
                return make_product(build(*n.left, limits), build(*n.right, limits), limits);
            } else if constexpr (std::is_same_v<T, RingExpr::Quot>) {
                return make_quotient(build(*n.base, limits), n.gens, limits).ring;
            } else {
                return make_duplication(build(*n.base, limits), n.gens, limits).ring;
            }
        },
        expr.node());
}

}  // namespace amalgam
