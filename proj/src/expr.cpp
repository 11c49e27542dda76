#include "wildcc/expr.hpp"

#include <cctype>
#include <optional>

#include "wildcc/errors.hpp"

namespace wildcc {

ExprContext a2_context(const Field* F) {
    ExprContext c;
    c.F = F;
    c.vars["t1"] = RatFunc::var(F, 0);
    c.vars["t2"] = RatFunc::var(F, 1);
    c.degree["t1"] = 0;
    c.degree["t2"] = 0;
    return c;
}

ExprContext p2_context(const Field* F) {
    ExprContext c;
    c.F = F;
    c.vars["S0"] = RatFunc::constant(F, 1);
    c.vars["S1"] = RatFunc::var(F, 0);
    c.vars["S2"] = RatFunc::var(F, 1);
    for (auto v : {"S0", "S1", "S2"}) c.degree[v] = 1;
    c.require_degree_zero = true;
    return c;
}

namespace {

struct Value {
    RatFunc f;
    // Homogeneous degree; nullopt when the expression mixes degrees.
    std::optional<int> deg;
};

class Parser {
public:
    Parser(const std::string& s, const ExprContext& ctx) : s_(s), ctx_(ctx) {}

    Value parse() {
        Value v = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& msg) {
        fail(ErrorKind::Syntax, msg + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static std::optional<int> join_sum(const Value& a, const Value& b) {
        if (a.f.is_zero()) return b.deg;
        if (b.f.is_zero()) return a.deg;
        if (a.deg && b.deg && *a.deg == *b.deg) return a.deg;
        return std::nullopt;
    }

    Value expr() {
        Value v = term();
        while (true) {
            if (eat('+')) {
                Value w = term();
                v = {v.f + w.f, join_sum(v, w)};
            } else if (eat('-')) {
                Value w = term();
                v = {v.f - w.f, join_sum(v, w)};
            } else {
                return v;
            }
        }
    }

    Value term() {
        Value v = unary();
        while (true) {
            if (eat('*')) {
                Value w = unary();
                std::optional<int> d;
                if (v.deg && w.deg) d = *v.deg + *w.deg;
                v = {v.f * w.f, d};
            } else if (eat('/')) {
                std::size_t at = pos_;
                Value w = unary();
                if (w.f.is_zero()) {
                    pos_ = at;
                    fail(ErrorKind::DivisionByZero, "division by zero at position " + std::to_string(at));
                }
                std::optional<int> d;
                if (v.deg && w.deg) d = *v.deg - *w.deg;
                v = {v.f / w.f, d};
            } else {
                return v;
            }
        }
    }

    Value unary() {
        if (eat('-')) {
            Value v = unary();
            return {-v.f, v.deg};
        }
        if (eat('+')) return unary();
        return power();
    }

    Value power() {
        Value b = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("expected a nonnegative integer exponent");
            if (pos_ - start > 6) error("exponent too large");
            long long n = std::stoll(s_.substr(start, pos_ - start));
            std::optional<int> d;
            if (b.deg) d = *b.deg * static_cast<int>(n);
            return {b.f.pow(n), d};
        }
        return b;
    }

    Value primary() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (!eat(')')) error("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            // Reduce digit by digit to avoid overflow.
            long long r = 0, p = ctx_.F->p();
            for (std::size_t i = start; i < pos_; ++i) r = (r * 10 + (s_[i] - '0')) % p;
            return {RatFunc::from_int(ctx_.F, r), 0};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto it = ctx_.vars.find(name);
            if (it != ctx_.vars.end()) return {it->second, ctx_.degree.at(name)};
            if (name == "z" && ctx_.F->e() > 1) return {RatFunc::constant(ctx_.F, ctx_.F->gen()), 0};
            pos_ = start;
            fail(ErrorKind::UnknownVariable, "unknown variable '" + name + "' at position " + std::to_string(start));
        }
        error("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const ExprContext& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expr(const std::string& text, const ExprContext& ctx) {
    Parser ps(text, ctx);
    Value v = ps.parse();
    if (ctx.require_degree_zero && !v.f.is_zero() && (!v.deg || *v.deg != 0))
        fail(ErrorKind::InvalidInput, "expression '" + text + "' is not homogeneous of degree 0 in S0, S1, S2");
    return v.f;
}

}  // namespace wildcc
