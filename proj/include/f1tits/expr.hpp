#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blue_field.hpp"
#include "errors.hpp"

namespace f1tits {

struct Expr {
    enum class Op { number, variable, add, sub, mul, div, neg, pow };
    Op op = Op::number;
    BigInt value = 0;
    int var = -1;
    long long exponent = 0;
    std::shared_ptr<const Expr> a, b;
};
using ExprPtr = std::shared_ptr<const Expr>;

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : InputError("syntax_error", msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Polynomial/rational expressions: + - * / ^integer, parentheses, unary minus.
// Identifiers must be declared parameters.
class ExprParser {
public:
    ExprParser(std::string text, const std::vector<std::string>& vars, std::size_t offset = 0)
        : s_(std::move(text)), vars_(vars), offset_(offset) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return e;
    }

private:
    std::string s_;
    const std::vector<std::string>& vars_;
    std::size_t offset_, i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset_ + i_); }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    static ExprPtr node(Expr::Op op, ExprPtr a, ExprPtr b = nullptr) {
        auto e = std::make_shared<Expr>();
        e->op = op;
        e->a = std::move(a);
        e->b = std::move(b);
        return e;
    }
    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+')) e = node(Expr::Op::add, e, term());
            else if (eat('-')) e = node(Expr::Op::sub, e, term());
            else return e;
        }
    }
    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (eat('*')) e = node(Expr::Op::mul, e, unary());
            else if (eat('/')) e = node(Expr::Op::div, e, unary());
            else return e;
        }
    }
    ExprPtr unary() {
        if (eat('-')) return node(Expr::Op::neg, unary());
        if (eat('+')) return unary();
        return power();
    }
    ExprPtr power() {
        ExprPtr base = atom();
        if (!eat('^')) return base;
        skip();
        bool negative = false;
        if (eat('-')) negative = true;
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected integer exponent");
        if (i_ - start > 6) fail("exponent too large");
        auto e = std::make_shared<Expr>();
        e->op = Expr::Op::pow;
        e->a = base;
        e->exponent = std::stoll(s_.substr(start, i_ - start)) * (negative ? -1 : 1);
        return e;
    }
    ExprPtr atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            ExprPtr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            auto e = std::make_shared<Expr>();
            e->op = Expr::Op::number;
            e->value = BigInt(s_.substr(start, i_ - start));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\''))
                ++i_;
            std::string name = s_.substr(start, i_ - start);
            for (std::size_t k = 0; k < vars_.size(); ++k)
                if (vars_[k] == name) {
                    auto e = std::make_shared<Expr>();
                    e->op = Expr::Op::variable;
                    e->var = static_cast<int>(k);
                    return e;
                }
            i_ = start;
            fail("unknown parameter '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

inline ExprPtr parse_expr(const std::string& text, const std::vector<std::string>& vars, std::size_t offset = 0) {
    return ExprParser(text, vars, offset).parse();
}

inline std::string to_string(const Expr& e, const std::vector<std::string>& vars) {
    using Op = Expr::Op;
    switch (e.op) {
        case Op::number: return e.value.str();
        case Op::variable: return vars[e.var];
        case Op::add: return "(" + to_string(*e.a, vars) + " + " + to_string(*e.b, vars) + ")";
        case Op::sub: return "(" + to_string(*e.a, vars) + " - " + to_string(*e.b, vars) + ")";
        case Op::mul: return "(" + to_string(*e.a, vars) + "*" + to_string(*e.b, vars) + ")";
        case Op::div: return "(" + to_string(*e.a, vars) + "/" + to_string(*e.b, vars) + ")";
        case Op::neg: return "(-" + to_string(*e.a, vars) + ")";
        case Op::pow: return to_string(*e.a, vars) + "^" + std::to_string(e.exponent);
    }
    return "";
}

// Degree in `var` when the expression is polynomial in it, nullopt when the
// variable occurs in a denominator.
inline std::optional<long long> degree_in(const Expr& e, int var) {
    using Op = Expr::Op;
    switch (e.op) {
        case Op::number: return 0;
        case Op::variable: return e.var == var ? 1 : 0;
        case Op::add:
        case Op::sub: {
            auto x = degree_in(*e.a, var), y = degree_in(*e.b, var);
            if (!x || !y) return std::nullopt;
            return std::max(*x, *y);
        }
        case Op::mul: {
            auto x = degree_in(*e.a, var), y = degree_in(*e.b, var);
            if (!x || !y) return std::nullopt;
            return *x + *y;
        }
        case Op::div: {
            auto x = degree_in(*e.a, var), y = degree_in(*e.b, var);
            if (!x || !y || *y != 0) return std::nullopt;
            return *x;
        }
        case Op::neg: return degree_in(*e.a, var);
        case Op::pow: {
            auto x = degree_in(*e.a, var);
            if (!x) return std::nullopt;
            if (e.exponent < 0) return *x == 0 ? std::optional<long long>(0) : std::nullopt;
            return *x * e.exponent;
        }
    }
    return std::nullopt;
}

// Evaluation over a field type F providing value_type, zero/one/from_int,
// add/sub/mul/neg, inverse (nullopt at zero) and is_zero.
template <class F>
std::optional<typename F::value_type> evaluate(const F& f, const Expr& e, const std::vector<typename F::value_type>& x) {
    using Op = Expr::Op;
    switch (e.op) {
        case Op::number: return f.from_int(e.value);
        case Op::variable: return x[e.var];
        case Op::neg: {
            auto a = evaluate(f, *e.a, x);
            if (!a) return std::nullopt;
            return f.neg(*a);
        }
        case Op::pow: {
            auto a = evaluate(f, *e.a, x);
            if (!a) return std::nullopt;
            auto base = *a;
            if (e.exponent < 0) {
                auto inv = f.inverse(base);
                if (!inv) return std::nullopt;
                base = *inv;
            }
            auto r = f.one();
            for (long long k = 0; k < std::llabs(e.exponent); ++k) r = f.mul(r, base);
            return r;
        }
        default: break;
    }
    auto a = evaluate(f, *e.a, x);
    if (!a) return std::nullopt;
    auto b = evaluate(f, *e.b, x);
    if (!b) return std::nullopt;
    switch (e.op) {
        case Op::add: return f.add(*a, *b);
        case Op::sub: return f.sub(*a, *b);
        case Op::mul: return f.mul(*a, *b);
        case Op::div: {
            auto inv = f.inverse(*b);
            if (!inv) return std::nullopt;
            return f.mul(*a, *inv);
        }
        default: return std::nullopt;
    }
}

struct RationalField {
    using value_type = BigRational;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(const BigInt& v) const { return value_type(v); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    std::optional<value_type> inverse(const value_type& a) const {
        if (a == 0) return std::nullopt;
        return value_type(1) / a;
    }
    bool is_zero(const value_type& a) const { return a == 0; }
    long long characteristic() const { return 0; }
    std::string tag() const { return "Q"; }
    std::string format(const value_type& a) const { return a.str(); }
    value_type parse(const std::string& s) const { return value_type(s); }
    template <class Rng>
    value_type random(Rng& rng) const {
        long long num = static_cast<long long>(rng() % 19) - 9;
        if (rng() % 4 == 0) return value_type(BigInt(num)) / value_type(BigInt(1 + rng() % 5));
        return value_type(num);
    }
};

// GF(p^k) with elements coded as base-p digit strings of polynomials modulo a
// monic irreducible of degree k.
class FiniteField {
public:
    using value_type = long long;

    FiniteField(long long p, int k) : p_(p), k_(k) {
        if (p < 2 || detail::prime_factors(BigInt(p)) != std::set<long long>{p})
            throw InputError("invalid_field", "characteristic must be prime");
        q_ = 1;
        for (int i = 0; i < k; ++i) q_ *= p;
        if (k > 1 && q_ > 4096) throw InputError("invalid_field", "extension field too large");
        if (k == 1) {
            modulus_ = {0, 1};
            return;
        }
        // first monic polynomial of degree k making every nonzero element invertible
        for (long long code = 0; code < q_; ++code) {
            modulus_ = digits(code);
            modulus_.push_back(1);
            build_tables();
            bool field = true;
            for (long long a = 1; a < q_ && field; ++a)
                if (inv_[a] < 0) field = false;
            if (field) return;
        }
        throw ComputationError("invalid_field", "no irreducible polynomial found");
    }

    // smallest extension of F_p with at least `min_size` elements
    static FiniteField at_least(long long p, long long min_size) {
        int k = 1;
        long long q = p;
        while (q < min_size) {
            q *= p;
            ++k;
        }
        return FiniteField(p, k);
    }

    long long characteristic() const { return p_; }
    int degree() const { return k_; }
    long long size() const { return q_; }
    const std::vector<long long>& modulus() const { return modulus_; }
    std::string tag() const { return k_ == 1 ? "F" + std::to_string(p_) : "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")"; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(const BigInt& v) const {
        BigInt r = v % p_;
        if (r < 0) r += p_;
        return static_cast<long long>(r);
    }
    value_type add(value_type a, value_type b) const {
        if (k_ == 1) return (a + b) % p_;
        return add_[a * q_ + b];
    }
    value_type neg(value_type a) const {
        if (k_ == 1) return (p_ - a) % p_;
        return neg_[a];
    }
    value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
    value_type mul(value_type a, value_type b) const {
        if (k_ == 1) return static_cast<long long>((__int128)a * b % p_);
        return mul_[a * q_ + b];
    }
    std::optional<value_type> inverse(value_type a) const {
        if (a == 0) return std::nullopt;
        if (k_ == 1) return detail::mod_inv(a, p_);
        return inv_[a];
    }
    bool is_zero(value_type a) const { return a == 0; }
    std::string format(value_type a) const { return std::to_string(a); }
    value_type parse(const std::string& s) const {
        long long v = std::stoll(s);
        if (v < 0 || v >= q_) throw InputError("invalid_witness", "field element out of range");
        return v;
    }
    template <class Rng>
    value_type random(Rng& rng) const {
        return static_cast<long long>(rng() % static_cast<unsigned long long>(q_));
    }

private:
    long long p_, q_ = 1;
    int k_;
    std::vector<long long> modulus_;
    std::vector<long long> add_, mul_, neg_, inv_;

    std::vector<long long> digits(long long code) const {
        std::vector<long long> d(k_, 0);
        for (int i = 0; i < k_; ++i) {
            d[i] = code % p_;
            code /= p_;
        }
        return d;
    }
    long long encode(const std::vector<long long>& d) const {
        long long code = 0;
        for (int i = k_ - 1; i >= 0; --i) code = code * p_ + d[i];
        return code;
    }
    void build_tables() {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, -1);
        for (long long a = 0; a < q_; ++a) {
            auto da = digits(a);
            std::vector<long long> dn(k_);
            for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
            neg_[a] = encode(dn);
            for (long long b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<long long> s(k_);
                for (int i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = encode(s);
                std::vector<long long> prod(2 * k_, 0);
                for (int i = 0; i < k_; ++i)
                    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (int d = 2 * k_ - 1; d >= k_; --d) {
                    long long c = prod[d];
                    if (!c) continue;
                    for (int i = 0; i <= k_; ++i)
                        prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
                }
                prod.resize(k_);
                mul_[a * q_ + b] = encode(prod);
            }
        }
        for (long long a = 1; a < q_; ++a)
            for (long long b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = b;
                    break;
                }
    }
};

}  // namespace f1tits
