#include "recalc/scalar.hpp"

#include <cctype>
#include <deque>
#include <mutex>

namespace recalc {

QMode QMode::at(const Rational& q0) {
    if (q0 == 0) throw guard_error("specialization point q0 = 0 is not allowed");
    static std::mutex mu;
    static std::deque<Rational> pool;    // stable addresses, lives forever
    std::lock_guard<std::mutex> lock(mu);
    for (const Rational& r : pool)
        if (r == q0) {
            QMode m;
            m.q0_ = &r;
            return m;
        }
    pool.push_back(q0);
    QMode m;
    m.q0_ = &pool.back();
    return m;
}

const Rational& QMode::q0() const {
    if (!q0_) throw mode_error("q0 requested from exact mode");
    return *q0_;
}

bool QMode::same(const QMode& o) const {
    if (is_exact() != o.is_exact()) return false;
    if (is_exact()) return true;
    return q0_ == o.q0_ || *q0_ == *o.q0_;
}

void QMode::require_same(const QMode& o) const {
    if (!same(o))
        throw mode_error("mixed scalar modes: " + key() + " vs " + o.key());
}

void QMode::require_generic(int cap) const {
    if (is_exact()) return;
    if (!is_generic_point(*q0_, cap))
        throw guard_error("q0 = " + rational_str(*q0_) +
                          " fails the generic-point (root of unity) guard");
}

std::string QMode::key() const {
    return is_exact() ? "exact" : "q0=" + rational_str(*q0_);
}

Scalar::Scalar(QMode mode) : mode_(std::move(mode)), val_(0) {}

Scalar Scalar::integer(long v, const QMode& m) {
    return rational(Rational(v), m);
}

Scalar Scalar::rational(const Rational& v, const QMode& m) {
    Scalar s(m);
    if (m.is_exact())
        s.rf_ = RationalFunction::constant(v);
    else
        s.val_ = v;
    return s;
}

Scalar Scalar::q_power(long e, const QMode& m) {
    Scalar s(m);
    if (m.is_exact())
        s.rf_ = RationalFunction::from_poly(LaurentPoly::monomial(e, 1));
    else
        s.val_ = rational_pow(m.q0(), e);
    return s;
}

Scalar Scalar::from_rf(RationalFunction f) {
    Scalar s{QMode::exact()};
    s.rf_ = std::move(f);
    return s;
}

bool Scalar::is_zero() const {
    return mode_.is_exact() ? rf_.is_zero() : val_ == 0;
}

bool Scalar::is_one() const {
    return mode_.is_exact() ? rf_.is_one() : val_ == 1;
}

const RationalFunction& Scalar::rf() const {
    if (!mode_.is_exact()) throw mode_error("rf() on a specialized scalar");
    return rf_;
}

const Rational& Scalar::value() const {
    if (mode_.is_exact()) throw mode_error("value() on an exact scalar");
    return val_;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    a.mode_.require_same(b.mode_);
    Scalar r(a.mode_);
    if (a.mode_.is_exact())
        r.rf_ = a.rf_ + b.rf_;
    else
        r.val_ = a.val_ + b.val_;
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.mode_.require_same(b.mode_);
    Scalar r(a.mode_);
    if (a.mode_.is_exact())
        r.rf_ = a.rf_ * b.rf_;
    else
        r.val_ = a.val_ * b.val_;
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r(mode_);
    if (mode_.is_exact())
        r.rf_ = -rf_;
    else
        r.val_ = -val_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_error("inversion of zero scalar");
    Scalar r(mode_);
    if (mode_.is_exact())
        r.rf_ = rf_.inverse();
    else
        r.val_ = Rational(val_.get_den(), val_.get_num());
    if (!mode_.is_exact()) r.val_.canonicalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    mode_.require_same(o.mode_);
    if (mode_.is_exact())
        rf_ = rf_ + o.rf_;
    else
        val_ += o.val_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mode_.require_same(o.mode_);
    if (mode_.is_exact())
        rf_ = rf_ * o.rf_;
    else
        val_ *= o.val_;
    return *this;
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return one(mode_);
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Scalar acc = one(mode_);
    Scalar sq = base;
    while (n) {
        if (n & 1) acc *= sq;
        if (n >>= 1) sq *= sq;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    mode_.require_same(o.mode_);
    return mode_.is_exact() ? rf_ == o.rf_ : val_ == o.val_;
}

Rational Scalar::specialize(const Rational& q0) const {
    if (mode_.is_exact()) return rf_.eval(q0);
    if (mode_.q0() != q0)
        throw mode_error("scalar already specialized at a different q0");
    return val_;
}

Scalar Scalar::specialized_at(const Rational& q0) const {
    if (!mode_.is_exact())
        throw mode_error("specialized_at requires an exact scalar");
    return Scalar::rational(rf_.eval(q0), QMode::at(q0));
}

std::string Scalar::str() const {
    return mode_.is_exact() ? rf_.str() : rational_str(val_);
}

// ---------------------------------------------------------------------------
// Literal grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'* base ('^' intexp)?
//   base   := integer | 'q' | '(' expr ')'
//   intexp := '-'? integer
namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const QMode& mode;

    explicit Parser(const std::string& text, const QMode& m) : s(text), mode(m) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("scalar literal: " + what + " at position " +
                          std::to_string(pos) + " of \"" + s + "\"");
    }

    Rational integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return Rational(s.substr(start, pos - start));
    }

    long int_exponent() {
        skip_ws();
        bool neg = eat('-');
        Rational v = integer();
        long e = long(mpz_get_si(v.get_num().get_mpz_t()));
        return neg ? -e : e;
    }

    Scalar base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end");
        if (eat('(')) {
            Scalar e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (s[pos] == 'q') {
            ++pos;
            return Scalar::q(mode);
        }
        return Scalar::rational(integer(), mode);
    }

    Scalar factor() {
        skip_ws();
        bool neg = false;
        while (eat('-')) neg = !neg;
        Scalar v = base();
        if (eat('^')) v = v.pow(int_exponent());
        return neg ? -v : v;
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) v = v / factor();
            else return v;
        }
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            skip_ws();
            if (eat('+')) v = v + term();
            else if (peek('-')) { v = v + term(); }   // term eats the sign
            else return v;
        }
    }
};

} // namespace

Scalar parse_scalar(const std::string& text, const QMode& mode) {
    Parser p(text, mode);
    Scalar v = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    return v;
}

} // namespace recalc
