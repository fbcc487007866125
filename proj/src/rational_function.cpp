#include "recalc/rational_function.hpp"

namespace recalc {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw division_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly::one();
        return;
    }
    // Factor the q-powers out: the denominator is kept with lowest exponent
    // 0, all q-offset lives in the numerator.
    long a = num.lo();
    long b = den.lo();
    LaurentPoly n0 = num.shifted(-a);
    LaurentPoly d0 = den.shifted(-b);
    LaurentPoly g = LaurentPoly::gcd(n0, d0);
    if (!g.is_one() && !g.is_zero()) {
        n0 = LaurentPoly::div_exact(n0, g);
        d0 = LaurentPoly::div_exact(d0, g);
    }
    const Rational lead = d0.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        n0 = n0.scaled(inv);
        d0 = d0.scaled(inv);
    }
    num_ = n0.shifted(a - b);
    den_ = d0;
}

RationalFunction RationalFunction::from_poly(LaurentPoly p) {
    RationalFunction f;
    f.num_ = std::move(p);
    f.den_ = LaurentPoly::one();
    return f;
}

RationalFunction RationalFunction::constant(const Rational& c) {
    return from_poly(LaurentPoly::constant(c));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one())
        return RationalFunction::from_poly(a.num_ + b.num_);
    if (a.den_ == b.den_)
        return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    if (a.den_.is_one() && b.den_.is_one())
        return RationalFunction::from_poly(a.num_ * b.num_);
    // Cross-cancel first; the four reduced parts are pairwise coprime, so the
    // assembled product is already canonical (monic lowest-exponent-0 dens
    // stay that way under multiplication).
    RationalFunction x(a.num_, b.den_);
    RationalFunction y(b.num_, a.den_);
    return RationalFunction(RationalFunction::raw_tag{}, x.num_ * y.num_, x.den_ * y.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw division_error("inversion of zero rational function");
    return RationalFunction(den_, num_);
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Rational RationalFunction::eval(const Rational& q0) const {
    if (is_zero()) return Rational(0);
    Rational d = den_.eval(q0);
    if (d == 0) throw pole_error("pole at q0 = " + rational_str(q0));
    return num_.eval(q0) / d;
}

RationalFunction rf_normalize(const LaurentPoly& num, const LaurentPoly& den) {
    return RationalFunction(num, den);
}

Rational rf_specialize(const RationalFunction& f, const Rational& q0) {
    return f.eval(q0);
}

} // namespace recalc
