#include "recalc/laurent.hpp"

#include <sstream>

namespace recalc {

namespace {
const Rational kZero(0);
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
    return monomial(0, c);
}

LaurentPoly LaurentPoly::monomial(long exp, const Rational& c) {
    LaurentPoly p;
    if (c != 0) {
        p.lo_ = exp;
        p.coeffs_.push_back(c);
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return lo_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

const Rational& LaurentPoly::coeff(long exp) const {
    if (is_zero() || exp < lo_ || exp > hi()) return kZero;
    return coeffs_[size_t(exp - lo_)];
}

LaurentPoly LaurentPoly::shifted(long s) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.lo_ += s;
    return p;
}

void LaurentPoly::trim() {
    size_t front = 0;
    while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
    if (front == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    size_t back = coeffs_.size();
    while (back > front && coeffs_[back - 1] == 0) --back;
    if (front > 0 || back < coeffs_.size()) {
        coeffs_ = std::vector<Rational>(coeffs_.begin() + front, coeffs_.begin() + back);
        lo_ += long(front);
    }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.lo_, b.lo_);
    long hi = std::max(a.hi(), b.hi());
    LaurentPoly r;
    r.lo_ = lo;
    r.coeffs_.assign(size_t(hi - lo + 1), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[size_t(a.lo_ - lo) + i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[size_t(b.lo_ - lo) + i] += b.coeffs_[i];
    r.trim();
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.lo_ = a.lo_ + b.lo_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0) return LaurentPoly();
    LaurentPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
    if (is_zero()) return Rational(0);
    if (q0 == 0) {
        if (lo_ < 0) throw pole_error("evaluation of a negative q-power at q=0");
        return coeff(0);
    }
    // Horner over the shifted polynomial, then restore the q^lo factor.
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * q0 + coeffs_[i];
    }
    return acc * rational_pow(q0, lo_);
}

const Rational& LaurentPoly::leading() const {
    if (is_zero()) throw division_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        long e = lo_ + long(i);
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (e == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

void LaurentPoly::div_rem(const LaurentPoly& num, const LaurentPoly& den,
                          LaurentPoly& quot, LaurentPoly& rem) {
    if (den.is_zero()) throw division_error("polynomial division by zero");
    if (num.lo_ < 0 || den.lo_ < 0)
        throw division_error("div_rem expects ordinary polynomials");
    quot = LaurentPoly();
    rem = num;
    long dd = den.hi();
    const Rational& lead = den.leading();
    while (!rem.is_zero() && rem.hi() >= dd) {
        long shift = rem.hi() - dd;
        Rational f = rem.leading() / lead;
        quot = quot + LaurentPoly::monomial(shift, f);
        rem = rem - den.shifted(shift).scaled(f);
    }
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    // Shift to ordinary polynomials with nonzero constant term; common
    // q-power factors are not part of the gcd by convention.
    LaurentPoly r0 = a.is_zero() ? a : a.shifted(-a.lo_);
    LaurentPoly r1 = b.is_zero() ? b : b.shifted(-b.lo_);
    while (!r1.is_zero()) {
        LaurentPoly q, r;
        div_rem(r0, r1, q, r);
        r0 = r1;
        r1 = r;
        if (!r1.is_zero()) r1 = r1.scaled(Rational(1) / r1.leading());   // monic, tames growth
    }
    if (!r0.is_zero()) {
        r0 = r0.shifted(-r0.lo_);
        r0 = r0.scaled(Rational(1) / r0.leading());
    }
    return r0;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw division_error("exact division by zero");
    if (num.is_zero()) return LaurentPoly();
    LaurentPoly n0 = num.shifted(-num.lo_);
    LaurentPoly d0 = den.shifted(-den.lo_);
    LaurentPoly q, r;
    div_rem(n0, d0, q, r);
    if (!r.is_zero()) throw division_error("inexact polynomial division");
    return q.shifted(num.lo_ - den.lo_);
}

} // namespace recalc
