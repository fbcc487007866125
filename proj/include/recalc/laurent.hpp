#ifndef RECALC_LAURENT_HPP
#define RECALC_LAURENT_HPP

#include <string>
#include <vector>

#include "recalc/rational.hpp"

namespace recalc {

// Laurent polynomial in q with rational coefficients, stored densely over
// the exponent range [lo, lo + coeffs.size()).  Invariants: coeffs is empty
// iff the polynomial is zero; otherwise the first and last stored
// coefficients are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(const Rational& c);
    static LaurentPoly monomial(long exp, const Rational& c);
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly q() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const { return coeffs_.size() <= 1 && lo_ == 0; }

    long lo() const { return lo_; }                       // valid if nonzero
    long hi() const { return lo_ + long(coeffs_.size()) - 1; }
    const Rational& coeff(long exp) const;                // 0 outside range
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    LaurentPoly shifted(long s) const;                    // multiply by q^s

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }

    bool operator==(const LaurentPoly& o) const {
        return lo_ == o.lo_ && coeffs_ == o.coeffs_;
    }

    LaurentPoly scaled(const Rational& c) const;

    // Evaluation at a rational point; q0 must be nonzero when lo < 0.
    Rational eval(const Rational& q0) const;

    // Leading coefficient = coefficient of the highest exponent.
    const Rational& leading() const;

    std::string str() const;

    // Ordinary-polynomial helpers (used by gcd / division); both arguments
    // are treated as shifted to lowest exponent 0 internally.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    // Exact division; throws division_error when the remainder is nonzero.
    static LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den);

    // Division with remainder on ordinary polynomials (lo >= 0 required).
    static void div_rem(const LaurentPoly& num, const LaurentPoly& den,
                        LaurentPoly& quot, LaurentPoly& rem);

private:
    void trim();

    long lo_ = 0;
    std::vector<Rational> coeffs_;
};

} // namespace recalc

#endif
