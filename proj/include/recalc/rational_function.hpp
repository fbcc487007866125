#ifndef RECALC_RATIONAL_FUNCTION_HPP
#define RECALC_RATIONAL_FUNCTION_HPP

#include <string>

#include "recalc/laurent.hpp"

namespace recalc {

// Element of Q(q) in canonical form: num/den coprime after factoring the
// q-power of num out as its Laurent offset, den has lowest exponent 0 and
// leading coefficient 1.  Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(LaurentPoly::one()) {}
    RationalFunction(LaurentPoly num, LaurentPoly den);   // normalizes
    static RationalFunction from_poly(LaurentPoly p);
    static RationalFunction constant(const Rational& c);
    static RationalFunction q() { return from_poly(LaurentPoly::q()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
    RationalFunction operator-() const;
    RationalFunction inverse() const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    std::string str() const;

    // Exact value at q = q0; throws pole_error when den(q0) = 0.
    Rational eval(const Rational& q0) const;

private:
    struct raw_tag {};
    RationalFunction(raw_tag, LaurentPoly num, LaurentPoly den)
        : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

// Canonical reduced form of num/den (the constructor, exposed by name).
RationalFunction rf_normalize(const LaurentPoly& num, const LaurentPoly& den);

// Exact specialization at a rational point.
Rational rf_specialize(const RationalFunction& f, const Rational& q0);

} // namespace recalc

#endif
