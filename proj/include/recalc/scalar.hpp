#ifndef RECALC_SCALAR_HPP
#define RECALC_SCALAR_HPP

#include <memory>
#include <string>

#include "recalc/rational_function.hpp"

namespace recalc {

// Arithmetic mode shared by every scalar of one computation: either fully
// exact over Q(q), or specialized at a fixed rational point q0 != 0.
// Specialization points are interned, so copies are trivial.
class QMode {
public:
    QMode() = default;                                    // exact
    static QMode exact() { return QMode(); }
    static QMode at(const Rational& q0);

    bool is_exact() const { return q0_ == nullptr; }
    const Rational& q0() const;

    bool same(const QMode& o) const;
    // Throws mode_error unless both modes agree.
    void require_same(const QMode& o) const;

    // Throws guard_error unless exact or q0 passes the generic-point guard.
    void require_generic(int cap = 24) const;

    std::string key() const;                              // "exact" | "q0=p/q"

private:
    const Rational* q0_ = nullptr;                        // interned, never freed
};

// The coefficient field element.  In Exact mode it is a rational function of
// q; in Specialized mode it is the exact rational value at the shared q0.
class Scalar {
public:
    Scalar() : Scalar(QMode::exact()) {}                  // exact zero
    explicit Scalar(QMode mode);

    static Scalar zero(const QMode& m) { return Scalar(m); }
    static Scalar one(const QMode& m) { return integer(1, m); }
    static Scalar integer(long v, const QMode& m);
    static Scalar rational(const Rational& v, const QMode& m);
    static Scalar q(const QMode& m) { return q_power(1, m); }
    static Scalar q_power(long e, const QMode& m);
    static Scalar from_rf(RationalFunction f);            // exact mode

    const QMode& mode() const { return mode_; }
    bool is_zero() const;
    bool is_one() const;

    // Exact-mode payload; throws mode_error in specialized mode.
    const RationalFunction& rf() const;
    // Specialized-mode payload; throws mode_error in exact mode.
    const Rational& value() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar inverse() const;                               // throws on zero
    Scalar& operator+=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Exact value at q0 (exact mode: evaluates; specialized mode: returns the
    // stored value, requiring the stored q0 to match).
    Rational specialize(const Rational& q0) const;

    // Rebuild this scalar in Specialized mode at q0 (exact mode input).
    Scalar specialized_at(const Rational& q0) const;

    std::string str() const;

private:
    QMode mode_;
    RationalFunction rf_;                                 // exact payload
    Rational val_;                                        // specialized payload
};

// Parses the scalar literal grammar: integers, `q`, + - * / ^, parentheses,
// `^` accepting negative integer exponents.  Examples: "q - q^-1",
// "(q^2-1)/(q+1)", "3/5".
Scalar parse_scalar(const std::string& text, const QMode& mode);

} // namespace recalc

#endif
