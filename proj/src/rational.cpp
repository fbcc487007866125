#include "recalc/rational.hpp"

namespace recalc {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw parse_error("bad rational literal: " + text);
    }
    try {
        Rational r(text);
        r.canonicalize();
        if (r.get_den() == 0) throw parse_error("zero denominator: " + text);
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal: " + text);
    }
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw division_error("0 raised to a negative power");
    Rational base = e < 0 ? Rational(r.get_den(), r.get_num()) : r;
    if (e < 0) base.canonicalize();
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    Rational sq = base;
    while (n) {
        if (n & 1) acc *= sq;
        sq *= sq;
        n >>= 1;
    }
    return acc;
}

bool is_generic_point(const Rational& q0, int cap) {
    if (q0 == 0) return false;
    Rational p(1);
    for (int n = 1; n <= cap; ++n) {
        p *= q0;
        if (p == 1) return false;
    }
    return true;
}

} // namespace recalc
