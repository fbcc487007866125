#ifndef RECALC_ERRORS_HPP
#define RECALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recalc {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing Exact and Specialized scalars, or two different specialization points.
struct mode_error : error {
    explicit mode_error(const std::string& msg) : error(msg) {}
};

// Denominator vanishes at the requested evaluation point.
struct pole_error : error {
    explicit pole_error(const std::string& msg) : error(msg) {}
};

// Division by zero / inversion of zero.
struct division_error : error {
    explicit division_error(const std::string& msg) : error(msg) {}
};

// A guard rejected the request: root-of-unity specialization, degree caps,
// dimension caps.  Reported as "skipped" by the driver rather than "error".
struct guard_error : error {
    explicit guard_error(const std::string& msg) : error(msg) {}
};

// A linear system that the theory promises solvable turned out singular
// (e.g. a non-skew-invertible input operator).
struct singular_error : error {
    explicit singular_error(const std::string& msg) : error(msg) {}
};

// Incompatible shapes: dimension or site-count mismatch, index out of range.
struct shape_error : error {
    explicit shape_error(const std::string& msg) : error(msg) {}
};

// Malformed text input (scalar literals, partitions, config values).
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

} // namespace recalc

#endif
