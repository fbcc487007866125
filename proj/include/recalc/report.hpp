#ifndef RECALC_REPORT_HPP
#define RECALC_REPORT_HPP

#include <string>
#include <vector>

namespace recalc {

struct CheckResult {
    std::string suite;
    std::string name;
    std::string params;
    std::string status;     // pass | fail | skipped | error
    std::string witness;    // reason or counterexample on non-pass; notes on pass
    std::string qmode;      // "exact" | "q0=p/q"
    double ms = 0.0;
    uint64_t seed = 0;
};

struct Report {
    std::string rmatrix;
    std::string qmode;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;          // no fail and no error
    int count(const std::string& status) const;

    std::string to_json() const;
    static Report from_json(const std::string& text);
    std::string to_text() const;
};

} // namespace recalc

#endif
