#ifndef RECALC_SUITES_HPP
#define RECALC_SUITES_HPP

#include <functional>
#include <optional>

#include "recalc/char_subalgebra.hpp"
#include "recalc/report.hpp"

namespace recalc {

struct RunConfig {
    std::string rmatrix = "standard:2";   // standard:N | flip:N | super:m,n | file:PATH
    std::string qmode = "exact";          // exact | specialized:Q0 | random
    uint64_t seed = 1;
    int qcount = 3;                       // random specializations per run
    std::vector<std::string> checks{"all"};
    std::optional<int> max_m_degree;
    std::optional<int> max_del_degree;
    int jobs = 1;
    std::string json_out;
    bool q1_pole_is_error = false;        // classical-limit poles of file operators
};

// One arithmetic instance of a run: the operator in a concrete mode plus a
// lazily built double shared by the suites of that instance.
class SuiteContext {
public:
    SuiteContext(const RunConfig& cfg, TensorOp R, std::string qmode_label, bool from_file);

    const RunConfig& config() const { return cfg_; }
    const TensorOp& R() const { return R_; }
    const QMode& mode() const { return R_.mode(); }
    const std::string& qmode_label() const { return label_; }
    bool from_file() const { return from_file_; }

    // Throws whatever the double construction throws (singular operators).
    QuantumDouble& qd() const;

private:
    const RunConfig& cfg_;
    TensorOp R_;
    std::string label_;
    bool from_file_;
    mutable std::mutex mu_;
    mutable std::unique_ptr<QuantumDouble> qd_;
};

using SuiteFn = std::function<std::vector<CheckResult>(const SuiteContext&)>;

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Statement verified by a suite, with its display labels.
std::string explain_suite(const std::string& name);   // throws parse_error

Report run(const RunConfig& cfg);

// Deterministic generic rational points drawn from a seed: numerator and
// denominator bounded by 100, |q0| not in {0, 1}.
std::vector<Rational> draw_q_points(uint64_t seed, int count);

} // namespace recalc

#endif
