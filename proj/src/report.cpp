#include "recalc/report.hpp"

#include <sstream>

#include <json.hpp>

#include "recalc/errors.hpp"

namespace recalc {

bool Report::all_passed() const {
    for (const CheckResult& c : checks)
        if (c.status == "fail" || c.status == "error") return false;
    return true;
}

int Report::count(const std::string& status) const {
    int n = 0;
    for (const CheckResult& c : checks)
        if (c.status == status) ++n;
    return n;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["rmatrix"] = rmatrix;
    j["qmode"] = qmode;
    j["seed"] = seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        nlohmann::ordered_json e;
        e["suite"] = c.suite;
        e["name"] = c.name;
        e["params"] = c.params;
        e["status"] = c.status;
        e["witness"] = c.witness;
        e["qmode"] = c.qmode;
        e["ms"] = c.ms;
        e["seed"] = c.seed;
        j["checks"].push_back(e);
    }
    nlohmann::ordered_json summary;
    for (const char* s : {"pass", "fail", "skipped", "error"})
        summary[s] = count(s);
    j["summary"] = summary;
    return j.dump(2);
}

Report Report::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        Report r;
        r.rmatrix = j.at("rmatrix").get<std::string>();
        r.qmode = j.at("qmode").get<std::string>();
        r.seed = j.at("seed").get<uint64_t>();
        for (const auto& e : j.at("checks")) {
            CheckResult c;
            c.suite = e.at("suite").get<std::string>();
            c.name = e.at("name").get<std::string>();
            c.params = e.at("params").get<std::string>();
            c.status = e.at("status").get<std::string>();
            c.witness = e.at("witness").get<std::string>();
            c.qmode = e.at("qmode").get<std::string>();
            c.ms = e.at("ms").get<double>();
            c.seed = e.at("seed").get<uint64_t>();
            r.checks.push_back(std::move(c));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("report: ") + e.what());
    }
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const CheckResult& c : checks) {
        std::string tag = c.status == "pass"      ? "PASS"
                          : c.status == "fail"    ? "FAIL"
                          : c.status == "skipped" ? "SKIP"
                                                  : "ERROR";
        os << "[" << tag << "] " << c.suite << "/" << c.name;
        if (!c.params.empty()) os << " (" << c.params << ")";
        os << " {" << c.qmode << "}";
        os << "  " << int(c.ms) << "ms";
        if (!c.witness.empty()) os << "\n        " << c.witness;
        os << "\n";
    }
    os << "summary: " << count("pass") << " pass, " << count("fail") << " fail, "
       << count("skipped") << " skipped, " << count("error") << " error\n";
    return os.str();
}

} // namespace recalc
