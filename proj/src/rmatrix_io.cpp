#include "recalc/rmatrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace recalc {

namespace {

TensorOp from_json(const nlohmann::json& j, const QMode& mode) {
    if (!j.is_object() || !j.contains("N") || !j.contains("entries"))
        throw parse_error("operator file needs fields \"N\" and \"entries\"");
    int N = j.at("N").get<int>();
    if (N < 1) throw parse_error("operator file: N must be positive");
    TensorOp R(N, 2, mode);
    for (const auto& e : j.at("entries")) {
        auto rp = e.at("row_pair");
        auto cp = e.at("col_pair");
        int ri = rp.at(0).get<int>(), rj = rp.at(1).get<int>();
        int ci = cp.at(0).get<int>(), cj = cp.at(1).get<int>();
        for (int v : {ri, rj, ci, cj})
            if (v < 1 || v > N) throw parse_error("operator file: pair index out of range");
        Scalar val = parse_scalar(e.at("value").get<std::string>(), mode);
        R.add_to(uint32_t(N * (ri - 1) + (rj - 1)), uint32_t(N * (ci - 1) + (cj - 1)), val);
    }
    return R;
}

} // namespace

TensorOp parse_rmatrix_json(const std::string& text, const QMode& mode) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("operator file: ") + e.what());
    }
    try {
        return from_json(j, mode);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("operator file: ") + e.what());
    }
}

TensorOp load_rmatrix_json(const std::string& path, const QMode& mode) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open operator file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_rmatrix_json(ss.str(), mode);
}

std::string rmatrix_to_json(const TensorOp& R) {
    if (R.sites() != 2) throw shape_error("rmatrix_to_json expects a 2-site operator");
    nlohmann::ordered_json j;
    int N = R.dim();
    j["N"] = N;
    j["entries"] = nlohmann::ordered_json::array();
    for (auto& [k, v] : R.entries()) {
        nlohmann::ordered_json e;
        e["row_pair"] = {int(k.first) / N + 1, int(k.first) % N + 1};
        e["col_pair"] = {int(k.second) / N + 1, int(k.second) % N + 1};
        e["value"] = v.str();
        j["entries"].push_back(e);
    }
    return j.dump(2);
}

} // namespace recalc
