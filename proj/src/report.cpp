#include "ineqlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace ineqlab::report {

Row identity_row(std::string name, double lhs, double rhs, double tol) {
    Row r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    r.kind = "identity";
    r.pass = std::abs(lhs - rhs) <= tol;
    return r;
}

Row inequality_row(std::string name, double lhs, double rhs, double tol) {
    Row r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    r.kind = "inequality";
    r.pass = (rhs - lhs) >= -tol;
    return r;
}

Row se_row(std::string name, double lhs, double rhs, double tol) {
    Row r = identity_row(std::move(name), lhs, rhs, tol);
    r.kind = "se";
    return r;
}

Row from_inequality(const functionals::InequalityReport& r) {
    return inequality_row(r.name, r.lhs, r.rhs, r.tolerance);
}

bool all_pass(const std::vector<Row>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

namespace {
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

nlohmann::json to_json(const std::vector<Row>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["name"] = r.name;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["deficit"] = r.deficit();
        j["tolerance_or_se"] = r.tolerance;
        j["kind"] = r.kind;
        j["pass"] = r.pass;
        arr.push_back(j);
    }
    return nlohmann::json{{"reports", arr}};
}

std::vector<Row> rows_from_json(const nlohmann::json& j) {
    std::vector<Row> rows;
    for (const auto& e : j.at("reports")) {
        Row r;
        r.name = e.at("name").get<std::string>();
        r.lhs = e.at("lhs").get<double>();
        r.rhs = e.at("rhs").get<double>();
        r.tolerance = e.at("tolerance_or_se").get<double>();
        r.kind = e.at("kind").get<std::string>();
        r.pass = e.at("pass").get<bool>();
        rows.push_back(r);
    }
    return rows;
}

void write_json(const std::string& path, const std::vector<Row>& rows) {
    std::ofstream os(path);
    if (!os) throw config_error("cannot open for writing: " + path);
    os << to_json(rows).dump(2) << "\n";
}

void write_csv(const std::string& path, const std::vector<Row>& rows) {
    std::ofstream os(path);
    if (!os) throw config_error("cannot open for writing: " + path);
    os << "name,lhs,rhs,deficit,tolerance_or_se,pass\n";
    for (const auto& r : rows)
        os << r.name << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs) << ',' << fmt17(r.deficit())
           << ',' << fmt17(r.tolerance) << ',' << (r.pass ? "true" : "false") << "\n";
}

std::vector<Row> read_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error("cannot open report file: " + path);
    nlohmann::json j;
    is >> j;
    return rows_from_json(j);
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["corpus"] = corpus;
    j["seed"] = seed;
    j["paths"] = paths;
    j["steps"] = steps;
    j["threads"] = threads;
    j["output_json"] = output_json;
    j["output_csv"] = output_csv;
    j["tolerance_scale"] = tolerance_scale;
    return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
    static const char* allowed[] = {"suite",   "corpus",      "seed",       "paths",          "steps",
                                    "threads", "output_json", "output_csv", "tolerance_scale"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw config_error("RunManifest: unknown key '" + it.key() + "'");
    }
    RunManifest m;
    m.suite = j.at("suite").get<std::string>();
    if (j.contains("corpus")) m.corpus = j.at("corpus").get<std::string>();
    if (j.contains("seed")) m.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("paths")) m.paths = j.at("paths").get<std::size_t>();
    if (j.contains("steps")) m.steps = j.at("steps").get<int>();
    if (j.contains("threads")) m.threads = j.at("threads").get<int>();
    if (j.contains("output_json")) m.output_json = j.at("output_json").get<std::string>();
    if (j.contains("output_csv")) m.output_csv = j.at("output_csv").get<std::string>();
    if (j.contains("tolerance_scale")) m.tolerance_scale = j.at("tolerance_scale").get<double>();
    return m;
}

}  // namespace ineqlab::report
