#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ineqlab/functionals.hpp"

namespace ineqlab::report {

// One verification outcome.  `kind` records how pass was judged:
//   identity   : |lhs - rhs| <= tolerance
//   inequality : rhs - lhs >= -tolerance
//   se         : |lhs - rhs| <= tolerance (tolerance = 3(SE + discretization))
struct Row {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    std::string kind = "identity";
    bool pass = false;

    double deficit() const { return rhs - lhs; }
};

Row identity_row(std::string name, double lhs, double rhs, double tol);
Row inequality_row(std::string name, double lhs, double rhs, double tol);
Row se_row(std::string name, double lhs, double rhs, double tol);
Row from_inequality(const functionals::InequalityReport& r);

bool all_pass(const std::vector<Row>& rows);

nlohmann::json to_json(const std::vector<Row>& rows);
std::vector<Row> rows_from_json(const nlohmann::json& j);

// JSON is the canonical format; CSV is a fixed-column projection
// (name,lhs,rhs,deficit,tolerance_or_se,pass).  Doubles are rendered with 17
// significant digits so identical runs produce identical bytes.
void write_json(const std::string& path, const std::vector<Row>& rows);
void write_csv(const std::string& path, const std::vector<Row>& rows);
std::vector<Row> read_json(const std::string& path);

// Run manifest: the single on-disk configuration document.
struct RunManifest {
    std::string suite;              // identities | inequalities | mc
    std::string corpus = "standard";
    std::uint64_t seed = 1;
    std::size_t paths = 100000;
    int steps = 1024;
    int threads = 0;                // 0 = library default
    std::string output_json;
    std::string output_csv;
    double tolerance_scale = 1.0;

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);  // unknown keys rejected
};

}  // namespace ineqlab::report
