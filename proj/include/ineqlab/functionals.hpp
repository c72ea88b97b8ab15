#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ineqlab/deficit.hpp"
#include "ineqlab/test_function.hpp"

namespace ineqlab::functionals {

struct GaussQuadSpec {
    int nodes_per_axis = 80;
    int tensor_dim_limit = 3;
    long mc_fallback = 0;        // sample count for d > tensor_dim_limit; 0 = unsupported
    std::uint64_t mc_seed = 0x5eedULL;
    bool parallel = true;        // OpenMP over node chunks (serial reference for tests)
};

// Tensorized Gauss-Hermite expectation against the standard Gaussian measure.
double gauss_expect(int dim, const std::function<double(const double*)>& g,
                    const GaussQuadSpec& spec = {});

// Cached node evaluation of one test function: f and |grad f|^2 on the full
// tensor grid, so the many functionals of one f reduce to cheap weighted sums.
class FunctionGrid {
  public:
    FunctionGrid(const TestFunction& f, const GaussQuadSpec& spec);

    const TestFunction& function() const { return f_; }
    const GaussQuadSpec& spec() const { return spec_; }

    double expect_power(double p) const;       // E[f^p]
    double expect_flogf() const;               // E[f log f]
    double expect_power_gradsq(double r) const;// E[f^r |grad f|^2]
    double expect_grad_norm(double p) const;   // E[|grad f|^p]
    std::vector<double> mean_gradient() const; // E[grad f], d entries
    std::vector<double> mean_hessian() const;  // E[hess f], d^2 entries row-major

  private:
    template <class PerNode>
    double reduce(PerNode&& per_node) const;

    TestFunction f_;
    GaussQuadSpec spec_;
    int dim_;
    long total_nodes_ = 0;
    std::vector<double> axis_x_;   // sqrt(2) * Hermite nodes
    std::vector<double> axis_w_;   // Hermite weights / sqrt(pi) (sum to 1)
    std::vector<double> fval_;
    std::vector<double> gradsq_;
};

// Memoizing wrapper around one test function; all checks below share it.
class FunctionAnalyzer {
  public:
    FunctionAnalyzer(const TestFunction& f, const GaussQuadSpec& spec);

    const TestFunction& function() const { return grid_.function(); }
    const FunctionGrid& grid() const { return grid_; }

    double norm_p(double p);          // ||f||_p
    double power_mean(double p);      // E[f^p]
    double i_p(double p);
    double grad_energy(double r);     // ||f^r |grad f|^2||_1
    double grad_norm(double p);       // || |grad f| ||_p
    std::vector<double> mean_gradient();
    std::vector<double> mean_hessian();

  private:
    FunctionGrid grid_;
    std::map<double, double> power_memo_;
    std::map<double, double> energy_memo_;
    double flogf_ = 0.0;
    bool have_flogf_ = false;
};

// ---- spec-level operations -------------------------------------------------

double heat_evolved_value(const TestFunction& f, double s, const double* x);

double i_p(const TestFunction& f, double p, const GaussQuadSpec& spec = {});
double grad_energy(const TestFunction& f, double r, const GaussQuadSpec& spec = {});

struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    std::string inputs;
    double deficit() const { return rhs - lhs; }
    bool pass() const { return deficit() >= -tolerance; }
};

std::vector<InequalityReport> check_beckner_family(const TestFunction& f, double p,
                                                   const GaussQuadSpec& quad = {},
                                                   const deficit::QuadratureSpec& dspec = {});
InequalityReport check_hoelder(const TestFunction& f, double p, double q,
                               const GaussQuadSpec& quad = {});
std::vector<InequalityReport> check_classic(const TestFunction& f,
                                            const GaussQuadSpec& quad = {});
std::vector<InequalityReport> check_poincare_improved(const TestFunction& f,
                                                      const GaussQuadSpec& quad = {});

// Analyzer-based variants used by the corpus sweep (share one grid).
std::vector<InequalityReport> beckner_reports(FunctionAnalyzer& a, double p,
                                              const deficit::QuadratureSpec& dspec);
InequalityReport hoelder_report(FunctionAnalyzer& a, double p, double q);
std::vector<InequalityReport> classic_reports(FunctionAnalyzer& a);
std::vector<InequalityReport> poincare_improved_reports(FunctionAnalyzer& a);

// The fixed seeded corpus of 100 test functions (recorded as data in the
// repository) and the indices designated for Monte Carlo grade runs.
std::vector<TestFunction> standard_corpus();
std::vector<int> mc_grade_indices();

}  // namespace ineqlab::functionals
