#pragma once

#include <string>
#include <vector>

#include "ineqlab/deficit.hpp"
#include "ineqlab/functionals.hpp"
#include "ineqlab/report.hpp"
#include "ineqlab/stochastic.hpp"

namespace ineqlab::suites {

// Scalar special-function identity battery (gamma relations, Bessel symmetry,
// monotonicity, moment-vs-quadrature cross checks).
std::vector<report::Row> specfun_suite(double tolerance_scale = 1.0);

// Deterministic identity battery for the deficit functions: normalizations,
// the resolvent identity, representation equivalence, Laplace transforms,
// PDE residuals, asymptotics and constant limits.
std::vector<report::Row> identity_suite(const deficit::QuadratureSpec& spec = {});

// Inequality battery for one test function and for a whole corpus.
std::vector<report::Row> inequality_battery(const functionals::TestFunction& f,
                                            const std::string& label,
                                            const functionals::GaussQuadSpec& quad,
                                            const deficit::QuadratureSpec& dspec = {});
std::vector<report::Row> inequality_suite(const std::vector<functionals::TestFunction>& corpus,
                                          bool parallel = true);

// Per-dimension Gauss-Hermite resolution used by the corpus sweeps.
functionals::GaussQuadSpec corpus_quad_spec(int dimension, bool parallel = true);

// Monte Carlo identity battery for one function; `label` tags row names.
std::vector<report::Row> mc_suite(const functionals::TestFunction& f, const std::string& label,
                                  const stochastic::McConfig& cfg);

// The acceptance-grade run: the designated corpus functions at full scale.
std::vector<report::Row> mc_suite_standard(std::uint64_t seed, std::size_t paths, int steps,
                                           bool parallel = true);

}  // namespace ineqlab::suites
