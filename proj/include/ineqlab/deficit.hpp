#pragma once

#include <vector>

#include "ineqlab/errors.hpp"
#include "ineqlab/specfun.hpp"

namespace ineqlab::deficit {

// Exponent data for the improved Beckner deficit F_p.  The guard band keeps
// the quadrature well conditioned: as p -> 4/3 the constant C_p vanishes and
// the v-singularity exponent approaches -1 (the p = 4/3 case is served by the
// closed form s^2/2 instead).
struct BecknerParams {
    double p;
    double nu;           // -1/(2(p-1)), in (-3/2,-1/2)
    double c_p;          // 1/(Gamma(3/2-nu) Gamma(nu+3/2))
    double c_p_prime;    // 2^{1/(2(p-1))} / (sqrt(pi) Gamma((3p-4)/(2(p-1))))
    static BecknerParams make(double p);
    static constexpr double p_min = 4.0 / 3.0 + 1e-3;
    static constexpr double p_max = 2.0 - 1e-3;
};

// Exponent data for the Hoelder-type deficit J.
struct HoelderParams {
    double p;
    double q;            // q > p > 0
    double nu_prime;     // -1/q
    double c_pq;         // constant in the definition of J
    double c_pq_prime;   // constant in the alternative representation of V
    static HoelderParams make(double p, double q);
};

// Node counts and truncation radii for the three quadrature regimes: the
// lambda-integrals (phi and the inner kernels), the kinked v-integrals, and
// semi-infinite Bessel integrals.
struct QuadratureSpec {
    int kink_nodes = 48;      // Gauss-Jacobi nodes at the kink / power endpoints
    int panel_nodes = 24;     // Gauss-Legendre nodes per graded or log panel
    double panel_ln_width = 0.6;
    double lambda_max = 60.0; // truncation of Bessel-kernel integrals
    double rel_tol = 1e-11;
    long max_evals = 8'000'000;
    bool check_convergence = false;  // re-evaluate at doubled resolution, throw on mismatch
};

struct EvalInfo {
    long evaluations = 0;
    double tail_bound = 0.0;
};

struct DeficitGrid {
    std::vector<double> s_values;
    std::vector<double> x_values;
    double finite_difference_step = 1e-3;
    void validate() const;
};

// phi(v) = int_0^inf lambda e^{-lambda} exp(-(v/2) lambda^2) dlambda,
// evaluated by quadrature (the primary path everywhere).
double phi(double v, const QuadratureSpec& spec = {});

// Closed form of phi assembled from the erfc evaluation of the resolvent
// identity; kept as an independent oracle, never used by the primary path.
double phi_erfc_form(double v);

// Both sides of the resolvent identity
//   (2/sqrt(pi)) int_0^inf sqrt(eta) e^{-eta} / (1+v eta) deta
//     = int_0^inf lambda e^{-lambda} exp(-(v/4) lambda^2) dlambda
// by independent quadratures, plus its erfc closed form.
struct InrdSides {
    double lhs;
    double rhs;
    double erfc_form;
};
InrdSides inrd_identity(double v, const QuadratureSpec& spec = {});
double inrd_identity_gap(double v, const QuadratureSpec& spec = {});

// The improvement function F(s,x) of the Beckner deficit.
double big_f(const BecknerParams& par, double s, double x, const QuadratureSpec& spec = {},
             EvalInfo* info = nullptr);

// Alternative representation of U(z) = F(z,1) through the Bessel kernel
// integral; independent route used to cross-validate big_f.
double u_alt(const BecknerParams& par, double z, const QuadratureSpec& spec = {});
// Inner kernel int_0^inf lambda^{nu+2} K_nu(lambda) exp(-(p-1)^2 v lambda^2 / 2) dlambda.
double u_alt_kernel(const BecknerParams& par, double v, const QuadratureSpec& spec = {});

// int_0^inf lambda^power K_order(lambda) exp(-a lambda^2) dlambda by direct
// quadrature of the Bessel kernel; requires power - |order| > -1.
double besselk_power_integral(double order, double power, double a,
                              const QuadratureSpec& spec = {});

// C_p' * int_0^inf lambda^{nu+2} K_nu(lambda) dlambda; contract: equals 1.
double cpd_normalization(const BecknerParams& par);

// Relative gap of the two Laplace-transform evaluations of U.
double laplace_gap_u(const BecknerParams& par, double alpha, const QuadratureSpec& spec = {},
                     EvalInfo* info = nullptr);

// Central-difference residual of  F_s x^{2p-4} + (1/2) F_xx = x^{-p} s.
double pde_residual_f(const BecknerParams& par, double s, double x, double h,
                      const QuadratureSpec& spec = {});

// Large-s limit constant of F(s,x)/s^{p/(2(p-1))} and the finite-s ratio.
double f_asymptotic_constant(double p);
double f_asymptotic_ratio(const BecknerParams& par, double s, double x,
                          const QuadratureSpec& spec = {});

// The Hoelder improvement function J(s,x) and its x=1 section V.
double j_fun(const HoelderParams& par, double s, double x, const QuadratureSpec& spec = {},
             EvalInfo* info = nullptr);
double v_alt(const HoelderParams& par, double z, const QuadratureSpec& spec = {});
double v_alt_kernel(const HoelderParams& par, double u, const QuadratureSpec& spec = {});

// C'_{p,nu'} * int_0^inf lambda^{(2p-1)nu'+1} K_{nu'}(lambda) dlambda; equals 1.
double cpnubdd_normalization(const HoelderParams& par);

// Upper bound (2 Gamma(1+1/q) / (p Gamma(1+1/q-p/q))) (q^2/2)^{p/q} s^{p/q}.
double j_upper_bound(const HoelderParams& par, double s);

// Central-difference residual of  J_s x^{q-2} + (1/2) J_xx = x^{p-2}.
double pde_residual_j(const HoelderParams& par, double s, double x, double h,
                      const QuadratureSpec& spec = {});

// Constant of the Hoelder-type inequality among I_p functionals.
double hoelder_constant(double p, double q);

// Closed-form deficit functions for p = 4/3 (s^2/2) and p = 6/5
// (x^{2/5}s^2/2 + s^3/50), with analytic PDE residuals.
bool has_closed_form(double p);
double closed_form_f(double p, double s, double x);
double closed_form_pde_residual(double p, double s, double x);

// Finite-difference residual of the heat-kernel equation
//   g_s + (1/2) g_yy + ((2nu+1)/(2y)) g_y = 0  for  g = y^{-nu} K_nu(lambda y) e^{-lambda^2 s/2}.
double heat_kernel_pde_residual(double order, double s, double y, double lambda, double h,
                                const specfun::Config& cfg = {});
// Residual of (d^2/dz^2 + (2nu+1)/z d/dz){z^{-nu}K_nu(z)} = z^{-nu}K_nu(z), relative.
double bessel_ode_residual(double order, double z, double h, const specfun::Config& cfg = {});
// Gap of d/dz{z^{-mu}K_mu(z)} = -z^{-mu}K_{mu+1}(z), relative.
double bessel_k_derivative_identity_gap(double order, double z, double h,
                                        const specfun::Config& cfg = {});

}  // namespace ineqlab::deficit
