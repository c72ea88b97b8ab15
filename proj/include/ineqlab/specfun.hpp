#pragma once

#include "ineqlab/errors.hpp"

namespace ineqlab::specfun {

// Scalar special-function configuration.  The truncation policy for the
// semi-infinite Bessel quadrature is: expand the integration window until the
// log-integrand falls tail_log_margin below log(peak) + log(rel_tol); doubling
// the margin must change results by less than rel_tol (tested).
struct Config {
    double rel_tol = 1e-12;
    long max_quadrature_nodes = 200000;
    double tail_log_margin = 23.0;

    void validate() const {
        if (!(rel_tol > 0.0) || !(rel_tol < 1e-6))
            throw config_error("specfun::Config: rel_tol must lie in (0, 1e-6)");
        if (max_quadrature_nodes < 64)
            throw config_error("specfun::Config: max_quadrature_nodes too small");
    }
};

// Gamma function on (0, inf).
double gamma(double z);
double log_gamma(double z);

// Unnormalized upper Gaussian integral: int_a^inf exp(-z^2) dz, a >= 0.
double erfc_upper(double a);

// Modified Bessel function of the third kind K_mu(x), real order, x > 0.
// Evaluated by trapezoidal quadrature of the exponential-substituted integral
// representation K_mu(x) = (1/2)(x/2)^mu int exp(-mu t - e^t - x^2 e^{-t}/4) dt.
double bessel_k(double order, double x, const Config& cfg = {});

// Closed form of int_0^inf lambda^kappa K_mu(lambda) dlambda
//   = 2^{kappa-1} Gamma((1+kappa-mu)/2) Gamma((1+kappa+mu)/2),
// valid for kappa - |mu| > -1.
double bessel_moment(double kappa, double mu);

}  // namespace ineqlab::specfun
