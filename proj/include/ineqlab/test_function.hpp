#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "ineqlab/errors.hpp"

namespace ineqlab::functionals {

// f(x) = c + sum_i a_i exp(-|x-m_i|^2 / (2 sigma_i^2)): a positive constant
// plus a nonnegative mixture of Gaussian bumps.  The family is closed under
// the heat semigroup with closed-form gradient and Hessian, so the stochastic
// checks carry no semigroup discretization error.
struct Bump {
    double amplitude = 0.0;
    std::array<double, 3> center{};  // only the first `dimension` entries are used
    double sigma = 1.0;
};

struct TestFunction {
    int dimension = 1;
    double constant = 1.0;
    std::vector<Bump> bumps;

    void validate() const;

    double value(const double* x) const;
    void gradient(const double* x, double* g) const;         // g has size dimension
    void hessian(const double* x, double* h) const;          // row-major dimension^2

    // Heat evolution by time s: amplitudes shrink by (sigma^2/(sigma^2+s))^{d/2},
    // widths grow to sqrt(sigma^2+s), centers and constant unchanged.
    TestFunction evolve(double s) const;

    double inf_value() const { return constant; }
    double sup_bound() const;

    nlohmann::json to_json() const;
    static TestFunction from_json(const nlohmann::json& j);  // unknown fields rejected
};

}  // namespace ineqlab::functionals
