#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "ineqlab/errors.hpp"

namespace ineqlab::quad {

struct Rule {
    std::vector<double> x;
    std::vector<double> w;
    int size() const { return static_cast<int>(x.size()); }
};

// Gauss-Legendre on [-1,1], weight 1.
const Rule& gauss_legendre(int n);

// Gauss-Hermite, weight exp(-x^2) on the whole line (physicists' convention).
const Rule& gauss_hermite(int n);

// Gauss-Jacobi on [-1,1], weight (1-x)^a (1+x)^b, a,b > -1.
const Rule& gauss_jacobi(int n, double a, double b);

// Plain Gauss-Legendre panel: integral of g over [lo,hi].
template <class F>
double gl_panel(int n, double lo, double hi, F&& g) {
    const Rule& r = gauss_legendre(n);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < r.size(); ++i) s += r.w[i] * g(mid + half * r.x[i]);
    return half * s;
}

// Weighted panel: integral of (hi-v)^a (v-lo)^b g(v) over [lo,hi].
// The endpoint powers live in the rule's weight; g must be smooth.
template <class F>
double jacobi_panel(int n, double a, double b, double lo, double hi, F&& g) {
    const Rule& r = gauss_jacobi(n, a, b);
    const double half = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < r.size(); ++i) {
        const double v = lo + half * (1.0 + r.x[i]);
        s += r.w[i] * g(v);
    }
    // (1-x)^a(1+x)^b dx -> (hi-v)^a (v-lo)^b dv picks up half^(a+b+1).
    return std::pow(half, a + b + 1.0) * s;
}

// Composite Gauss-Legendre over geometrically spaced panels of [lo,hi],
// panel width <= ln_width in log space.  Requires 0 < lo < hi.
template <class F>
double log_panels(int n, double lo, double hi, double ln_width, F&& g) {
    if (!(lo > 0.0) || hi <= lo) return 0.0;
    const double span = std::log(hi / lo);
    const int k = std::max(1, static_cast<int>(std::ceil(span / ln_width)));
    const double step = span / k;
    double s = 0.0, a = lo;
    for (int i = 0; i < k; ++i) {
        const double b = (i + 1 == k) ? hi : lo * std::exp((i + 1) * step);
        s += gl_panel(n, a, b, g);
        a = b;
    }
    return s;
}

struct AdaptiveOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    long max_evals = 4'000'000;
    bool throw_on_failure = true;
};

struct AdaptiveResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Globally adaptive bisection with an embedded GL15/GL31 pair per panel.
AdaptiveResult adaptive(const std::function<double(double)>& g, double lo, double hi,
                        const AdaptiveOptions& opt = {});

}  // namespace ineqlab::quad
