#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ineqlab/rng.hpp"
#include "ineqlab/test_function.hpp"

namespace ineqlab::stochastic {

struct McConfig {
    std::size_t path_count = 100000;
    int time_steps = 1024;        // uniform grid on [0,1], grid points 0..time_steps
    std::uint64_t seed = 1;
    int dimension = 1;
    bool parallel = true;         // serial reference kept for determinism tests
    void validate() const;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t path_count = 0;
};

// Mean and standard error of a per-path value array, pairwise-summed.
McEstimate estimate(const std::vector<double>& per_path);

// What the path walker accumulates per path.  Every integral is a trapezoid
// on the uniform grid; A-integrals (running integral of M^e |theta|^2) serve
// both as Lemma 2.1 right-hand sides and as the arguments of F and J.
struct PathKernelSpec {
    std::vector<double> trap_exponents;     // integral of M^e |theta|^2 dt over [0,1]
    std::vector<double> terminal_m_powers;  // M_1^r
    struct Nested {
        double m_exp;    // integrand power of M
        int a_index;     // which trap exponent drives the inner integral A
        int a_power;     // A^k
    };
    std::vector<Nested> nested;             // integral of M^{m}|theta|^2 A^k dt
    std::vector<int> fd_times;              // grid indices for d/dt checks (1..N-1)
    int series_stride = 64;                 // decimation of the stored time series
};

// Per-path outputs plus decimated time-series moments.  All reductions are
// chunked with fixed boundaries and combined pairwise, so results are
// bit-identical for any thread count.
struct PathOutputs {
    std::size_t paths = 0;
    int steps = 0;
    double dt = 0.0;

    // per-path arrays, indexed [quantity][path]
    std::vector<std::vector<double>> trap;
    std::vector<std::vector<double>> term_pow;
    std::vector<std::vector<double>> nested;
    std::vector<double> m1, m1sq, th1sq, a1sq, m1logm1;
    std::vector<std::vector<double>> w1;          // terminal Brownian components
    // (d/dt E[M^2] - E[|theta|^2]) and (d/dt E[|theta|^2] - alpha) combos
    std::vector<std::vector<double>> ddt_m2, ddt_th2;

    // decimated time series: sums and sums of squares over paths
    std::vector<int> series_times;
    int series_quantities = 0;                    // 4 + d + d^2
    std::vector<double> series_sum, series_sumsq; // [time][quantity]

    double series_mean(int t_idx, int q) const;
    double series_se(int t_idx, int q) const;
};

class PathEnsemble {
  public:
    PathEnsemble(const functionals::TestFunction& f, const McConfig& cfg);

    const McConfig& config() const { return cfg_; }
    const functionals::TestFunction& function() const { return f_; }
    double dt() const { return dt_; }

    // Deterministic state at t = 0 (heat evolution of f by time 1 at the origin).
    double m0() const { return m0_; }
    const std::array<double, 3>& theta0() const { return theta0_; }
    const std::array<double, 9>& a0() const { return a0_; }
    double theta0_sq() const;
    double alpha0() const;

    // State of the derived processes at one grid time for one path position.
    struct State {
        double m;
        std::array<double, 3> theta;
        std::array<double, 9> a_mat;
        double theta_sq;
        double a_sq;
    };
    State state_at(int k, const double* w) const;

    // Walk one path through all grid points; visit(k, state, w).
    template <class Visitor>
    void walk(std::size_t path, Visitor&& visit) const {
        double w[3] = {0.0, 0.0, 0.0};
        const int n = cfg_.time_steps;
        for (int k = 0; k <= n; ++k) {
            visit(k, state_at(k, w), w);
            if (k < n)
                for (int ax = 0; ax < d_; ++ax)
                    w[ax] += sqrt_dt_ * ineqlab::rng::normal(cfg_.seed, path, k,
                                                             static_cast<std::uint64_t>(ax));
        }
    }

    PathOutputs run(const PathKernelSpec& spec) const;

  private:
    functionals::TestFunction f_;
    McConfig cfg_;
    int d_;
    double dt_, sqrt_dt_;
    // evolved bump tables per grid time: amplitude and variance
    std::vector<double> amp_, var_;
    double m0_;
    std::array<double, 3> theta0_{};
    std::array<double, 9> a0_{};
};

PathEnsemble simulate(const functionals::TestFunction& f, const McConfig& cfg);

}  // namespace ineqlab::stochastic
