#include "ineqlab/stochastic.hpp"

#include <cmath>

#include "ineqlab/parallel.hpp"

namespace ineqlab::stochastic {

namespace {
constexpr std::size_t kPathChunk = 2048;
}

void McConfig::validate() const {
    if (path_count < 2) throw config_error("McConfig: need at least two paths");
    if (time_steps < 2) throw config_error("McConfig: need at least two time steps");
    if (dimension < 1 || dimension > 3) throw config_error("McConfig: dimension must be 1..3");
}

McEstimate estimate(const std::vector<double>& per_path) {
    McEstimate e;
    e.path_count = per_path.size();
    const double n = static_cast<double>(per_path.size());
    e.mean = par::pairwise_sum(per_path) / n;
    std::vector<double> sq(per_path.size());
    for (std::size_t i = 0; i < per_path.size(); ++i) {
        const double d = per_path[i] - e.mean;
        sq[i] = d * d;
    }
    const double var = par::pairwise_sum(sq) / (n - 1.0);
    e.std_error = std::sqrt(var / n);
    return e;
}

double PathOutputs::series_mean(int t_idx, int q) const {
    return series_sum[t_idx * series_quantities + q] / static_cast<double>(paths);
}

double PathOutputs::series_se(int t_idx, int q) const {
    const double n = static_cast<double>(paths);
    const double m = series_mean(t_idx, q);
    const double var =
        std::max(0.0, series_sumsq[t_idx * series_quantities + q] / n - m * m) * n / (n - 1.0);
    return std::sqrt(var / n);
}

PathEnsemble::PathEnsemble(const functionals::TestFunction& f, const McConfig& cfg)
    : f_(f), cfg_(cfg) {
    f_.validate();
    cfg_.validate();
    if (cfg_.dimension != f_.dimension)
        throw config_error("PathEnsemble: config dimension does not match the test function");
    d_ = f_.dimension;
    const int n = cfg_.time_steps;
    dt_ = 1.0 / n;
    sqrt_dt_ = std::sqrt(dt_);

    // Evolved bump tables: M_t = (heat_evolve(f, 1-t))(W_t), so at grid index
    // k the bump variance is sigma^2 + (1 - t_k) and the amplitude shrinks by
    // (sigma^2 / (sigma^2 + 1 - t_k))^{d/2}.
    const std::size_t nb = f_.bumps.size();
    amp_.resize(static_cast<std::size_t>(n + 1) * nb);
    var_.resize(static_cast<std::size_t>(n + 1) * nb);
    for (int k = 0; k <= n; ++k) {
        const double tau = 1.0 - static_cast<double>(k) * dt_;
        for (std::size_t b = 0; b < nb; ++b) {
            const double s2 = f_.bumps[b].sigma * f_.bumps[b].sigma;
            var_[k * nb + b] = s2 + tau;
            amp_[k * nb + b] = f_.bumps[b].amplitude * std::pow(s2 / (s2 + tau), 0.5 * d_);
        }
    }

    const double origin[3] = {0.0, 0.0, 0.0};
    const State s0 = state_at(0, origin);
    m0_ = s0.m;
    theta0_ = s0.theta;
    a0_ = s0.a_mat;
}

PathEnsemble::State PathEnsemble::state_at(int k, const double* w) const {
    State st{};
    st.m = f_.constant;
    const std::size_t nb = f_.bumps.size();
    for (std::size_t b = 0; b < nb; ++b) {
        const double v = var_[k * nb + b];
        double r2 = 0.0;
        double dx[3];
        for (int i = 0; i < d_; ++i) {
            dx[i] = w[i] - f_.bumps[b].center[i];
            r2 += dx[i] * dx[i];
        }
        const double e = amp_[k * nb + b] * std::exp(-0.5 * r2 / v);
        st.m += e;
        for (int i = 0; i < d_; ++i) st.theta[i] -= e * dx[i] / v;
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j)
                st.a_mat[i * d_ + j] += e * (dx[i] * dx[j] / (v * v) - (i == j ? 1.0 / v : 0.0));
    }
    st.theta_sq = 0.0;
    for (int i = 0; i < d_; ++i) st.theta_sq += st.theta[i] * st.theta[i];
    st.a_sq = 0.0;
    for (int i = 0; i < d_ * d_; ++i) st.a_sq += st.a_mat[i] * st.a_mat[i];
    return st;
}

double PathEnsemble::theta0_sq() const {
    double s = 0.0;
    for (int i = 0; i < d_; ++i) s += theta0_[i] * theta0_[i];
    return s;
}

double PathEnsemble::alpha0() const {
    double s = 0.0;
    for (int i = 0; i < d_ * d_; ++i) s += a0_[i] * a0_[i];
    return s;
}

PathOutputs PathEnsemble::run(const PathKernelSpec& spec) const {
    const std::size_t npaths = cfg_.path_count;
    const int n = cfg_.time_steps;
    const int d = d_;
    const std::size_t ne = spec.trap_exponents.size();
    const std::size_t nn = spec.nested.size();
    const std::size_t nr = spec.terminal_m_powers.size();
    const std::size_t nfd = spec.fd_times.size();
    for (const auto& nest : spec.nested)
        if (nest.a_index < 0 || nest.a_index >= static_cast<int>(ne))
            throw config_error("PathKernelSpec: nested a_index out of range");
    for (int t : spec.fd_times)
        if (t < 1 || t > n - 1) throw config_error("PathKernelSpec: fd time out of range");

    PathOutputs out;
    out.paths = npaths;
    out.steps = n;
    out.dt = dt_;
    out.trap.assign(ne, std::vector<double>(npaths));
    out.term_pow.assign(nr, std::vector<double>(npaths));
    out.nested.assign(nn, std::vector<double>(npaths));
    out.m1.resize(npaths);
    out.m1sq.resize(npaths);
    out.th1sq.resize(npaths);
    out.a1sq.resize(npaths);
    out.m1logm1.resize(npaths);
    out.w1.assign(d, std::vector<double>(npaths));
    out.ddt_m2.assign(nfd, std::vector<double>(npaths));
    out.ddt_th2.assign(nfd, std::vector<double>(npaths));

    for (int k = 0; k <= n; k += spec.series_stride) out.series_times.push_back(k);
    const int nq = 4 + d + d * d;  // M, M^2, |theta|^2, |a|^2, theta_i, a_ij
    out.series_quantities = nq;
    const std::size_t series_len = out.series_times.size() * nq;

    const auto chunks = par::fixed_chunks(npaths, kPathChunk);
    std::vector<std::vector<double>> sum_partials(chunks.size()),
        sumsq_partials(chunks.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg_.parallel)
#endif
    for (long c = 0; c < static_cast<long>(chunks.size()); ++c) {
        std::vector<double> loc_sum(series_len, 0.0), loc_sumsq(series_len, 0.0);
        std::vector<double> a_run(ne), g_prev(ne), nest_run(nn), nest_prev(nn);
        for (std::size_t j = chunks[c].begin; j < chunks[c].end; ++j) {
            std::fill(a_run.begin(), a_run.end(), 0.0);
            std::fill(nest_run.begin(), nest_run.end(), 0.0);
            walk(j, [&](int k, const State& st, const double* w) {
                const double lnm = std::log(st.m);
                // trapezoidal updates of all A-integrals
                for (std::size_t e = 0; e < ne; ++e) {
                    const double g = std::exp(spec.trap_exponents[e] * lnm) * st.theta_sq;
                    if (k > 0) a_run[e] += 0.5 * dt_ * (g_prev[e] + g);
                    g_prev[e] = g;
                }
                for (std::size_t m = 0; m < nn; ++m) {
                    const auto& nest = spec.nested[m];
                    double apow = a_run[nest.a_index];
                    for (int rep = 1; rep < nest.a_power; ++rep) apow *= a_run[nest.a_index];
                    const double u = std::exp(nest.m_exp * lnm) * st.theta_sq * apow;
                    if (k > 0) nest_run[m] += 0.5 * dt_ * (nest_prev[m] + u);
                    nest_prev[m] = u;
                }
                // Accumulate (X_{k+1} - X_{k-1}) - 2 dt Y_k; run() divides by
                // 2 dt, leaving the centered difference minus the derivative.
                for (std::size_t t = 0; t < nfd; ++t) {
                    const int kc = spec.fd_times[t];
                    if (k == kc - 1) {
                        out.ddt_m2[t][j] = -st.m * st.m;
                        out.ddt_th2[t][j] = -st.theta_sq;
                    } else if (k == kc) {
                        out.ddt_m2[t][j] -= 2.0 * dt_ * st.theta_sq;
                        out.ddt_th2[t][j] -= 2.0 * dt_ * st.a_sq;
                    } else if (k == kc + 1) {
                        out.ddt_m2[t][j] += st.m * st.m;
                        out.ddt_th2[t][j] += st.theta_sq;
                    }
                }
                if (k % spec.series_stride == 0) {
                    const std::size_t base = static_cast<std::size_t>(k / spec.series_stride) * nq;
                    double vals[16];
                    vals[0] = st.m;
                    vals[1] = st.m * st.m;
                    vals[2] = st.theta_sq;
                    vals[3] = st.a_sq;
                    for (int i = 0; i < d; ++i) vals[4 + i] = st.theta[i];
                    for (int i = 0; i < d * d; ++i) vals[4 + d + i] = st.a_mat[i];
                    for (int qd = 0; qd < nq; ++qd) {
                        loc_sum[base + qd] += vals[qd];
                        loc_sumsq[base + qd] += vals[qd] * vals[qd];
                    }
                }
                if (k == n) {
                    out.m1[j] = st.m;
                    out.m1sq[j] = st.m * st.m;
                    out.th1sq[j] = st.theta_sq;
                    out.a1sq[j] = st.a_sq;
                    out.m1logm1[j] = st.m * lnm;
                    for (std::size_t r = 0; r < nr; ++r)
                        out.term_pow[r][j] = std::exp(spec.terminal_m_powers[r] * lnm);
                    for (int i = 0; i < d; ++i) out.w1[i][j] = w[i];
                }
            });
            for (std::size_t e = 0; e < ne; ++e) out.trap[e][j] = a_run[e];
            for (std::size_t m = 0; m < nn; ++m) out.nested[m][j] = nest_run[m];
        }
        sum_partials[c] = std::move(loc_sum);
        sumsq_partials[c] = std::move(loc_sumsq);
    }
    out.series_sum = par::pairwise_combine(sum_partials);
    out.series_sumsq = par::pairwise_combine(sumsq_partials);

    // Finish the centered-difference combos: the visitor accumulated
    // (M_{k+1}^2 - M_{k-1}^2) - 2 dt |theta_k|^2 etc.; divide by 2 dt.
    for (std::size_t t = 0; t < nfd; ++t)
        for (std::size_t j = 0; j < npaths; ++j) {
            out.ddt_m2[t][j] /= 2.0 * dt_;
            out.ddt_th2[t][j] /= 2.0 * dt_;
        }
    return out;
}

PathEnsemble simulate(const functionals::TestFunction& f, const McConfig& cfg) {
    return PathEnsemble(f, cfg);
}

}  // namespace ineqlab::stochastic
