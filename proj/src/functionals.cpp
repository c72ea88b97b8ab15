#include "ineqlab/functionals.hpp"

#include <cmath>

#include "ineqlab/parallel.hpp"
#include "ineqlab/quadrature.hpp"
#include "ineqlab/rng.hpp"
#include "ineqlab/specfun.hpp"

namespace ineqlab::functionals {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr std::size_t kNodeChunk = 8192;

// Deterministic chunked reduction over [0,n): per_node(i) summed with fixed
// chunk boundaries and a fixed combine tree, independent of thread count.
template <class PerNode>
double chunked_sum(long n, bool parallel, PerNode&& per_node) {
    const auto chunks = par::fixed_chunks(static_cast<std::size_t>(n), kNodeChunk);
    std::vector<std::vector<double>> partials(chunks.size(), std::vector<double>(1, 0.0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long c = 0; c < static_cast<long>(chunks.size()); ++c) {
        double s = 0.0;
        for (std::size_t i = chunks[c].begin; i < chunks[c].end; ++i) s += per_node(i);
        partials[c][0] = s;
    }
    return par::pairwise_combine(partials)[0];
}

}  // namespace

double gauss_expect(int dim, const std::function<double(const double*)>& g,
                    const GaussQuadSpec& spec) {
    if (dim < 1) throw config_error("gauss_expect: dimension must be positive");
    if (dim > spec.tensor_dim_limit) {
        if (spec.mc_fallback <= 0)
            throw config_error("gauss_expect: dimension above tensor limit and no mc_fallback");
        // Seeded Monte Carlo fallback; standard error not returned here, the
        // caller owns the accuracy budget.
        return chunked_sum(spec.mc_fallback, spec.parallel, [&](std::size_t i) {
                   double x[16];
                   for (int k = 0; k < dim; ++k)
                       x[k] = rng::normal(spec.mc_seed, i, 0, static_cast<std::uint64_t>(k));
                   return g(x);
               }) /
               static_cast<double>(spec.mc_fallback);
    }
    const auto& rule = quad::gauss_hermite(spec.nodes_per_axis);
    const int n = spec.nodes_per_axis;
    const double sqrt2 = std::sqrt(2.0);
    const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
    long total = 1;
    for (int k = 0; k < dim; ++k) total *= n;
    return chunked_sum(total, spec.parallel, [&](std::size_t idx) {
        double x[3];
        double w = 1.0;
        std::size_t rem = idx;
        for (int k = 0; k < dim; ++k) {
            const std::size_t i = rem % n;
            rem /= n;
            x[k] = sqrt2 * rule.x[i];
            w *= rule.w[i] * inv_sqrt_pi;
        }
        return w * g(x);
    });
}

// ---------------------------------------------------------------------------
// FunctionGrid
// ---------------------------------------------------------------------------

FunctionGrid::FunctionGrid(const TestFunction& f, const GaussQuadSpec& spec)
    : f_(f), spec_(spec), dim_(f.dimension) {
    f_.validate();
    if (dim_ > spec.tensor_dim_limit)
        throw config_error("FunctionGrid: dimension above tensor limit");
    const auto& rule = quad::gauss_hermite(spec.nodes_per_axis);
    const int n = spec.nodes_per_axis;
    const double sqrt2 = std::sqrt(2.0);
    const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
    axis_x_.resize(n);
    axis_w_.resize(n);
    for (int i = 0; i < n; ++i) {
        axis_x_[i] = sqrt2 * rule.x[i];
        axis_w_[i] = rule.w[i] * inv_sqrt_pi;
    }
    total_nodes_ = 1;
    for (int k = 0; k < dim_; ++k) total_nodes_ *= n;
    fval_.resize(total_nodes_);
    gradsq_.resize(total_nodes_);

    const auto chunks = par::fixed_chunks(static_cast<std::size_t>(total_nodes_), kNodeChunk);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (spec_.parallel)
#endif
    for (long c = 0; c < static_cast<long>(chunks.size()); ++c) {
        for (std::size_t idx = chunks[c].begin; idx < chunks[c].end; ++idx) {
            double x[3], g[3];
            std::size_t rem = idx;
            for (int k = 0; k < dim_; ++k) {
                x[k] = axis_x_[rem % n];
                rem /= n;
            }
            fval_[idx] = f_.value(x);
            f_.gradient(x, g);
            double g2 = 0.0;
            for (int k = 0; k < dim_; ++k) g2 += g[k] * g[k];
            gradsq_[idx] = g2;
        }
    }
}

template <class PerNode>
double FunctionGrid::reduce(PerNode&& per_node) const {
    const int n = spec_.nodes_per_axis;
    return chunked_sum(total_nodes_, spec_.parallel, [&](std::size_t idx) {
        double w = 1.0;
        std::size_t rem = idx;
        for (int k = 0; k < dim_; ++k) {
            w *= axis_w_[rem % n];
            rem /= n;
        }
        return w * per_node(idx);
    });
}

double FunctionGrid::expect_power(double p) const {
    if (p == 1.0) return reduce([&](std::size_t i) { return fval_[i]; });
    if (p == 2.0) return reduce([&](std::size_t i) { return fval_[i] * fval_[i]; });
    return reduce([&](std::size_t i) { return std::pow(fval_[i], p); });
}

double FunctionGrid::expect_flogf() const {
    return reduce([&](std::size_t i) { return fval_[i] * std::log(fval_[i]); });
}

double FunctionGrid::expect_power_gradsq(double r) const {
    if (r == 0.0) return reduce([&](std::size_t i) { return gradsq_[i]; });
    return reduce([&](std::size_t i) { return std::pow(fval_[i], r) * gradsq_[i]; });
}

double FunctionGrid::expect_grad_norm(double p) const {
    return reduce([&](std::size_t i) { return std::pow(gradsq_[i], 0.5 * p); });
}

std::vector<double> FunctionGrid::mean_gradient() const {
    const int n = spec_.nodes_per_axis;
    std::vector<double> out(dim_);
    for (int comp = 0; comp < dim_; ++comp) {
        out[comp] = chunked_sum(total_nodes_, spec_.parallel, [&](std::size_t idx) {
            double x[3], g[3];
            double w = 1.0;
            std::size_t rem = idx;
            for (int k = 0; k < dim_; ++k) {
                const std::size_t i = rem % n;
                rem /= n;
                x[k] = axis_x_[i];
                w *= axis_w_[i];
            }
            f_.gradient(x, g);
            return w * g[comp];
        });
    }
    return out;
}

std::vector<double> FunctionGrid::mean_hessian() const {
    const int n = spec_.nodes_per_axis;
    const int d = dim_;
    std::vector<double> out(d * d);
    for (int comp = 0; comp < d * d; ++comp) {
        out[comp] = chunked_sum(total_nodes_, spec_.parallel, [&](std::size_t idx) {
            double x[3], h[9];
            double w = 1.0;
            std::size_t rem = idx;
            for (int k = 0; k < d; ++k) {
                const std::size_t i = rem % n;
                rem /= n;
                x[k] = axis_x_[i];
                w *= axis_w_[i];
            }
            f_.hessian(x, h);
            return w * h[comp];
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// FunctionAnalyzer
// ---------------------------------------------------------------------------

FunctionAnalyzer::FunctionAnalyzer(const TestFunction& f, const GaussQuadSpec& spec)
    : grid_(f, spec) {}

double FunctionAnalyzer::power_mean(double p) {
    auto it = power_memo_.find(p);
    if (it != power_memo_.end()) return it->second;
    const double v = grid_.expect_power(p);
    power_memo_[p] = v;
    return v;
}

double FunctionAnalyzer::norm_p(double p) { return std::pow(power_mean(p), 1.0 / p); }

double FunctionAnalyzer::i_p(double p) {
    if (!(p > 0.0)) throw domain_error("i_p: p must be positive");
    if (std::abs(p - 1.0) <= 1e-9) {
        if (!have_flogf_) {
            flogf_ = grid_.expect_flogf();
            have_flogf_ = true;
        }
        const double m = power_mean(1.0);
        return flogf_ - m * std::log(m);
    }
    const double m1 = power_mean(1.0);
    return (power_mean(p) - std::pow(m1, p)) / (p - 1.0);
}

double FunctionAnalyzer::grad_energy(double r) {
    auto it = energy_memo_.find(r);
    if (it != energy_memo_.end()) return it->second;
    const double v = grid_.expect_power_gradsq(r);
    energy_memo_[r] = v;
    return v;
}

double FunctionAnalyzer::grad_norm(double p) { return std::pow(grid_.expect_grad_norm(p), 1.0 / p); }

std::vector<double> FunctionAnalyzer::mean_gradient() { return grid_.mean_gradient(); }
std::vector<double> FunctionAnalyzer::mean_hessian() { return grid_.mean_hessian(); }

// ---------------------------------------------------------------------------
// spec-level operations
// ---------------------------------------------------------------------------

double heat_evolved_value(const TestFunction& f, double s, const double* x) {
    return f.evolve(s).value(x);
}

double i_p(const TestFunction& f, double p, const GaussQuadSpec& spec) {
    FunctionAnalyzer a(f, spec);
    return a.i_p(p);
}

double grad_energy(const TestFunction& f, double r, const GaussQuadSpec& spec) {
    FunctionAnalyzer a(f, spec);
    return a.grad_energy(r);
}

namespace {

double report_tol(double rhs) { return 1e-8 * std::max(1.0, std::abs(rhs)); }

InequalityReport make_report(std::string name, double lhs, double rhs, std::string inputs) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = report_tol(rhs);
    r.inputs = std::move(inputs);
    return r;
}

std::string ptag(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", p);
    return buf;
}

}  // namespace

std::vector<InequalityReport> beckner_reports(FunctionAnalyzer& a, double p,
                                              const deficit::QuadratureSpec& dspec) {
    std::vector<InequalityReport> out;
    const bool is43 = std::abs(p - 4.0 / 3.0) < 1e-12;
    const bool is65 = std::abs(p - 6.0 / 5.0) < 1e-12;
    const bool in_guard = p >= deficit::BecknerParams::p_min && p <= deficit::BecknerParams::p_max;
    const bool plain = p > 1.0 && p <= 2.0;
    if (!(plain || is65)) throw domain_error("check_beckner_family: p out of range");

    if (plain) {
        const double lhs = a.i_p(p);
        const double rhs = 0.5 * p * a.grad_energy(p - 2.0);
        out.push_back(make_report("beckner_p" + ptag(p), lhs, rhs, "p=" + ptag(p)));
    }
    if (is43) {
        const double i23 = a.i_p(2.0 / 3.0);
        const double lhs = a.i_p(4.0 / 3.0) + i23 * i23 / 3.0;
        const double rhs = (2.0 / 3.0) * a.grad_energy(-2.0 / 3.0);
        out.push_back(make_report("beckner_improved_p4/3", lhs, rhs, "p=4/3 closed form"));
    } else if (is65) {
        const double i25 = a.i_p(2.0 / 5.0);
        const double lhs = a.i_p(6.0 / 5.0) + (3.0 / 25.0) * i25 * i25 * i25;
        const double rhs = (3.0 / 5.0) * a.grad_energy(-4.0 / 5.0);
        out.push_back(make_report("beckner_improved_p6/5", lhs, rhs, "p=6/5 closed form"));
    } else if (in_guard) {
        const auto par = deficit::BecknerParams::make(p);
        // I_{2p-2}/(p-1) routes through the entropy branch automatically when
        // 2p-2 = 1 (p = 3/2), matching the x log x choice in the proof.
        const double arg_s = a.i_p(2.0 * p - 2.0) / (p - 1.0);
        const double arg_x = a.norm_p(2.0 * p - 2.0);
        const double improvement =
            0.25 * p * (p - 1.0) * (2.0 - p) * deficit::big_f(par, arg_s, arg_x, dspec);
        const double lhs = a.i_p(p) + improvement;
        const double rhs = 0.5 * p * a.grad_energy(p - 2.0);
        out.push_back(make_report("beckner_improved_p" + ptag(p), lhs, rhs, "p=" + ptag(p)));
    }
    return out;
}

InequalityReport hoelder_report(FunctionAnalyzer& a, double p, double q) {
    const double c = deficit::hoelder_constant(p, q);
    const double lhs = a.i_p(p);
    const double rhs = c * std::pow(a.i_p(q), p / q);
    return make_report("hoelder_p" + ptag(p) + "_q" + ptag(q), lhs, rhs,
                       "p=" + ptag(p) + " q=" + ptag(q));
}

std::vector<InequalityReport> classic_reports(FunctionAnalyzer& a) {
    std::vector<InequalityReport> out;
    const double i1 = a.i_p(1.0);
    const double i2 = a.i_p(2.0);
    const double e0 = a.grad_energy(0.0);  // || |grad f| ||_2^2
    out.push_back(make_report("log_sobolev", i1, 0.5 * a.grad_energy(-1.0), ""));
    out.push_back(make_report("poincare", i2, e0, ""));
    out.push_back(make_report("entropy_grad_l2", i1, std::sqrt(0.5 * kPi) * std::sqrt(e0), ""));
    const double c32 = std::pow(2.0, 5.0 / 3.0) * kPi /
                       (std::pow(3.0, 5.0 / 6.0) * specfun::gamma(1.0 / 3.0));
    out.push_back(make_report("entropy_grad_l3/2", i1, c32 * a.grad_norm(1.5), ""));
    // Phi-entropy reports for the built-in Phi set.
    out.push_back(make_report("phi_entropy_xlogx", i1, 0.5 * a.grad_energy(-1.0), "Phi=xlogx"));
    out.push_back(make_report("phi_entropy_square", i2, e0, "Phi=x^2"));
    const double pp = 1.7;
    const double lhs_pow = a.power_mean(pp) - std::pow(a.power_mean(1.0), pp);
    const double rhs_pow = 0.5 * pp * (pp - 1.0) * a.grad_energy(pp - 2.0);
    out.push_back(make_report("phi_entropy_pow1.7", lhs_pow, rhs_pow, "Phi=x^1.7"));
    return out;
}

std::vector<InequalityReport> poincare_improved_reports(FunctionAnalyzer& a) {
    std::vector<InequalityReport> out;
    const double i2 = a.i_p(2.0);
    const double e0 = a.grad_energy(0.0);
    const auto mg = a.mean_gradient();
    double mg2 = 0.0;
    for (double v : mg) mg2 += v * v;
    const auto mh = a.mean_hessian();
    double alpha0 = 0.0;
    for (double v : mh) alpha0 += v * v;
    const double rhs1 = 0.5 * e0 + 0.5 * mg2;
    const double rhs2 = e0 / 3.0 + 2.0 / 3.0 * mg2 + alpha0 / 6.0;
    out.push_back(make_report("poincare_improved_crq1", i2, rhs1, ""));
    out.push_back(make_report("poincare_improved_crq2", i2, rhs2, ""));
    // Chain: the second bound implies the first after alpha(0) <= E|theta_1|^2 - |theta_0|^2.
    out.push_back(make_report("crq2_implies_crq1", rhs2, rhs1, ""));
    return out;
}

std::vector<InequalityReport> check_beckner_family(const TestFunction& f, double p,
                                                   const GaussQuadSpec& quad,
                                                   const deficit::QuadratureSpec& dspec) {
    FunctionAnalyzer a(f, quad);
    return beckner_reports(a, p, dspec);
}

InequalityReport check_hoelder(const TestFunction& f, double p, double q,
                               const GaussQuadSpec& quad) {
    FunctionAnalyzer a(f, quad);
    return hoelder_report(a, p, q);
}

std::vector<InequalityReport> check_classic(const TestFunction& f, const GaussQuadSpec& quad) {
    FunctionAnalyzer a(f, quad);
    return classic_reports(a);
}

std::vector<InequalityReport> check_poincare_improved(const TestFunction& f,
                                                      const GaussQuadSpec& quad) {
    FunctionAnalyzer a(f, quad);
    return poincare_improved_reports(a);
}

}  // namespace ineqlab::functionals
