#include "ineqlab/deficit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ineqlab/quadrature.hpp"

namespace ineqlab::deficit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
const double kSqrtPi = std::sqrt(kPi);

// ---------------------------------------------------------------------------
// Shared quadrature templates.
//
// Every integral below is a power-weighted integral of a smooth positive
// kernel.  The kernels (phi and friends) are C-infinity but not analytic at
// the origin, so we always integrate with geometrically graded panels toward
// zero, a Gauss-Jacobi stub that absorbs the v^beta endpoint power exactly,
// and a Gauss-Jacobi panel when there is a (v*-v)^gamma kink at the right
// endpoint.  Panel edges scale with the integration range, which keeps the
// value a smooth function of (s,x) -- required by the finite-difference PDE
// residuals.
// ---------------------------------------------------------------------------

// int_0^{v_star} (v_star - v)^gamma_e v^beta_e g(v) dv,
// g smooth, varying on scale g_scale.
template <class G>
double kinked_power_integral(double gamma_e, double beta_e, double v_star, double g_scale,
                             const QuadratureSpec& spec, G&& g, long* evals = nullptr) {
    if (!(v_star > 0.0)) return 0.0;
    const int nk = spec.kink_nodes;
    const int np = spec.panel_nodes;
    long n_evals = 0;
    auto count = [&](int n) { n_evals += n; };

    const double top = 0.75 * v_star;
    // Kink panel [0.75 v*, v*]: weight (v*-v)^gamma, rest smooth.
    double total = quad::jacobi_panel(nk, gamma_e, 0.0, top, v_star,
                                      [&](double v) { return std::pow(v, beta_e) * g(v); });
    count(nk);

    // Graded panels from 0.75 v* down to the stub.
    const double scale = std::min(g_scale, v_star);
    const double eps = std::min(top * 0.5, scale / 64.0);
    double hi = top;
    while (hi > eps * 1.0000001) {
        const double lo = std::max(eps, hi * 0.5);
        total += quad::gl_panel(np, lo, hi, [&](double v) {
            return std::pow(v_star - v, gamma_e) * std::pow(v, beta_e) * g(v);
        });
        count(np);
        hi = lo;
    }
    // Stub [0, eps]: weight v^beta, the rest is nearly constant here.
    total += quad::jacobi_panel(nk, 0.0, beta_e, 0.0, hi, [&](double v) {
        return std::pow(v_star - v, gamma_e) * g(v);
    });
    count(nk);
    if (evals) *evals += n_evals;
    return total;
}

// int_0^hi v^beta_e g(v) dv with g smooth on scale g_scale (no kink).
template <class G>
double left_power_integral(double beta_e, double hi, double g_scale, const QuadratureSpec& spec,
                           G&& g, long* evals = nullptr) {
    if (!(hi > 0.0)) return 0.0;
    const int nk = spec.kink_nodes;
    const int np = spec.panel_nodes;
    long n_evals = 0;

    const double scale = std::min(g_scale, hi);
    const double eps = std::min(hi * 0.5, scale / 64.0);
    double total = quad::jacobi_panel(nk, 0.0, beta_e, 0.0, eps, g);
    n_evals += nk;
    double lo = eps;
    // Log-spaced panels up to hi.
    const double span = std::log(hi / lo);
    const int k = std::max(1, static_cast<int>(std::ceil(span / spec.panel_ln_width)));
    const double step = span / k;
    for (int i = 0; i < k; ++i) {
        const double b = (i + 1 == k) ? hi : lo * std::exp(step);
        total += quad::gl_panel(np, lo, b, [&](double v) { return std::pow(v, beta_e) * g(v); });
        n_evals += np;
        lo = b;
    }
    if (evals) *evals += n_evals;
    return total;
}

// int_0^inf v^beta_e g(v) dv for g ~ c/v at infinity (decay exponent 1).
// Head by left_power_integral up to V = 64 * g_scale, tail by the map
// v = V/u^2, which turns the tail into a Jacobi-weighted integral on (0,1].
template <class G>
double seminf_power_integral(double beta_e, double g_scale, const QuadratureSpec& spec, G&& g,
                             long* evals = nullptr) {
    const double V = 64.0 * g_scale;
    double total = left_power_integral(beta_e, V, g_scale, spec, g, evals);
    const double b_u = -2.0 * beta_e - 1.0;  // in (-1,1)
    total += quad::jacobi_panel(spec.kink_nodes, 0.0, b_u, 0.0, 1.0, [&](double u) {
        const double v = V / (u * u);
        return 2.0 * std::pow(V, beta_e + 1.0) * g(v) * v / V;
    });
    if (evals) *evals += spec.kink_nodes;
    return total;
}

// Generic lambda integral of  lambda e^{-lambda} exp(-c2 lambda^2):
// phi(v) corresponds to c2 = v/2.
double exp_quad_kernel(double c2, const QuadratureSpec& spec) {
    auto f = [&](double la) { return la * std::exp(-la - c2 * la * la); };
    const double lmax = std::max(40.0, std::min(1e6, c2 > 0.0 ? 10.0 / std::sqrt(2.0 * c2) : 40.0));
    const double head = std::min(1.0, 1.0 / std::sqrt(1.0 + 2.0 * c2));
    double total = quad::gl_panel(spec.panel_nodes, 0.0, head, f);
    total += quad::log_panels(spec.panel_nodes, head, lmax, spec.panel_ln_width, f);
    return total;
}

// psi_j(v) = int_0^inf mu^m e^{-mu^2} / (1 + q2h v mu^2) dmu  (q2h = q^2/2).
double psi_j_kernel(double m, double q2h, double v, const QuadratureSpec& spec) {
    auto f = [&](double mu) {
        const double m2 = mu * mu;
        return std::exp(-m2) / (1.0 + q2h * v * m2);
    };
    const double s0 = std::min(1.0, 1.0 / std::sqrt(1.0 + q2h * v));
    double total = quad::jacobi_panel(spec.panel_nodes, 0.0, m, 0.0, s0, f);
    total += quad::log_panels(spec.panel_nodes, s0, 8.5, spec.panel_ln_width,
                              [&](double mu) { return std::pow(mu, m) * f(mu); });
    return total;
}

// Laplace left-hand kernel  int_0^inf mu^2 e^{-mu^2} / (1 + 2 c v mu^2) dmu.
double psi_laplace_kernel(double c, double v, const QuadratureSpec& spec) {
    auto f = [&](double mu) {
        const double m2 = mu * mu;
        return m2 * std::exp(-m2) / (1.0 + 2.0 * c * v * m2);
    };
    const double s0 = std::min(1.0, 1.0 / std::sqrt(1.0 + 2.0 * c * v));
    double total = quad::gl_panel(spec.panel_nodes, 0.0, s0, f);
    total += quad::log_panels(spec.panel_nodes, s0, 8.5, spec.panel_ln_width, f);
    return total;
}

// int_0^inf lambda^power K_nu(lambda) exp(-a lambda^2) dlambda.
// Head on [0, l0] via the substitution lambda = w^4 with a Gauss-Jacobi rule
// absorbing the w^{4(power-|nu|)+3} endpoint power; tail by log panels.
double besselk_weighted_integral(double order, double power, double a,
                                 const QuadratureSpec& spec) {
    const double nu_abs = std::abs(order);
    if (!(power - nu_abs > -1.0))
        throw domain_error("besselk_weighted_integral: power - |order| must exceed -1");
    specfun::Config cfg;

    const double l0 = std::min(1.0, 3.0 / std::sqrt(std::max(a, 1.0)));
    const double w0 = std::pow(l0, 0.25);
    const double b_w = 4.0 * (power - nu_abs) + 3.0;
    double total = quad::jacobi_panel(spec.kink_nodes, 0.0, b_w, 0.0, w0, [&](double w) {
        const double la = w * w * w * w;
        return 4.0 * std::pow(w, 4.0 * nu_abs) * specfun::bessel_k(order, la, cfg) *
               std::exp(-a * la * la);
    });

    double lmax = std::max(8.0, 4.0 * l0);
    while (power * std::log(lmax) - lmax - a * lmax * lmax > -50.0 && lmax < spec.lambda_max)
        lmax *= 1.25;
    lmax = std::min(lmax, spec.lambda_max);
    total += quad::log_panels(spec.panel_nodes, l0, lmax, spec.panel_ln_width, [&](double la) {
        return std::pow(la, power) * specfun::bessel_k(order, la, cfg) * std::exp(-a * la * la);
    });
    return total;
}

QuadratureSpec refined(const QuadratureSpec& spec) {
    QuadratureSpec r = spec;
    r.kink_nodes *= 2;
    r.panel_nodes *= 2;
    r.panel_ln_width *= 0.5;
    r.check_convergence = false;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parameter records.
// ---------------------------------------------------------------------------

BecknerParams BecknerParams::make(double p) {
    if (!(p >= p_min && p <= p_max))
        throw domain_error("BecknerParams: p must lie in the guard band [4/3+1e-3, 2-1e-3]");
    BecknerParams par;
    par.p = p;
    par.nu = -0.5 / (p - 1.0);
    par.c_p = 1.0 / (specfun::gamma(1.5 - par.nu) * specfun::gamma(par.nu + 1.5));
    // Sine form of the same constant, kept as a consistency check.
    const double sine_form =
        4.0 * (p - 1.0) * (p - 1.0) / (kPi * p * (2.0 - p)) * std::sin(0.5 * kPi * (2.0 - p) / (p - 1.0));
    if (std::abs(sine_form - par.c_p) > 1e-12 * std::abs(par.c_p))
        throw numerical_error("BecknerParams: gamma and sine forms of C_p disagree", 0);
    par.c_p_prime = std::pow(2.0, 0.5 / (p - 1.0)) /
                    (kSqrtPi * specfun::gamma((3.0 * p - 4.0) / (2.0 * (p - 1.0))));
    return par;
}

HoelderParams HoelderParams::make(double p, double q) {
    if (!(p > 0.0) || !(q > p)) throw domain_error("HoelderParams: need 0 < p < q");
    HoelderParams par;
    par.p = p;
    par.q = q;
    par.nu_prime = -1.0 / q;
    const double np = par.nu_prime;
    par.c_pq = 1.0 / (std::pow(2.0, 2.0 * (p - 1.0) * np + 1.0) * specfun::gamma(1.0 - p * np) *
                      specfun::gamma(1.0 + p * np) * specfun::gamma(1.0 + (p - 1.0) * np));
    par.c_pq_prime = 1.0 / (std::pow(2.0, (2.0 * p - 1.0) * np) * specfun::gamma(1.0 + p * np) *
                            specfun::gamma(1.0 + (p - 1.0) * np));
    // The two constants are linked through Gamma(1 - p nu'); check it.
    const double linked = std::pow(2.0, np - 1.0) * par.c_pq_prime / specfun::gamma(1.0 - p * np);
    if (std::abs(linked - par.c_pq) > 1e-12 * std::abs(par.c_pq))
        throw numerical_error("HoelderParams: linked constants disagree", 0);
    return par;
}

void DeficitGrid::validate() const {
    if (s_values.empty() || x_values.empty())
        throw config_error("DeficitGrid: empty grid");
    for (std::size_t i = 1; i < s_values.size(); ++i)
        if (!(s_values[i] > s_values[i - 1])) throw config_error("DeficitGrid: s not increasing");
    for (std::size_t i = 1; i < x_values.size(); ++i)
        if (!(x_values[i] > x_values[i - 1])) throw config_error("DeficitGrid: x not increasing");
    if (!(finite_difference_step > 0.0)) throw config_error("DeficitGrid: bad step");
}

// ---------------------------------------------------------------------------
// phi and the resolvent identity.
// ---------------------------------------------------------------------------

double phi(double v, const QuadratureSpec& spec) {
    if (!(v >= 0.0)) throw domain_error("phi: v must be nonnegative");
    return exp_quad_kernel(0.5 * v, spec);
}

double phi_erfc_form(double v) {
    if (!(v >= 0.0)) throw domain_error("phi_erfc_form: v must be nonnegative");
    if (v == 0.0) return 1.0;
    const double a = 1.0 / std::sqrt(2.0 * v);
    return 1.0 / v - std::sqrt(2.0) / std::pow(v, 1.5) * std::exp(0.5 / v) * specfun::erfc_upper(a);
}

InrdSides inrd_identity(double v, const QuadratureSpec& spec) {
    if (!(v > 0.0)) throw domain_error("inrd_identity: v must be positive");
    InrdSides sides;
    // (2/sqrt(pi)) int sqrt(eta) e^{-eta} / (1 + v eta) deta
    const double s0 = std::min(1.0, 1.0 / v);
    auto g = [&](double eta) { return std::exp(-eta) / (1.0 + v * eta); };
    double lhs = quad::jacobi_panel(spec.kink_nodes, 0.0, 0.5, 0.0, s0, g);
    lhs += quad::log_panels(spec.panel_nodes, s0, 48.0, spec.panel_ln_width,
                            [&](double eta) { return std::sqrt(eta) * g(eta); });
    sides.lhs = 2.0 / kSqrtPi * lhs;
    // int lambda e^{-lambda} exp(-(v/4) lambda^2) dlambda
    sides.rhs = exp_quad_kernel(0.25 * v, spec);
    // 2/v - (4/v^{3/2}) e^{1/v} int_{1/sqrt(v)}^inf e^{-z^2} dz
    sides.erfc_form = 2.0 / v - 4.0 / std::pow(v, 1.5) * std::exp(1.0 / v) *
                                    specfun::erfc_upper(1.0 / std::sqrt(v));
    return sides;
}

double inrd_identity_gap(double v, const QuadratureSpec& spec) {
    const InrdSides s = inrd_identity(v, spec);
    return std::abs(s.lhs - s.rhs);
}

// ---------------------------------------------------------------------------
// F and its certificates.
// ---------------------------------------------------------------------------

namespace {

double big_f_impl(const BecknerParams& par, double s, double x, const QuadratureSpec& spec,
                  EvalInfo* info) {
    const double p = par.p;
    const double gamma_e = 0.5 * p / (p - 1.0);        // plus-part power, in (1,2)
    const double beta_e = 0.5 * (p - 2.0) / (p - 1.0); // v power at 0, in (-1,0)
    const double c = (p - 1.0) * (p - 1.0);
    long* ev = info ? &info->evaluations : nullptr;

    if (s == 0.0) return 0.0;
    if (x == 0.0) {
        const double inner = seminf_power_integral(beta_e, 1.0 / c, spec,
                                                   [&](double v) { return phi(c * v, spec); }, ev);
        return par.c_p * std::pow(s, gamma_e) * inner;
    }
    const double v_star = s * std::exp((2.0 - 2.0 * p) * std::log(x));
    const double inner = kinked_power_integral(gamma_e, beta_e, v_star, 1.0 / c, spec,
                                               [&](double v) { return phi(c * v, spec); }, ev);
    return par.c_p * std::pow(x, p) * inner;
}

}  // namespace

double big_f(const BecknerParams& par, double s, double x, const QuadratureSpec& spec,
             EvalInfo* info) {
    if (!(s >= 0.0) || !(x >= 0.0)) throw domain_error("big_f: s and x must be nonnegative");
    const double value = big_f_impl(par, s, x, spec, info);
    if (spec.check_convergence) {
        const double fine = big_f_impl(par, s, x, refined(spec), nullptr);
        if (std::abs(fine - value) > std::max(16.0 * spec.rel_tol * std::abs(fine), 1e-280))
            throw numerical_error("big_f: quadrature not converged",
                                  info ? info->evaluations : -1);
    }
    return value;
}

double besselk_power_integral(double order, double power, double a, const QuadratureSpec& spec) {
    return besselk_weighted_integral(order, power, a, spec);
}

double u_alt_kernel(const BecknerParams& par, double v, const QuadratureSpec& spec) {
    const double c = (par.p - 1.0) * (par.p - 1.0);
    return besselk_weighted_integral(par.nu, par.nu + 2.0, 0.5 * c * v, spec);
}

double u_alt(const BecknerParams& par, double z, const QuadratureSpec& spec) {
    if (!(z >= 0.0)) throw domain_error("u_alt: z must be nonnegative");
    if (z == 0.0) return 0.0;
    quad::AdaptiveOptions opt;
    opt.rel_tol = 1e-9;
    opt.max_evals = spec.max_evals;
    const auto res = quad::adaptive(
        [&](double v) { return (z - v) * u_alt_kernel(par, v, spec); }, 0.0, z, opt);
    return par.c_p_prime * res.value;
}

double cpd_normalization(const BecknerParams& par) {
    return par.c_p_prime * specfun::bessel_moment(par.nu + 2.0, par.nu);
}

double laplace_gap_u(const BecknerParams& par, double alpha, const QuadratureSpec& spec,
                     EvalInfo* info) {
    if (!(alpha > 0.0)) throw domain_error("laplace_gap_u: alpha must be positive");
    const double p = par.p;
    const double nu = par.nu;
    const double c = (p - 1.0) * (p - 1.0);
    const double vmax = 40.0 / alpha;
    const double g_scale = std::min({1.0 / alpha, 1.0 / c, 1.0});
    long* ev = info ? &info->evaluations : nullptr;

    // Explicit double-integral route through the Bessel-kernel representation.
    const double lhs_int = left_power_integral(
        nu + 0.5, vmax, g_scale, spec,
        [&](double v) { return 8.0 * std::exp(-alpha * v) * psi_laplace_kernel(c, v, spec); }, ev);
    const double lhs = std::pow(2.0, nu - 1.0) * par.c_p_prime * lhs_int;

    // Closed route through phi.
    const double rhs_int = left_power_integral(
        nu + 0.5, vmax, g_scale, spec,
        [&](double v) { return std::exp(-alpha * v) * phi(c * v, spec); }, ev);
    const double rhs = par.c_p * specfun::gamma(1.5 - nu) * rhs_int;

    if (info) {
        // Discarded tail of the e^{-alpha v} integrals, crude upper bound.
        const double tail = std::exp(-alpha * vmax) * std::pow(vmax, nu + 0.5) / alpha;
        info->tail_bound = tail * std::max(1.0, 8.0 * psi_laplace_kernel(c, vmax, spec));
    }
    // The common factor alpha^{nu-3/2} is dropped: the gap is relative.
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

double pde_residual_f(const BecknerParams& par, double s, double x, double h,
                      const QuadratureSpec& spec) {
    if (!(s > 0.0) || !(x > 0.0)) throw domain_error("pde_residual_f: s,x must be positive");
    if (!(h > 0.0) || !(h < 0.25)) throw domain_error("pde_residual_f: degenerate step");
    const double hs = h * s, hx = h * x;
    const double f_s =
        (big_f(par, s + hs, x, spec) - big_f(par, s - hs, x, spec)) / (2.0 * hs);
    const double f0 = big_f(par, s, x, spec);
    const double f_xx =
        (big_f(par, s, x + hx, spec) - 2.0 * f0 + big_f(par, s, x - hx, spec)) / (hx * hx);
    return f_s * std::pow(x, 2.0 * par.p - 4.0) + 0.5 * f_xx - std::pow(x, -par.p) * s;
}

double f_asymptotic_constant(double p) {
    if (!(p > 4.0 / 3.0) || !(p < 2.0))
        throw domain_error("f_asymptotic_constant: p must lie in (4/3,2)");
    return std::pow(2.0, (3.0 * p - 2.0) / (2.0 * (p - 1.0))) *
           std::pow(p - 1.0, (2.0 - p) / (p - 1.0)) / (kSqrtPi * p * (2.0 - p)) *
           specfun::gamma(0.5 / (p - 1.0));
}

double f_asymptotic_ratio(const BecknerParams& par, double s, double x,
                          const QuadratureSpec& spec) {
    if (!(s > 0.0)) throw domain_error("f_asymptotic_ratio: s must be positive");
    const double gamma_e = 0.5 * par.p / (par.p - 1.0);
    if (gamma_e * std::log(s) > 690.0) throw range_error("f_asymptotic_ratio: overflow in s^gamma");
    return big_f(par, s, x, spec) / std::pow(s, gamma_e);
}

// ---------------------------------------------------------------------------
// J and its certificates.
// ---------------------------------------------------------------------------

namespace {

double j_fun_impl(const HoelderParams& par, double s, double x, const QuadratureSpec& spec,
                  EvalInfo* info) {
    const double p = par.p, q = par.q, np = par.nu_prime;
    const double gamma_e = p / q;                       // plus-part power, in (0,1)
    const double beta_e = p * np;                       // = -p/q, in (-1,0)
    const double m = 2.0 * (p - 1.0) * np + 1.0;        // lambda power of the inner kernel
    const double q2h = 0.5 * q * q;
    const double scale = 2.0 / (q * q);
    const double front = par.c_pq * std::pow(2.0, m + 1.0);
    long* ev = info ? &info->evaluations : nullptr;

    if (s == 0.0) return 0.0;
    if (x == 0.0) {
        // No kink: the plus-part is constant in v.  The kernel decays like
        // v^{-(m+1)/2} (with a logarithm when m = 1), so the mapped tail is
        // integrated adaptively.
        const double V = 4096.0 * scale;
        double inner = left_power_integral(beta_e, V, scale, spec,
                                           [&](double v) { return psi_j_kernel(m, q2h, v, spec); },
                                           ev);
        quad::AdaptiveOptions opt;
        opt.rel_tol = 1e-8;
        opt.max_evals = spec.max_evals;
        inner += quad::adaptive(
                     [&](double u) {
                         const double v = V / (u * u);
                         return 2.0 * std::pow(V, beta_e + 1.0) * std::pow(u, -2.0 * beta_e - 3.0) *
                                psi_j_kernel(m, q2h, v, spec);
                     },
                     1e-8, 1.0, opt)
                     .value;
        return front * std::pow(s, gamma_e) * inner;
    }
    const double v_star = s * std::exp(-q * std::log(x));
    const double inner =
        kinked_power_integral(gamma_e, beta_e, v_star, scale, spec,
                              [&](double v) { return psi_j_kernel(m, q2h, v, spec); }, ev);
    return front * std::pow(x, p) * inner;
}

}  // namespace

double j_fun(const HoelderParams& par, double s, double x, const QuadratureSpec& spec,
             EvalInfo* info) {
    if (!(s >= 0.0) || !(x >= 0.0)) throw domain_error("j_fun: s and x must be nonnegative");
    const double value = j_fun_impl(par, s, x, spec, info);
    if (spec.check_convergence) {
        const double fine = j_fun_impl(par, s, x, refined(spec), nullptr);
        if (std::abs(fine - value) > std::max(16.0 * spec.rel_tol * std::abs(fine), 1e-280))
            throw numerical_error("j_fun: quadrature not converged",
                                  info ? info->evaluations : -1);
    }
    return value;
}

double v_alt_kernel(const HoelderParams& par, double u, const QuadratureSpec& spec) {
    const double power = (2.0 * par.p - 1.0) * par.nu_prime + 1.0;
    return besselk_weighted_integral(par.nu_prime, power, 0.125 * par.q * par.q * u, spec);
}

double v_alt(const HoelderParams& par, double z, const QuadratureSpec& spec) {
    if (!(z >= 0.0)) throw domain_error("v_alt: z must be nonnegative");
    if (z == 0.0) return 0.0;
    quad::AdaptiveOptions opt;
    opt.rel_tol = 1e-9;
    opt.max_evals = spec.max_evals;
    const auto res =
        quad::adaptive([&](double u) { return v_alt_kernel(par, u, spec); }, 0.0, z, opt);
    return par.c_pq_prime * res.value;
}

double cpnubdd_normalization(const HoelderParams& par) {
    const double power = (2.0 * par.p - 1.0) * par.nu_prime + 1.0;
    return par.c_pq_prime * specfun::bessel_moment(power, par.nu_prime);
}

double j_upper_bound(const HoelderParams& par, double s) {
    if (!(s >= 0.0)) throw domain_error("j_upper_bound: s must be nonnegative");
    if (s == 0.0) return 0.0;
    const double p = par.p, q = par.q;
    const double lg = std::lgamma(1.0 + 1.0 / q) - std::lgamma(1.0 + 1.0 / q - p / q);
    return 2.0 / p * std::exp(lg) * std::pow(0.5 * q * q, p / q) * std::pow(s, p / q);
}

double pde_residual_j(const HoelderParams& par, double s, double x, double h,
                      const QuadratureSpec& spec) {
    if (!(s > 0.0) || !(x > 0.0)) throw domain_error("pde_residual_j: s,x must be positive");
    if (!(h > 0.0) || !(h < 0.25)) throw domain_error("pde_residual_j: degenerate step");
    const double hs = h * s, hx = h * x;
    const double j_s = (j_fun(par, s + hs, x, spec) - j_fun(par, s - hs, x, spec)) / (2.0 * hs);
    const double j0 = j_fun(par, s, x, spec);
    const double j_xx =
        (j_fun(par, s, x + hx, spec) - 2.0 * j0 + j_fun(par, s, x - hx, spec)) / (hx * hx);
    return j_s * std::pow(x, par.q - 2.0) + 0.5 * j_xx - std::pow(x, par.p - 2.0);
}

double hoelder_constant(double p, double q) {
    if (!(p > 0.0) || !(q > p)) throw domain_error("hoelder_constant: need 0 < p < q");
    const double lg = std::lgamma(1.0 + 1.0 / q) - std::lgamma(1.0 + 1.0 / q - p / q);
    return std::exp(lg + p / q * std::log(q));
}

// ---------------------------------------------------------------------------
// Closed forms for p = 4/3 and p = 6/5 (analytic PDE residuals).
// ---------------------------------------------------------------------------

bool has_closed_form(double p) {
    return std::abs(p - 4.0 / 3.0) < 1e-12 || std::abs(p - 6.0 / 5.0) < 1e-12;
}

double closed_form_f(double p, double s, double x) {
    if (!(s >= 0.0) || !(x >= 0.0)) throw domain_error("closed_form_f: s,x must be nonnegative");
    if (std::abs(p - 4.0 / 3.0) < 1e-12) return 0.5 * s * s;
    if (std::abs(p - 6.0 / 5.0) < 1e-12) return 0.5 * std::pow(x, 0.4) * s * s + s * s * s / 50.0;
    throw domain_error("closed_form_f: closed form exists only for p = 4/3 and p = 6/5");
}

double closed_form_pde_residual(double p, double s, double x) {
    if (!(s > 0.0) || !(x > 0.0)) throw domain_error("closed_form_pde_residual: s,x positive");
    if (std::abs(p - 4.0 / 3.0) < 1e-12) {
        const double f_s = s;
        return f_s * std::pow(x, 2.0 * p - 4.0) - std::pow(x, -p) * s;
    }
    if (std::abs(p - 6.0 / 5.0) < 1e-12) {
        const double f_s = std::pow(x, 0.4) * s + 3.0 * s * s / 50.0;
        const double f_xx = 0.5 * 0.4 * (0.4 - 1.0) * std::pow(x, 0.4 - 2.0) * s * s;
        return f_s * std::pow(x, 2.0 * p - 4.0) + 0.5 * f_xx - std::pow(x, -p) * s;
    }
    throw domain_error("closed_form_pde_residual: p must be 4/3 or 6/5");
}

// ---------------------------------------------------------------------------
// Heat-kernel and Bessel ODE residuals.
// ---------------------------------------------------------------------------

double heat_kernel_pde_residual(double order, double s, double y, double lambda, double h,
                                const specfun::Config& cfg) {
    if (!(s > 0.0) || !(y > 0.0) || !(lambda > 0.0))
        throw domain_error("heat_kernel_pde_residual: arguments must be positive");
    if (!(h > 0.0) || !(h < 0.25)) throw domain_error("heat_kernel_pde_residual: degenerate step");
    auto g = [&](double ss, double yy) {
        return std::pow(yy, -order) * specfun::bessel_k(order, lambda * yy, cfg) *
               std::exp(-0.5 * lambda * lambda * ss);
    };
    const double hs = h * s, hy = h * y;
    const double g_s = (g(s + hs, y) - g(s - hs, y)) / (2.0 * hs);
    const double g_y = (g(s, y + hy) - g(s, y - hy)) / (2.0 * hy);
    const double g_yy = (g(s, y + hy) - 2.0 * g(s, y) + g(s, y - hy)) / (hy * hy);
    return g_s + 0.5 * g_yy + (2.0 * order + 1.0) / (2.0 * y) * g_y;
}

double bessel_ode_residual(double order, double z, double h, const specfun::Config& cfg) {
    if (!(z > 0.0)) throw domain_error("bessel_ode_residual: z must be positive");
    if (!(h > 0.0) || !(h < 0.25)) throw domain_error("bessel_ode_residual: degenerate step");
    auto u = [&](double zz) { return std::pow(zz, -order) * specfun::bessel_k(order, zz, cfg); };
    const double hz = h * z;
    const double u0 = u(z);
    const double up = (u(z + hz) - u(z - hz)) / (2.0 * hz);
    const double upp = (u(z + hz) - 2.0 * u0 + u(z - hz)) / (hz * hz);
    return (upp + (2.0 * order + 1.0) / z * up - u0) / u0;
}

double bessel_k_derivative_identity_gap(double order, double z, double h,
                                        const specfun::Config& cfg) {
    if (!(z > 0.0)) throw domain_error("bessel_k_derivative_identity_gap: z must be positive");
    auto u = [&](double zz) { return std::pow(zz, -order) * specfun::bessel_k(order, zz, cfg); };
    const double hz = h * z;
    const double up = (u(z + hz) - u(z - hz)) / (2.0 * hz);
    const double rhs = -std::pow(z, -order) * specfun::bessel_k(order + 1.0, z, cfg);
    return std::abs(up - rhs) / std::abs(rhs);
}

}  // namespace ineqlab::deficit
