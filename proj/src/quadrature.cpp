#include "ineqlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <tuple>

namespace ineqlab::quad {

namespace {

// Orthonormal three-term recurrence data: p_{k+1} = ((x-alpha_k) p_k - sqrt(beta_k) p_{k-1}) / sqrt(beta_{k+1}).
struct Recurrence {
    std::vector<double> alpha;  // size n
    std::vector<double> beta;   // size n, beta[0] unused by the matrix
    double mu0;                 // integral of the weight
};

// Number of eigenvalues of the Jacobi matrix below t (Sturm pivot count).
// Vanishing pivots are treated as negative so the count is consistent when
// t collides with an eigenvalue of a leading principal submatrix.
int count_below(const Recurrence& rec, int n, double t) {
    int cnt = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
        q = rec.alpha[i] - t - (i > 0 ? rec.beta[i] / q : 0.0);
        if (std::abs(q) < 1e-300) q = -1e-300;
        if (q < 0.0) ++cnt;
    }
    return cnt;
}

// Golub-Welsch nodes by bisection on the Sturm count, weights from the
// Christoffel numbers 1 / sum_k p_k(x)^2 of the orthonormal polynomials.
Rule golub_welsch(const Recurrence& rec, int n) {
    // Gershgorin bounds.
    double lo = rec.alpha[0], hi = rec.alpha[0];
    for (int i = 0; i < n; ++i) {
        const double off = (i > 0 ? std::sqrt(rec.beta[i]) : 0.0) +
                           (i + 1 < n ? std::sqrt(rec.beta[i + 1]) : 0.0);
        lo = std::min(lo, rec.alpha[i] - off);
        hi = std::max(hi, rec.alpha[i] + off);
    }
    lo -= 1.0;
    hi += 1.0;

    Rule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    for (int k = 0; k < n; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            const double m = 0.5 * (a + b);
            if (m <= a || m >= b) break;
            if (count_below(rec, n, m) <= k)
                a = m;
            else
                b = m;
        }
        rule.x[k] = 0.5 * (a + b);
    }
    for (int k = 0; k < n; ++k) {
        const double x = rule.x[k];
        double pm = 0.0, p = 1.0 / std::sqrt(rec.mu0);
        double ssq = p * p;
        for (int i = 1; i < n; ++i) {
            const double pn = ((x - rec.alpha[i - 1]) * p - (i > 1 ? std::sqrt(rec.beta[i - 1]) : 0.0) * pm) /
                              std::sqrt(rec.beta[i]);
            pm = p;
            p = pn;
            ssq += p * p;
        }
        rule.w[k] = 1.0 / ssq;
    }
    return rule;
}

Recurrence legendre_recurrence(int n) {
    Recurrence rec;
    rec.alpha.assign(n, 0.0);
    rec.beta.assign(n, 0.0);
    rec.mu0 = 2.0;
    for (int k = 1; k < n; ++k) rec.beta[k] = k * k / (4.0 * k * k - 1.0);
    return rec;
}

Recurrence hermite_recurrence(int n) {
    Recurrence rec;
    rec.alpha.assign(n, 0.0);
    rec.beta.assign(n, 0.0);
    rec.mu0 = std::sqrt(4.0 * std::atan(1.0));
    for (int k = 1; k < n; ++k) rec.beta[k] = 0.5 * k;
    return rec;
}

Recurrence jacobi_recurrence(int n, double a, double b) {
    if (a <= -1.0 || b <= -1.0) throw domain_error("gauss_jacobi: exponents must be > -1");
    Recurrence rec;
    rec.alpha.assign(n, 0.0);
    rec.beta.assign(n, 0.0);
    rec.mu0 = std::pow(2.0, a + b + 1.0) *
              std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    rec.alpha[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + a + b;
        rec.alpha[k] = (b * b - a * a) / (s * (s + 2.0));
        if (k == 1)
            rec.beta[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
        else
            rec.beta[k] = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
    }
    return rec;
}

std::mutex g_cache_mutex;

}  // namespace

const Rule& gauss_legendre(int n) {
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, golub_welsch(legendre_recurrence(n), n)).first;
    return it->second;
}

const Rule& gauss_hermite(int n) {
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, golub_welsch(hermite_recurrence(n), n)).first;
    return it->second;
}

const Rule& gauss_jacobi(int n, double a, double b) {
    static std::map<std::tuple<int, double, double>, Rule> cache;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    const auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, golub_welsch(jacobi_recurrence(n, a, b), n)).first;
    return it->second;
}

AdaptiveResult adaptive(const std::function<double(double)>& g, double lo, double hi,
                        const AdaptiveOptions& opt) {
    struct Panel {
        double a, b, value, err;
        bool operator<(const Panel& o) const { return err < o.err; }
    };

    auto evaluate = [&](double a, double b) {
        const double v31 = gl_panel(31, a, b, g);
        const double v15 = gl_panel(15, a, b, g);
        return Panel{a, b, v31, std::abs(v31 - v15)};
    };

    AdaptiveResult res;
    std::priority_queue<Panel> heap;
    Panel first = evaluate(lo, hi);
    res.evaluations = 46;
    double total = first.value, toterr = first.err;
    heap.push(first);

    while (true) {
        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (toterr <= tol) {
            res.converged = true;
            break;
        }
        if (res.evaluations >= opt.max_evals || heap.empty()) break;
        Panel top = heap.top();
        heap.pop();
        const double mid = 0.5 * (top.a + top.b);
        if (mid <= top.a || mid >= top.b) continue;  // panel exhausted in double precision
        Panel l = evaluate(top.a, mid), r = evaluate(mid, top.b);
        res.evaluations += 92;
        total += l.value + r.value - top.value;
        toterr += l.err + r.err - top.err;
        heap.push(l);
        heap.push(r);
    }
    res.value = total;
    res.error = toterr;
    if (!res.converged && opt.throw_on_failure)
        throw numerical_error("adaptive quadrature did not converge", res.evaluations);
    return res;
}

}  // namespace ineqlab::quad
