#include "ineqlab/test_function.hpp"

#include <cmath>

namespace ineqlab::functionals {

void TestFunction::validate() const {
    if (dimension < 1 || dimension > 3)
        throw config_error("TestFunction: dimension must be 1, 2 or 3");
    if (!(constant > 0.0)) throw config_error("TestFunction: constant must be positive");
    for (const auto& b : bumps) {
        if (!(b.amplitude >= 0.0)) throw config_error("TestFunction: amplitudes must be >= 0");
        if (!(b.sigma > 0.0)) throw config_error("TestFunction: sigmas must be positive");
    }
}

double TestFunction::value(const double* x) const {
    double f = constant;
    for (const auto& b : bumps) {
        double r2 = 0.0;
        for (int k = 0; k < dimension; ++k) {
            const double d = x[k] - b.center[k];
            r2 += d * d;
        }
        f += b.amplitude * std::exp(-0.5 * r2 / (b.sigma * b.sigma));
    }
    return f;
}

void TestFunction::gradient(const double* x, double* g) const {
    for (int k = 0; k < dimension; ++k) g[k] = 0.0;
    for (const auto& b : bumps) {
        const double s2 = b.sigma * b.sigma;
        double r2 = 0.0;
        for (int k = 0; k < dimension; ++k) {
            const double d = x[k] - b.center[k];
            r2 += d * d;
        }
        const double e = b.amplitude * std::exp(-0.5 * r2 / s2);
        for (int k = 0; k < dimension; ++k) g[k] -= e * (x[k] - b.center[k]) / s2;
    }
}

void TestFunction::hessian(const double* x, double* h) const {
    const int d = dimension;
    for (int k = 0; k < d * d; ++k) h[k] = 0.0;
    for (const auto& b : bumps) {
        const double s2 = b.sigma * b.sigma;
        double r2 = 0.0;
        for (int k = 0; k < d; ++k) {
            const double dd = x[k] - b.center[k];
            r2 += dd * dd;
        }
        const double e = b.amplitude * std::exp(-0.5 * r2 / s2);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const double di = x[i] - b.center[i], dj = x[j] - b.center[j];
                h[i * d + j] += e * (di * dj / (s2 * s2) - (i == j ? 1.0 / s2 : 0.0));
            }
    }
}

TestFunction TestFunction::evolve(double s) const {
    if (!(s >= 0.0)) throw domain_error("TestFunction::evolve: time must be nonnegative");
    TestFunction out = *this;
    for (auto& b : out.bumps) {
        const double s2 = b.sigma * b.sigma;
        b.amplitude *= std::pow(s2 / (s2 + s), 0.5 * dimension);
        b.sigma = std::sqrt(s2 + s);
    }
    return out;
}

double TestFunction::sup_bound() const {
    double s = constant;
    for (const auto& b : bumps) s += b.amplitude;
    return s;
}

nlohmann::json TestFunction::to_json() const {
    nlohmann::json j;
    j["dimension"] = dimension;
    j["constant"] = constant;
    j["bumps"] = nlohmann::json::array();
    for (const auto& b : bumps) {
        nlohmann::json jb;
        jb["amplitude"] = b.amplitude;
        jb["center"] = std::vector<double>(b.center.begin(), b.center.begin() + dimension);
        jb["sigma"] = b.sigma;
        j["bumps"].push_back(jb);
    }
    return j;
}

namespace {
void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                    const char* what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw config_error(std::string(what) + ": unknown field '" + it.key() + "'");
    }
}
}  // namespace

TestFunction TestFunction::from_json(const nlohmann::json& j) {
    reject_unknown(j, {"dimension", "constant", "bumps"}, "TestFunction");
    TestFunction f;
    f.dimension = j.at("dimension").get<int>();
    f.constant = j.at("constant").get<double>();
    for (const auto& jb : j.at("bumps")) {
        reject_unknown(jb, {"amplitude", "center", "sigma"}, "TestFunction bump");
        Bump b;
        b.amplitude = jb.at("amplitude").get<double>();
        const auto c = jb.at("center").get<std::vector<double>>();
        if (static_cast<int>(c.size()) != f.dimension)
            throw config_error("TestFunction: bump center size does not match dimension");
        for (std::size_t k = 0; k < c.size(); ++k) b.center[k] = c[k];
        b.sigma = jb.at("sigma").get<double>();
        f.bumps.push_back(b);
    }
    f.validate();
    return f;
}

}  // namespace ineqlab::functionals
