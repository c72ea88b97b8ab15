#include <cmath>

#include "ineqlab/functionals.hpp"
#include "ineqlab/rng.hpp"

namespace ineqlab::functionals {

namespace {

// The corpus is generated from a fixed seed with the counter-based generator,
// so it is identical on every platform; the rendered JSON is kept under
// data/corpus_standard.json and a test guards against drift.
constexpr std::uint64_t corpus_seed() { return 0x1ab5eed2025ULL; }

double uni(std::uint64_t i, std::uint64_t field, std::uint64_t k, double lo, double hi) {
    return lo + (hi - lo) * rng::uniform(corpus_seed(), i, field, k);
}

}  // namespace

std::vector<TestFunction> standard_corpus() {
    std::vector<TestFunction> out;
    out.reserve(100);
    for (int i = 0; i < 100; ++i) {
        TestFunction f;
        f.dimension = 1 + (i % 3);
        f.constant = uni(i, 0, 0, 0.1, 5.0);
        const int nb = 1 + static_cast<int>(uni(i, 1, 0, 0.0, 4.0 - 1e-12));
        const double root_d = std::sqrt(static_cast<double>(f.dimension));
        for (int b = 0; b < nb; ++b) {
            Bump bump;
            bump.amplitude = uni(i, 2, b, 0.0, 5.0);
            bump.sigma = uni(i, 3, b, 0.3, 3.0);
            // Components scaled by 1/sqrt(d) so |center| <= 3.
            for (int k = 0; k < f.dimension; ++k)
                bump.center[k] = uni(i, 4 + k, b, -3.0, 3.0) / root_d;
            f.bumps.push_back(bump);
        }
        f.validate();
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<int> mc_grade_indices() {
    // One function per dimension, the first with at most two bumps: keeps the
    // Monte Carlo criterion affordable while covering d = 1, 2, 3.
    const auto corpus = standard_corpus();
    std::vector<int> picks(3, -1);
    for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
        const int d = corpus[i].dimension;
        if (picks[d - 1] < 0 && corpus[i].bumps.size() <= 2) picks[d - 1] = i;
    }
    return picks;
}

}  // namespace ineqlab::functionals
