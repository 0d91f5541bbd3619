// Shared helpers for the test binaries: seeded random states/unitaries and a
// few comparison utilities. Everything here is deliberately independent of
// the library's internal code paths — random unitaries come from Gram-Schmidt
// on Gaussian matrices, matrix products are written out longhand — so tests
// that use these helpers act as oracles rather than echoes.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fluxring/state.hpp"

namespace testsup {

using fluxring::cx;

inline std::vector<cx> random_amplitudes(int dim, std::mt19937_64& gen) {
    std::vector<cx> a(static_cast<std::size_t>(dim));
    // Box-Muller from raw 53-bit uniforms; avoids implementation-defined
    // <random> distributions for cross-platform repeatability.
    auto u = [&gen]() {
        return (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
    };
    for (auto& z : a) {
        double r = std::sqrt(-2.0 * std::log(u()));
        double t = 2.0 * M_PI * u();
        z = cx(r * std::cos(t), r * std::sin(t));
    }
    return a;
}

inline fluxring::StateVector random_state(int dim, std::mt19937_64& gen) {
    return fluxring::make_state(random_amplitudes(dim, gen));
}

// Haar-ish random unitary: Gaussian matrix, two rounds of modified
// Gram-Schmidt on the rows.
inline fluxring::UnitaryMatrix random_unitary(int dim, std::mt19937_64& gen) {
    const auto n = static_cast<std::size_t>(dim);
    std::vector<std::vector<cx>> rows(n);
    for (auto& r : rows) r = random_amplitudes(dim, gen);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                cx proj{0.0, 0.0};
                for (std::size_t k = 0; k < n; ++k)
                    proj += std::conj(rows[j][k]) * rows[i][k];
                for (std::size_t k = 0; k < n; ++k)
                    rows[i][k] -= proj * rows[j][k];
            }
            double nrm = 0.0;
            for (const auto& z : rows[i]) nrm += std::norm(z);
            nrm = std::sqrt(nrm);
            for (auto& z : rows[i]) z /= nrm;
        }
    }
    std::vector<cx> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return fluxring::UnitaryMatrix(dim, std::move(flat));
}

// Longhand A*A residual, independent of UnitaryMatrix internals.
inline double gram_residual(const fluxring::UnitaryMatrix& u) {
    const int n = u.dim();
    double worst = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            cx acc{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                acc += std::conj(u.at(k, r)) * u.at(k, c);
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

inline double max_entry_diff(const fluxring::UnitaryMatrix& a,
                             const fluxring::UnitaryMatrix& b) {
    double worst = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
    return worst;
}

// Largest singular value of (a - b), via power iteration on M*M. Used to
// check operator-norm claims without trusting any library decomposition.
inline double spectral_norm_diff(const fluxring::UnitaryMatrix& a,
                                 const fluxring::UnitaryMatrix& b) {
    const int n = a.dim();
    std::vector<cx> m(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m[static_cast<std::size_t>(r) * n + c] = a.at(r, c) - b.at(r, c);
    std::vector<cx> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = cx(1.0 + i, 0.3 * i);
    auto matvec = [&](const std::vector<cx>& x, bool conj_t) {
        std::vector<cx> y(static_cast<std::size_t>(n), cx{0.0, 0.0});
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                cx e = m[static_cast<std::size_t>(r) * n + c];
                if (conj_t)
                    y[static_cast<std::size_t>(c)] += std::conj(e) * x[static_cast<std::size_t>(r)];
                else
                    y[static_cast<std::size_t>(r)] += e * x[static_cast<std::size_t>(c)];
            }
        return y;
    };
    double lambda = 0.0;
    for (int it = 0; it < 300; ++it) {
        auto w = matvec(matvec(v, false), true);
        double nrm = 0.0;
        for (const auto& z : w) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) return 0.0;
        for (auto& z : w) z /= nrm;
        lambda = nrm;
        v = std::move(w);
    }
    return std::sqrt(lambda);
}

}  // namespace testsup
