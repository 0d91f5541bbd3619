#include "fluxring/transfer.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

#include "fluxring/constants.hpp"
#include "fluxring/errors.hpp"
#include "fluxring/rng.hpp"

namespace fluxring {

namespace {

using cx = std::complex<double>;
constexpr double two_pi = 2.0 * constants::pi;

// e^{2*pi*i*num/den} with the argument reduced mod den before the trig call
cx root_phase(long long num, long long den) {
    const long long r = ((num % den) + den) % den;
    return std::polar(1.0, two_pi * static_cast<double>(r)
                               / static_cast<double>(den));
}

}  // namespace

DetectorPhaseMap::DetectorPhaseMap(int n) {
    if (n <= 0) throw InvalidArgument("phase map needs a positive pixel count");
    theta_.assign(static_cast<std::size_t>(n), 0.0);
}

DetectorPhaseMap::DetectorPhaseMap(std::vector<double> theta)
    : theta_(std::move(theta)) {
    if (theta_.empty())
        throw InvalidArgument("phase map needs a positive pixel count");
}

UnitaryMatrix detector_basis(const DetectorPhaseMap& phases) {
    const int n = phases.size();
    const auto f = dft_matrix(n);
    std::vector<cx> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        for (int k = 0; k < n; ++k)
            m[static_cast<std::size_t>(s) * static_cast<std::size_t>(n)
              + static_cast<std::size_t>(k)] =
                f.at(s, k) * std::polar(1.0, phases.theta(k));
    // column phases on a unitary stay unitary, skip the O(n^3) audit
    return unchecked_unitary(n, std::move(m));
}

ForwardTransferResult forward_transfer(const StateVector& c,
                                       const DetectorPhaseMap& phases,
                                       std::uint64_t seed,
                                       std::optional<int> forced) {
    const int n = c.dim();
    if (phases.size() != n)
        throw DimensionError("state and phase map pixel counts differ");
    if (forced && (*forced < 0 || *forced >= n))
        throw InvalidArgument("forced pixel index out of range");

    const auto a = detector_basis(phases);

    // branch s: array amplitudes left behind when pixel s fires
    std::vector<std::vector<cx>> branch(static_cast<std::size_t>(n));
    std::vector<double> probs(static_cast<std::size_t>(n), 0.0);
    for (int s = 0; s < n; ++s) {
        auto& v = branch[static_cast<std::size_t>(s)];
        v.resize(static_cast<std::size_t>(n));
        double p = 0.0;
        for (int j = 0; j < n; ++j) {
            const cx z = std::conj(a.at(s, j)) * c[j];
            v[static_cast<std::size_t>(j)] = z;
            p += std::norm(z);
        }
        probs[static_cast<std::size_t>(s)] = p;
    }

    const int s = forced ? *forced : sample_index(probs, seed);

    std::vector<double> row_phases(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        row_phases[static_cast<std::size_t>(k)] =
            phases.theta(k)
            + two_pi
                  * static_cast<double>((static_cast<long long>(k) * s) % n)
                  / static_cast<double>(n);

    return ForwardTransferResult{
        s, probs[static_cast<std::size_t>(s)],
        make_state(std::move(branch[static_cast<std::size_t>(s)])),
        std::move(row_phases)};
}

StateVector phase_correct_image(const StateVector& state,
                                const DetectorPhaseMap& phases) {
    const int n = state.dim();
    if (phases.size() != n)
        throw DimensionError("state and phase map pixel counts differ");
    std::vector<cx> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] =
            state[k] * std::polar(1.0, phases.theta(k));
    return StateVector::near_unit(std::move(out));
}

UnitaryMatrix bell_basis(int n) {
    if (n <= 0) throw InvalidArgument("entangled basis needs a positive size");
    const int d = n * n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<cx> m(static_cast<std::size_t>(d) * static_cast<std::size_t>(d),
                      cx{0.0, 0.0});
    for (int nn = 0; nn < n; ++nn)
        for (int mm = 0; mm < n; ++mm)
            for (int k = 0; k < n; ++k) {
                const int row = nn * n + mm;
                const int col = k * n + (k + mm) % n;
                m[static_cast<std::size_t>(row) * static_cast<std::size_t>(d)
                  + static_cast<std::size_t>(col)] =
                    scale * root_phase(static_cast<long long>(k) * nn, n);
            }
    // one nonzero per column row-pair with pure phases: unitary by build
    return unchecked_unitary(d, std::move(m));
}

TeleportResult teleport_reverse(const StateVector& d, std::uint64_t seed,
                                std::optional<int> forced) {
    const int n = d.dim();
    const int d2 = n * n;
    if (forced && (*forced < 0 || *forced >= d2))
        throw InvalidArgument("forced outcome index out of range");

    // electron branch for outcome (nn, m) straight from the contraction of
    // the shared pair state against the measured basis row:
    //   v[j] = e^{-2*pi*i*j*nn/N} d[(j+m) mod N] / N
    const double inv = 1.0 / static_cast<double>(n);
    std::vector<std::vector<cx>> branch(static_cast<std::size_t>(d2));
    std::vector<double> probs(static_cast<std::size_t>(d2), 0.0);
    for (int nn = 0; nn < n; ++nn)
        for (int m = 0; m < n; ++m) {
            auto& v = branch[static_cast<std::size_t>(nn * n + m)];
            v.resize(static_cast<std::size_t>(n));
            double p = 0.0;
            for (int j = 0; j < n; ++j) {
                const cx z =
                    inv * std::conj(root_phase(static_cast<long long>(j) * nn, n))
                    * d[(j + m) % n];
                v[static_cast<std::size_t>(j)] = z;
                p += std::norm(z);
            }
            probs[static_cast<std::size_t>(nn * n + m)] = p;
        }

    const int pick = forced ? *forced : sample_index(probs, seed);
    const BellOutcome o{pick / n, pick % n};

    auto raw = make_state(std::move(branch[static_cast<std::size_t>(pick)]));
    auto corrected = apply_corrections_1d(raw, o);
    return TeleportResult{o, probs[static_cast<std::size_t>(pick)],
                          std::move(raw), std::move(corrected)};
}

StateVector apply_corrections_1d(const StateVector& raw, const BellOutcome& o) {
    const int n = raw.dim();
    if (o.n < 0 || o.n >= n || o.m < 0 || o.m >= n)
        throw InvalidArgument("outcome indices must lie in [0, dim)");

    std::vector<cx> w(raw.amplitudes());
    if (o.n != 0)
        for (int j = 0; j < n; ++j)
            w[static_cast<std::size_t>(j)] *=
                root_phase(static_cast<long long>(j) * o.n, n);

    if (o.m != 0) {
        const auto f = dft_matrix(n);
        // analyze, advance each pixel's phase, synthesize: a cyclic shift
        std::vector<cx> u(static_cast<std::size_t>(n), cx{0.0, 0.0});
        for (int s = 0; s < n; ++s) {
            cx acc{0.0, 0.0};
            for (int j = 0; j < n; ++j) acc += f.at(s, j) * w[static_cast<std::size_t>(j)];
            u[static_cast<std::size_t>(s)] =
                acc * root_phase(static_cast<long long>(o.m) * s, n);
        }
        for (int j = 0; j < n; ++j) {
            cx acc{0.0, 0.0};
            for (int s = 0; s < n; ++s)
                acc += std::conj(f.at(s, j)) * u[static_cast<std::size_t>(s)];
            w[static_cast<std::size_t>(j)] = acc;
        }
    }

    return StateVector::near_unit(std::move(w));
}

Lattice2D::Lattice2D(int nx_, int ny_) : nx(nx_), ny(ny_) {
    if (nx < 1 || ny < 1)
        throw InvalidArgument("lattice extents must be positive");
}

int raster_index(int kx, int ky, const Lattice2D& lat) {
    if (kx < 0 || kx >= lat.nx || ky < 0 || ky >= lat.ny)
        throw InvalidArgument("lattice site out of range");
    return kx + lat.nx * ky;
}

std::pair<int, int> raster_coords(int k, const Lattice2D& lat) {
    if (k < 0 || k >= lat.size())
        throw InvalidArgument("raster index out of range");
    return {k % lat.nx, k / lat.nx};
}

StateVector apply_corrections_2d(const StateVector& raw, const BellOutcome& o,
                                 const Lattice2D& lat) {
    const int n = lat.size();
    if (raw.dim() != n) throw DimensionError("state and lattice sizes differ");
    if (o.n < 0 || o.n >= n || o.m < 0 || o.m >= n)
        throw InvalidArgument("outcome indices must lie in [0, lattice size)");

    const int nx = lat.nx;
    const int ny = lat.ny;
    const int mx = o.m % nx;
    const int my = o.m / nx;

    // image-plane comb, split across the two axes (exact because the raster
    // index makes n*k/(nx*ny) = n*kx/(nx*ny) + n*ky/ny)
    std::vector<cx> w(raw.amplitudes());
    if (o.n != 0)
        for (int ky = 0; ky < ny; ++ky)
            for (int kx = 0; kx < nx; ++kx)
                w[static_cast<std::size_t>(kx + nx * ky)] *=
                    root_phase(static_cast<long long>(o.n) * kx, n)
                    * root_phase(static_cast<long long>(o.n) * ky, ny);

    if (o.m != 0) {
        const auto fx = dft_matrix(nx);
        const auto fy = dft_matrix(ny);

        // per-axis cyclic shifts carried out in the diffraction plane
        std::vector<cx> u(static_cast<std::size_t>(n), cx{0.0, 0.0});
        for (int sy = 0; sy < ny; ++sy)
            for (int sx = 0; sx < nx; ++sx) {
                cx acc{0.0, 0.0};
                for (int ky = 0; ky < ny; ++ky)
                    for (int kx = 0; kx < nx; ++kx)
                        acc += fy.at(sy, ky) * fx.at(sx, kx)
                               * w[static_cast<std::size_t>(kx + nx * ky)];
                u[static_cast<std::size_t>(sx + nx * sy)] =
                    acc * root_phase(static_cast<long long>(mx) * sx, nx)
                    * root_phase(static_cast<long long>(my) * sy, ny);
            }
        std::vector<cx> v(static_cast<std::size_t>(n), cx{0.0, 0.0});
        for (int ky = 0; ky < ny; ++ky)
            for (int kx = 0; kx < nx; ++kx) {
                cx acc{0.0, 0.0};
                for (int sy = 0; sy < ny; ++sy)
                    for (int sx = 0; sx < nx; ++sx)
                        acc += std::conj(fy.at(sy, ky)) * std::conj(fx.at(sx, kx))
                               * u[static_cast<std::size_t>(sx + nx * sy)];
                v[static_cast<std::size_t>(kx + nx * ky)] = acc;
            }

        // carry pass: output columns left of mx are exactly the ones whose x
        // shift wrapped around, and the wrap adds one more step in y
        w = v;
        for (int y = 0; y < ny; ++y)
            for (int x = 0; x < mx; ++x)
                w[static_cast<std::size_t>(x + nx * y)] =
                    v[static_cast<std::size_t>(x + nx * ((y - 1 + ny) % ny))];
    }

    return StateVector::near_unit(std::move(w));
}

}  // namespace fluxring
