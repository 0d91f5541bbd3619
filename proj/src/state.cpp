#include "fluxring/state.hpp"

#include <cmath>
#include <utility>

#include "fluxring/constants.hpp"
#include "fluxring/rng.hpp"

namespace fluxring {

namespace {

double vector_norm(const std::vector<cx>& v) {
    double n2 = 0.0;
    for (const auto& z : v) n2 += std::norm(z);
    return std::sqrt(n2);
}

}  // namespace

StateVector StateVector::near_unit(std::vector<cx> amps) {
    const double n = vector_norm(amps);
    if (!(std::abs(n - 1.0) < 1e-10))
        throw InvalidState("state norm drifted beyond the 1e-10 budget");
    for (auto& z : amps) z /= n;
    return StateVector(std::move(amps));
}

StateVector make_state(std::vector<cx> amplitudes) {
    if (amplitudes.empty()) throw InvalidState("state needs at least one amplitude");
    const double n = vector_norm(amplitudes);
    if (!(n > 0.0) || !std::isfinite(n))
        throw InvalidState("state norm must be positive and finite");
    for (auto& z : amplitudes) z /= n;
    return StateVector(std::move(amplitudes));
}

UnitaryMatrix::UnitaryMatrix(int dim, std::vector<cx> row_major)
    : dim_(dim), m_(std::move(row_major)) {
    if (dim <= 0) throw InvalidArgument("matrix dimension must be positive");
    if (m_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
        throw InvalidArgument("matrix data does not match its dimension");
    if (!(unitarity_residual() < 1e-10))
        throw InvalidArgument("matrix is not unitary within 1e-10");
}

UnitaryMatrix::UnitaryMatrix(int dim, std::vector<cx> row_major, trusted_t)
    : dim_(dim), m_(std::move(row_major)) {}

UnitaryMatrix unchecked_unitary(int dim, std::vector<cx> row_major) {
    if (dim <= 0) throw InvalidArgument("matrix dimension must be positive");
    if (row_major.size()
        != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
        throw InvalidArgument("matrix data does not match its dimension");
    return UnitaryMatrix(dim, std::move(row_major), UnitaryMatrix::trusted_t{});
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
    if (dim <= 0) throw InvalidArgument("matrix dimension must be positive");
    std::vector<cx> m(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                      cx{0.0, 0.0});
    for (int i = 0; i < dim; ++i)
        m[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim)
          + static_cast<std::size_t>(i)] = cx{1.0, 0.0};
    return UnitaryMatrix(dim, std::move(m), trusted_t{});
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    std::vector<cx> m(m_.size());
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            m[static_cast<std::size_t>(c) * static_cast<std::size_t>(dim_)
              + static_cast<std::size_t>(r)] = std::conj(at(r, c));
    return UnitaryMatrix(dim_, std::move(m), trusted_t{});
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
    if (dim_ != rhs.dim_)
        throw DimensionError("matrix product needs matching dimensions");
    std::vector<cx> m(m_.size(), cx{0.0, 0.0});
    for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) {
            const cx lhs_rk = at(r, k);
            if (lhs_rk == cx{0.0, 0.0}) continue;
            for (int c = 0; c < dim_; ++c)
                m[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_)
                  + static_cast<std::size_t>(c)] += lhs_rk * rhs.at(k, c);
        }
    return UnitaryMatrix(dim_, std::move(m), trusted_t{});
}

double UnitaryMatrix::unitarity_residual() const {
    double worst = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) {
            cx acc{0.0, 0.0};
            for (int k = 0; k < dim_; ++k)
                acc += std::conj(at(k, r)) * at(k, c);
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

StateVector apply_unitary(const StateVector& s, const UnitaryMatrix& u) {
    if (s.dim() != u.dim())
        throw DimensionError("state and unitary dimensions differ");
    std::vector<cx> out(static_cast<std::size_t>(s.dim()), cx{0.0, 0.0});
    for (int r = 0; r < u.dim(); ++r) {
        cx acc{0.0, 0.0};
        for (int c = 0; c < u.dim(); ++c) acc += u.at(r, c) * s[c];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return StateVector::near_unit(std::move(out));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<cx> out(static_cast<std::size_t>(a.dim())
                        * static_cast<std::size_t>(b.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            out[static_cast<std::size_t>(i) * static_cast<std::size_t>(b.dim())
                + static_cast<std::size_t>(j)] = a[i] * b[j];
    return StateVector::near_unit(std::move(out));
}

UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    const int d = da * db;
    std::vector<cx> m(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m[static_cast<std::size_t>(r) * static_cast<std::size_t>(d)
              + static_cast<std::size_t>(c)] =
                a.at(r / db, c / db) * b.at(r % db, c % db);
    return unchecked_unitary(d, std::move(m));
}

cx inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim())
        throw DimensionError("inner product needs matching dimensions");
    cx acc{0.0, 0.0};
    for (int k = 0; k < a.dim(); ++k) acc += std::conj(a[k]) * b[k];
    return acc;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner_product(a, b));
}

std::vector<double> born_probabilities(const StateVector& s,
                                       const UnitaryMatrix& basis) {
    if (s.dim() != basis.dim())
        throw DimensionError("state and basis dimensions differ");
    std::vector<double> probs(static_cast<std::size_t>(s.dim()));
    for (int j = 0; j < basis.dim(); ++j) {
        cx amp{0.0, 0.0};
        for (int k = 0; k < basis.dim(); ++k)
            amp += std::conj(basis.at(j, k)) * s[k];
        probs[static_cast<std::size_t>(j)] = std::norm(amp);
    }
    return probs;
}

MeasurementRecord measure(const StateVector& s, const UnitaryMatrix& basis,
                          std::uint64_t seed) {
    const auto probs = born_probabilities(s, basis);
    const int outcome = sample_index(probs, seed);
    const auto& row_start = basis.entries();
    std::vector<cx> post(
        row_start.begin() + static_cast<std::ptrdiff_t>(outcome) * basis.dim(),
        row_start.begin() + static_cast<std::ptrdiff_t>(outcome + 1) * basis.dim());
    return MeasurementRecord{outcome, probs[static_cast<std::size_t>(outcome)],
                             StateVector::near_unit(std::move(post))};
}

UnitaryMatrix dft_matrix(int n) {
    if (n <= 0) throw InvalidArgument("Fourier basis needs a positive size");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<cx> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s)
        for (int k = 0; k < n; ++k) {
            // phase argument reduced mod n before the trig call
            const int r = static_cast<int>(
                (static_cast<long long>(s) * static_cast<long long>(k)) % n);
            const double theta = 2.0 * constants::pi * static_cast<double>(r)
                                 / static_cast<double>(n);
            m[static_cast<std::size_t>(s) * static_cast<std::size_t>(n)
              + static_cast<std::size_t>(k)] = std::polar(scale, theta);
        }
    return unchecked_unitary(n, std::move(m));
}

}  // namespace fluxring
