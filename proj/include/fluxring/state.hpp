// state.hpp
//
// Dense state vectors and unitaries over ordered computational bases, sized
// for protocol work (dim <= a few thousand). Conventions, fixed here once:
//
//   * tensor(a, b) is row-major: component (i, j) of the product sits at
//     index i * dim(b) + j. The first factor is the slow index.
//   * dft_matrix(n) has entry (s, k) = exp(+2*pi*i*k*s/n) / sqrt(n).
//   * A measurement basis is a UnitaryMatrix whose ROWS are the outcome kets;
//     outcome j fires with Born probability |<row j|psi>|^2 and leaves the
//     system in row j.
//   * Normalization policy: make_state rescales any nonzero input. Every
//     operation result passes through the strict near-unit constructor, which
//     renormalizes quietly only within 1e-10 of unit norm and throws
//     InvalidState beyond that — protocol chains cannot drift silently.
//   * Sampling is seeded and deterministic (rng.hpp); the seed is always an
//     explicit argument.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fluxring/errors.hpp"

namespace fluxring {

using cx = std::complex<double>;

class StateVector {
  public:
    int dim() const { return static_cast<int>(amp_.size()); }
    const std::vector<cx>& amplitudes() const { return amp_; }
    cx operator[](int k) const { return amp_[static_cast<std::size_t>(k)]; }

    // Strict construction path for operation results: the norm must already
    // be within 1e-10 of 1, and is then polished to exactly unit.
    static StateVector near_unit(std::vector<cx> amps);

  private:
    explicit StateVector(std::vector<cx> amps) : amp_(std::move(amps)) {}
    friend StateVector make_state(std::vector<cx> amplitudes);

    std::vector<cx> amp_;
};

class UnitaryMatrix {
  public:
    // Validating constructor: throws InvalidArgument unless the max-norm of
    // U*U - I is below 1e-10.
    UnitaryMatrix(int dim, std::vector<cx> row_major);

    static UnitaryMatrix identity(int dim);

    int dim() const { return dim_; }
    cx at(int r, int c) const {
        return m_[static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_)
                  + static_cast<std::size_t>(c)];
    }
    const std::vector<cx>& entries() const { return m_; }

    UnitaryMatrix adjoint() const;
    UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;

    // max |(U*U - I)_{rc}|, recomputed on demand.
    double unitarity_residual() const;

  private:
    struct trusted_t {};
    UnitaryMatrix(int dim, std::vector<cx> row_major, trusted_t);

    friend UnitaryMatrix unchecked_unitary(int dim, std::vector<cx> row_major);

    int dim_;
    std::vector<cx> m_;
};

// Construction back door for matrices that are unitary by algebra (DFT rows,
// permutations, products of unitaries); skips the O(dim^3) residual check.
// Tests still verify the residual explicitly through unitarity_residual().
UnitaryMatrix unchecked_unitary(int dim, std::vector<cx> row_major);

struct MeasurementRecord {
    int outcome;           // basis row index that fired
    double probability;    // its Born probability
    StateVector post_state;
};

// Normalized state from raw amplitudes. Rescales any nonzero input; an empty
// or zero-norm array throws InvalidState.
StateVector make_state(std::vector<cx> amplitudes);

StateVector apply_unitary(const StateVector& s, const UnitaryMatrix& u);

StateVector tensor(const StateVector& a, const StateVector& b);

// Operator tensor product with the same index order: entry (r, c) is
// a(r / dim(b), c / dim(b)) * b(r % dim(b), c % dim(b)).
UnitaryMatrix tensor(const UnitaryMatrix& a, const UnitaryMatrix& b);

cx inner_product(const StateVector& a, const StateVector& b);

// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

// Born probabilities of s over the rows of basis; sums to 1 for any
// orthonormal basis.
std::vector<double> born_probabilities(const StateVector& s,
                                       const UnitaryMatrix& basis);

// Seeded projective measurement in the given basis (rows are outcome kets).
// Identical (state, basis, seed) triples give identical records.
MeasurementRecord measure(const StateVector& s, const UnitaryMatrix& basis,
                          std::uint64_t seed);

// Discrete Fourier basis, entry (s, k) = exp(+2*pi*i*k*s/n)/sqrt(n).
UnitaryMatrix dft_matrix(int n);

}  // namespace fluxring
