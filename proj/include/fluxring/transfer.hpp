// transfer.hpp
//
// Moving an N-level state between a flying electron and the qubit array, in
// both directions. The array is always in its single-excitation subspace, so
// |k>_A ("qubit k excited") is an honest N-level label and nothing here ever
// touches a 2^N space.
//
// Forward direction: the electron writes its superposition onto the array by
// passing over every site, then lands on a detector pixel; the pixel choice
// imprints known (geometry-dependent) phases that are stripped pixelwise.
//
// Reverse direction: a fresh plane-wave electron is entangled with the array
// and a joint two-register measurement in a maximally entangled basis throws
// the stored state onto the electron, up to an index-dependent phase comb
// and a cyclic index shift. Both are undone deterministically from the
// measurement outcome, in the image and diffraction planes respectively. A
// 2D pixel lattice adds one wrinkle: the per-axis shifts miss the carry from
// the x-axis into y, so a dedicated carry pass follows them.
//
// Every measuring operation takes a seed, and optionally a forced outcome so
// tests can enumerate all branches.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fluxring/state.hpp"

namespace fluxring {

// Per-pixel detector phases theta_k. Default-built maps are all zero, which
// means the plain far-field Fourier geometry.
class DetectorPhaseMap {
  public:
    explicit DetectorPhaseMap(int n);
    explicit DetectorPhaseMap(std::vector<double> theta);

    int size() const { return static_cast<int>(theta_.size()); }
    double theta(int k) const { return theta_[static_cast<std::size_t>(k)]; }
    const std::vector<double>& phases() const { return theta_; }

  private:
    std::vector<double> theta_;
};

// Full detector readout basis: the Fourier matrix with e^{i*theta_k} on
// column k. Row 0 is exactly N^{-1/2} e^{i*theta_k}; the other rows are one
// consistent unitary completion of it (rows differ by Fourier phases).
UnitaryMatrix detector_basis(const DetectorPhaseMap& phases);

struct ForwardTransferResult {
    int outcome;             // detector pixel s that fired
    double probability;      // its Born probability (always 1/N)
    StateVector array_state; // collapsed array register
    // effective phases of the detected row, theta_k + 2*pi*k*s/N; feeding
    // them to phase_correct_image recovers the input for any outcome
    std::vector<double> row_phases;
};

// Write electron state c onto the array and detect the electron. With
// `forced` set, that pixel is selected instead of sampling (seed unused).
ForwardTransferResult forward_transfer(const StateVector& c,
                                       const DetectorPhaseMap& phases,
                                       std::uint64_t seed,
                                       std::optional<int> forced = std::nullopt);

// Pixelwise phase undo: amplitude k gains e^{+i*theta_k}.
StateVector phase_correct_image(const StateVector& state,
                                const DetectorPhaseMap& phases);

// Maximally entangled two-register basis, dimension N^2. Row (n, m) is
// flattened as n*N + m, column (k, k') as k*N + k'; the row amplitude on
// |k, k'> is e^{2*pi*i*k*n/N}/sqrt(N) when k' = (k+m) mod N, else zero.
UnitaryMatrix bell_basis(int n);

struct BellOutcome {
    int n;  // phase-comb index
    int m;  // cyclic-shift index
};

struct TeleportResult {
    BellOutcome outcome;
    double probability;  // always 1/N^2
    StateVector raw;     // electron state straight after the measurement
    StateVector corrected;
};

// Send array state d back onto a fresh electron via a joint measurement of
// the array and the reference register. With `forced` = n*N + m that Bell
// outcome is selected instead of sampling.
TeleportResult teleport_reverse(const StateVector& d, std::uint64_t seed,
                                std::optional<int> forced = std::nullopt);

// Outcome-(n, m) undo: image-plane phases e^{+2*pi*i*j*n/N} on amplitude j,
// then the cyclic shift |j> -> |(j+m) mod N> performed in the diffraction
// plane (Fourier, pixel phases e^{2*pi*i*m*s/N}, Fourier back).
StateVector apply_corrections_1d(const StateVector& raw, const BellOutcome& o);

struct Lattice2D {
    Lattice2D(int nx_, int ny_);

    int nx;
    int ny;

    int size() const { return nx * ny; }
};

// Raster flattening k = k_x + nx*k_y and its inverse.
int raster_index(int kx, int ky, const Lattice2D& lat);
std::pair<int, int> raster_coords(int k, const Lattice2D& lat);

// The same undo for a 2D pixel lattice, phrased in per-axis operations:
// separable image phases, a per-axis cyclic shift in the diffraction plane
// (2D Fourier transform, separable pixel phases, transform back), and the
// carry pass that shifts y by one extra step wherever the x shift wrapped.
// Agrees with apply_corrections_1d on the raster-flattened index.
StateVector apply_corrections_2d(const StateVector& raw, const BellOutcome& o,
                                 const Lattice2D& lat);

}  // namespace fluxring
