// squid.hpp
//
// Device physics of the hollow-ring flux qubit: the double-well potential,
// its minima geometry, leakage out of the two-level subspace, stray-field
// and minima-shift detection errors, backaction of a sensing bias current,
// and dissipation safety margins. Everything is strict SI.
//
// The working point is fixed at half a flux quantum through the ring, which
// is where the potential is symmetric and the two wells encode the qubit.
// The flux_bias field records that choice; potential() always evaluates the
// half-quantum form.

#pragma once

#include "fluxring/constants.hpp"
#include "fluxring/errors.hpp"

namespace fluxring {

class SquidParams {
  public:
    // L: ring inductance [H], i0: junction critical current [A],
    // C: junction capacitance [F], flux_bias [Wb] (default half quantum).
    SquidParams(double inductance, double critical_current, double capacitance,
                double flux_bias = constants::phi0 / 2.0);

    double inductance() const { return l_; }
    double critical_current() const { return i0_; }
    double capacitance() const { return c_; }
    double flux_bias() const { return bias_; }

    // screening parameter 2*pi*L*i0/phi0; the double well needs beta > 1
    double beta() const;
    double josephson_energy() const;      // E_J = i0*phi0/2pi [J]
    double charging_energy() const;       // E_C = e^2/2C [J]
    double josephson_inductance() const;  // L_J = phi0/(2pi*i0) = L/beta [H]

  private:
    double l_;
    double i0_;
    double c_;
    double bias_;
};

struct BoreGeometry {
    // bore radius and length [m]; the stray-field estimate treats the bore
    // ends as point sources, which needs r well below l
    BoreGeometry(double radius, double length);

    double r;
    double l;

    // the point-source picture starts to strain above r ~ l/5
    bool aspect_warning() const { return r > l / 5.0; }
};

// Stray vector potential inside the bore, reduced to a pair of effective
// point charges at the bore ends. Diagnostic quantities only; the error
// budget consumes just delta.
struct VpcModel {
    double a_bore;  // field magnitude inside the bore [Wb/m]
    double q_A;     // end-charge magnitude pi*r^2*a_bore [Wb m]
    double dphi_A;  // potential difference across an end, q_A/2*pi*r [Wb]
};

struct GeometricDelta {
    double delta;  // stray-phase fraction r/2l
    VpcModel vpc;
};

struct MinimaSolution {
    double epsilon;    // phase deficit of the minima [rad], in (0, pi)
    double delta_phi;  // separation of the two minima [Wb], phi0*(1 - eps/pi)
    double residual;   // |pi - epsilon - beta*sin(epsilon)|
};

struct LeakageProbabilities {
    double p_exact;   // 1 - exp(-x), x = (pi^2/2)(phi1/phi0)^2
    double p_approx;  // x itself, the small-spread form
    double p_closed;  // sqrt(beta/(beta+1)) * sqrt(E_C/8E_J)
};

struct ErrorBudget {
    double p_delta;    // stray-field term delta^2/4
    double p_epsilon;  // minima-shift term epsilon^2/4
    double p_leak;     // two-level leakage per passage
    double p_total;    // 1 - (1-p_delta)(1-p_epsilon)(1-p_leak)
};

struct BackactionModel {
    double i_b;      // sensing bias current e/T [A]
    double T;        // particle transit duration [s]
    double delta_E;  // well asymmetry i_b*phi0/2 = h/4T [J]
    double phase;    // accumulated 2*delta_E*T/hbar, pi by construction
    double L_L;      // bookkeeping source inductance [H] (inert metadata)
    double phi_L;    // its flux L_L*i_b, pinned to 1e6*phi0 [Wb]
};

struct DissipationEstimate {
    double R;             // effective junction resistance [ohm]
    double tau;           // traversal time scale [s]
    double eta;           // R/R_Q, the friction ratio
    double delta_E;       // dissipated energy eta*h/tau [J]
    double delta_A;       // action change eta*h [J s]
    double gap;           // superconducting gap [J]
    double energy_scale;  // h/tau [J], order-of-magnitude context only
    bool below_gap;            // delta_E < gap, the bare inequality
    bool quasiparticle_safe;   // 10*delta_E < gap, an order-of-magnitude margin
};

inline constexpr double default_gap = 180.0e-6 * constants::e_charge;  // [J]

// Ring potential at the half-quantum working point,
//   U(phi) = phi^2/2L - E_J*cos(2*pi*phi/phi0 + pi).
// Even in phi bit-for-bit (the cosine is fed |phi|).
double potential(double phi, const SquidParams& p);

// Potential with a bias current feeding the ring,
//   U'(phi) = phi^2/2L - i_b*phi + E_J*cos(2*pi*phi/phi0).
// At i_b = 0 this equals potential() through cos(x+pi) = -cos(x).
double biased_potential(double phi, double i_b, const SquidParams& p);

// Unique nontrivial root of pi - eps = beta*sin(eps) in (0, pi), found by
// bisection run to interval collapse. Throws MonostableError for beta <= 1
// (single well, no qubit).
MinimaSolution solve_epsilon(double beta);

// The same geometry from direct numerical minimization of potential(): grid
// scan plus bisection on a finite-difference slope. Independent of the
// transcendental-equation route; the two agree to ~1e-9 in epsilon.
MinimaSolution find_minima_numeric(const SquidParams& p);

// Small-oscillation inductance at a well displaced by eps,
//   L_e = L*L_J / (L*(1 - eps^2/2) + L_J).
// Requires eps in [0, pi).
double effective_inductance(const SquidParams& p, double eps);

// Probability that one particle passage kicks the qubit out of its two-level
// subspace. Ground-state spread phi1^2 = hbar*sqrt(L_e/C) with the eps = 0
// effective inductance. Throws MonostableError for beta <= 1.
LeakageProbabilities leakage_probability(const SquidParams& p);

// Stray-field fraction delta = r/2l and the end-charge model behind it.
GeometricDelta geometric_delta(const BoreGeometry& g);

// Assemble the three per-passage error terms. Each term is clamped to [0, 1]
// and combined as independent mechanisms.
ErrorBudget detection_error_budget(const SquidParams& p, const BoreGeometry& g);

// Minimal sensing current i_b = e/T and its backaction on the wells. The
// accumulated phase is pi regardless of T. Throws InvalidArgument for T <= 0.
BackactionModel backaction(double T);

// Friction estimate for a junction of resistance R traversed on time scale
// tau. gap defaults to 180 ueV. Throws InvalidArgument for R < 0 or tau <= 0.
DissipationEstimate dissipation(double R, double tau, double gap = default_gap);

// Light-speed traversal time of a device of the given length.
double transit_time(double length);

// Scan L*i0/phi0 over [lo, hi] at the given resolution; return the smallest
// value whose minima-shift error eps^2/4 is at or below target. Values in
// the single-well regime are skipped. Throws InvalidArgument if the scan is
// empty or nothing qualifies.
double minima_shift_threshold(double lo, double hi, double step,
                              double target = 0.01);

}  // namespace fluxring
