// interaction.hpp
//
// One charged particle meeting one ring qubit. The particle lives in a
// two-path space {|s>, |a>} (through the bore / around it); the qubit in
// {|0>_q, |1>_q}. Joint states are ordered particle-slow:
//
//   index 0: |s>|0>_q   1: |s>|1>_q   2: |a>|0>_q   3: |a>|1>_q
//
// A pass through the bore winds the particle around the trapped flux, so the
// |a> component picks up a qubit-dependent phase while |s> is untouched. The
// deficit angles delta (stray field) and epsilon (shifted minima) shave the
// ideal half-turn down to delta_theta = pi - delta - epsilon.

#pragma once

#include <cstdint>

#include "fluxring/state.hpp"

namespace fluxring {

struct InteractionParams {
    // deficits in [0, pi/2); charge_sign -1 or +1 (electron-like by default)
    InteractionParams(double delta, double epsilon, int charge_sign = -1);

    double delta;
    double epsilon;
    int charge_sign;

    double delta_theta() const;  // pi - delta - epsilon
};

// Normalized four-component particle (x) qubit state.
class JointState {
  public:
    explicit JointState(StateVector s);
    static JointState from_product(const StateVector& particle,
                                   const StateVector& qubit);

    const StateVector& state() const { return s_; }
    cx operator[](int k) const { return s_[k]; }

  private:
    StateVector s_;
};

// Diagonal flux-winding phases: |a>|0>_q and |a>|1>_q pick up
// exp(+-i*charge_sign*delta_theta/2); the |s> block is the identity.
UnitaryMatrix interaction_unitary(const InteractionParams& ip);

JointState interact(const JointState& j, const InteractionParams& ip);

// Path element multiplying the |a> components by i.
UnitaryMatrix shifter_unitary();

JointState pi_half_shifter(const JointState& j);

// The shifter followed by one interaction, written in the balanced particle
// basis |0> = (|s>+|a>)/sqrt2, |1> = (|s>-|a>)/sqrt2. At delta = epsilon = 0
// this is exactly a CNOT with the qubit as control and the particle as
// target.
UnitaryMatrix composite_cnot(const InteractionParams& ip);

// Non-destructive passage detector. The qubit is prepared in the balanced
// state (|0>_q+|1>_q)/sqrt2; a passing particle (always in |a>) rotates it
// toward the opposite balanced state, which is then read out in that basis.
// Outcome 1 is a click, with probability cos^2((delta+epsilon)/2); outcome 0
// is a miss, probability sin^2((delta+epsilon)/2). With no particle the
// sequence is inert and the record is the certain no-click outcome.
MeasurementRecord detect_particle(const InteractionParams& ip,
                                  bool particle_present, std::uint64_t seed);

}  // namespace fluxring
