#include "fluxring/interaction.hpp"

#include <cmath>
#include <complex>
#include <utility>

#include "fluxring/constants.hpp"

namespace fluxring {

namespace kc = constants;

namespace {

UnitaryMatrix hadamard_on_particle() {
    const double r = 1.0 / std::sqrt(2.0);
    const auto h = unchecked_unitary(
        2, {cx{r, 0.0}, cx{r, 0.0}, cx{r, 0.0}, cx{-r, 0.0}});
    return tensor(h, UnitaryMatrix::identity(2));
}

}  // namespace

InteractionParams::InteractionParams(double delta_, double epsilon_,
                                     int charge_sign_)
    : delta(delta_), epsilon(epsilon_), charge_sign(charge_sign_) {
    if (!(delta >= 0.0) || !(delta < kc::pi / 2.0))
        throw InvalidArgument("delta must lie in [0, pi/2)");
    if (!(epsilon >= 0.0) || !(epsilon < kc::pi / 2.0))
        throw InvalidArgument("epsilon must lie in [0, pi/2)");
    if (charge_sign != -1 && charge_sign != 1)
        throw InvalidArgument("charge sign must be -1 or +1");
}

double InteractionParams::delta_theta() const {
    return kc::pi - delta - epsilon;
}

JointState::JointState(StateVector s) : s_(std::move(s)) {
    if (s_.dim() != 4)
        throw DimensionError("joint particle-qubit state must have dimension 4");
}

JointState JointState::from_product(const StateVector& particle,
                                    const StateVector& qubit) {
    if (particle.dim() != 2 || qubit.dim() != 2)
        throw DimensionError("product factors must both have dimension 2");
    return JointState(tensor(particle, qubit));
}

UnitaryMatrix interaction_unitary(const InteractionParams& ip) {
    const double half = ip.charge_sign * ip.delta_theta() / 2.0;
    std::vector<cx> m(16, cx{0.0, 0.0});
    m[0] = cx{1.0, 0.0};
    m[5] = cx{1.0, 0.0};
    m[10] = std::polar(1.0, half);
    m[15] = std::polar(1.0, -half);
    return unchecked_unitary(4, std::move(m));
}

JointState interact(const JointState& j, const InteractionParams& ip) {
    return JointState(apply_unitary(j.state(), interaction_unitary(ip)));
}

UnitaryMatrix shifter_unitary() {
    std::vector<cx> m(16, cx{0.0, 0.0});
    m[0] = cx{1.0, 0.0};
    m[5] = cx{1.0, 0.0};
    m[10] = cx{0.0, 1.0};
    m[15] = cx{0.0, 1.0};
    return unchecked_unitary(4, std::move(m));
}

JointState pi_half_shifter(const JointState& j) {
    return JointState(apply_unitary(j.state(), shifter_unitary()));
}

UnitaryMatrix composite_cnot(const InteractionParams& ip) {
    const auto w = hadamard_on_particle();
    return w * (interaction_unitary(ip) * shifter_unitary()) * w;
}

MeasurementRecord detect_particle(const InteractionParams& ip,
                                  bool particle_present, std::uint64_t seed) {
    if (!particle_present) {
        // nothing flew through: the qubit never left its prepared state, so
        // the readout is certain and carries no rounding noise
        return {0, 1.0, make_state({cx{1.0, 0.0}, cx{1.0, 0.0}})};
    }
    const auto in = JointState::from_product(
        make_state({cx{0.0, 0.0}, cx{1.0, 0.0}}),
        make_state({cx{1.0, 0.0}, cx{1.0, 0.0}}));
    const auto evolved = interact(in, ip);
    // the winding is diagonal, so the |s> block stays exactly empty
    const auto qubit = make_state({evolved[2], evolved[3]});
    return measure(qubit, dft_matrix(2), seed);
}

}  // namespace fluxring
