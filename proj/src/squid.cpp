#include "fluxring/squid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fluxring {

namespace kc = constants;

SquidParams::SquidParams(double inductance, double critical_current,
                         double capacitance, double flux_bias)
    : l_(inductance), i0_(critical_current), c_(capacitance), bias_(flux_bias) {
    if (!(l_ > 0.0)) throw InvalidArgument("inductance must be positive");
    if (!(i0_ > 0.0)) throw InvalidArgument("critical current must be positive");
    if (!(c_ > 0.0)) throw InvalidArgument("capacitance must be positive");
}

double SquidParams::beta() const { return 2.0 * kc::pi * l_ * i0_ / kc::phi0; }

double SquidParams::josephson_energy() const {
    return i0_ * kc::phi0 / (2.0 * kc::pi);
}

double SquidParams::charging_energy() const {
    return kc::e_charge * kc::e_charge / (2.0 * c_);
}

double SquidParams::josephson_inductance() const {
    return kc::phi0 / (2.0 * kc::pi * i0_);
}

BoreGeometry::BoreGeometry(double radius, double length) : r(radius), l(length) {
    if (!(r > 0.0)) throw InvalidArgument("bore radius must be positive");
    if (!(r < l)) throw InvalidArgument("bore must be longer than its radius");
}

double potential(double phi, const SquidParams& p) {
    // |phi| keeps the cosine argument even bit-for-bit
    const double arg = 2.0 * kc::pi * std::abs(phi) / kc::phi0 + kc::pi;
    return phi * phi / (2.0 * p.inductance())
           - p.josephson_energy() * std::cos(arg);
}

double biased_potential(double phi, double i_b, const SquidParams& p) {
    return phi * phi / (2.0 * p.inductance()) - i_b * phi
           + p.josephson_energy() * std::cos(2.0 * kc::pi * phi / kc::phi0);
}

MinimaSolution solve_epsilon(double beta) {
    if (!(beta > 1.0))
        throw MonostableError("single potential well: beta must exceed 1");
    auto f = [beta](double e) { return beta * std::sin(e) + e - kc::pi; };
    // f < 0 at the left end; f(pi - 1e-9) = (beta - 1)*1e-9 > 0, so the
    // nontrivial root is always bracketed
    double lo = 1e-12;
    double hi = kc::pi - 1e-9;
    double mid;
    for (;;) {
        mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return {mid, kc::phi0 * (1.0 - mid / kc::pi), std::abs(f(mid))};
}

MinimaSolution find_minima_numeric(const SquidParams& p) {
    const double beta = p.beta();
    if (!(beta > 1.0))
        throw MonostableError("single potential well: beta must exceed 1");

    // coarse scan of (0, phi0/2] for the well, then bisection on a
    // finite-difference slope; uses only potential() evaluations
    const double half = kc::phi0 / 2.0;
    const int n = 4096;
    const double step = half / n;
    int best = 1;
    double best_u = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= n; ++k) {
        const double u = potential(step * k, p);
        if (u < best_u) {
            best_u = u;
            best = k;
        }
    }

    const double h = 1e-5 * kc::phi0;
    auto slope = [&](double x) {
        return (-potential(x + 2.0 * h, p) + 8.0 * potential(x + h, p)
                - 8.0 * potential(x - h, p) + potential(x - 2.0 * h, p))
               / (12.0 * h);
    };

    double lo = std::max(step * (best - 2), step * 0.25);
    double hi = std::min(step * (best + 2), half);
    while (slope(lo) >= 0.0 && lo > step) lo -= step;
    while (slope(hi) <= 0.0 && hi < half) hi = std::min(hi + step, half);

    double mid;
    for (;;) {
        mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (slope(mid) < 0.0 ? lo : hi) = mid;
    }

    const double eps = kc::pi * (1.0 - mid / half);
    return {eps, 2.0 * mid, std::abs(beta * std::sin(eps) + eps - kc::pi)};
}

double effective_inductance(const SquidParams& p, double eps) {
    if (!(eps >= 0.0) || !(eps < kc::pi))
        throw InvalidArgument("well displacement must lie in [0, pi)");
    const double l = p.inductance();
    const double lj = p.josephson_inductance();
    return l * lj / (l * (1.0 - eps * eps / 2.0) + lj);
}

LeakageProbabilities leakage_probability(const SquidParams& p) {
    const double beta = p.beta();
    if (!(beta > 1.0))
        throw MonostableError("single potential well: beta must exceed 1");
    const double le = effective_inductance(p, 0.0);
    const double phi1_sq = kc::hbar * std::sqrt(le / p.capacitance());
    const double x = (kc::pi * kc::pi / 2.0) * phi1_sq / (kc::phi0 * kc::phi0);
    const double closed = std::sqrt(beta / (beta + 1.0))
                          * std::sqrt(p.charging_energy()
                                      / (8.0 * p.josephson_energy()));
    return {-std::expm1(-x), x, closed};
}

GeometricDelta geometric_delta(const BoreGeometry& g) {
    const double a_bore = kc::phi0 / (2.0 * (g.l + g.r / 2.0));
    const double q_a = kc::pi * g.r * g.r * a_bore;
    return {g.r / (2.0 * g.l), {a_bore, q_a, q_a / (2.0 * kc::pi * g.r)}};
}

ErrorBudget detection_error_budget(const SquidParams& p,
                                   const BoreGeometry& g) {
    auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
    const double delta = geometric_delta(g).delta;
    const double eps = solve_epsilon(p.beta()).epsilon;
    const double pd = clamp01(delta * delta / 4.0);
    const double pe = clamp01(eps * eps / 4.0);
    const double pl = clamp01(leakage_probability(p).p_approx);
    return {pd, pe, pl, 1.0 - (1.0 - pd) * (1.0 - pe) * (1.0 - pl)};
}

BackactionModel backaction(double T) {
    if (!(T > 0.0)) throw InvalidArgument("transit duration must be positive");
    const double i_b = kc::e_charge / T;
    const double delta_e = i_b * kc::phi0 / 2.0;
    const double phase = 2.0 * delta_e * T / kc::hbar;
    const double l_l = 1.0e6 * kc::phi0 / i_b;
    return {i_b, T, delta_e, phase, l_l, l_l * i_b};
}

DissipationEstimate dissipation(double R, double tau, double gap) {
    if (!(R >= 0.0)) throw InvalidArgument("resistance must be nonnegative");
    if (!(tau > 0.0)) throw InvalidArgument("time scale must be positive");
    if (!(gap > 0.0)) throw InvalidArgument("gap must be positive");
    const double eta = R / kc::r_q;
    const double delta_e = eta * kc::h / tau;
    return {R,       tau,           eta,
            delta_e, eta * kc::h,   gap,
            kc::h / tau, delta_e < gap, 10.0 * delta_e < gap};
}

double transit_time(double length) {
    if (!(length >= 0.0)) throw InvalidArgument("length must be nonnegative");
    return length / kc::c_light;
}

double minima_shift_threshold(double lo, double hi, double step,
                              double target) {
    if (!(step > 0.0)) throw InvalidArgument("scan step must be positive");
    if (!(hi >= lo)) throw InvalidArgument("scan range is empty");
    const auto count = static_cast<long long>((hi - lo) / step + 1e-9);
    for (long long k = 0; k <= count; ++k) {
        const double li0 = lo + static_cast<double>(k) * step;
        const double beta = 2.0 * kc::pi * li0;
        if (!(beta > 1.0)) continue;
        const auto m = solve_epsilon(beta);
        if (m.epsilon * m.epsilon / 4.0 <= target) return li0;
    }
    throw InvalidArgument("no scanned value reaches the target error");
}

}  // namespace fluxring
