#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"

#include "fluxring/constants.hpp"
#include "fluxring/errors.hpp"
#include "fluxring/interaction.hpp"
#include "fluxring/rng.hpp"
#include "fluxring/squid.hpp"
#include "fluxring/state.hpp"
#include "fluxring/transfer.hpp"
#include "fluxring/units.hpp"

namespace flcli {

namespace {

using namespace fluxring;
using cx = std::complex<double>;

// bad flag values and combinations; mapped to exit code 1
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double quantity(const std::string& text, Dimension dim, const char* flag) {
    try {
        return parse_quantity(text, dim);
    } catch (const InvalidArgument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

double positive_quantity(const std::string& text, Dimension dim,
                         const char* flag) {
    const double v = quantity(text, dim, flag);
    if (!(v > 0.0))
        throw UsageError(std::string(flag) + " must be positive");
    return v;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
    std::vector<double> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto end = comma == std::string::npos ? text.size() : comma;
        vals.push_back(
            quantity(text.substr(pos, end - pos), Dimension::dimensionless, flag));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return vals;
}

// one trial's input register; a one-level register has a single gauge-fixed
// state, larger ones get an isotropic random direction
StateVector random_input_state(int dim, std::uint64_t seed) {
    if (dim == 1) return make_state({cx{1.0, 0.0}});
    std::mt19937_64 gen(seed);
    std::vector<cx> amp(static_cast<std::size_t>(dim));
    for (auto& z : amp) {
        const double u1 = 1.0 - uniform_unit(gen);  // (0, 1], log-safe
        const double u2 = uniform_unit(gen);
        const double r = std::sqrt(-2.0 * std::log(u1));
        z = cx{r * std::cos(2.0 * constants::pi * u2),
               r * std::sin(2.0 * constants::pi * u2)};
    }
    return make_state(std::move(amp));
}

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
    std::string config_path;  // consumed by inject_config before parsing
};

void add_output_flags(CLI::App* sub, OutputOptions& o) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out_path, "write to this file instead of stdout");
    sub->add_option("--config", o.config_path, "flat key=value settings file");
}

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Expand a --config file into command-line tokens injected right after the
// subcommand. Keys already given explicitly are skipped, so flags win over
// the file and the file wins over defaults. true/false values address bare
// flags. Returns false (after reporting) on an unreadable or malformed file.
bool inject_config(std::vector<std::string>& args, std::ostream& err) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return true;
    if (args[0].empty() || args[0][0] == '-') return true;  // no subcommand

    std::ifstream in(path);
    if (!in) {
        err << "usage error: cannot open config file '" << path << "'\n";
        return false;
    }

    std::vector<std::string> given;
    for (const auto& a : args)
        if (a.rfind("--", 0) == 0) given.push_back(a.substr(0, a.find('=')));

    std::vector<std::string> extra;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto entry = trimmed(line);
        if (entry.empty() || entry[0] == '#') continue;
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0) {
            err << "usage error: " << path << ":" << lineno
                << ": expected key=value\n";
            return false;
        }
        const auto key = trimmed(entry.substr(0, eq));
        const auto value = trimmed(entry.substr(eq + 1));
        if (key == "config") continue;  // no nested settings files
        const std::string flag = "--" + key;
        if (std::find(given.begin(), given.end(), flag) != given.end())
            continue;
        if (value == "true")
            extra.push_back(flag);
        else if (value == "false")
            continue;
        else
            extra.push_back(flag + "=" + value);
    }
    args.insert(args.begin() + 1, extra.begin(), extra.end());
    return true;
}

template <typename Fn>
int with_writer(const OutputOptions& o, std::ostream& out, std::ostream& err,
                Fn&& fn) {
    std::ofstream file;
    std::ostream* target = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path, std::ios::binary);
        if (!file) {
            err << "usage error: cannot open output file '" << o.out_path
                << "'\n";
            return 1;
        }
        target = &file;
    }
    try {
        RecordWriter writer(o.format, *target);
        fn(writer);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------------- budgets

struct BudgetFlags {
    std::string inductance;
    std::string current;
    std::string capacitance;
    std::string radius;
    std::string length;
    std::string resistance;
    std::string tau;
    std::string gap;
    OutputOptions out;
};

void add_device_flags(CLI::App* sub, BudgetFlags& f, bool required) {
    auto* l = sub->add_option("--inductance", f.inductance,
                              "ring inductance [H], suffix pH");
    auto* i = sub->add_option("--critical-current", f.current,
                              "junction critical current [A], suffix uA");
    auto* c = sub->add_option("--capacitance", f.capacitance,
                              "junction capacitance [F], suffix fF");
    if (required) {
        l->required();
        i->required();
        c->required();
    }
    sub->add_option("--bore-radius", f.radius, "bore radius [m], suffix um")
        ->required();
    sub->add_option("--bore-length", f.length, "bore length [m], suffix um")
        ->required();
    sub->add_option("--resistance", f.resistance,
                    "effective junction resistance [ohm]");
    sub->add_option("--tau", f.tau, "traversal time scale [s], suffix ns/ps");
    sub->add_option("--gap", f.gap, "superconducting gap [J], bare SI");
}

// shared device-quality fields; throws MonostableError when beta <= 1
void budget_fields(ordered_json& rec, const SquidParams& p,
                   const BoreGeometry& g) {
    const auto eps = solve_epsilon(p.beta());
    const auto gd = geometric_delta(g);
    const auto b = detection_error_budget(p, g);
    rec["beta"] = p.beta();
    rec["delta"] = gd.delta;
    rec["epsilon"] = eps.epsilon;
    rec["delta_phi_over_phi0"] = eps.delta_phi / constants::phi0;
    rec["p_delta"] = b.p_delta;
    rec["p_epsilon"] = b.p_epsilon;
    rec["p_leak"] = b.p_leak;
    rec["p_total"] = b.p_total;
    rec["aspect_warning"] = g.aspect_warning();
}

void dissipation_fields(ordered_json& rec, const DissipationEstimate& d) {
    rec["resistance"] = d.R;
    rec["tau"] = d.tau;
    rec["eta"] = d.eta;
    rec["delta_e"] = d.delta_E;
    rec["delta_a"] = d.delta_A;
    rec["gap"] = d.gap;
    rec["energy_scale"] = d.energy_scale;
    rec["below_gap"] = d.below_gap;
    rec["quasiparticle_safe"] = d.quasiparticle_safe;
}

// returns the dissipation estimate when both R and tau are supplied
std::optional<DissipationEstimate> gather_dissipation(const BudgetFlags& f) {
    if (f.resistance.empty() != f.tau.empty())
        throw UsageError("--resistance and --tau must be given together");
    if (f.resistance.empty()) return std::nullopt;
    const double r = quantity(f.resistance, Dimension::resistance, "--resistance");
    if (r < 0.0) throw UsageError("--resistance must not be negative");
    const double tau = positive_quantity(f.tau, Dimension::time, "--tau");
    const double gap = f.gap.empty()
                           ? default_gap
                           : positive_quantity(f.gap, Dimension::dimensionless,
                                               "--gap");
    return dissipation(r, tau, gap);
}

int run_error_budget(const BudgetFlags& f, std::ostream& out,
                     std::ostream& err) {
    return with_writer(f.out, out, err, [&](RecordWriter& w) {
        const double l =
            positive_quantity(f.inductance, Dimension::inductance, "--inductance");
        const double i0 = positive_quantity(f.current, Dimension::current,
                                            "--critical-current");
        const double c = positive_quantity(f.capacitance, Dimension::capacitance,
                                           "--capacitance");
        const double r =
            positive_quantity(f.radius, Dimension::length, "--bore-radius");
        const double len =
            positive_quantity(f.length, Dimension::length, "--bore-length");
        const auto diss = gather_dissipation(f);

        const SquidParams p(l, i0, c);
        const BoreGeometry g(r, len);

        ordered_json rec;
        rec["command"] = "error-budget";
        rec["inductance"] = l;
        rec["critical_current"] = i0;
        rec["capacitance"] = c;
        rec["bore_radius"] = r;
        rec["bore_length"] = len;
        budget_fields(rec, p, g);
        if (diss) dissipation_fields(rec, *diss);
        w.record(rec);
    });
}

// ------------------------------------------------------------------ scan

struct ScanFlags {
    std::string inductance;
    std::string current;
    double grid_min = -1.0;
    double grid_max = 1.0;
    int points = 4001;
    std::string bias_current;
    std::string transit_period;
    OutputOptions out;
};

int run_potential_scan(const ScanFlags& f, std::ostream& out,
                       std::ostream& err) {
    return with_writer(f.out, out, err, [&](RecordWriter& w) {
        const double l =
            positive_quantity(f.inductance, Dimension::inductance, "--inductance");
        const double i0 = positive_quantity(f.current, Dimension::current,
                                            "--critical-current");
        if (!(f.grid_min < f.grid_max))
            throw UsageError("--grid-min must be below --grid-max");
        if (!f.bias_current.empty() && !f.transit_period.empty())
            throw UsageError(
                "give --bias-current or --transit-period, not both");

        double i_b = 0.0;
        bool biased = false;
        if (!f.bias_current.empty()) {
            i_b = positive_quantity(f.bias_current, Dimension::current,
                                    "--bias-current");
            biased = true;
        } else if (!f.transit_period.empty()) {
            const double t = positive_quantity(f.transit_period, Dimension::time,
                                               "--transit-period");
            i_b = constants::e_charge / t;
            biased = true;
        }

        // the potential never reads the capacitance; any positive value does
        const SquidParams p(l, i0, 1.0);
        const int n = f.points;
        const double step =
            (f.grid_max - f.grid_min) / static_cast<double>(n - 1);

        std::vector<double> phi_over(static_cast<std::size_t>(n));
        std::vector<double> u(static_cast<std::size_t>(n));
        std::vector<double> ub(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const double x = f.grid_min + static_cast<double>(k) * step;
            const double phi = x * constants::phi0;
            phi_over[static_cast<std::size_t>(k)] = x;
            u[static_cast<std::size_t>(k)] = potential(phi, p);
            if (biased)
                ub[static_cast<std::size_t>(k)] = biased_potential(phi, i_b, p);
        }

        // annotate interior local minima of the physical landscape
        const auto& active = biased ? ub : u;
        std::vector<bool> minimum(static_cast<std::size_t>(n), false);
        std::vector<double> found;
        for (int k = 1; k + 1 < n; ++k)
            if (active[static_cast<std::size_t>(k)]
                    < active[static_cast<std::size_t>(k - 1)]
                && active[static_cast<std::size_t>(k)]
                       < active[static_cast<std::size_t>(k + 1)]) {
                minimum[static_cast<std::size_t>(k)] = true;
                found.push_back(phi_over[static_cast<std::size_t>(k)]);
            }

        for (int k = 0; k < n; ++k) {
            ordered_json row;
            row["phi_over_phi0"] = phi_over[static_cast<std::size_t>(k)];
            row["u"] = u[static_cast<std::size_t>(k)];
            if (biased) row["u_biased"] = ub[static_cast<std::size_t>(k)];
            row["minimum"] = static_cast<bool>(minimum[static_cast<std::size_t>(k)]);
            w.record(row);
        }

        ordered_json s;
        s["record"] = "summary";
        s["command"] = "potential-scan";
        s["beta"] = p.beta();
        if (p.beta() > 1.0) {
            const auto eps = solve_epsilon(p.beta());
            s["monostable"] = false;
            s["epsilon"] = eps.epsilon;
            s["delta_phi_over_phi0"] = eps.delta_phi / constants::phi0;
        } else {
            s["monostable"] = true;
        }
        s["minima_phi_over_phi0"] = found;
        if (biased) {
            s["bias_current"] = i_b;
            // well splitting read at the half-quantum logical points, where
            // the even part of the landscape cancels exactly
            const double half = constants::phi0 / 2.0;
            s["half_quantum_splitting"] =
                biased_potential(-half, i_b, p) - biased_potential(half, i_b, p);
        }
        w.summary(s);
    });
}

// ---------------------------------------------------------------- detect

struct DetectFlags {
    std::string delta = "0";
    std::string epsilon = "0";
    int charge_sign = -1;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    bool absent = false;
    OutputOptions out;
};

int run_detect(const DetectFlags& f, std::ostream& out, std::ostream& err) {
    return with_writer(f.out, out, err, [&](RecordWriter& w) {
        const double delta =
            quantity(f.delta, Dimension::dimensionless, "--delta");
        const double epsilon =
            quantity(f.epsilon, Dimension::dimensionless, "--epsilon");
        if (f.trials == 0) throw UsageError("--trials must be at least 1");

        const InteractionParams ip(delta, epsilon, f.charge_sign);
        std::uint64_t clicks = 0;
        for (std::uint64_t t = 0; t < f.trials; ++t)
            clicks += static_cast<std::uint64_t>(
                detect_particle(ip, !f.absent, derive_seed(f.seed, t)).outcome);

        const std::uint64_t misses = f.trials - clicks;
        const double half = 0.5 * (delta + epsilon);
        const double analytic_miss =
            f.absent ? 1.0 : std::sin(half) * std::sin(half);
        const double trials_d = static_cast<double>(f.trials);
        const double var = trials_d * analytic_miss * (1.0 - analytic_miss);
        const double z =
            var > 0.0
                ? (static_cast<double>(misses) - trials_d * analytic_miss)
                      / std::sqrt(var)
                : 0.0;

        ordered_json rec;
        rec["command"] = "detect";
        rec["delta"] = delta;
        rec["epsilon"] = epsilon;
        rec["charge_sign"] = f.charge_sign;
        rec["particle_present"] = !f.absent;
        rec["trials"] = f.trials;
        rec["clicks"] = clicks;
        rec["misses"] = misses;
        rec["miss_rate"] = static_cast<double>(misses) / trials_d;
        rec["analytic_miss"] = analytic_miss;
        rec["z_score"] = z;
        w.record(rec);
    });
}

// ------------------------------------------------------- transfer/teleport

struct ProtoFlags {
    int levels = 0;
    int lat_x = 0;
    int lat_y = 0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    std::string theta;
    OutputOptions out;
};

void add_proto_flags(CLI::App* sub, ProtoFlags& f) {
    sub->add_option("--levels", f.levels, "register size N");
    sub->add_option("--lattice-x", f.lat_x, "pixel lattice width");
    sub->add_option("--lattice-y", f.lat_y, "pixel lattice height");
    sub->add_option("--trials", f.trials, "number of independent trials");
    sub->add_option("--seed", f.seed, "base RNG seed")->required();
    sub->add_flag("--exhaustive", f.exhaustive,
                  "force every measurement outcome instead of sampling");
}

// N from --levels or the lattice pair; exactly one spelling allowed
int proto_levels(const ProtoFlags& f, std::optional<Lattice2D>& lat) {
    const bool has_lat = f.lat_x != 0 || f.lat_y != 0;
    if (has_lat) {
        if (f.levels != 0)
            throw UsageError("give --levels or the lattice pair, not both");
        if (f.lat_x < 1 || f.lat_y < 1)
            throw UsageError("--lattice-x and --lattice-y must both be positive");
        lat.emplace(f.lat_x, f.lat_y);
        return lat->size();
    }
    if (f.levels < 1) throw UsageError("--levels must be at least 1");
    return f.levels;
}

void proto_summary(RecordWriter& w, const char* command, std::uint64_t records,
                   double min_fid, double sum_fid) {
    ordered_json s;
    s["record"] = "summary";
    s["command"] = command;
    s["records"] = records;
    s["min_corrected_fidelity"] = min_fid;
    s["mean_corrected_fidelity"] = sum_fid / static_cast<double>(records);
    w.summary(s);
}

int run_transfer(const ProtoFlags& f, std::ostream& out, std::ostream& err) {
    return with_writer(f.out, out, err, [&](RecordWriter& w) {
        std::optional<Lattice2D> lat;
        const int n = proto_levels(f, lat);
        if (f.trials == 0) throw UsageError("--trials must be at least 1");

        std::vector<double> theta(static_cast<std::size_t>(n), 0.0);
        if (!f.theta.empty()) {
            theta = parse_list(f.theta, "--theta");
            if (static_cast<int>(theta.size()) != n)
                throw UsageError("--theta needs exactly one value per level");
        }
        const DetectorPhaseMap map(theta);

        double min_fid = 1.0;
        double sum_fid = 0.0;
        std::uint64_t records = 0;
        for (std::uint64_t t = 0; t < f.trials; ++t) {
            const auto c =
                random_input_state(n, derive_seed(f.seed, 2 * t));
            const auto emit = [&](const ForwardTransferResult& r) {
                const double raw_fid = fidelity(r.array_state, c);
                const auto fixed = phase_correct_image(
                    r.array_state, DetectorPhaseMap(r.row_phases));
                const double fid = fidelity(fixed, c);
                min_fid = std::min(min_fid, fid);
                sum_fid += fid;
                ++records;

                ordered_json rec;
                rec["command"] = "transfer";
                rec["trial"] = t;
                rec["levels"] = n;
                if (lat) {
                    rec["lattice_x"] = lat->nx;
                    rec["lattice_y"] = lat->ny;
                }
                rec["outcome"] = r.outcome;
                rec["probability"] = r.probability;
                rec["raw_fidelity"] = raw_fid;
                rec["corrected_fidelity"] = fid;
                w.record(rec);
            };
            if (f.exhaustive)
                for (int s = 0; s < n; ++s)
                    emit(forward_transfer(c, map, 0u, s));
            else
                emit(forward_transfer(c, map, derive_seed(f.seed, 2 * t + 1)));
        }
        proto_summary(w, "transfer", records, min_fid, sum_fid);
    });
}

int run_teleport(const ProtoFlags& f, std::ostream& out, std::ostream& err) {
    return with_writer(f.out, out, err, [&](RecordWriter& w) {
        std::optional<Lattice2D> lat;
        const int n = proto_levels(f, lat);
        if (f.trials == 0) throw UsageError("--trials must be at least 1");

        double min_fid = 1.0;
        double sum_fid = 0.0;
        std::uint64_t records = 0;
        for (std::uint64_t t = 0; t < f.trials; ++t) {
            const auto d =
                random_input_state(n, derive_seed(f.seed, 2 * t));
            const auto emit = [&](const TeleportResult& r) {
                const double raw_fid = fidelity(r.raw, d);
                const auto fixed =
                    lat ? apply_corrections_2d(r.raw, r.outcome, *lat)
                        : r.corrected;
                const double fid = fidelity(fixed, d);
                min_fid = std::min(min_fid, fid);
                sum_fid += fid;
                ++records;

                ordered_json rec;
                rec["command"] = "teleport";
                rec["trial"] = t;
                rec["levels"] = n;
                if (lat) {
                    rec["lattice_x"] = lat->nx;
                    rec["lattice_y"] = lat->ny;
                }
                rec["outcome_n"] = r.outcome.n;
                rec["outcome_m"] = r.outcome.m;
                rec["probability"] = r.probability;
                rec["raw_fidelity"] = raw_fid;
                rec["corrected_fidelity"] = fid;
                w.record(rec);
            };
            if (f.exhaustive)
                for (int o = 0; o < n * n; ++o)
                    emit(teleport_reverse(d, 0u, o));
            else
                emit(teleport_reverse(d, derive_seed(f.seed, 2 * t + 1)));
        }
        proto_summary(w, "teleport", records, min_fid, sum_fid);
    });
}

// ----------------------------------------------------------------- sweep

struct SweepFlags {
    std::string param;
    std::string from;
    std::string to;
    std::string step;
    BudgetFlags base;
};

int run_sweep(const SweepFlags& f, std::ostream& out, std::ostream& err) {
    return with_writer(f.base.out, out, err, [&](RecordWriter& w) {
        Dimension dim;
        if (f.param == "critical-current")
            dim = Dimension::current;
        else if (f.param == "inductance")
            dim = Dimension::inductance;
        else if (f.param == "capacitance")
            dim = Dimension::capacitance;
        else
            throw UsageError("--param must be critical-current, inductance or "
                             "capacitance");

        const bool sweep_l = f.param == "inductance";
        const bool sweep_i = f.param == "critical-current";
        const bool sweep_c = f.param == "capacitance";
        if ((sweep_l && !f.base.inductance.empty())
            || (sweep_i && !f.base.current.empty())
            || (sweep_c && !f.base.capacitance.empty()))
            throw UsageError("the swept parameter must not also be fixed");
        if ((!sweep_l && f.base.inductance.empty())
            || (!sweep_i && f.base.current.empty())
            || (!sweep_c && f.base.capacitance.empty()))
            throw UsageError("fix every device parameter that is not swept");

        const double from = positive_quantity(f.from, dim, "--from");
        const double to = positive_quantity(f.to, dim, "--to");
        const double step = positive_quantity(f.step, dim, "--step");
        if (to < from) throw UsageError("--to must not be below --from");
        const auto count = static_cast<std::size_t>(
                               std::floor((to - from) / step + 1e-9))
                           + 1;

        const double l = sweep_l ? 0.0
                                 : positive_quantity(f.base.inductance,
                                                     Dimension::inductance,
                                                     "--inductance");
        const double i0 = sweep_i ? 0.0
                                  : positive_quantity(f.base.current,
                                                      Dimension::current,
                                                      "--critical-current");
        const double c = sweep_c ? 0.0
                                 : positive_quantity(f.base.capacitance,
                                                     Dimension::capacitance,
                                                     "--capacitance");
        const double r = positive_quantity(f.base.radius, Dimension::length,
                                           "--bore-radius");
        const double len = positive_quantity(f.base.length, Dimension::length,
                                             "--bore-length");
        const auto diss = gather_dissipation(f.base);
        const BoreGeometry g(r, len);

        const auto make_row = [&](std::size_t k) {
            const double v = from + static_cast<double>(k) * step;
            const SquidParams p(sweep_l ? v : l, sweep_i ? v : i0,
                                sweep_c ? v : c);
            ordered_json rec;
            rec["command"] = "sweep";
            rec["index"] = k;
            rec["parameter"] = f.param;
            rec["value"] = v;
            try {
                budget_fields(rec, p, g);
                rec["status"] = "ok";
            } catch (const MonostableError&) {
                rec["beta"] = p.beta();
                for (const char* key :
                     {"delta", "epsilon", "delta_phi_over_phi0", "p_delta",
                      "p_epsilon", "p_leak", "p_total"})
                    rec[key] = nullptr;
                rec["aspect_warning"] = g.aspect_warning();
                rec["status"] = "monostable";
            } catch (const std::exception&) {
                rec["beta"] = p.beta();
                for (const char* key :
                     {"delta", "epsilon", "delta_phi_over_phi0", "p_delta",
                      "p_epsilon", "p_leak", "p_total"})
                    rec[key] = nullptr;
                rec["aspect_warning"] = g.aspect_warning();
                rec["status"] = "degenerate";
            }
            return rec;
        };

        // points run in parallel; emission order stays the sweep order
        std::vector<ordered_json> rows(count);
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const auto workers =
            static_cast<unsigned>(std::min<std::size_t>(hw, count));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned wk = 0; wk < workers; ++wk)
            pool.emplace_back([&, wk] {
                for (std::size_t k = wk; k < count; k += workers)
                    rows[k] = make_row(k);
            });
        for (auto& th : pool) th.join();

        std::size_t ok_points = 0;
        for (const auto& rec : rows) {
            if (rec.at("status").get<std::string>() == "ok") ++ok_points;
            w.record(rec);
        }

        ordered_json s;
        s["record"] = "summary";
        s["command"] = "sweep";
        s["points"] = count;
        s["bistable_points"] = ok_points;
        if (diss) dissipation_fields(s, *diss);
        w.summary(s);
    });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"rf-SQUID flux qubit toolkit: device error budgets, "
                 "potential scans and interface protocol runs"};
    app.name("fluxring");
    app.require_subcommand(1);

    BudgetFlags budget;
    auto* sub_budget = app.add_subcommand(
        "error-budget", "one-passage detection error budget for a device");
    add_device_flags(sub_budget, budget, true);
    add_output_flags(sub_budget, budget.out);

    ScanFlags scan;
    auto* sub_scan = app.add_subcommand(
        "potential-scan", "tabulate the ring potential over a flux grid");
    sub_scan->add_option("--inductance", scan.inductance,
                         "ring inductance [H], suffix pH")->required();
    sub_scan->add_option("--critical-current", scan.current,
                         "junction critical current [A], suffix uA")->required();
    sub_scan->add_option("--grid-min", scan.grid_min,
                         "grid start, units of phi0");
    sub_scan->add_option("--grid-max", scan.grid_max,
                         "grid end, units of phi0");
    sub_scan->add_option("--points", scan.points, "grid resolution")
        ->check(CLI::Range(3, 10000000));
    sub_scan->add_option("--bias-current", scan.bias_current,
                         "sensing bias current [A], suffix uA");
    sub_scan->add_option("--transit-period", scan.transit_period,
                         "per-particle period T [s]; bias becomes e/T");
    add_output_flags(sub_scan, scan.out);

    DetectFlags detect;
    auto* sub_detect = app.add_subcommand(
        "detect", "Monte Carlo run of the passage detector");
    sub_detect->add_option("--delta", detect.delta, "stray-phase half-angle");
    sub_detect->add_option("--epsilon", detect.epsilon,
                           "minima-shift half-angle");
    sub_detect->add_option("--charge-sign", detect.charge_sign,
                           "particle charge sign")
        ->check(CLI::IsMember({-1, 1}));
    sub_detect->add_option("--trials", detect.trials, "number of passages");
    sub_detect->add_option("--seed", detect.seed, "base RNG seed")->required();
    sub_detect->add_flag("--particle-absent", detect.absent,
                         "run the sequence with no particle");
    add_output_flags(sub_detect, detect.out);

    ProtoFlags transfer;
    auto* sub_transfer = app.add_subcommand(
        "transfer", "electron-to-array state transfer trials");
    add_proto_flags(sub_transfer, transfer);
    sub_transfer->add_option(
        "--theta", transfer.theta,
        "comma-separated per-pixel detector phases [rad]");
    add_output_flags(sub_transfer, transfer.out);

    ProtoFlags teleport;
    auto* sub_teleport = app.add_subcommand(
        "teleport", "array-to-electron reverse transfer trials");
    add_proto_flags(sub_teleport, teleport);
    add_output_flags(sub_teleport, teleport.out);

    SweepFlags sweep;
    auto* sub_sweep = app.add_subcommand(
        "sweep", "error budget swept over one device parameter");
    sub_sweep->add_option("--param", sweep.param,
                          "critical-current, inductance or capacitance")
        ->required();
    sub_sweep->add_option("--from", sweep.from, "sweep start")->required();
    sub_sweep->add_option("--to", sweep.to, "sweep end")->required();
    sub_sweep->add_option("--step", sweep.step, "sweep step")->required();
    add_device_flags(sub_sweep, sweep.base, false);
    add_output_flags(sub_sweep, sweep.base.out);

    std::vector<std::string> expanded = args;
    if (!expanded.empty() && !inject_config(expanded, err)) return 1;

    std::vector<const char*> argv;
    argv.reserve(expanded.size() + 1);
    argv.push_back("fluxring");
    for (const auto& a : expanded) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    }

    if (sub_budget->parsed()) return run_error_budget(budget, out, err);
    if (sub_scan->parsed()) return run_potential_scan(scan, out, err);
    if (sub_detect->parsed()) return run_detect(detect, out, err);
    if (sub_transfer->parsed()) return run_transfer(transfer, out, err);
    if (sub_teleport->parsed()) return run_teleport(teleport, out, err);
    if (sub_sweep->parsed()) return run_sweep(sweep, out, err);
    err << "usage error: no command given\n";
    return 1;
}

}  // namespace flcli
