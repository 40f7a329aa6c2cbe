#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bathsim/boundary.hpp"
#include "bathsim/field.hpp"
#include "bathsim/physics.hpp"

namespace bathsim {

struct SolverConfig {
    double dt_s = 0.0;
    double end_s = 0.0;
    double snapshot_interval_s = 0.0;
    double steady_epsilon = 1e-6;    // K/s
    double steady_window_s = 0.0;    // 0 -> end_s / 10
    double series_interval_s = 0.0;  // 0 -> every step
    bool allow_unstable = false;

    void validate() const;
    double effective_window_s() const { return steady_window_s > 0.0 ? steady_window_s : end_s / 10.0; }

    bool operator==(const SolverConfig&) const = default;
};

struct SeriesSample {
    double t_s;
    double mean_c;
    double min_c;
    double max_c;
    double energy_j;
};

struct Snapshot {
    double t_s;
    TemperatureField field;
};

struct SteadyVerdict {
    double time_s;
    double temperature_c;
};

struct SimulationResult {
    std::vector<Snapshot> snapshots;
    std::vector<SeriesSample> series;
    std::optional<SteadyVerdict> steady;
    std::size_t steps = 0;
    bool blew_up = false;
};

// Non-finite (or absurd-magnitude) field values produced while stepping
// (CLI exit code 3). Carries whatever the run had recorded so far.
class BlowupError : public std::runtime_error {
public:
    BlowupError(const std::string& msg, std::size_t at_step)
        : std::runtime_error(msg), at_step(at_step) {}
    BlowupError(const std::string& msg, std::size_t at_step, SimulationResult partial)
        : std::runtime_error(msg), at_step(at_step), partial(std::move(partial)) {}

    std::size_t at_step;
    std::optional<SimulationResult> partial;
};

// Temperatures past this magnitude are treated as a blow-up even while finite.
inline constexpr double kBlowupThresholdC = 1e8;

// Largest stable explicit time step, 1 / (2 alpha sum 1/dx_i^2).
// Returns +inf for alpha = 0.
double stability_limit(const Material& m, const GridSpec& grid);

// One forward-Euler update of the conduction equation with sources and
// per-face boundary conditions. Returns a new field; the input is untouched.
TemperatureField step(const TemperatureField& field, const Material& m,
                      const std::vector<SourceTerm>& sources, const FaceBoundaries& bcs,
                      double dt_s);

// Advance to cfg.end_s, recording snapshots and the scalar series; refuses
// unstable dt unless cfg.allow_unstable, and aborts on blow-up.
SimulationResult run(const TemperatureField& initial, const Material& m,
                     const std::vector<SourceTerm>& sources, const FaceBoundaries& bcs,
                     const SolverConfig& cfg);

// First time t* whose trailing window has a least-squares mean-temperature
// slope below epsilon; none if never satisfied.
std::optional<SteadyVerdict> detect_steady(const std::vector<SeriesSample>& series,
                                           double epsilon, double window_s);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};

LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

} // namespace bathsim
