#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bathsim/scenarios.hpp"

namespace bathsim {

// Fixed-notation formatting with 6 significant digits; keeps CSV output
// byte-stable across runs and platforms.
std::string format_number(double v);

enum class Command { Run, Sweep, Design, CheckStability };

struct ExecuteOptions {
    std::optional<TempUnit> output_units;  // overrides the config's units
    bool allow_unstable = false;
    bool parallel = false;
    std::string sweep_param;  // "depth" | "k" | "Q"
    std::vector<double> sweep_values;
    std::optional<double> design_target;  // in the output units
    std::optional<double> design_tol;
};

struct RunManifest {
    std::string config_path;
    ScenarioSpec spec;
    std::string out_dir;
    std::vector<std::string> files;  // paths of every emitted file
    int exit_status = 0;             // 0 ok, 2 stability refusal, 3 blow-up
    std::string message;             // one-line reason when exit_status != 0
    double dt_stable_max_s = 0.0;
    bool stability_ok = true;
};

// Dispatches a validated spec to the solver/scenarios and emits the output
// files. Stability refusals and blow-ups are reported through exit_status.
RunManifest execute(const ScenarioSpec& spec, Command command, const std::string& out_dir,
                    const ExecuteOptions& options = {});

// Emitters, exposed for tests. All write LF line endings and formatted numbers.
void write_snapshots_csv(const std::string& path, const SimulationResult& result,
                         const GridSpec& grid, TempUnit unit);
void write_series_csv(const std::string& path, const std::vector<SeriesSample>& series,
                      TempUnit unit);
void write_summary_json(const std::string& path, const ScenarioSpec& spec,
                        const SimulationResult& result, double dt_stable_max_s, TempUnit unit);
void write_sweep_csv(const std::string& path, const SweepResult& sweep, TempUnit unit);
void write_sweep_json(const std::string& path, const ScenarioSpec& spec,
                      const SweepResult& sweep, TempUnit unit);
void write_design_json(const std::string& path, const ScenarioSpec& spec,
                       const DesignResult& design, double target_c, double tolerance_k,
                       TempUnit unit);

} // namespace bathsim
