#include "bathsim/output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace bathsim {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    int decimals = 5 - static_cast<int>(std::floor(std::log10(std::abs(v))));
    if (decimals < 0) decimals = 0;
    if (decimals > 24) decimals = 24;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

double out_temp(double celsius, TempUnit unit) {
    return convert_temperature(celsius, TempUnit::Celsius, unit);
}

nlohmann::ordered_json json_or_null(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

} // namespace

void write_snapshots_csv(const std::string& path, const SimulationResult& result,
                         const GridSpec& grid, TempUnit unit) {
    auto out = open_out(path);
    out << "t_s";
    const char* axis_names[3] = {"x_m", "y_m", "z_m"};
    for (int a = 0; a < grid.dims(); ++a) out << ',' << axis_names[a];
    out << ",T\n";

    const std::size_t nx = grid.cells(0);
    const std::size_t ny = grid.dims() > 1 ? grid.cells(1) : 1;
    const std::size_t nz = grid.dims() > 2 ? grid.cells(2) : 1;
    for (const auto& snap : result.snapshots) {
        const std::string t = format_number(snap.t_s);
        const auto& values = snap.field.values();
        std::size_t i = 0;
        for (std::size_t ix = 0; ix < nx; ++ix) {
            for (std::size_t iy = 0; iy < ny; ++iy) {
                for (std::size_t iz = 0; iz < nz; ++iz, ++i) {
                    out << t << ',' << format_number(grid.center(0, ix));
                    if (grid.dims() > 1) out << ',' << format_number(grid.center(1, iy));
                    if (grid.dims() > 2) out << ',' << format_number(grid.center(2, iz));
                    out << ',' << format_number(out_temp(values[i], unit)) << '\n';
                }
            }
        }
    }
}

void write_series_csv(const std::string& path, const std::vector<SeriesSample>& series,
                      TempUnit unit) {
    auto out = open_out(path);
    out << "t_s,mean,min,max,energy_J\n";
    for (const auto& s : series) {
        out << format_number(s.t_s) << ',' << format_number(out_temp(s.mean_c, unit)) << ','
            << format_number(out_temp(s.min_c, unit)) << ','
            << format_number(out_temp(s.max_c, unit)) << ',' << format_number(s.energy_j)
            << '\n';
    }
}

void write_summary_json(const std::string& path, const ScenarioSpec& spec,
                        const SimulationResult& result, double dt_stable_max_s, TempUnit unit) {
    nlohmann::ordered_json doc;
    doc["scenario"] = to_string(spec.kind);
    doc["steady_temperature"] =
        result.steady ? nlohmann::ordered_json(out_temp(result.steady->temperature_c, unit))
                      : nlohmann::ordered_json(nullptr);
    doc["steady_time_s"] =
        result.steady ? nlohmann::ordered_json(result.steady->time_s)
                      : nlohmann::ordered_json(nullptr);
    doc["final_mean"] = result.series.empty()
                            ? nlohmann::ordered_json(nullptr)
                            : nlohmann::ordered_json(out_temp(result.series.back().mean_c, unit));
    doc["dt_used_s"] = spec.time.dt_s;
    doc["dt_stable_max_s"] = json_or_null(dt_stable_max_s);
    doc["steps"] = result.steps;
    doc["blowup"] = result.blew_up;
    open_out(path) << doc.dump(2) << '\n';
}

void write_sweep_csv(const std::string& path, const SweepResult& sweep, TempUnit unit) {
    auto out = open_out(path);
    out << "parameter,value,steady_temperature,steady_time_s\n";
    for (const auto& row : sweep.rows) {
        out << sweep.parameter << ',' << format_number(row.value) << ',';
        if (row.steady)
            out << format_number(out_temp(row.steady->temperature_c, unit)) << ','
                << format_number(row.steady->time_s);
        else
            out << ',';
        out << '\n';
    }
}

void write_sweep_json(const std::string& path, const ScenarioSpec& spec,
                      const SweepResult& sweep, TempUnit unit) {
    nlohmann::ordered_json doc;
    doc["scenario"] = to_string(spec.kind);
    doc["parameter"] = sweep.parameter;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : sweep.rows) {
        nlohmann::ordered_json r;
        r["value"] = row.value;
        r["steady_temperature"] = row.steady
                                      ? nlohmann::ordered_json(out_temp(row.steady->temperature_c, unit))
                                      : nlohmann::ordered_json(nullptr);
        r["steady_time_s"] = row.steady ? nlohmann::ordered_json(row.steady->time_s)
                                        : nlohmann::ordered_json(nullptr);
        doc["rows"].push_back(r);
    }
    open_out(path) << doc.dump(2) << '\n';
}

void write_design_json(const std::string& path, const ScenarioSpec& spec,
                       const DesignResult& design, double target_c, double tolerance_k,
                       TempUnit unit) {
    nlohmann::ordered_json doc;
    doc["scenario"] = to_string(spec.kind);
    doc["target_temperature"] = out_temp(target_c, unit);
    doc["tolerance"] = tolerance_k / temperature_scale(unit);
    doc["water_depth_m"] = design.tub.water_depth_m;
    doc["total_depth_m"] = design.tub.total_depth_m;
    doc["length_m"] = design.tub.length_m;
    doc["width_m"] = design.tub.width_m;
    doc["footprint_m2"] = design.tub.footprint_m2();
    doc["steady_temperature"] = out_temp(design.steady_c, unit);
    doc["evaluations"] = design.iterations;
    open_out(path) << doc.dump(2) << '\n';
}

namespace {

void write_run_outputs(RunManifest& manifest, const ScenarioSpec& spec,
                       const SimulationResult& result, TempUnit unit) {
    namespace fs = std::filesystem;
    const fs::path dir(manifest.out_dir);
    const std::string snapshots = (dir / "snapshots.csv").string();
    const std::string series = (dir / "series.csv").string();
    const std::string summary = (dir / "summary.json").string();
    write_snapshots_csv(snapshots, result, spec.grid, unit);
    write_series_csv(series, result.series, unit);
    write_summary_json(summary, spec, result, manifest.dt_stable_max_s, unit);
    manifest.files = {snapshots, series, summary};
}

} // namespace

RunManifest execute(const ScenarioSpec& input, Command command, const std::string& out_dir,
                    const ExecuteOptions& options) {
    ScenarioSpec spec = input;
    if (options.allow_unstable) spec.time.allow_unstable = true;
    const TempUnit unit = options.output_units.value_or(spec.io_units);

    RunManifest manifest{.config_path = "", .spec = spec, .out_dir = out_dir};
    manifest.dt_stable_max_s = stability_limit(spec.material, spec.grid);
    manifest.stability_ok = spec.time.dt_s <= manifest.dt_stable_max_s * (1.0 + 1e-12);

    if (command == Command::CheckStability) {
        manifest.exit_status = manifest.stability_ok ? 0 : 2;
        if (!manifest.stability_ok) manifest.message = "dt exceeds the stability limit";
        return manifest;
    }

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    try {
        switch (command) {
        case Command::Run: {
            SimulationResult result;
            try {
                result = run_scenario(spec);
            } catch (BlowupError& e) {
                if (e.partial) {
                    write_run_outputs(manifest, spec, *e.partial, unit);
                }
                manifest.exit_status = 3;
                manifest.message = e.what();
                return manifest;
            }
            write_run_outputs(manifest, spec, result, unit);
            break;
        }
        case Command::Sweep: {
            SweepResult result = [&] {
                if (options.sweep_param == "Q")
                    return continuous_source_1d(spec, options.sweep_values, options.parallel);
                if (options.sweep_param == "depth")
                    return sweep(spec, SweepParameter::Depth, options.sweep_values,
                                 options.parallel);
                if (options.sweep_param == "k")
                    return sweep(spec, SweepParameter::Conductivity, options.sweep_values,
                                 options.parallel);
                throw ValidationError("sweep: --param must be one of depth, k, Q");
            }();
            const std::string csv = (fs::path(out_dir) / "sweep.csv").string();
            const std::string summary = (fs::path(out_dir) / "sweep.json").string();
            write_sweep_csv(csv, result, unit);
            write_sweep_json(summary, spec, result, unit);
            manifest.files = {csv, summary};
            break;
        }
        case Command::Design: {
            if (!options.design_target)
                throw ValidationError("design: --target is required");
            const double target_c =
                convert_temperature(*options.design_target, unit, TempUnit::Celsius);
            const double tol_k = options.design_tol.value_or(0.5) * temperature_scale(unit);
            const DesignResult result = design_depth(target_c, tol_k, spec);
            const std::string path = (fs::path(out_dir) / "design.json").string();
            write_design_json(path, spec, result, target_c, tol_k, unit);
            manifest.files = {path};
            break;
        }
        case Command::CheckStability:
            break;  // handled above
        }
    } catch (const StabilityError& e) {
        manifest.exit_status = 2;
        manifest.message = e.what();
        manifest.files.clear();
    } catch (const BlowupError& e) {
        manifest.exit_status = 3;
        manifest.message = e.what();
        manifest.files.clear();
    }
    return manifest;
}

} // namespace bathsim
