#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bathsim/config.hpp"
#include "bathsim/output.hpp"

namespace {

void print_error(const std::string& category, const std::string& message) {
    std::cerr << "{\"error\":\"" << category << "\",\"message\":\"" << message << "\"}\n";
}

int finish(const bathsim::RunManifest& manifest) {
    switch (manifest.exit_status) {
    case 0:
        for (const auto& f : manifest.files) std::cout << "wrote " << f << "\n";
        break;
    case 2:
        print_error("stability", manifest.message);
        break;
    case 3:
        print_error("blowup", manifest.message);
        for (const auto& f : manifest.files) std::cout << "wrote (partial) " << f << "\n";
        break;
    default:
        print_error("internal", manifest.message);
        break;
    }
    return manifest.exit_status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bathsim: explicit finite-difference bathtub water temperature simulator"};
    app.require_subcommand(1);

    std::string units_flag;
    app.add_option("--units", units_flag, "Temperature unit for outputs and CLI temperatures")
        ->check(CLI::IsMember({"C", "F"}));
    bool allow_unstable = false;
    app.add_flag("--allow-unstable", allow_unstable,
                 "Run even when dt exceeds the stability limit");
    bool parallel = false;
    app.add_flag("--parallel", parallel, "Evaluate sweep entries concurrently");

    std::string config_path;
    std::string out_dir;
    std::string sweep_param;
    std::vector<double> sweep_values;
    double design_target = 0.0;
    double design_tol = 0.5;

    auto* run_cmd = app.add_subcommand("run", "Simulate one scenario config");
    run_cmd->add_option("config", config_path, "Scenario config (JSON)")->required();
    run_cmd->add_option("-o,--out", out_dir, "Output directory")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Steady temperature across parameter values");
    sweep_cmd->add_option("config", config_path, "Scenario config (JSON)")->required();
    sweep_cmd->add_option("--param", sweep_param, "Swept parameter")
        ->check(CLI::IsMember({"depth", "k", "Q"}))
        ->required();
    sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")
        ->delimiter(',')
        ->required();
    sweep_cmd->add_option("-o,--out", out_dir, "Output directory")->required();

    auto* design_cmd = app.add_subcommand("design", "Search the water depth for a target steady temperature");
    design_cmd->add_option("config", config_path, "Scenario config (JSON)")->required();
    design_cmd->add_option("--target", design_target, "Target steady temperature")->required();
    design_cmd->add_option("--tol", design_tol, "Temperature tolerance (default 0.5)");
    design_cmd->add_option("-o,--out", out_dir, "Output directory")->required();

    auto* check_cmd = app.add_subcommand("check-stability", "Report the stability limit; no simulation");
    check_cmd->add_option("config", config_path, "Scenario config (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        print_error("usage", e.what());
        return 1;
    }

    try {
        const bathsim::ScenarioSpec spec = bathsim::parse_config_file(config_path);

        bathsim::ExecuteOptions options;
        options.allow_unstable = allow_unstable;
        options.parallel = parallel;
        if (!units_flag.empty())
            options.output_units = units_flag == "F" ? bathsim::TempUnit::Fahrenheit
                                                     : bathsim::TempUnit::Celsius;

        if (check_cmd->parsed()) {
            auto manifest =
                bathsim::execute(spec, bathsim::Command::CheckStability, "", options);
            std::cout << "dt_stable_max_s " << bathsim::format_number(manifest.dt_stable_max_s)
                      << "\n"
                      << "dt_config_s " << bathsim::format_number(spec.time.dt_s) << "\n"
                      << (manifest.stability_ok ? "PASS" : "FAIL") << "\n";
            return manifest.exit_status;
        }
        if (run_cmd->parsed())
            return finish(bathsim::execute(spec, bathsim::Command::Run, out_dir, options));
        if (sweep_cmd->parsed()) {
            options.sweep_param = sweep_param;
            options.sweep_values = sweep_values;
            return finish(bathsim::execute(spec, bathsim::Command::Sweep, out_dir, options));
        }
        options.design_target = design_target;
        options.design_tol = design_tol;
        return finish(bathsim::execute(spec, bathsim::Command::Design, out_dir, options));
    } catch (const bathsim::ValidationError& e) {
        print_error("config", e.what());
        return 1;
    } catch (const bathsim::StabilityError& e) {
        print_error("stability", e.what());
        return 2;
    } catch (const bathsim::BlowupError& e) {
        print_error("blowup", e.what());
        return 3;
    } catch (const std::exception& e) {
        print_error("config", e.what());
        return 1;
    }
}
