#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bathsim/config.hpp"
#include "bathsim/output.hpp"

namespace py = pybind11;
using namespace bathsim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Explicit finite-difference heat conduction simulator for bathtub water";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<StabilityError>(m, "StabilityError", PyExc_RuntimeError);
    py::register_exception<BlowupError>(m, "BlowupError", PyExc_RuntimeError);

    py::enum_<TempUnit>(m, "TempUnit")
        .value("Celsius", TempUnit::Celsius)
        .value("Fahrenheit", TempUnit::Fahrenheit)
        .value("Kelvin", TempUnit::Kelvin);
    m.def("convert_temperature", &convert_temperature, py::arg("value"), py::arg("from_unit"),
          py::arg("to_unit"));

    py::class_<Material>(m, "Material")
        .def(py::init<double, double, double>(), py::arg("rho"), py::arg("c"), py::arg("k"))
        .def_readonly("density", &Material::density)
        .def_readonly("specific_heat", &Material::specific_heat)
        .def_readonly("conductivity", &Material::conductivity)
        .def("volumetric_heat_capacity", &Material::volumetric_heat_capacity);
    m.def("diffusivity", &diffusivity);
    m.def("water", &water);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<const std::vector<double>&, const std::vector<std::size_t>&>(),
             py::arg("lengths_m"), py::arg("cells"))
        .def_property_readonly("dims", &GridSpec::dims)
        .def("length", &GridSpec::length)
        .def("cells", &GridSpec::cells)
        .def("spacing", &GridSpec::spacing)
        .def("center", &GridSpec::center)
        .def_property_readonly("total_cells", &GridSpec::total_cells)
        .def_property_readonly("cell_volume", &GridSpec::cell_volume);

    py::class_<IndexBox>(m, "IndexBox")
        .def(py::init([](const std::vector<std::size_t>& lo, const std::vector<std::size_t>& hi) {
                 IndexBox box;
                 for (std::size_t a = 0; a < lo.size() && a < 3; ++a) box.lo[a] = lo[a];
                 for (std::size_t a = 0; a < hi.size() && a < 3; ++a) box.hi[a] = hi[a];
                 return box;
             }),
             py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &IndexBox::lo)
        .def_readwrite("hi", &IndexBox::hi);

    py::class_<TemperatureField>(m, "TemperatureField")
        .def(py::init<GridSpec, double>(), py::arg("grid"), py::arg("uniform_c"))
        .def(py::init<GridSpec, std::vector<double>>(), py::arg("grid"), py::arg("values_c"))
        .def_property_readonly("grid", &TemperatureField::grid)
        .def_property_readonly("values", &TemperatureField::values)
        .def("mean", &TemperatureField::mean)
        .def("min", &TemperatureField::min)
        .def("max", &TemperatureField::max);
    m.def("total_energy", &total_energy);

    py::class_<Insulated>(m, "Insulated").def(py::init<>());
    py::class_<FixedTemperature>(m, "FixedTemperature")
        .def(py::init<double>(), py::arg("temperature_c"))
        .def_readwrite("temperature_c", &FixedTemperature::temperature_c);
    py::class_<WallLoss>(m, "WallLoss")
        .def(py::init<double, double, double>(), py::arg("k_wall"), py::arg("thickness_m"),
             py::arg("exterior_c"))
        .def_readonly("wall_conductivity", &WallLoss::wall_conductivity)
        .def_readonly("thickness_m", &WallLoss::thickness_m)
        .def_readonly("exterior_c", &WallLoss::exterior_c);

    py::class_<FaceBoundaries>(m, "FaceBoundaries")
        .def(py::init<>())
        .def_static("insulated", &FaceBoundaries::insulated)
        .def_static("uniform", &FaceBoundaries::uniform)
        .def("set",
             [](FaceBoundaries& b, int axis, int side, const BoundaryCondition& bc) {
                 b.at(axis, side) = bc;
             })
        .def("get", [](const FaceBoundaries& b, int axis, int side) { return b.at(axis, side); });
    m.def("ghost_value", &ghost_value);

    py::class_<SurfaceCoolingSpec>(m, "SurfaceCoolingSpec")
        .def(py::init<double, double, double>(), py::arg("h_air"), py::arg("area_to_volume"),
             py::arg("ambient_c"))
        .def_readonly("h_air", &SurfaceCoolingSpec::h_air)
        .def_readonly("area_to_volume", &SurfaceCoolingSpec::area_to_volume)
        .def_readonly("ambient_c", &SurfaceCoolingSpec::ambient_c);

    py::class_<HeatSourceSpec>(m, "HeatSourceSpec")
        .def(py::init([](double volumetric_power, const IndexBox& region) {
                 return HeatSourceSpec{volumetric_power, region};
             }),
             py::arg("volumetric_power"), py::arg("region"))
        .def_readwrite("volumetric_power", &HeatSourceSpec::volumetric_power)
        .def_readwrite("region", &HeatSourceSpec::region);

    py::class_<NewtonCoolingSpec>(m, "NewtonCoolingSpec")
        .def(py::init<double, double, double>(), py::arg("initial_c"), py::arg("ambient_c"),
             py::arg("time_constant_s"))
        .def_readonly("initial_c", &NewtonCoolingSpec::initial_c)
        .def_readonly("ambient_c", &NewtonCoolingSpec::ambient_c)
        .def_readonly("time_constant_s", &NewtonCoolingSpec::time_constant_s);

    m.def("newton_temperature", &newton_temperature, py::arg("spec"), py::arg("t_s"));
    m.def("newton_time_to_reach", &newton_time_to_reach, py::arg("spec"), py::arg("temperature_c"));
    m.def("convective_rate", &convective_rate, py::arg("h_air"), py::arg("area_m2"),
          py::arg("temperature_c"), py::arg("ambient_c"));
    m.def("cooling_source_rate", &cooling_source_rate, py::arg("temperature_c"), py::arg("spec"),
          py::arg("material"));
    m.def("wall_loss_rate", &wall_loss_rate, py::arg("k_wall"), py::arg("thickness_m"),
          py::arg("area_m2"), py::arg("delta_t_k"));
    m.def("faucet_heat_requirement", &faucet_heat_requirement, py::arg("q_maintain_w"),
          py::arg("q_wall_w"));
    m.def("faucet_velocity", &faucet_velocity, py::arg("q2_w"), py::arg("material"),
          py::arg("delta_t_supply_k"), py::arg("pipe_area_m2"));
    m.def("water_level_rise", &water_level_rise, py::arg("body_volume_m3"),
          py::arg("footprint_m2"));
    m.def("pipe_area_from_diameter", &pipe_area_from_diameter, py::arg("diameter_m"));

    py::class_<TubGeometry>(m, "TubGeometry")
        .def(py::init<double, double, double, double, double, double, double>(),
             py::arg("length_m"), py::arg("width_m"), py::arg("water_depth_m"),
             py::arg("total_depth_m"), py::arg("wetted_area_m2"), py::arg("wall_thickness_m"),
             py::arg("wall_conductivity"))
        .def_readonly("length_m", &TubGeometry::length_m)
        .def_readonly("width_m", &TubGeometry::width_m)
        .def_readonly("water_depth_m", &TubGeometry::water_depth_m)
        .def_readonly("total_depth_m", &TubGeometry::total_depth_m)
        .def_readonly("wetted_area_m2", &TubGeometry::wetted_area_m2)
        .def("footprint_m2", &TubGeometry::footprint_m2);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init([](double dt_s, double end_s, double snapshot_s, double epsilon,
                         double window_s, double series_s, bool allow_unstable) {
                 SolverConfig cfg;
                 cfg.dt_s = dt_s;
                 cfg.end_s = end_s;
                 cfg.snapshot_interval_s = snapshot_s;
                 cfg.steady_epsilon = epsilon;
                 cfg.steady_window_s = window_s;
                 cfg.series_interval_s = series_s;
                 cfg.allow_unstable = allow_unstable;
                 cfg.validate();
                 return cfg;
             }),
             py::arg("dt_s"), py::arg("end_s"), py::arg("snapshot_s"),
             py::arg("epsilon") = 1e-6, py::arg("window_s") = 0.0, py::arg("series_s") = 0.0,
             py::arg("allow_unstable") = false)
        .def_readwrite("dt_s", &SolverConfig::dt_s)
        .def_readwrite("end_s", &SolverConfig::end_s)
        .def_readwrite("snapshot_interval_s", &SolverConfig::snapshot_interval_s)
        .def_readwrite("steady_epsilon", &SolverConfig::steady_epsilon)
        .def_readwrite("steady_window_s", &SolverConfig::steady_window_s)
        .def_readwrite("series_interval_s", &SolverConfig::series_interval_s)
        .def_readwrite("allow_unstable", &SolverConfig::allow_unstable);

    py::class_<SeriesSample>(m, "SeriesSample")
        .def_readonly("t_s", &SeriesSample::t_s)
        .def_readonly("mean_c", &SeriesSample::mean_c)
        .def_readonly("min_c", &SeriesSample::min_c)
        .def_readonly("max_c", &SeriesSample::max_c)
        .def_readonly("energy_j", &SeriesSample::energy_j);

    py::class_<Snapshot>(m, "Snapshot")
        .def_readonly("t_s", &Snapshot::t_s)
        .def_readonly("field", &Snapshot::field);

    py::class_<SteadyVerdict>(m, "SteadyVerdict")
        .def_readonly("time_s", &SteadyVerdict::time_s)
        .def_readonly("temperature_c", &SteadyVerdict::temperature_c);

    py::class_<SimulationResult>(m, "SimulationResult")
        .def_readonly("snapshots", &SimulationResult::snapshots)
        .def_readonly("series", &SimulationResult::series)
        .def_readonly("steady", &SimulationResult::steady)
        .def_readonly("steps", &SimulationResult::steps)
        .def_readonly("blew_up", &SimulationResult::blew_up);

    m.def("stability_limit", &stability_limit, py::arg("material"), py::arg("grid"));
    m.def("step", &step, py::arg("field"), py::arg("material"), py::arg("sources"),
          py::arg("boundaries"), py::arg("dt_s"));
    m.def("run", &run, py::arg("initial"), py::arg("material"), py::arg("sources"),
          py::arg("boundaries"), py::arg("config"));
    m.def("detect_steady",
          [](const std::vector<SeriesSample>& series, double epsilon, double window_s) {
              return detect_steady(series, epsilon, window_s);
          },
          py::arg("series"), py::arg("epsilon"), py::arg("window_s"));
    m.def("linear_fit", [](const std::vector<double>& x, const std::vector<double>& y) {
        const LinearFit fit = linear_fit(x, y);
        return py::make_tuple(fit.slope, fit.intercept, fit.r_squared);
    });

    py::enum_<ScenarioKind>(m, "ScenarioKind")
        .value("SurfaceCooling2D", ScenarioKind::SurfaceCooling2D)
        .value("LocalAdd1D", ScenarioKind::LocalAdd1D)
        .value("LocalAddCooling1D", ScenarioKind::LocalAddCooling1D)
        .value("ContinuousSource1D", ScenarioKind::ContinuousSource1D)
        .value("Sweep", ScenarioKind::Sweep)
        .value("DesignDepth", ScenarioKind::DesignDepth);

    py::class_<ScenarioSpec>(m, "ScenarioSpec")
        .def_readwrite("kind", &ScenarioSpec::kind)
        .def_readwrite("grid", &ScenarioSpec::grid)
        .def_readwrite("material", &ScenarioSpec::material)
        .def_readwrite("surface", &ScenarioSpec::surface)
        .def_readwrite("source", &ScenarioSpec::source)
        .def_readwrite("wall", &ScenarioSpec::wall)
        .def_readwrite("geometry", &ScenarioSpec::geometry)
        .def_readwrite("time", &ScenarioSpec::time)
        .def_readwrite("io_units", &ScenarioSpec::io_units)
        .def("__eq__", [](const ScenarioSpec& a, const ScenarioSpec& b) { return a == b; });

    py::class_<SourceSpec>(m, "SourceSpec")
        .def_readwrite("power_w", &SourceSpec::power_w)
        .def_readwrite("region", &SourceSpec::region);

    py::class_<WallSpec>(m, "WallSpec")
        .def_readwrite("conductivity", &WallSpec::conductivity)
        .def_readwrite("thickness_m", &WallSpec::thickness_m)
        .def_readwrite("exterior_c", &WallSpec::exterior_c)
        .def_readwrite("area_m2", &WallSpec::area_m2);

    py::class_<GeometrySpec>(m, "GeometrySpec")
        .def_readwrite("length_m", &GeometrySpec::length_m)
        .def_readwrite("width_m", &GeometrySpec::width_m)
        .def_readwrite("body_volume_m3", &GeometrySpec::body_volume_m3)
        .def_readwrite("pipe_diameter_m", &GeometrySpec::pipe_diameter_m);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("value", &SweepRow::value)
        .def_readonly("steady", &SweepRow::steady);
    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("parameter", &SweepResult::parameter)
        .def_readonly("rows", &SweepResult::rows);
    py::class_<DesignResult>(m, "DesignResult")
        .def_readonly("tub", &DesignResult::tub)
        .def_readonly("steady_c", &DesignResult::steady_c)
        .def_readonly("iterations", &DesignResult::iterations);

    m.def("run_scenario", &run_scenario);
    m.def("surface_cooling_2d", &surface_cooling_2d);
    m.def("local_add_1d", &local_add_1d);
    m.def("local_add_cooling_1d", &local_add_cooling_1d);
    m.def("continuous_source_1d", &continuous_source_1d, py::arg("spec"), py::arg("q_values_w"),
          py::arg("parallel") = false);
    py::enum_<SweepParameter>(m, "SweepParameter")
        .value("Depth", SweepParameter::Depth)
        .value("Conductivity", SweepParameter::Conductivity);
    m.def("sweep", &sweep, py::arg("spec"), py::arg("parameter"), py::arg("values"),
          py::arg("parallel") = false);
    m.def("design_depth", &design_depth, py::arg("target_c"), py::arg("tolerance_k"),
          py::arg("spec"), py::arg("hw_lo_m") = 0.2, py::arg("hw_hi_m") = 0.9);
    m.def("volumetric_power", &volumetric_power);
    m.def("build_initial_field", &build_initial_field);
    m.def("build_boundaries", &build_boundaries);
    m.def("build_sources", &build_sources, py::arg("spec"),
          py::arg("power_override_w") = std::nullopt);

    m.def("parse_config", &parse_config, py::arg("json_text"));
    m.def("parse_config_file", &parse_config_file, py::arg("path"));
    m.def("serialize_config", &serialize_config, py::arg("spec"));
    m.def("format_number", &format_number);

    py::enum_<Command>(m, "Command")
        .value("Run", Command::Run)
        .value("Sweep", Command::Sweep)
        .value("Design", Command::Design)
        .value("CheckStability", Command::CheckStability);

    py::class_<ExecuteOptions>(m, "ExecuteOptions")
        .def(py::init<>())
        .def_readwrite("output_units", &ExecuteOptions::output_units)
        .def_readwrite("allow_unstable", &ExecuteOptions::allow_unstable)
        .def_readwrite("parallel", &ExecuteOptions::parallel)
        .def_readwrite("sweep_param", &ExecuteOptions::sweep_param)
        .def_readwrite("sweep_values", &ExecuteOptions::sweep_values)
        .def_readwrite("design_target", &ExecuteOptions::design_target)
        .def_readwrite("design_tol", &ExecuteOptions::design_tol);

    py::class_<RunManifest>(m, "RunManifest")
        .def_readonly("config_path", &RunManifest::config_path)
        .def_readonly("out_dir", &RunManifest::out_dir)
        .def_readonly("files", &RunManifest::files)
        .def_readonly("exit_status", &RunManifest::exit_status)
        .def_readonly("message", &RunManifest::message)
        .def_readonly("dt_stable_max_s", &RunManifest::dt_stable_max_s)
        .def_readonly("stability_ok", &RunManifest::stability_ok);

    m.def("execute", &execute, py::arg("spec"), py::arg("command"), py::arg("out_dir"),
          py::arg("options") = ExecuteOptions{});

    m.attr("__version__") = "0.1.0";
}
