#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bathsim/geometry.hpp"
#include "bathsim/solver.hpp"
#include "bathsim/units.hpp"

namespace bathsim {

enum class ScenarioKind {
    SurfaceCooling2D,
    LocalAdd1D,
    LocalAddCooling1D,
    ContinuousSource1D,
    Sweep,
    DesignDepth,
};

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& name);

// Initial condition region in meters, half-open [lo, hi) per axis;
// a cell belongs to the region that contains its center.
struct RegionInit {
    std::array<double, 3> lo_m{0.0, 0.0, 0.0};
    std::array<double, 3> hi_m{0.0, 0.0, 0.0};
    double temperature_c = 0.0;

    bool operator==(const RegionInit&) const = default;
};

struct InitialCondition {
    std::optional<double> uniform_c;
    std::vector<RegionInit> regions;

    bool operator==(const InitialCondition&) const = default;
};

// Heat injection as configured: total watts over a cell-index box.
struct SourceSpec {
    double power_w = 0.0;
    IndexBox region;

    bool operator==(const SourceSpec&) const = default;
};

// Tub wall as configured. In 1-D scenarios it applies to the far (x-high)
// face; in the 2-D surface scenario to all four side faces.
struct WallSpec {
    double conductivity = 0.0;  // W/(m K)
    double thickness_m = 0.0;
    double exterior_c = 0.0;
    std::optional<double> area_m2;  // lumped wetted area S, for design reporting

    bool operator==(const WallSpec&) const = default;
};

struct GeometrySpec {
    double length_m = 0.0;
    double width_m = 0.0;
    double body_volume_m3 = 0.0;
    double pipe_diameter_m = 0.0;

    double footprint_m2() const { return length_m * width_m; }

    bool operator==(const GeometrySpec&) const = default;
};

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::LocalAdd1D;
    GridSpec grid;
    Material material;
    std::optional<SurfaceCoolingSpec> surface;
    std::optional<SourceSpec> source;
    std::optional<WallSpec> wall;
    InitialCondition init;
    std::optional<GeometrySpec> geometry;
    SolverConfig time;
    TempUnit io_units = TempUnit::Celsius;

    bool operator==(const ScenarioSpec&) const = default;
};

// Throws ValidationError when the spec violates its scenario's preconditions.
void validate_scenario(const ScenarioSpec& spec);

TemperatureField build_initial_field(const ScenarioSpec& spec);
FaceBoundaries build_boundaries(const ScenarioSpec& spec);
std::vector<SourceTerm> build_sources(const ScenarioSpec& spec,
                                      std::optional<double> power_override_w = std::nullopt);

// Volumetric power (W/m^3) corresponding to total watts over the source region.
double volumetric_power(const GridSpec& grid, const IndexBox& region, double power_w);

SimulationResult surface_cooling_2d(const ScenarioSpec& spec);
SimulationResult local_add_1d(const ScenarioSpec& spec);
SimulationResult local_add_cooling_1d(const ScenarioSpec& spec);

// Dispatch on spec.kind (simulation kinds only; sweep/design have their own entry points).
SimulationResult run_scenario(const ScenarioSpec& spec);

struct SweepRow {
    double value;
    std::optional<SteadyVerdict> steady;
};

struct SweepResult {
    std::string parameter;
    std::vector<SweepRow> rows;
};

// Steady temperature per heat-input value (total W applied to the source region).
SweepResult continuous_source_1d(const ScenarioSpec& spec, const std::vector<double>& q_values_w,
                                 bool parallel = false);

enum class SweepParameter { Depth, Conductivity };

// Depth sweep sets area_to_volume = 1/h_w; conductivity sweep sets material k.
SweepResult sweep(const ScenarioSpec& spec, SweepParameter parameter,
                  const std::vector<double>& values, bool parallel = false);

struct DesignResult {
    TubGeometry tub;
    double steady_c;
    int iterations;
};

// Bisection over water depth until the steady temperature meets the target
// within tolerance; total depth adds the displacement rise of a bather.
DesignResult design_depth(double target_c, double tolerance_k, const ScenarioSpec& spec,
                          double hw_lo_m = 0.2, double hw_hi_m = 0.9);

} // namespace bathsim
