#include "bathsim/scenarios.hpp"

#include <cmath>
#include <future>

namespace bathsim {

std::string to_string(ScenarioKind kind) {
    switch (kind) {
    case ScenarioKind::SurfaceCooling2D: return "surface_cooling_2d";
    case ScenarioKind::LocalAdd1D: return "local_add_1d";
    case ScenarioKind::LocalAddCooling1D: return "local_add_cooling_1d";
    case ScenarioKind::ContinuousSource1D: return "continuous_source_1d";
    case ScenarioKind::Sweep: return "sweep";
    case ScenarioKind::DesignDepth: return "design_depth";
    }
    throw std::logic_error("bad ScenarioKind");
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
    if (name == "surface_cooling_2d") return ScenarioKind::SurfaceCooling2D;
    if (name == "local_add_1d") return ScenarioKind::LocalAdd1D;
    if (name == "local_add_cooling_1d") return ScenarioKind::LocalAddCooling1D;
    if (name == "continuous_source_1d") return ScenarioKind::ContinuousSource1D;
    if (name == "sweep") return ScenarioKind::Sweep;
    if (name == "design_depth") return ScenarioKind::DesignDepth;
    throw ValidationError("scenario: unknown kind '" + name + "'");
}

void validate_scenario(const ScenarioSpec& spec) {
    spec.time.validate();
    if (!spec.init.uniform_c.has_value() && spec.init.regions.empty())
        throw ValidationError("init: either uniform or regions is required");
    if (spec.init.uniform_c.has_value() && !spec.init.regions.empty())
        throw ValidationError("init: uniform and regions are mutually exclusive");
    if (spec.source) {
        if (!spec.source->region.within(spec.grid))
            throw ValidationError("source.region: must lie within the grid");
        if (!(std::isfinite(spec.source->power_w) && spec.source->power_w >= 0.0))
            throw ValidationError("source.power: must be finite and >= 0");
    }
    if (spec.wall) {
        WallLoss check(spec.wall->conductivity, spec.wall->thickness_m, spec.wall->exterior_c);
        (void)check;
    }

    const bool one_d = spec.grid.dims() == 1;
    switch (spec.kind) {
    case ScenarioKind::SurfaceCooling2D:
        if (spec.grid.dims() != 2)
            throw ValidationError("surface_cooling_2d: grid must be 2-D");
        if (!spec.surface)
            throw ValidationError("surface_cooling_2d: surface block is required");
        if (spec.source)
            throw ValidationError("surface_cooling_2d: no heat source in this scenario");
        break;
    case ScenarioKind::LocalAdd1D:
        if (!one_d) throw ValidationError("local_add_1d: grid must be 1-D");
        if (spec.surface)
            throw ValidationError("local_add_1d: adiabatic scenario; drop the surface block");
        if (spec.source)
            throw ValidationError("local_add_1d: no heat source in this scenario");
        if (spec.wall)
            throw ValidationError("local_add_1d: ends are insulated; drop the wall block");
        break;
    case ScenarioKind::LocalAddCooling1D:
        if (!one_d) throw ValidationError("local_add_cooling_1d: grid must be 1-D");
        if (!spec.surface)
            throw ValidationError("local_add_cooling_1d: surface block is required");
        if (spec.source)
            throw ValidationError("local_add_cooling_1d: no heat source in this scenario");
        if (spec.wall)
            throw ValidationError("local_add_cooling_1d: ends are insulated; drop the wall block");
        break;
    case ScenarioKind::ContinuousSource1D:
    case ScenarioKind::Sweep:
    case ScenarioKind::DesignDepth:
        if (!one_d) throw ValidationError(to_string(spec.kind) + ": grid must be 1-D");
        if (!spec.surface)
            throw ValidationError(to_string(spec.kind) + ": surface block is required");
        if (!spec.source)
            throw ValidationError(to_string(spec.kind) + ": source block is required");
        if (!spec.init.uniform_c.has_value())
            throw ValidationError(to_string(spec.kind) + ": init must be uniform");
        break;
    }
}

TemperatureField build_initial_field(const ScenarioSpec& spec) {
    if (spec.init.uniform_c.has_value())
        return TemperatureField(spec.grid, *spec.init.uniform_c);

    const GridSpec& g = spec.grid;
    std::vector<double> values(g.total_cells());
    const std::size_t nx = g.cells(0);
    const std::size_t ny = g.dims() > 1 ? g.cells(1) : 1;
    const std::size_t nz = g.dims() > 2 ? g.cells(2) : 1;
    std::size_t i = 0;
    std::array<std::size_t, 3> idx{0, 0, 0};
    for (idx[0] = 0; idx[0] < nx; ++idx[0]) {
        for (idx[1] = 0; idx[1] < ny; ++idx[1]) {
            for (idx[2] = 0; idx[2] < nz; ++idx[2], ++i) {
                int hits = 0;
                for (const auto& r : spec.init.regions) {
                    bool inside = true;
                    for (int a = 0; a < g.dims(); ++a) {
                        const auto ua = static_cast<std::size_t>(a);
                        const double c = g.center(a, idx[ua]);
                        if (c < r.lo_m[ua] || c >= r.hi_m[ua]) {
                            inside = false;
                            break;
                        }
                    }
                    if (inside) {
                        values[i] = r.temperature_c;
                        ++hits;
                    }
                }
                if (hits != 1)
                    throw ValidationError(
                        "init.regions: regions must tile the grid (every cell center covered "
                        "exactly once)");
            }
        }
    }
    return TemperatureField(g, std::move(values));
}

FaceBoundaries build_boundaries(const ScenarioSpec& spec) {
    FaceBoundaries bcs = FaceBoundaries::insulated();
    if (!spec.wall) return bcs;
    const WallLoss wall(spec.wall->conductivity, spec.wall->thickness_m, spec.wall->exterior_c);
    if (spec.kind == ScenarioKind::SurfaceCooling2D) {
        bcs.at(0, 0) = wall;
        bcs.at(0, 1) = wall;
        bcs.at(1, 0) = wall;
        bcs.at(1, 1) = wall;
    } else {
        bcs.at(0, 1) = wall;  // far end; the inlet end stays insulated
    }
    return bcs;
}

double volumetric_power(const GridSpec& grid, const IndexBox& region, double power_w) {
    if (!region.within(grid))
        throw ValidationError("source.region: must lie within the grid");
    const double volume =
        static_cast<double>(region.cell_count(grid)) * grid.cell_volume();
    return power_w / volume;
}

std::vector<SourceTerm> build_sources(const ScenarioSpec& spec,
                                      std::optional<double> power_override_w) {
    std::vector<SourceTerm> sources;
    if (spec.surface) sources.push_back(*spec.surface);
    if (spec.source) {
        const double watts = power_override_w.value_or(spec.source->power_w);
        sources.push_back(HeatSourceSpec{
            volumetric_power(spec.grid, spec.source->region, watts), spec.source->region});
    }
    return sources;
}

namespace {

SimulationResult run_with(const ScenarioSpec& spec, std::optional<double> power_override_w) {
    return run(build_initial_field(spec), spec.material, build_sources(spec, power_override_w),
               build_boundaries(spec), spec.time);
}

void require_kind(const ScenarioSpec& spec, ScenarioKind kind) {
    if (spec.kind != kind)
        throw ValidationError("scenario kind mismatch: expected " + to_string(kind) +
                              ", got " + to_string(spec.kind));
    validate_scenario(spec);
}

} // namespace

SimulationResult surface_cooling_2d(const ScenarioSpec& spec) {
    require_kind(spec, ScenarioKind::SurfaceCooling2D);
    return run_with(spec, std::nullopt);
}

SimulationResult local_add_1d(const ScenarioSpec& spec) {
    require_kind(spec, ScenarioKind::LocalAdd1D);
    return run_with(spec, std::nullopt);
}

SimulationResult local_add_cooling_1d(const ScenarioSpec& spec) {
    require_kind(spec, ScenarioKind::LocalAddCooling1D);
    return run_with(spec, std::nullopt);
}

SimulationResult run_scenario(const ScenarioSpec& spec) {
    switch (spec.kind) {
    case ScenarioKind::SurfaceCooling2D: return surface_cooling_2d(spec);
    case ScenarioKind::LocalAdd1D: return local_add_1d(spec);
    case ScenarioKind::LocalAddCooling1D: return local_add_cooling_1d(spec);
    case ScenarioKind::ContinuousSource1D:
        require_kind(spec, ScenarioKind::ContinuousSource1D);
        return run_with(spec, std::nullopt);
    case ScenarioKind::Sweep:
    case ScenarioKind::DesignDepth:
        throw ValidationError("run: scenario '" + to_string(spec.kind) +
                              "' is driven by the sweep/design commands");
    }
    throw std::logic_error("bad ScenarioKind");
}

namespace {

void check_monotone(const std::vector<double>& values, const char* what) {
    if (values.empty()) throw ValidationError(std::string(what) + ": needs at least one value");
    if (values.size() < 2) return;
    const bool ascending = values[1] > values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
        const bool up = values[i] > values[i - 1];
        if (up != ascending || values[i] == values[i - 1])
            throw ValidationError(std::string(what) + ": values must be strictly monotone");
    }
}

SweepResult run_rows(const ScenarioSpec& base, const std::string& parameter,
                     const std::vector<double>& values, bool parallel,
                     const std::function<std::optional<SteadyVerdict>(double)>& row_fn) {
    SweepResult result;
    result.parameter = parameter;
    result.rows.reserve(values.size());
    if (parallel && values.size() > 1) {
        std::vector<std::future<std::optional<SteadyVerdict>>> futures;
        futures.reserve(values.size());
        for (double v : values)
            futures.push_back(std::async(std::launch::async, row_fn, v));
        for (std::size_t i = 0; i < values.size(); ++i)
            result.rows.push_back({values[i], futures[i].get()});
    } else {
        for (double v : values) result.rows.push_back({v, row_fn(v)});
    }
    (void)base;
    return result;
}

} // namespace

SweepResult continuous_source_1d(const ScenarioSpec& spec, const std::vector<double>& q_values_w,
                                 bool parallel) {
    ScenarioSpec base = spec;
    base.kind = ScenarioKind::ContinuousSource1D;
    validate_scenario(base);
    check_monotone(q_values_w, "Q sweep");
    for (double q : q_values_w)
        if (!(std::isfinite(q) && q >= 0.0))
            throw ValidationError("Q sweep: values must be finite and >= 0");
    return run_rows(base, "Q", q_values_w, parallel, [base](double q) {
        return run_with(base, q).steady;
    });
}

SweepResult sweep(const ScenarioSpec& spec, SweepParameter parameter,
                  const std::vector<double>& values, bool parallel) {
    ScenarioSpec base = spec;
    base.kind = ScenarioKind::ContinuousSource1D;
    validate_scenario(base);
    const char* name = parameter == SweepParameter::Depth ? "depth" : "k";
    check_monotone(values, name);
    for (double v : values)
        if (!(std::isfinite(v) && v > 0.0))
            throw ValidationError(std::string(name) + " sweep: values must be finite and > 0");

    auto row_fn = [base, parameter](double v) {
        ScenarioSpec entry = base;
        if (parameter == SweepParameter::Depth) {
            // dA/dV = 1/h_w for a uniformly filled tub.
            entry.surface = SurfaceCoolingSpec(entry.surface->h_air, 1.0 / v,
                                               entry.surface->ambient_c);
        } else {
            entry.material =
                Material(entry.material.density, entry.material.specific_heat, v);
        }
        return run_with(entry, std::nullopt).steady;
    };
    return run_rows(base, name, values, parallel, row_fn);
}

DesignResult design_depth(double target_c, double tolerance_k, const ScenarioSpec& spec,
                          double hw_lo_m, double hw_hi_m) {
    if (!(tolerance_k > 0.0)) throw ValidationError("design: tolerance must be > 0");
    if (!(hw_lo_m > 0.0 && hw_hi_m > hw_lo_m))
        throw ValidationError("design: depth bounds must satisfy 0 < lo < hi");
    if (!spec.geometry || !(spec.geometry->length_m > 0.0) || !(spec.geometry->width_m > 0.0))
        throw ValidationError("design: geometry block with length_m and width_m is required");

    ScenarioSpec base = spec;
    base.kind = ScenarioKind::ContinuousSource1D;
    validate_scenario(base);

    int evaluations = 0;
    auto steady_at = [&](double h_w) {
        ScenarioSpec entry = base;
        entry.surface =
            SurfaceCoolingSpec(entry.surface->h_air, 1.0 / h_w, entry.surface->ambient_c);
        ++evaluations;
        const auto steady = run_with(entry, std::nullopt).steady;
        if (!steady)
            throw ValidationError("design: steady state not reached at h_w = " +
                                  std::to_string(h_w) + "; extend end_s");
        return steady->temperature_c;
    };

    const GeometrySpec& geom = *spec.geometry;
    const double rise = geom.body_volume_m3 > 0.0
                            ? water_level_rise(geom.body_volume_m3, geom.footprint_m2())
                            : 0.0;
    auto make_result = [&](double h_w, double steady_c) {
        TubGeometry tub(geom.length_m, geom.width_m, h_w, h_w + rise,
                        spec.wall && spec.wall->area_m2 ? *spec.wall->area_m2
                                                        : geom.footprint_m2(),
                        spec.wall ? spec.wall->thickness_m : 0.01,
                        spec.wall ? spec.wall->conductivity : 0.2);
        return DesignResult{tub, steady_c, evaluations};
    };

    double lo = hw_lo_m, hi = hw_hi_m;
    const double s_lo = steady_at(lo);
    if (std::abs(s_lo - target_c) <= tolerance_k) return make_result(lo, s_lo);
    const double s_hi = steady_at(hi);
    if (std::abs(s_hi - target_c) <= tolerance_k) return make_result(hi, s_hi);
    if ((target_c - s_lo) * (target_c - s_hi) > 0.0)
        throw ValidationError("design: target temperature not bracketed by the depth bounds");

    const bool increasing = s_hi > s_lo;
    for (int iter = 0; iter < 32 && hi - lo > 1e-4; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double s_mid = steady_at(mid);
        if (std::abs(s_mid - target_c) <= tolerance_k) return make_result(mid, s_mid);
        if ((s_mid < target_c) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    throw ValidationError("design: tolerance unreachable at 0.1 mm depth resolution");
}

} // namespace bathsim
