#include "bathsim/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace bathsim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ValidationError("config: " + path + ": " + msg);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(path.empty() ? "document" : path, "must be a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                known = true;
                break;
            }
        if (!known) fail(join(path, it.key()), "unknown key");
    }
}

const json* find(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

const json& require(const json& obj, const std::string& path, const char* key) {
    const json* v = find(obj, key);
    if (!v) fail(join(path, key), "missing required key");
    return *v;
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "must be a number");
    return v.get<double>();
}

double get_number(const json& obj, const std::string& path, const char* key) {
    return as_number(require(obj, path, key), join(path, key));
}

std::vector<double> get_number_array(const json& obj, const std::string& path, const char* key,
                                     std::size_t size) {
    const json& v = require(obj, path, key);
    if (!v.is_array() || v.size() != size)
        fail(join(path, key), "must be an array of " + std::to_string(size) + " numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(as_number(v[i], join(path, key) + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::size_t> get_index_array(const json& obj, const std::string& path,
                                         const char* key, std::size_t size) {
    const json& v = require(obj, path, key);
    if (!v.is_array() || v.size() != size)
        fail(join(path, key), "must be an array of " + std::to_string(size) + " integers");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = join(path, key) + "[" + std::to_string(i) + "]";
        if (!v[i].is_number_integer() || v[i].get<double>() < 0)
            fail(p, "must be a non-negative integer");
        out.push_back(v[i].get<std::size_t>());
    }
    return out;
}

TempUnit parse_units(const json& doc) {
    const json* u = find(doc, "units");
    if (!u) return TempUnit::Celsius;
    if (!u->is_string()) fail("units", "must be \"C\" or \"F\"");
    const auto s = u->get<std::string>();
    if (s == "C") return TempUnit::Celsius;
    if (s == "F") return TempUnit::Fahrenheit;
    fail("units", "must be \"C\" or \"F\"");
}

} // namespace

ScenarioSpec parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config: malformed JSON: ") + e.what());
    }

    check_keys(doc, "",
               {"units", "scenario", "grid", "material", "surface", "wall", "source", "init",
                "time", "steady", "geometry"});

    const TempUnit io = parse_units(doc);
    auto temp_c = [io](double v) { return convert_temperature(v, io, TempUnit::Celsius); };

    const json& scenario = require(doc, "", "scenario");
    if (!scenario.is_string()) fail("scenario", "must be a string");
    const ScenarioKind kind = scenario_kind_from_string(scenario.get<std::string>());

    // grid
    const json& grid_obj = require(doc, "", "grid");
    check_keys(grid_obj, "grid", {"dims", "lengths_m", "cells"});
    const json& dims_v = require(grid_obj, "grid", "dims");
    if (!dims_v.is_number_integer() || dims_v.get<int>() < 1 || dims_v.get<int>() > 3)
        fail("grid.dims", "must be 1, 2, or 3");
    const auto dims = static_cast<std::size_t>(dims_v.get<int>());
    const auto lengths = get_number_array(grid_obj, "grid", "lengths_m", dims);
    for (std::size_t i = 0; i < dims; ++i)
        if (!(lengths[i] > 0.0)) fail("grid.lengths_m", "lengths must be > 0");
    const auto cells = get_index_array(grid_obj, "grid", "cells", dims);
    for (std::size_t i = 0; i < dims; ++i)
        if (cells[i] < 2) fail("grid.cells", "at least 2 cells per axis");
    GridSpec grid(lengths, cells);

    // material
    const json& mat_obj = require(doc, "", "material");
    check_keys(mat_obj, "material", {"rho", "c", "k"});
    const double rho = get_number(mat_obj, "material", "rho");
    if (!(rho > 0.0)) fail("material.rho", "must be > 0");
    const double c = get_number(mat_obj, "material", "c");
    if (!(c > 0.0)) fail("material.c", "must be > 0");
    const double k = get_number(mat_obj, "material", "k");
    if (!(k >= 0.0)) fail("material.k", "must be >= 0");
    Material material(rho, c, k);

    // surface (optional)
    std::optional<SurfaceCoolingSpec> surface;
    if (const json* s = find(doc, "surface")) {
        check_keys(*s, "surface", {"h_air", "ambient", "area_to_volume"});
        const double h_air = get_number(*s, "surface", "h_air");
        if (!(h_air >= 0.0)) fail("surface.h_air", "must be >= 0");
        const double a2v = get_number(*s, "surface", "area_to_volume");
        if (!(a2v >= 0.0)) fail("surface.area_to_volume", "must be >= 0");
        surface = SurfaceCoolingSpec(h_air, a2v, temp_c(get_number(*s, "surface", "ambient")));
    }

    // wall (optional)
    std::optional<WallSpec> wall;
    if (const json* w = find(doc, "wall")) {
        check_keys(*w, "wall", {"k_wall", "thickness_m", "area_m2", "exterior"});
        WallSpec ws;
        ws.conductivity = get_number(*w, "wall", "k_wall");
        if (!(ws.conductivity >= 0.0)) fail("wall.k_wall", "must be >= 0");
        ws.thickness_m = get_number(*w, "wall", "thickness_m");
        if (!(ws.thickness_m > 0.0)) fail("wall.thickness_m", "must be > 0");
        ws.exterior_c = temp_c(get_number(*w, "wall", "exterior"));
        if (const json* a = find(*w, "area_m2")) {
            const double area = as_number(*a, "wall.area_m2");
            if (!(area > 0.0)) fail("wall.area_m2", "must be > 0");
            ws.area_m2 = area;
        }
        wall = ws;
    }

    // source (optional)
    std::optional<SourceSpec> source;
    if (const json* s = find(doc, "source")) {
        check_keys(*s, "source", {"power", "region"});
        SourceSpec src;
        src.power_w = get_number(*s, "source", "power");
        if (!(src.power_w >= 0.0)) fail("source.power", "must be >= 0");
        const json& region = require(*s, "source", "region");
        check_keys(region, "source.region", {"lo", "hi"});
        const auto lo = get_index_array(region, "source.region", "lo", dims);
        const auto hi = get_index_array(region, "source.region", "hi", dims);
        for (std::size_t a = 0; a < dims; ++a) {
            src.region.lo[a] = lo[a];
            src.region.hi[a] = hi[a];
        }
        if (!src.region.within(grid)) fail("source.region", "must lie within the grid");
        source = src;
    }

    // init
    const json& init_obj = require(doc, "", "init");
    check_keys(init_obj, "init", {"uniform", "regions"});
    InitialCondition init;
    const json* uniform = find(init_obj, "uniform");
    const json* regions = find(init_obj, "regions");
    if ((uniform != nullptr) == (regions != nullptr))
        fail("init", "exactly one of uniform or regions is required");
    if (uniform) {
        init.uniform_c = temp_c(as_number(*uniform, "init.uniform"));
    } else {
        if (!regions->is_array() || regions->empty())
            fail("init.regions", "must be a nonempty array");
        for (std::size_t i = 0; i < regions->size(); ++i) {
            const std::string path = "init.regions[" + std::to_string(i) + "]";
            const json& r = (*regions)[i];
            check_keys(r, path, {"lo", "hi", "temp"});
            RegionInit region;
            const auto lo = get_number_array(r, path, "lo", dims);
            const auto hi = get_number_array(r, path, "hi", dims);
            for (std::size_t a = 0; a < dims; ++a) {
                region.lo_m[a] = lo[a];
                region.hi_m[a] = hi[a];
            }
            region.temperature_c = temp_c(get_number(r, path, "temp"));
            init.regions.push_back(region);
        }
    }

    // time
    const json& time_obj = require(doc, "", "time");
    check_keys(time_obj, "time", {"dt_s", "end_s", "snapshot_s", "series_s"});
    SolverConfig time;
    time.dt_s = get_number(time_obj, "time", "dt_s");
    time.end_s = get_number(time_obj, "time", "end_s");
    time.snapshot_interval_s = get_number(time_obj, "time", "snapshot_s");
    if (const json* s = find(time_obj, "series_s")) {
        time.series_interval_s = as_number(*s, "time.series_s");
        if (!(time.series_interval_s >= 0.0)) fail("time.series_s", "must be >= 0");
    }

    // steady (optional; defaults: epsilon 1e-6 K/s, window end_s / 10)
    if (const json* s = find(doc, "steady")) {
        check_keys(*s, "steady", {"epsilon", "window_s"});
        time.steady_epsilon =
            get_number(*s, "steady", "epsilon") * temperature_scale(io);
        if (!(time.steady_epsilon > 0.0)) fail("steady.epsilon", "must be > 0");
        time.steady_window_s = get_number(*s, "steady", "window_s");
        if (!(time.steady_window_s > 0.0)) fail("steady.window_s", "must be > 0");
    }

    // geometry (optional)
    std::optional<GeometrySpec> geometry;
    if (const json* g = find(doc, "geometry")) {
        check_keys(*g, "geometry", {"length_m", "width_m", "body_volume_m3", "pipe_diameter_m"});
        GeometrySpec gs;
        gs.length_m = get_number(*g, "geometry", "length_m");
        if (!(gs.length_m > 0.0)) fail("geometry.length_m", "must be > 0");
        gs.width_m = get_number(*g, "geometry", "width_m");
        if (!(gs.width_m > 0.0)) fail("geometry.width_m", "must be > 0");
        if (const json* v = find(*g, "body_volume_m3")) {
            gs.body_volume_m3 = as_number(*v, "geometry.body_volume_m3");
            if (!(gs.body_volume_m3 >= 0.0)) fail("geometry.body_volume_m3", "must be >= 0");
        }
        if (const json* v = find(*g, "pipe_diameter_m")) {
            gs.pipe_diameter_m = as_number(*v, "geometry.pipe_diameter_m");
            if (!(gs.pipe_diameter_m >= 0.0)) fail("geometry.pipe_diameter_m", "must be >= 0");
        }
        geometry = gs;
    }

    ScenarioSpec spec{
        .kind = kind,
        .grid = grid,
        .material = material,
        .surface = surface,
        .source = source,
        .wall = wall,
        .init = init,
        .geometry = geometry,
        .time = time,
        .io_units = io,
    };
    validate_scenario(spec);
    (void)build_initial_field(spec);  // regions must tile; report at parse time
    return spec;
}

ScenarioSpec parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const ScenarioSpec& spec) {
    using ordered = nlohmann::ordered_json;
    const TempUnit io = spec.io_units;
    auto temp_out = [io](double v) { return convert_temperature(v, TempUnit::Celsius, io); };

    ordered doc;
    doc["units"] = io == TempUnit::Fahrenheit ? "F" : "C";
    doc["scenario"] = to_string(spec.kind);

    ordered grid;
    grid["dims"] = spec.grid.dims();
    for (int a = 0; a < spec.grid.dims(); ++a) {
        grid["lengths_m"].push_back(spec.grid.length(a));
        grid["cells"].push_back(spec.grid.cells(a));
    }
    doc["grid"] = grid;

    doc["material"] = {{"rho", spec.material.density},
                       {"c", spec.material.specific_heat},
                       {"k", spec.material.conductivity}};

    if (spec.surface)
        doc["surface"] = {{"h_air", spec.surface->h_air},
                          {"ambient", temp_out(spec.surface->ambient_c)},
                          {"area_to_volume", spec.surface->area_to_volume}};

    if (spec.wall) {
        ordered w;
        w["k_wall"] = spec.wall->conductivity;
        w["thickness_m"] = spec.wall->thickness_m;
        if (spec.wall->area_m2) w["area_m2"] = *spec.wall->area_m2;
        w["exterior"] = temp_out(spec.wall->exterior_c);
        doc["wall"] = w;
    }

    if (spec.source) {
        ordered region;
        for (int a = 0; a < spec.grid.dims(); ++a) {
            region["lo"].push_back(spec.source->region.lo[static_cast<std::size_t>(a)]);
            region["hi"].push_back(spec.source->region.hi[static_cast<std::size_t>(a)]);
        }
        doc["source"] = {{"power", spec.source->power_w}, {"region", region}};
    }

    ordered init;
    if (spec.init.uniform_c) {
        init["uniform"] = temp_out(*spec.init.uniform_c);
    } else {
        for (const auto& r : spec.init.regions) {
            ordered region;
            for (int a = 0; a < spec.grid.dims(); ++a) {
                region["lo"].push_back(r.lo_m[static_cast<std::size_t>(a)]);
                region["hi"].push_back(r.hi_m[static_cast<std::size_t>(a)]);
            }
            region["temp"] = temp_out(r.temperature_c);
            init["regions"].push_back(region);
        }
    }
    doc["init"] = init;

    ordered time;
    time["dt_s"] = spec.time.dt_s;
    time["end_s"] = spec.time.end_s;
    time["snapshot_s"] = spec.time.snapshot_interval_s;
    if (spec.time.series_interval_s > 0.0) time["series_s"] = spec.time.series_interval_s;
    doc["time"] = time;

    if (spec.time.steady_window_s > 0.0)
        doc["steady"] = {{"epsilon", spec.time.steady_epsilon / temperature_scale(io)},
                         {"window_s", spec.time.steady_window_s}};

    if (spec.geometry)
        doc["geometry"] = {{"length_m", spec.geometry->length_m},
                           {"width_m", spec.geometry->width_m},
                           {"body_volume_m3", spec.geometry->body_volume_m3},
                           {"pipe_diameter_m", spec.geometry->pipe_diameter_m}};

    return doc.dump(2) + "\n";
}

} // namespace bathsim
