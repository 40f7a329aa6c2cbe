#include "bathsim/solver.hpp"

#include <cmath>
#include <limits>

namespace bathsim {

void SolverConfig::validate() const {
    if (!(std::isfinite(dt_s) && dt_s > 0.0))
        throw ValidationError("time.dt_s: must be finite and > 0");
    if (!(std::isfinite(end_s) && end_s >= 0.0))
        throw ValidationError("time.end_s: must be finite and >= 0");
    if (!(std::isfinite(snapshot_interval_s) && snapshot_interval_s >= dt_s))
        throw ValidationError("time.snapshot_s: must be >= dt_s");
    if (!(std::isfinite(steady_epsilon) && steady_epsilon > 0.0))
        throw ValidationError("steady.epsilon: must be finite and > 0");
    if (steady_window_s < 0.0 || !std::isfinite(steady_window_s))
        throw ValidationError("steady.window_s: must be finite and >= 0");
    if (series_interval_s < 0.0 || !std::isfinite(series_interval_s))
        throw ValidationError("time.series_s: must be finite and >= 0");
}

double stability_limit(const Material& m, const GridSpec& grid) {
    const double alpha = diffusivity(m);
    if (alpha == 0.0) return std::numeric_limits<double>::infinity();
    double inv_sq_sum = 0.0;
    for (int a = 0; a < grid.dims(); ++a)
        inv_sq_sum += 1.0 / (grid.spacing(a) * grid.spacing(a));
    return 1.0 / (2.0 * alpha * inv_sq_sum);
}

namespace {

void scan_for_blowup(const std::vector<double>& values, std::size_t at_step) {
    for (double v : values) {
        if (!std::isfinite(v) || std::abs(v) > kBlowupThresholdC)
            throw BlowupError("solution blew up: non-finite or runaway temperature", at_step);
    }
}

// Per-cell volumetric power, W/m^3. Empty when there are no heat sources.
std::vector<double> accumulate_power(const GridSpec& grid,
                                     const std::vector<SourceTerm>& sources) {
    std::vector<double> power;
    for (const auto& s : sources) {
        const auto* src = std::get_if<HeatSourceSpec>(&s);
        if (!src) continue;
        if (!src->region.within(grid))
            throw ValidationError("source.region: must lie within the grid");
        if (power.empty()) power.assign(grid.total_cells(), 0.0);
        const auto& box = src->region;
        const std::size_t ny = grid.dims() > 1 ? grid.cells(1) : 1;
        const std::size_t nz = grid.dims() > 2 ? grid.cells(2) : 1;
        const std::size_t y_lo = grid.dims() > 1 ? box.lo[1] : 0;
        const std::size_t y_hi = grid.dims() > 1 ? box.hi[1] : 1;
        const std::size_t z_lo = grid.dims() > 2 ? box.lo[2] : 0;
        const std::size_t z_hi = grid.dims() > 2 ? box.hi[2] : 1;
        for (std::size_t ix = box.lo[0]; ix < box.hi[0]; ++ix)
            for (std::size_t iy = y_lo; iy < y_hi; ++iy)
                for (std::size_t iz = z_lo; iz < z_hi; ++iz)
                    power[(ix * ny + iy) * nz + iz] += src->volumetric_power;
    }
    return power;
}

} // namespace

TemperatureField step(const TemperatureField& field, const Material& m,
                      const std::vector<SourceTerm>& sources, const FaceBoundaries& bcs,
                      double dt_s) {
    const GridSpec& g = field.grid();
    const std::vector<double>& t = field.values();
    const double rc = m.volumetric_heat_capacity();
    const double k = m.conductivity;
    const double dt_alpha = dt_s * diffusivity(m);

    // Uniform dissipation toward ambient: sum of h_air dA/dV / (rho c) over sources.
    double lambda = 0.0;
    double lambda_tc = 0.0;
    for (const auto& s : sources) {
        if (const auto* cool = std::get_if<SurfaceCoolingSpec>(&s)) {
            const double l = cool->h_air * cool->area_to_volume / rc;
            lambda += l;
            lambda_tc += l * cool->ambient_c;
        }
    }
    const std::vector<double> power = accumulate_power(g, sources);

    double diag = 0.0;
    std::array<double, 3> inv_sq{0.0, 0.0, 0.0};
    for (int a = 0; a < g.dims(); ++a) {
        inv_sq[static_cast<std::size_t>(a)] = 1.0 / (g.spacing(a) * g.spacing(a));
        diag += 2.0 * inv_sq[static_cast<std::size_t>(a)];
    }
    const double keep = 1.0 - dt_alpha * diag - dt_s * lambda;

    const std::size_t nx = g.cells(0);
    const std::size_t ny = g.dims() > 1 ? g.cells(1) : 1;
    const std::size_t nz = g.dims() > 2 ? g.cells(2) : 1;
    const std::array<std::size_t, 3> extent{nx, ny, nz};
    const std::array<std::size_t, 3> stride{ny * nz, nz, 1};

    std::vector<double> out(t.size());
    std::size_t i = 0;
    std::array<std::size_t, 3> idx{0, 0, 0};
    for (idx[0] = 0; idx[0] < nx; ++idx[0]) {
        for (idx[1] = 0; idx[1] < ny; ++idx[1]) {
            for (idx[2] = 0; idx[2] < nz; ++idx[2], ++i) {
                double neighbor_sum = 0.0;
                for (int a = 0; a < g.dims(); ++a) {
                    const auto ua = static_cast<std::size_t>(a);
                    const double lo = idx[ua] > 0
                                          ? t[i - stride[ua]]
                                          : ghost_value(bcs.at(a, 0), t[i], k, g.spacing(a));
                    const double hi = idx[ua] + 1 < extent[ua]
                                          ? t[i + stride[ua]]
                                          : ghost_value(bcs.at(a, 1), t[i], k, g.spacing(a));
                    neighbor_sum += (lo + hi) * inv_sq[ua];
                }
                const double f = power.empty() ? 0.0 : power[i];
                out[i] = t[i] * keep + dt_alpha * neighbor_sum + dt_s * (lambda_tc + f / rc);
            }
        }
    }

    scan_for_blowup(out, 0);
    return TemperatureField(g, std::move(out));
}

SimulationResult run(const TemperatureField& initial, const Material& m,
                     const std::vector<SourceTerm>& sources, const FaceBoundaries& bcs,
                     const SolverConfig& cfg) {
    cfg.validate();
    const double limit = stability_limit(m, initial.grid());
    if (!cfg.allow_unstable && cfg.dt_s > limit * (1.0 + 1e-12))
        throw StabilityError("dt exceeds the stability limit");

    SimulationResult result;
    auto record_series = [&](double t_s, const TemperatureField& f) {
        result.series.push_back(
            {t_s, f.mean(), f.min(), f.max(), total_energy(f, m)});
    };

    TemperatureField field = initial;
    record_series(0.0, field);
    result.snapshots.push_back({0.0, field});

    const auto n_steps =
        static_cast<std::size_t>(std::ceil(cfg.end_s / cfg.dt_s - 1e-9));
    const double series_every = cfg.series_interval_s;
    double next_snapshot = cfg.snapshot_interval_s;
    double next_series = series_every;
    double last_recorded_t = 0.0;
    double last_snapshot_t = 0.0;

    for (std::size_t n = 1; n <= n_steps; ++n) {
        double t_s = static_cast<double>(n) * cfg.dt_s;
        try {
            field = step(field, m, sources, bcs, cfg.dt_s);
        } catch (const BlowupError& e) {
            result.steps = n - 1;
            result.blew_up = true;
            throw BlowupError(e.what(), n, std::move(result));
        }
        result.steps = n;

        const bool series_due =
            series_every == 0.0 || t_s >= next_series - 0.25 * cfg.dt_s || n == n_steps;
        if (series_due) {
            record_series(t_s, field);
            last_recorded_t = t_s;
            if (series_every > 0.0 && t_s >= next_series - 0.25 * cfg.dt_s)
                next_series += series_every;
        }
        if (t_s >= next_snapshot - 0.25 * cfg.dt_s) {
            result.snapshots.push_back({t_s, field});
            last_snapshot_t = t_s;
            next_snapshot += cfg.snapshot_interval_s;
        }
    }

    // Always capture the final state.
    if (n_steps > 0) {
        const double t_end = static_cast<double>(n_steps) * cfg.dt_s;
        if (last_snapshot_t < t_end) result.snapshots.push_back({t_end, field});
        (void)last_recorded_t;
    }

    if (cfg.effective_window_s() > 0.0)
        result.steady =
            detect_steady(result.series, cfg.steady_epsilon, cfg.effective_window_s());
    return result;
}

namespace {

// Least-squares mean-temperature slope over series[start..stop]; nullopt when
// the stretch is too short to fit.
std::optional<double> window_slope(const std::vector<SeriesSample>& series, std::size_t start,
                                   std::size_t stop) {
    if (stop - start + 1 < 2) return std::nullopt;
    const auto n = static_cast<double>(stop - start + 1);
    double t_mean = 0.0, y_mean = 0.0;
    for (std::size_t j = start; j <= stop; ++j) {
        t_mean += series[j].t_s;
        y_mean += series[j].mean_c;
    }
    t_mean /= n;
    y_mean /= n;
    double stt = 0.0, sty = 0.0;
    for (std::size_t j = start; j <= stop; ++j) {
        const double dt = series[j].t_s - t_mean;
        stt += dt * dt;
        sty += dt * (series[j].mean_c - y_mean);
    }
    if (stt == 0.0) return std::nullopt;
    return sty / stt;
}

} // namespace

std::optional<SteadyVerdict> detect_steady(const std::vector<SeriesSample>& series,
                                           double epsilon, double window_s) {
    if (series.empty())
        throw ValidationError("detect_steady: series must be nonempty");
    if (!(epsilon > 0.0) || !(window_s > 0.0))
        throw ValidationError("detect_steady: epsilon and window must be > 0");

    const double t_front = series.front().t_s;
    std::size_t start = 0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double t_i = series[i].t_s;
        if (t_i - t_front < window_s * (1.0 - 1e-12)) continue;
        while (series[start].t_s < t_i - window_s * (1.0 + 1e-12)) ++start;

        // The slope must stay below epsilon across the whole window, not just
        // on average: fitting each half as well rejects transient flats where
        // the mean passes through a local extremum while still evolving.
        std::size_t mid = start;
        while (mid < i && series[mid].t_s < t_i - 0.5 * window_s) ++mid;
        const auto full = window_slope(series, start, i);
        const auto left = window_slope(series, start, mid);
        const auto right = window_slope(series, mid, i);
        if (!full) continue;
        const bool halves_ok = (!left || std::abs(*left) < epsilon) &&
                               (!right || std::abs(*right) < epsilon);
        if (std::abs(*full) < epsilon && halves_ok)
            return SteadyVerdict{t_i, series[i].mean_c};
    }
    return std::nullopt;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ValidationError("linear_fit: need two equal-length samples or more");
    const auto n = static_cast<double>(x.size());
    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        x_mean += x[i];
        y_mean += y[i];
    }
    x_mean /= n;
    y_mean /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - x_mean;
        const double dy = y[i] - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw ValidationError("linear_fit: x values must not all coincide");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;
    if (syy > 0.0) {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = y[i] - (fit.intercept + fit.slope * x[i]);
            ss_res += r * r;
        }
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

} // namespace bathsim
