#pragma once

#include <variant>

#include "bathsim/grid.hpp"
#include "bathsim/material.hpp"

namespace bathsim {

// Convective exchange between the exposed water surface and bathroom air,
// expressed per unit volume through the area-to-volume ratio.
struct SurfaceCoolingSpec {
    double h_air = 0.0;           // W/(m^2 K)
    double area_to_volume = 0.0;  // 1/m
    double ambient_c = 0.0;       // T_c

    SurfaceCoolingSpec() = default;
    SurfaceCoolingSpec(double h, double a2v, double ambient)
        : h_air(h), area_to_volume(a2v), ambient_c(ambient) {
        if (!(std::isfinite(h) && h >= 0.0))
            throw ValidationError("surface cooling: h_air must be finite and >= 0");
        if (!(std::isfinite(a2v) && a2v >= 0.0))
            throw ValidationError("surface cooling: area_to_volume must be finite and >= 0");
        if (!std::isfinite(ambient))
            throw ValidationError("surface cooling: ambient must be finite");
    }

    bool operator==(const SurfaceCoolingSpec&) const = default;
};

// Constant volumetric heat injection over a cell-index box.
struct HeatSourceSpec {
    double volumetric_power;  // f, W/m^3
    IndexBox region;

    bool operator==(const HeatSourceSpec&) const = default;
};

using SourceTerm = std::variant<SurfaceCoolingSpec, HeatSourceSpec>;

// Exponential relaxation of a lumped body toward ambient.
struct NewtonCoolingSpec {
    double initial_c;        // T_0
    double ambient_c;        // T_c
    double time_constant_s;  // tau

    NewtonCoolingSpec(double t0, double tc, double tau)
        : initial_c(t0), ambient_c(tc), time_constant_s(tau) {
        if (!(std::isfinite(tau) && tau > 0.0))
            throw ValidationError("newton cooling: time constant must be finite and > 0");
        if (!std::isfinite(t0) || !std::isfinite(tc))
            throw ValidationError("newton cooling: temperatures must be finite");
    }

    bool operator==(const NewtonCoolingSpec&) const = default;
};

// T(t) = T_c + (T_0 - T_c) exp(-t / tau)
double newton_temperature(const NewtonCoolingSpec& spec, double t_s);

// Inverse of newton_temperature: tau ln((T_0 - T_c) / (T - T_c)).
// Domain error unless T lies strictly between T_c and T_0 (T_0 included).
double newton_time_to_reach(const NewtonCoolingSpec& spec, double temperature_c);

// Q = h_air A (T - T_c); positive when heat leaves the water.
double convective_rate(double h_air, double area_m2, double temperature_c, double ambient_c);

// Per-cell temperature rate from surface dissipation, K/s; negative above ambient.
double cooling_source_rate(double temperature_c, const SurfaceCoolingSpec& spec,
                           const Material& m);

// Magnitude of the conduction loss through a wall: k_wall S dT / d, W.
double wall_loss_rate(double wall_conductivity, double thickness_m, double area_m2,
                      double delta_t_k);

// Heat the faucet must supply: maintenance heat plus wall loss (both W).
double faucet_heat_requirement(double q_maintain_w, double q_wall_w);

// Inflow velocity delivering q2 through a pipe: q2 / (rho c dT A_pipe).
double faucet_velocity(double q2_w, const Material& m, double delta_t_supply_k,
                       double pipe_area_m2);

// Water-level rise from a submerged body: V / a.
double water_level_rise(double body_volume_m3, double footprint_m2);

inline double pipe_area_from_diameter(double diameter_m) {
    return 0.25 * 3.14159265358979323846 * diameter_m * diameter_m;
}

} // namespace bathsim
