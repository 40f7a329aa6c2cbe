#include "bathsim/physics.hpp"

#include <cmath>
#include <stdexcept>

namespace bathsim {

double newton_temperature(const NewtonCoolingSpec& spec, double t_s) {
    return spec.ambient_c + (spec.initial_c - spec.ambient_c) * std::exp(-t_s / spec.time_constant_s);
}

double newton_time_to_reach(const NewtonCoolingSpec& spec, double temperature_c) {
    const double gap0 = spec.initial_c - spec.ambient_c;
    const double gap = temperature_c - spec.ambient_c;
    if (gap == 0.0)
        throw std::domain_error("newton_time_to_reach: ambient is an asymptote, never reached");
    const double ratio = gap0 / gap;
    if (!(ratio >= 1.0))
        throw std::domain_error("newton_time_to_reach: temperature outside (T_c, T_0]");
    return spec.time_constant_s * std::log(ratio);
}

double convective_rate(double h_air, double area_m2, double temperature_c, double ambient_c) {
    if (!(h_air >= 0.0)) throw std::domain_error("convective_rate: h_air must be >= 0");
    if (!(area_m2 >= 0.0)) throw std::domain_error("convective_rate: area must be >= 0");
    return h_air * area_m2 * (temperature_c - ambient_c);
}

double cooling_source_rate(double temperature_c, const SurfaceCoolingSpec& spec,
                           const Material& m) {
    return spec.h_air * spec.area_to_volume * (spec.ambient_c - temperature_c) /
           m.volumetric_heat_capacity();
}

double wall_loss_rate(double wall_conductivity, double thickness_m, double area_m2,
                      double delta_t_k) {
    if (!(thickness_m > 0.0)) throw std::domain_error("wall_loss_rate: thickness must be > 0");
    if (!(wall_conductivity >= 0.0))
        throw std::domain_error("wall_loss_rate: conductivity must be >= 0");
    if (!(area_m2 >= 0.0)) throw std::domain_error("wall_loss_rate: area must be >= 0");
    return wall_conductivity * area_m2 * delta_t_k / thickness_m;
}

double faucet_heat_requirement(double q_maintain_w, double q_wall_w) {
    if (!std::isfinite(q_maintain_w) || !std::isfinite(q_wall_w))
        throw std::domain_error("faucet_heat_requirement: inputs must be finite");
    return q_maintain_w + q_wall_w;
}

double faucet_velocity(double q2_w, const Material& m, double delta_t_supply_k,
                       double pipe_area_m2) {
    if (!(delta_t_supply_k > 0.0))
        throw std::domain_error("faucet_velocity: supply temperature drop must be > 0");
    if (!(pipe_area_m2 > 0.0)) throw std::domain_error("faucet_velocity: pipe area must be > 0");
    return q2_w / (m.volumetric_heat_capacity() * delta_t_supply_k * pipe_area_m2);
}

double water_level_rise(double body_volume_m3, double footprint_m2) {
    if (!(footprint_m2 > 0.0)) throw std::domain_error("water_level_rise: footprint must be > 0");
    if (!(body_volume_m3 >= 0.0))
        throw std::domain_error("water_level_rise: body volume must be >= 0");
    return body_volume_m3 / footprint_m2;
}

} // namespace bathsim
