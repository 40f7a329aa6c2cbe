#include "bathsim/boundary.hpp"

namespace bathsim {

double ghost_value(const BoundaryCondition& bc, double t_cell, double medium_conductivity,
                   double spacing_m) {
    if (std::holds_alternative<Insulated>(bc)) return t_cell;
    if (const auto* fixed = std::get_if<FixedTemperature>(&bc))
        return 2.0 * fixed->temperature_c - t_cell;
    const auto& wall = std::get<WallLoss>(bc);
    if (medium_conductivity == 0.0) return t_cell;  // stencil multiplies by k = 0 anyway
    const double coeff = spacing_m * wall.wall_conductivity /
                         (medium_conductivity * wall.thickness_m);
    return t_cell - coeff * (t_cell - wall.exterior_c);
}

} // namespace bathsim
