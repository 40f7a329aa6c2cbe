#pragma once

#include <array>
#include <cmath>
#include <variant>

#include "bathsim/errors.hpp"

namespace bathsim {

// Zero-flux face: the ghost cell mirrors the adjacent interior cell.
struct Insulated {
    bool operator==(const Insulated&) const = default;
};

// Prescribed face temperature; the ghost cell is set so the face value matches.
struct FixedTemperature {
    double temperature_c;
    bool operator==(const FixedTemperature&) const = default;
};

// Robin face: flux k_wall (T_cell - T_ext) / d conducted through a wall of
// thickness d, realized by the ghost-cell value.
struct WallLoss {
    double wall_conductivity;  // W/(m K)
    double thickness_m;
    double exterior_c;

    WallLoss(double k_wall, double d, double exterior)
        : wall_conductivity(k_wall), thickness_m(d), exterior_c(exterior) {
        if (!(std::isfinite(d) && d > 0.0))
            throw ValidationError("wall: thickness must be finite and > 0");
        if (!(std::isfinite(k_wall) && k_wall >= 0.0))
            throw ValidationError("wall: conductivity must be finite and >= 0");
    }

    bool operator==(const WallLoss&) const = default;
};

using BoundaryCondition = std::variant<Insulated, FixedTemperature, WallLoss>;

// One condition per grid face, addressed by (axis, side); side 0 = low, 1 = high.
struct FaceBoundaries {
    std::array<std::array<BoundaryCondition, 2>, 3> face{};

    BoundaryCondition& at(int axis, int side) {
        return face[static_cast<std::size_t>(axis)][static_cast<std::size_t>(side)];
    }
    const BoundaryCondition& at(int axis, int side) const {
        return face[static_cast<std::size_t>(axis)][static_cast<std::size_t>(side)];
    }

    static FaceBoundaries insulated() { return {}; }

    static FaceBoundaries uniform(const BoundaryCondition& bc) {
        FaceBoundaries b;
        for (auto& per_axis : b.face) per_axis = {bc, bc};
        return b;
    }
};

// Ghost-cell temperature realizing `bc` next to a boundary cell at t_cell,
// for a medium of conductivity k and cell spacing `spacing_m` along the face normal.
double ghost_value(const BoundaryCondition& bc, double t_cell, double medium_conductivity,
                   double spacing_m);

} // namespace bathsim
