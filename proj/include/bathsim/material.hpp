#pragma once

#include <cmath>

#include "bathsim/errors.hpp"

namespace bathsim {

// Constant material properties of a medium (water, air, wall).
struct Material {
    double density;        // rho, kg/m^3
    double specific_heat;  // c, J/(kg K)
    double conductivity;   // k, W/(m K)

    Material(double rho, double c, double k)
        : density(rho), specific_heat(c), conductivity(k) {
        if (!(std::isfinite(rho) && rho > 0.0))
            throw ValidationError("material: density must be finite and > 0");
        if (!(std::isfinite(c) && c > 0.0))
            throw ValidationError("material: specific heat must be finite and > 0");
        if (!(std::isfinite(k) && k >= 0.0))
            throw ValidationError("material: conductivity must be finite and >= 0");
    }

    double volumetric_heat_capacity() const { return density * specific_heat; }

    bool operator==(const Material&) const = default;
};

// Thermal diffusivity alpha = k / (rho c), m^2/s.
inline double diffusivity(const Material& m) {
    return m.conductivity / (m.density * m.specific_heat);
}

inline Material water() { return Material(1000.0, 4186.0, 0.6); }

} // namespace bathsim
