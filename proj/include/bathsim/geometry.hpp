#pragma once

#include <cmath>

#include "bathsim/errors.hpp"

namespace bathsim {

// Tub dimensions and wall properties feeding the lumped design chain.
// The wetted surface area is configured, not derived from the dimensions.
struct TubGeometry {
    double length_m;
    double width_m;
    double water_depth_m;        // h_w
    double total_depth_m;        // h, >= h_w
    double wetted_area_m2;       // S
    double wall_thickness_m;     // d
    double wall_conductivity;    // W/(m K)

    TubGeometry(double length, double width, double water_depth, double total_depth,
                double wetted_area, double wall_thickness, double wall_cond)
        : length_m(length), width_m(width), water_depth_m(water_depth),
          total_depth_m(total_depth), wetted_area_m2(wetted_area),
          wall_thickness_m(wall_thickness), wall_conductivity(wall_cond) {
        for (double v : {length, width, water_depth, total_depth, wetted_area, wall_thickness})
            if (!(std::isfinite(v) && v > 0.0))
                throw ValidationError("tub geometry: all dimensions must be finite and > 0");
        if (!(std::isfinite(wall_cond) && wall_cond >= 0.0))
            throw ValidationError("tub geometry: wall conductivity must be finite and >= 0");
        if (total_depth < water_depth)
            throw ValidationError("tub geometry: total depth must be >= water depth");
    }

    double footprint_m2() const { return length_m * width_m; }

    bool operator==(const TubGeometry&) const = default;
};

} // namespace bathsim
