#pragma once

#include <vector>

#include "bathsim/grid.hpp"
#include "bathsim/material.hpp"

namespace bathsim {

// Temperatures on a grid, degrees Celsius, one value per cell.
// Immutable after construction; construction rejects non-finite values.
class TemperatureField {
public:
    TemperatureField(GridSpec grid, double uniform_c);
    TemperatureField(GridSpec grid, std::vector<double> values_c);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

    double at(std::size_t ix, std::size_t iy = 0, std::size_t iz = 0) const {
        return values_[ix * grid_.stride(0) + (grid_.dims() > 1 ? iy * grid_.stride(1) : 0) +
                       (grid_.dims() > 2 ? iz * grid_.stride(2) : 0)];
    }

    double mean() const;
    double min() const;
    double max() const;

    bool operator==(const TemperatureField&) const = default;

private:
    GridSpec grid_;
    std::vector<double> values_;
};

// Heat content relative to a 0 degC datum: rho c sum(T_i dV).
double total_energy(const TemperatureField& field, const Material& m);

} // namespace bathsim
