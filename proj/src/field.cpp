#include "bathsim/field.hpp"

#include <algorithm>
#include <cmath>

namespace bathsim {

TemperatureField::TemperatureField(GridSpec grid, double uniform_c)
    : grid_(std::move(grid)), values_(grid_.total_cells(), uniform_c) {
    if (!std::isfinite(uniform_c))
        throw ValidationError("field: temperatures must be finite");
}

TemperatureField::TemperatureField(GridSpec grid, std::vector<double> values_c)
    : grid_(std::move(grid)), values_(std::move(values_c)) {
    if (values_.size() != grid_.total_cells())
        throw ValidationError("field: value count must equal the grid cell count");
    for (double v : values_) {
        if (!std::isfinite(v))
            throw ValidationError("field: temperatures must be finite");
    }
}

double TemperatureField::mean() const {
    double sum = 0.0;
    for (double v : values_) sum += v;
    return sum / static_cast<double>(values_.size());
}

double TemperatureField::min() const {
    return *std::min_element(values_.begin(), values_.end());
}

double TemperatureField::max() const {
    return *std::max_element(values_.begin(), values_.end());
}

double total_energy(const TemperatureField& field, const Material& m) {
    double sum = 0.0;
    for (double v : field.values()) sum += v;
    return m.volumetric_heat_capacity() * field.grid().cell_volume() * sum;
}

} // namespace bathsim
