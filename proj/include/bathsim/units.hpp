#pragma once

namespace bathsim {

enum class TempUnit { Celsius, Fahrenheit, Kelvin };

// Exact affine conversion. Celsius is the internal unit everywhere else;
// other units appear only at I/O boundaries.
double convert_temperature(double value, TempUnit from, TempUnit to);

// Scale factor for temperature *differences* and rates: kelvin per degree of `unit`.
double temperature_scale(TempUnit unit);

} // namespace bathsim
