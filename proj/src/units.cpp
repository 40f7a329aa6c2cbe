#include "bathsim/units.hpp"

#include <stdexcept>

namespace bathsim {

namespace {

double to_celsius(double v, TempUnit u) {
    switch (u) {
    case TempUnit::Celsius: return v;
    case TempUnit::Fahrenheit: return (v - 32.0) * (5.0 / 9.0);
    case TempUnit::Kelvin: return v - 273.15;
    }
    throw std::logic_error("bad TempUnit");
}

double from_celsius(double v, TempUnit u) {
    switch (u) {
    case TempUnit::Celsius: return v;
    case TempUnit::Fahrenheit: return v * (9.0 / 5.0) + 32.0;
    case TempUnit::Kelvin: return v + 273.15;
    }
    throw std::logic_error("bad TempUnit");
}

} // namespace

double convert_temperature(double value, TempUnit from, TempUnit to) {
    if (from == to) return value;
    return from_celsius(to_celsius(value, from), to);
}

double temperature_scale(TempUnit unit) {
    return unit == TempUnit::Fahrenheit ? 5.0 / 9.0 : 1.0;
}

} // namespace bathsim
