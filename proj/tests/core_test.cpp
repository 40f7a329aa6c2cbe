#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bathsim/field.hpp"
#include "bathsim/geometry.hpp"
#include "bathsim/grid.hpp"
#include "bathsim/material.hpp"
#include "bathsim/units.hpp"

using namespace bathsim;

TEST_CASE("diffusivity") {
    CHECK(diffusivity(Material(1.0, 1.0, 1.0)) == 1.0);
    CHECK(diffusivity(Material(2.0, 5.0, 0.0)) == 0.0);
    CHECK(diffusivity(water()) == doctest::Approx(1.4334e-7).epsilon(1e-4));
}

TEST_CASE("diffusivity homogeneity") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double rho = u(rng), c = u(rng), k = u(rng), s = u(rng);
        const double base = diffusivity(Material(rho, c, k));
        CHECK(diffusivity(Material(rho, c, k * s)) == doctest::Approx(base * s).epsilon(1e-12));
        CHECK(diffusivity(Material(rho * s, c, k)) == doctest::Approx(base / s).epsilon(1e-12));
        CHECK(diffusivity(Material(rho, c * s, k)) == doctest::Approx(base / s).epsilon(1e-12));
    }
}

TEST_CASE("material invariants enforced") {
    CHECK_THROWS_AS(Material(-1.0, 4186.0, 0.6), ValidationError);
    CHECK_THROWS_AS(Material(1000.0, 0.0, 0.6), ValidationError);
    CHECK_THROWS_AS(Material(1000.0, 4186.0, -0.1), ValidationError);
    CHECK_NOTHROW(Material(1000.0, 4186.0, 0.0));
}

TEST_CASE("temperature conversions") {
    CHECK(convert_temperature(32.0, TempUnit::Fahrenheit, TempUnit::Celsius) == 0.0);
    CHECK(convert_temperature(113.0, TempUnit::Fahrenheit, TempUnit::Celsius) ==
          doctest::Approx(45.0).epsilon(1e-12));
    CHECK(convert_temperature(101.0, TempUnit::Fahrenheit, TempUnit::Celsius) ==
          doctest::Approx(38.3333).epsilon(1e-5));
    CHECK(convert_temperature(0.0, TempUnit::Celsius, TempUnit::Kelvin) == 273.15);
}

TEST_CASE("temperature conversion round trips") {
    const TempUnit units[] = {TempUnit::Celsius, TempUnit::Fahrenheit, TempUnit::Kelvin};
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-500.0, 2000.0);
    for (int i = 0; i < 500; ++i) {
        const double x = u(rng);
        for (TempUnit a : units)
            for (TempUnit b : units) {
                const double back = convert_temperature(convert_temperature(x, a, b), b, a);
                CHECK(std::abs(back - x) < 1e-12);
            }
    }
}

TEST_CASE("grid spacing and volume") {
    GridSpec g({1.5, 0.6}, {30, 12});
    CHECK(g.dims() == 2);
    CHECK(g.spacing(0) == doctest::Approx(0.05));
    CHECK(g.spacing(1) == doctest::Approx(0.05));
    CHECK(g.total_cells() == 360);
    CHECK(g.cell_volume() == doctest::Approx(0.0025));
    CHECK(g.center(0, 0) == doctest::Approx(0.025));
    CHECK_THROWS_AS(GridSpec({1.0}, {1}), ValidationError);
    CHECK_THROWS_AS(GridSpec({-1.0}, {4}), ValidationError);
    CHECK_THROWS_AS(GridSpec({1.0, 1.0}, {4}), ValidationError);
}

TEST_CASE("field validation") {
    GridSpec g({1.0}, {4});
    CHECK_THROWS_AS(TemperatureField(g, std::vector<double>{1.0, 2.0}), ValidationError);
    CHECK_THROWS_AS(TemperatureField(g, std::vector<double>{1.0, 2.0, NAN, 3.0}),
                    ValidationError);
    const TemperatureField f(g, {1.0, 2.0, 3.0, 4.0});
    CHECK(f.mean() == doctest::Approx(2.5));
    CHECK(f.min() == 1.0);
    CHECK(f.max() == 4.0);
}

TEST_CASE("total energy") {
    const Material w = water();
    GridSpec unit_cube({1.0, 1.0, 1.0}, {2, 2, 2});
    CHECK(total_energy(TemperatureField(unit_cube, 0.0), w) == 0.0);
    CHECK(total_energy(TemperatureField(unit_cube, 1.0), w) ==
          doctest::Approx(4.186e6).epsilon(1e-12));

    // Linearity: energy(a T1 + b T2) = a energy(T1) + b energy(T2).
    GridSpec g({1.5}, {8});
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(10.0, 50.0);
    std::vector<double> t1(8), t2(8), mix(8);
    for (int i = 0; i < 8; ++i) {
        t1[i] = u(rng);
        t2[i] = u(rng);
        mix[i] = 2.0 * t1[i] + 0.5 * t2[i];
    }
    const double lhs = total_energy(TemperatureField(g, mix), w);
    const double rhs = 2.0 * total_energy(TemperatureField(g, t1), w) +
                       0.5 * total_energy(TemperatureField(g, t2), w);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

    // Doubling all temperatures doubles the energy.
    std::vector<double> doubled(t1);
    for (double& v : doubled) v *= 2.0;
    CHECK(total_energy(TemperatureField(g, doubled), w) ==
          doctest::Approx(2.0 * total_energy(TemperatureField(g, t1), w)).epsilon(1e-12));
}

TEST_CASE("tub geometry") {
    // The wetted area is configured, not derived: the reference tub carries
    // S = 1.908 m^2 even though its full wetted area would be larger.
    const TubGeometry tub(1.5, 0.6, 0.34, 0.42, 1.908, 0.01, 0.2);
    CHECK(tub.footprint_m2() == doctest::Approx(0.9));
    CHECK(tub.wetted_area_m2 == 1.908);
    CHECK_THROWS_AS(TubGeometry(1.5, 0.6, 0.5, 0.42, 1.908, 0.01, 0.2), ValidationError);
    CHECK_THROWS_AS(TubGeometry(0.0, 0.6, 0.3, 0.42, 1.908, 0.01, 0.2), ValidationError);
}

TEST_CASE("index box") {
    GridSpec g({1.5}, {30});
    IndexBox box{{0, 0, 0}, {3, 0, 0}};
    CHECK(box.within(g));
    CHECK(box.cell_count(g) == 3);
    CHECK(box.contains(g, {2, 0, 0}));
    CHECK(!box.contains(g, {3, 0, 0}));
    IndexBox beyond{{0, 0, 0}, {31, 0, 0}};
    CHECK(!beyond.within(g));
}
