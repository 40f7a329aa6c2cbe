#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bathsim/physics.hpp"

using namespace bathsim;

TEST_CASE("newton temperature") {
    const NewtonCoolingSpec spec(31.33, 25.0, 1200.0);
    CHECK(newton_temperature(spec, 0.0) == doctest::Approx(31.33));
    CHECK(newton_temperature(spec, 1200.0) == doctest::Approx(27.328).epsilon(1e-4));
    CHECK(newton_temperature(spec, 1e9) == doctest::Approx(25.0).epsilon(1e-12));
    // Monotone toward ambient.
    double prev = newton_temperature(spec, 0.0);
    for (double t = 100.0; t <= 6000.0; t += 100.0) {
        const double cur = newton_temperature(spec, t);
        CHECK(cur < prev);
        CHECK(cur > 25.0);
        prev = cur;
    }
}

TEST_CASE("newton time to reach") {
    const NewtonCoolingSpec spec(45.0, 25.0, 900.0);
    CHECK(newton_time_to_reach(spec, 45.0) == doctest::Approx(0.0));
    CHECK(newton_time_to_reach(spec, 25.0 + 20.0 / std::exp(1.0)) ==
          doctest::Approx(900.0).epsilon(1e-12));
    CHECK_THROWS_AS(newton_time_to_reach(spec, 25.0), std::domain_error);
    CHECK_THROWS_AS(newton_time_to_reach(spec, 24.0), std::domain_error);
    CHECK_THROWS_AS(newton_time_to_reach(spec, 46.0), std::domain_error);
}

TEST_CASE("newton inversion property") {
    const NewtonCoolingSpec spec(40.0, 22.0, 1500.0);
    for (int i = 0; i <= 100; ++i) {
        const double t = 10.0 * 1500.0 * i / 100.0;
        const double back = newton_time_to_reach(spec, newton_temperature(spec, t));
        if (t == 0.0)
            CHECK(back == 0.0);
        else
            CHECK(std::abs(back - t) / t < 1e-9);
    }
}

TEST_CASE("convective rate") {
    CHECK(convective_rate(10.0, 0.9, 25.0, 25.0) == 0.0);
    CHECK(convective_rate(10.0, 0.9, 38.0, 25.0) == doctest::Approx(117.0));
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 60.0);
    for (int i = 0; i < 100; ++i) {
        const double a = u(rng), b = u(rng);
        CHECK(convective_rate(12.0, 2.0, a, b) ==
              doctest::Approx(-convective_rate(12.0, 2.0, b, a)));
    }
}

TEST_CASE("cooling source rate") {
    const Material w = water();
    const SurfaceCoolingSpec spec(10.0, 1.0 / 0.34, 25.0);
    CHECK(cooling_source_rate(25.0, spec, w) == 0.0);
    CHECK(cooling_source_rate(35.0, spec, w) == doctest::Approx(-7.026e-5).epsilon(1e-3));
    // Sign matches (T_c - T); doubling the area-to-volume ratio doubles the magnitude.
    const SurfaceCoolingSpec twice(10.0, 2.0 / 0.34, 25.0);
    CHECK(cooling_source_rate(35.0, twice, w) ==
          doctest::Approx(2.0 * cooling_source_rate(35.0, spec, w)).epsilon(1e-12));
    CHECK(cooling_source_rate(20.0, spec, w) > 0.0);
}

TEST_CASE("lumped explicit Euler tracks the closed form") {
    // Single well-mixed cell driven only by cooling_source_rate.
    const Material w = water();
    const double h_air = 10.0, a2v = 1.0 / 0.34, ambient = 25.0, t0 = 45.0;
    const double tau = w.volumetric_heat_capacity() / (h_air * a2v);
    const SurfaceCoolingSpec cool(h_air, a2v, ambient);
    const NewtonCoolingSpec newton(t0, ambient, tau);

    const double dt = tau / 1000.0;
    double temperature = t0;
    double worst = 0.0;
    for (int n = 1; n <= 5000; ++n) {
        temperature += dt * cooling_source_rate(temperature, cool, w);
        const double exact = newton_temperature(newton, n * dt);
        worst = std::max(worst, std::abs(temperature - exact) / std::abs(exact));
    }
    CHECK(worst < 1e-3);
}

TEST_CASE("wall loss rate") {
    CHECK(wall_loss_rate(0.2, 0.01, 1.908, 0.0) == 0.0);
    CHECK(wall_loss_rate(0.2, 0.02, 1.908, 5.0) ==
          doctest::Approx(0.5 * wall_loss_rate(0.2, 0.01, 1.908, 5.0)));
    // Lumped k dT / d = 9.5003 W/m^2 over S = 1.908 m^2 gives the 18.126 W loss.
    CHECK(wall_loss_rate(9.5003, 1.0, 1.908, 1.0) == doctest::Approx(18.127).epsilon(1e-4));
    CHECK_THROWS_AS(wall_loss_rate(0.2, 0.0, 1.908, 5.0), std::domain_error);
}

TEST_CASE("faucet heat requirement") {
    CHECK(faucet_heat_requirement(80.0, 18.126) == doctest::Approx(98.126));
    CHECK(faucet_heat_requirement(0.0, 0.0) == 0.0);
    CHECK(faucet_heat_requirement(80.0, 0.0) == 80.0);
}

TEST_CASE("faucet velocity") {
    const Material w = water();
    const double area = pipe_area_from_diameter(0.010);
    CHECK(area == doctest::Approx(7.853981634e-5).epsilon(1e-9));
    CHECK(faucet_velocity(0.0, w, 7.1, area) == 0.0);
    CHECK(faucet_velocity(98.126, w, 7.1, area) == doctest::Approx(0.0420).epsilon(1e-3));
    CHECK(faucet_velocity(98.126, w, 7.1, 2.0 * area) ==
          doctest::Approx(0.5 * faucet_velocity(98.126, w, 7.1, area)));
    CHECK_THROWS_AS(faucet_velocity(98.126, w, 0.0, area), std::domain_error);
    CHECK_THROWS_AS(faucet_velocity(98.126, w, 7.1, 0.0), std::domain_error);

    // Algebraic inverse: v rho c dT A reproduces q2 exactly.
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(1.0, 200.0);
    for (int i = 0; i < 100; ++i) {
        const double q2 = u(rng), dT = u(rng) / 20.0;
        const double v = faucet_velocity(q2, w, dT, area);
        CHECK(v * w.volumetric_heat_capacity() * dT * area == doctest::Approx(q2).epsilon(1e-12));
    }
}

TEST_CASE("water level rise") {
    CHECK(water_level_rise(0.0, 0.9) == 0.0);
    CHECK(water_level_rise(0.070, 0.9) == doctest::Approx(0.07778).epsilon(1e-4));
    CHECK(water_level_rise(0.070, 1.8) == doctest::Approx(0.5 * water_level_rise(0.070, 0.9)));
    CHECK_THROWS_AS(water_level_rise(0.070, 0.0), std::domain_error);
}
