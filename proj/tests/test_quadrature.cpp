#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldist/quadrature.hpp"

#include <cmath>

using namespace ldist;

TEST_CASE("both schemes on smooth integrals") {
    auto f = [](double x) { return std::exp(-x) * std::cos(3 * x); };
    // exact: integral over [0, 2] of e^-x cos 3x = [e^-x(3 sin3x - cos3x)/10]
    auto F = [](double x) { return std::exp(-x) * (3 * std::sin(3 * x) - std::cos(3 * x)) / 10; };
    double exact = F(2) - F(0);
    CHECK(std::abs(integrate_gk(f, 0, 2).value - exact) < 1e-13);
    CHECK(std::abs(integrate_tanh_sinh(f, 0, 2).value - exact) < 1e-12);
}

TEST_CASE("log-singular endpoint") {
    // integral over (0,1] of log(x)^2 dx = 2
    auto f = [](double x) { return std::log(x) * std::log(x); };
    CHECK(std::abs(integrate_tanh_sinh(f, 0, 1).value - 2.0) < 1e-12);
    CHECK(std::abs(integrate_gk(f, 0, 1).value - 2.0) < 1e-9);
    // integral over (0,1] of x^{-1/2} log(1/x) dx = 4
    auto g = [](double x) { return -std::log(x) / std::sqrt(x); };
    CHECK(std::abs(integrate_tanh_sinh(g, 0, 1).value - 4.0) < 1e-11);
}

TEST_CASE("upper-infinite maps") {
    // integral over [1, inf) of x^-2 dx = 1
    auto f = [](double x) { return 1.0 / (x * x); };
    CHECK(std::abs(integrate_gk_upper(f, 1).value - 1.0) < 1e-12);
    CHECK(std::abs(integrate_tanh_sinh_upper(f, 1).value - 1.0) < 1e-12);
    // integral over [0, inf) of e^-x dx = 1
    auto g = [](double x) { return std::exp(-x); };
    CHECK(std::abs(integrate_gk_upper(g, 0).value - 1.0) < 1e-12);
    CHECK(std::abs(integrate_tanh_sinh_upper(g, 0).value - 1.0) < 1e-12);
    // slow algebraic decay with log: integral over [1,inf) x^-1.5 log x = 4
    auto h = [](double x) { return std::log(x) * std::pow(x, -1.5); };
    CHECK(std::abs(integrate_gk_upper(h, 1).value - 4.0) < 1e-10);
    CHECK(std::abs(integrate_tanh_sinh_upper(h, 1).value - 4.0) < 1e-10);
}

TEST_CASE("schemes agree on an awkward integrand") {
    // integrand with interior peak
    for (double k : {10.0, 100.0, 1000.0}) {
        auto f = [k](double x) { return std::exp(-k * x * x); };
        double a = integrate_gk(f, 0, 3, 1e-14, 1e-14).value;
        double b = integrate_tanh_sinh(f, 0, 3, 1e-14).value;
        double exact = 0.5 * std::sqrt(pi / k) * std::erf(std::sqrt(k) * 3);
        CHECK(std::abs(a - exact) < 1e-12 * exact + 1e-15);
        CHECK(std::abs(b - exact) < 1e-10 * exact + 1e-13);
    }
}

TEST_CASE("orientation and degenerate intervals") {
    auto f = [](double x) { return x; };
    CHECK(integrate_gk(f, 1, 1).value == 0.0);
    CHECK(integrate_gk(f, 1, 0).value == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(integrate_tanh_sinh(f, 1, 0).value == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("periodic mean is spectrally accurate") {
    // mean of exp(cos th) over a period = I0(1) = 1.2660658777520083
    auto f = [](double th) { return std::exp(std::cos(th)); };
    CHECK(std::abs(periodic_mean_real(f, 32) - 1.2660658777520083) < 1e-14);
    auto g = [](double th) { return std::polar(1.0, std::sin(th)); };
    // mean of e^{i sin th} = J0(1) = 0.7651976865579666
    CHECK(std::abs(periodic_mean(g, 32) - complex(0.7651976865579666, 0.0)) < 1e-14);
}

TEST_CASE("gl_panels handles oscillatory integrands") {
    // integral over [0, 10] of cos(2 pi 5 x) dx = 0
    auto f = [](double x) { return std::cos(two_pi * 5 * x); };
    CHECK(std::abs(gl_panels(f, 0, 10, 5.0)) < 1e-13);
    // integral over [0, 1] of sin(2 pi x)^2 = 1/2
    auto g = [](double x) { double s = std::sin(two_pi * x); return s * s; };
    CHECK(std::abs(gl_panels(g, 0, 1, 2.0) - 0.5) < 1e-14);
}
