#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ldist/rng.hpp"

#include <cmath>
#include <set>

using namespace ldist;

TEST_CASE("determinism and stream separation") {
    CHECK(crng::hash3(1, 2, 3) == crng::hash3(1, 2, 3));
    CHECK(crng::hash3(1, 2, 3) != crng::hash3(1, 2, 4));
    CHECK(crng::hash3(1, 2, 3) != crng::hash3(1, 3, 3));
    CHECK(crng::hash3(1, 2, 3) != crng::hash3(2, 2, 3));
    std::set<std::uint64_t> vals;
    for (std::uint64_t k = 0; k < 10000; ++k) vals.insert(crng::hash3(42, k, 7));
    CHECK(vals.size() == 10000);
}

TEST_CASE("uniform01 range and moments") {
    const int n = 200000;
    double s = 0, s2 = 0;
    for (int k = 0; k < n; ++k) {
        double u = crng::uniform01(123, k, 0);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        s += u;
        s2 += u * u;
    }
    double mean = s / n, var = s2 / n - mean * mean;
    CHECK(std::abs(mean - 0.5) < 4.0 / std::sqrt(12.0 * n));
    CHECK(std::abs(var - 1.0 / 12) < 0.002);
}

TEST_CASE("angles cover the circle uniformly") {
    const int n = 100000, bins = 16;
    int hist[bins] = {};
    for (int k = 0; k < n; ++k) {
        double th = crng::uniform_angle(9, k, 11);
        CHECK(th >= 0.0);
        CHECK(th < two_pi);
        hist[(int)(th / two_pi * bins)]++;
    }
    for (int b = 0; b < bins; ++b)
        CHECK(std::abs(hist[b] - n / bins) < 5 * std::sqrt((double)n / bins));
    // serial correlation of successive angles is tiny
    double c = 0;
    double prev = crng::uniform01(9, 0, 11) - 0.5;
    for (int k = 1; k < n; ++k) {
        double cur = crng::uniform01(9, k, 11) - 0.5;
        c += prev * cur;
        prev = cur;
    }
    CHECK(std::abs(c / n) < 4.0 / (12.0 * std::sqrt((double)n)));
}
