#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "lognsum/lambert_w.hpp"
#include "lognsum/rng.hpp"
#include "oracles.hpp"

using lognsum::lambert_w;

TEST_CASE("lambert_w fixed points") {
    CHECK(lambert_w(0.0) == 0.0);
    CHECK(lambert_w(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("lambert_w domain errors") {
    CHECK_THROWS_AS((void)lambert_w(-1e-12), std::domain_error);
    CHECK_THROWS_AS((void)lambert_w(std::nan("")), std::domain_error);
    CHECK_THROWS_AS((void)lambert_w(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("lambert_w round trip over 1e6 log-spaced points") {
    const int N = 1000000;
    double worst = 0.0;
    for (int i = 0; i <= N; ++i) {
        const double a = std::pow(10.0, -12.0 + 24.0 * i / N);
        const double w = lambert_w(a);
        const double resid = std::fabs(w * std::exp(w) - a) / std::max(a, 1.0);
        worst = std::max(worst, resid);
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("lambert_w agrees with bisection oracle") {
    // the tilt a = 23.1845282 * 0.25^2 named in the module contract
    {
        const double a = 1.4490330125;
        const double wb = oracle::lambert_w_bisect(a);
        CHECK(lambert_w(a) == doctest::Approx(wb).epsilon(1e-12));
    }
    lognsum::Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const double a = std::pow(10.0, -6.0 + 12.0 * rng.uniform());
        const double wb = oracle::lambert_w_bisect(a);
        CHECK(lambert_w(a) == doctest::Approx(wb).epsilon(1e-12));
    }
}

TEST_CASE("lambert_w monotonicity") {
    double prev = lambert_w(1e-9);
    for (int i = 1; i <= 300; ++i) {
        const double a = std::pow(10.0, -9.0 + 18.0 * i / 300.0);
        const double w = lambert_w(a);
        CHECK(w > prev);
        prev = w;
    }
}

TEST_CASE("lambert_w leading asymptotics") {
    const double a = 1e10;
    const double ratio = lambert_w(a) / (std::log(a) - std::log(std::log(a)));
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.05));
}
