#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dhz/operators.hpp"
#include "dhz/rng.hpp"
#include "oracle_helpers.hpp"

using namespace dhz;

TEST_SUITE_BEGIN("operators");

static Sequence spike() { return make_sequence(-1, {1.0, -2.0, 1.0}); }

TEST_CASE("operator params") {
    CHECK_THROWS_AS(OperatorParams(1.0, 0.5, 0.5), UsageError);
    CHECK_THROWS_AS(OperatorParams(0.0, -0.5, 1.5), UsageError);
    CHECK_THROWS_AS(OperatorParams(0.0, 0.4, 0.4), UsageError);  // alpha+beta != 1-gamma
    const OperatorParams p = OperatorParams::symmetric(0.3);
    CHECK(p.alpha == p.beta);
    CHECK(p.alpha + p.beta == 1.0 - 0.3);
}

TEST_CASE("hilbert transform point values") {
    const Sequence d = Sequence::delta(0);
    for (long long j : {0ll, 1ll, 5ll, -4ll})
        CHECK(hilbert_apply(d, j) ==
              doctest::Approx(1.0 / (std::numbers::pi * (j + 0.5))).epsilon(1e-15));
    CHECK(hilbert_apply(d, 0) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-15));
    CHECK(hilbert_apply(spike(), 0) ==
          doctest::Approx(-16.0 / (3.0 * std::numbers::pi)).epsilon(1e-14));
    CHECK(hilbert_apply(Sequence::zero(), 3) == 0.0);
}

TEST_CASE("riesz potential point values") {
    const Sequence d = Sequence::delta(0);
    CHECK(riesz_apply(d, 0.5, 0) == 0.0);  // diagonal excluded
    for (long long j : {1ll, 2ll, -7ll})
        CHECK(riesz_apply(d, 0.5, j) ==
              doctest::Approx(std::pow(std::abs((double)j), -0.5)).epsilon(1e-15));
    const Sequence two = Sequence::delta(0) + Sequence::delta(2);
    CHECK(riesz_apply(two, 0.5, 1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(riesz_apply(d, 0.0, 1), UsageError);
    CHECK_THROWS_AS(riesz_apply(d, 1.0, 1), UsageError);

    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const Sequence x = oracle::random_sequence(rng, -20, 20, 8);
        const Sequence y = oracle::random_sequence(rng, -20, 20, 8);
        const long long j = rng.uniform_int(-25, 25);
        CHECK(riesz_apply(x + y, 0.3, j) ==
              doctest::Approx(riesz_apply(x, 0.3, j) + riesz_apply(y, 0.3, j)).epsilon(1e-12));
    }
}

TEST_CASE("fractional operator golden values") {
    const Sequence b = spike();
    for (double gamma : {0.0, 0.1, 0.2, 0.3}) {
        const OperatorParams params = OperatorParams::symmetric(gamma);
        CHECK(fractional_apply(b, params, -1) == -2.0);
        CHECK(fractional_apply(b, params, 0) == 2.0);
        CHECK(fractional_apply(b, params, 1) == -2.0);
    }
    const Sequence d = Sequence::delta(0);
    const OperatorParams p03 = OperatorParams::symmetric(0.3);
    CHECK(fractional_apply(d, p03, 0) == 0.0);
    for (long long j : {2ll, -9ll, 40ll}) {
        const double expect = std::pow(std::abs((double)j), 0.3 - 1.0);
        CHECK(fractional_apply(d, p03, j) == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("exclusion of i = +-j is exact") {
    // huge masses parked at the excluded indices must not contribute
    Sequence b = make_sequence(-5, {1e300, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1e300});
    const OperatorParams params = OperatorParams::symmetric(0.0);
    const double v = fractional_apply(b, params, 5);
    CHECK(std::isfinite(v));
    CHECK(v == doctest::Approx(1.0 / (std::pow(7.0, 0.5) * std::pow(3.0, 0.5))).epsilon(1e-14));
    CHECK(std::isfinite(riesz_apply(b, 0.5, -5)));
}

TEST_CASE("kernel evaluation and symmetries") {
    const OperatorParams half = OperatorParams::symmetric(0.0);
    CHECK(kernel_eval(half, 3.0, 1.0) == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-15));
    CHECK_THROWS_AS(kernel_eval(half, 2.0, 2.0), UsageError);
    CHECK_THROWS_AS(kernel_eval(half, 2.0, -2.0), UsageError);
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const double x = rng.uniform(-5.0, 5.0), y = rng.uniform(-5.0, 5.0);
        if (std::abs(x - y) < 1e-3 || std::abs(x + y) < 1e-3) continue;
        CHECK(kernel_eval(half, x, y) == doctest::Approx(kernel_eval(half, y, x)).epsilon(1e-13));
        CHECK(kernel_eval(half, -x, -y) == doctest::Approx(kernel_eval(half, x, y)).epsilon(1e-13));
    }
}

TEST_CASE("kernel derivative bound, frozen example") {
    const OperatorParams half = OperatorParams::symmetric(0.0);
    const double bound = kernel_derivative_bound(half, 1, 3.0, 1.0);
    // 2 * (alpha+beta)_1 * K(3,1) * (1/2 + 1/4)
    CHECK(bound == doctest::Approx(2.0 * 1.0 * (1.0 / (2.0 * std::sqrt(2.0))) * 0.75).epsilon(1e-12));
    // symbolic oracle: |dK/dx| + |dK/dy| = 1/(4 sqrt 2) at this point
    const double truth = std::abs(oracle::kernel_dx(0.5, 0.5, 3.0, 1.0)) +
                         std::abs(oracle::kernel_dy(0.5, 0.5, 3.0, 1.0));
    CHECK(truth == doctest::Approx(1.0 / (4.0 * std::sqrt(2.0))).epsilon(1e-13));
    CHECK(truth <= bound);

    // rising factorial of length one: C_1 = 2 (alpha + beta) = 2 at gamma = 0
    CHECK(rising_factorial(1.0, 1) == 1.0);
    CHECK(kernel_derivative_bound(half, 1, 10.0, 3.0) ==
          doctest::Approx(2.0 * kernel_eval(half, 10.0, 3.0) * (1.0 / 7.0 + 1.0 / 13.0)).epsilon(1e-13));
}

TEST_CASE("kernel derivative bound dominates finite differences") {
    Rng rng(31);
    int checked = 0;
    while (checked < 1000) {
        const double gamma = rng.uniform(0.0, 0.8);
        const double alpha = rng.uniform(0.05, 1.0 - gamma - 0.05);
        const OperatorParams params(gamma, alpha, 1.0 - gamma - alpha);
        const double x = rng.uniform(-4.0, 4.0);
        const double y = rng.uniform(-4.0, 4.0);
        const double u = std::abs(x - y), v = std::abs(x + y);
        if (u < 0.5 || v < 0.5) continue;
        const int n = 1 + static_cast<int>(checked % 3);
        const double h = 1e-4 * std::min(u, v) * (n == 3 ? 10.0 : 1.0);
        const double fx = oracle::central_difference(
            [&](double xx) { return kernel_eval(params, xx, y); }, x, h, n);
        const double fy = oracle::central_difference(
            [&](double yy) { return kernel_eval(params, x, yy); }, y, h, n);
        const double bound = kernel_derivative_bound(params, n, x, y);
        CHECK(std::abs(fx) + std::abs(fy) <= bound * 1.0001);
        ++checked;
    }
}

TEST_CASE("pointwise domination by the Riesz potential for gamma > 0") {
    Rng rng(8);
    for (int t = 0; t < 300; ++t) {
        const double gamma = rng.uniform(0.05, 0.9);
        const double alpha = rng.uniform(0.05, 1.0 - gamma - 0.02);
        const OperatorParams params(gamma, alpha, 1.0 - gamma - alpha);
        const Sequence b = oracle::random_sequence(rng, -30, 30, 12);
        std::vector<double> absv;
        for (long long i = b.first(); i <= b.last(); ++i) absv.push_back(std::abs(b.at(i)));
        const Sequence ab(b.first(), absv);
        const long long j = rng.uniform_int(-40, 40);
        const double lhs = std::abs(fractional_apply(b, params, j));
        const double rhs = riesz_apply(ab, gamma, j) + riesz_apply(ab, gamma, -j);
        CHECK(lhs <= rhs * (1.0 + 1e-12) + 1e-300);
    }
}

TEST_CASE("cubic decay of the transform of the spike sequence") {
    const Sequence b = spike();
    for (long long j : {1000ll, 10000ll, 100000ll, 1000000ll}) {
        const double v = std::abs(hilbert_apply(b, j)) * std::pow((double)j, 3.0);
        const double w = std::abs(hilbert_apply(b, -j)) * std::pow((double)j, 3.0);
        CHECK(v <= 2.0);
        CHECK(w <= 2.0);
    }
}

TEST_CASE("vanishing moment precondition guard") {
    CHECK_NOTHROW(require_vanishing_moments(spike(), 2, 1e-10));
    CHECK_THROWS_AS(require_vanishing_moments(Sequence::delta(0), 1, 1e-10), UsageError);
}

TEST_SUITE_END();
