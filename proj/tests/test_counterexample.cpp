#include <doctest.h>

#include <cmath>

#include "dhz/counterexample.hpp"
#include "dhz/operators.hpp"
#include "oracle_helpers.hpp"

using namespace dhz;

TEST_SUITE_BEGIN("counterexample");

TEST_CASE("closed-form image values") {
    CHECK(u_apply_closed(0.1, -1) == -2.0);
    CHECK(u_apply_closed(0.1, 0) == 2.0);
    CHECK(u_apply_closed(0.1, 1) == -2.0);
    CHECK(u_apply_closed(0.0, 2) == doctest::Approx(2.0 / std::sqrt(3.0) - 1.0).epsilon(1e-15));
}

TEST_CASE("closed form matches the operator across the grid") {
    const Sequence b = counterexample_sequence();
    for (double gamma : {0.0, 0.1, 0.2, 0.3}) {
        const OperatorParams params = OperatorParams::symmetric(gamma);
        double worst = 0.0;
        for (long long j = -1000; j <= 1000; ++j)
            worst = std::max(worst, std::abs(u_apply_closed(gamma, j) - fractional_apply(b, params, j)));
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("total sum enclosure: sign, width, oracle containment") {
    const Enclosure e = total_sum_enclosure(0.0, 1'000'000);
    CHECK(e.width() < 1e-9);
    CHECK(e.hi < 0.0);
    // extended-precision bracket of the series to 10^7, tail included
    const auto bracket = oracle::gamma0_series_bracket(10'000'000);
    const double oracle_lo = -2.0 + 4.0 * static_cast<double>(bracket.lo) - 1e-15;
    const double oracle_hi = -2.0 + 4.0 * static_cast<double>(bracket.hi) + 1e-15;
    CHECK(e.lo <= oracle_lo);
    CHECK(oracle_hi <= e.hi);

    CHECK(total_sum_enclosure(0.1, 1'000'000).hi < 0.0);
    CHECK_THROWS_AS(total_sum_enclosure(0.0, 5), UsageError);
    CHECK_THROWS_AS(total_sum_enclosure(-0.1, 1000), UsageError);
}

TEST_CASE("growing J never widens the enclosure") {
    for (double gamma : {0.0, 0.2}) {
        double prev = std::numeric_limits<double>::infinity();
        for (long long J : {10'000ll, 100'000ll, 1'000'000ll}) {
            const double w = total_sum_enclosure(gamma, J).width();
            CHECK(w <= prev);
            prev = w;
        }
    }
}

TEST_CASE("series terms are positive") {
    for (double gamma : {0.0, 0.15, 0.3}) {
        const double s = (1.0 - gamma) / 2.0;
        for (long long j = 2; j <= 10'000; ++j) {
            const double jsq = static_cast<double>(j) * static_cast<double>(j);
            CHECK(std::pow(jsq - 1.0, -s) - std::pow(jsq, -s) > 0.0);
        }
    }
}

TEST_CASE("disjoint-union bound on the tail from j = 3") {
    for (double gamma : {0.0, 0.15, 0.3}) {
        const double s = (1.0 - gamma) / 2.0;
        dhz::CompensatedSum<double> acc;
        for (long long j = 3; j <= 1'000'000; ++j) {
            const double jsq = static_cast<double>(j) * static_cast<double>(j);
            acc.add(std::pow(jsq - 1.0, -s) - std::pow(jsq, -s));
        }
        CHECK(acc.value() <= std::pow(8.0, -s));
    }
}

TEST_CASE("auxiliary functions at the endpoints") {
    CHECK(g_eval(0.0) == doctest::Approx(1.0 / std::sqrt(3.0) - 0.5).epsilon(1e-12));
    CHECK(h_eval(0.0) == doctest::Approx(0.5 - 1.0 / std::sqrt(8.0)).epsilon(1e-12));
    CHECK(g_eval(0.0) < h_eval(0.0));
    CHECK_THROWS_AS(g_eval(1.0), UsageError);
    CHECK_THROWS_AS(h_eval(1.0 / 3.0), UsageError);
}

TEST_CASE("root enclosure of g - h") {
    const Enclosure eps = epsilon_root(1e-10);
    CHECK(eps.width() <= 1e-10);
    CHECK(eps.lo > 0.0);
    CHECK(eps.hi < 1.0 / 3.0);
    CHECK(eps.mid() == doctest::Approx(0.18689263).epsilon(1e-6));
    CHECK(g_eval(eps.lo) < h_eval(eps.lo));
    CHECK(g_eval(1.0 / 3.0 - 1e-6) > h_eval(1.0 / 3.0 - 1e-6));
    CHECK_THROWS_AS(epsilon_root(0.0), UsageError);
}

TEST_CASE("negativity chain") {
    for (double gamma : {0.0, 0.15}) {
        const auto rep = chain_check(gamma);
        CHECK(rep.verdict);
        REQUIRE(rep.rows.size() == 4);
        for (const auto& row : rep.rows) CHECK(row[1] == 1.0);
    }
    const Enclosure eps = epsilon_root(1e-10);
    CHECK(chain_check(eps.lo - 1e-6).verdict);
    CHECK_THROWS_AS(chain_check(eps.hi + 1e-3), UsageError);
}

TEST_CASE("unboundedness certificates") {
    const auto c0 = certify_unbounded(0.0, 1.0, 100'000);
    CHECK(c0.conclusion);
    CHECK(c0.q == doctest::Approx(1.0));
    CHECK(c0.b_in_hp);
    CHECK(c0.first_nonzero_moment == 2);
    CHECK(c0.total_sum.hi < 0.0);
    CHECK(c0.conclusion == (c0.total_sum.excludes_zero() && c0.b_in_hp));

    const auto c1 = certify_unbounded(0.1, 1.0 / 1.1, 100'000);
    CHECK(c1.conclusion);
    CHECK(c1.q == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(certify_unbounded(0.1, 1.0, 100'000), UsageError);  // q > 1
    CHECK_THROWS_AS(certify_unbounded(0.0, 0.4, 100'000), UsageError);  // p <= 1/2
}

TEST_CASE("sign scan across the gamma grid") {
    std::vector<double> grid;
    for (int k = 0; k <= 6; ++k) grid.push_back(0.05 * k);
    const auto rep = sign_scan(grid, 1'000'000);
    CHECK(rep.verdict);
    REQUIRE(rep.rows.size() == 7);
    for (const auto& row : rep.rows) CHECK(row[3] == -1.0);

    const auto single = sign_scan({0.0}, 100'000);
    const Enclosure direct = total_sum_enclosure(0.0, 100'000);
    CHECK(single.rows[0][1] == direct.lo);
    CHECK(single.rows[0][2] == direct.hi);

    const auto empty = sign_scan({}, 1000);
    CHECK(empty.samples == 0);
    CHECK(empty.verdict);
    CHECK(empty.rows.empty());
}

TEST_SUITE_END();
