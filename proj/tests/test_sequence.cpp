#include <doctest.h>

#include <cmath>
#include <limits>

#include "dhz/enclosure.hpp"
#include "dhz/rng.hpp"
#include "dhz/sequence.hpp"
#include "oracle_helpers.hpp"

using namespace dhz;

TEST_SUITE_BEGIN("seqcore");

static Sequence spike() { return make_sequence(-1, {1.0, -2.0, 1.0}); }

TEST_CASE("make_sequence canonical form") {
    const Sequence b = spike();
    CHECK(b.offset() == -1);
    CHECK(b.values() == std::vector<double>{1.0, -2.0, 1.0});

    const Sequence d = make_sequence(0, {1.0});
    CHECK(d == Sequence::delta(0));

    const Sequence t = make_sequence(5, {0.0, 3.0, 0.0});
    CHECK(t.offset() == 6);
    CHECK(t.values() == std::vector<double>{3.0});

    CHECK_THROWS_AS(make_sequence(0, {}), UsageError);
    CHECK(make_sequence(7, {0.0, 0.0}).is_zero());
    CHECK(make_sequence(7, {0.0, 0.0}) == Sequence::zero());
}

TEST_CASE("equality is pointwise over Z") {
    CHECK(make_sequence(0, {0.0, 1.0, 0.0}) == make_sequence(1, {1.0}));
    CHECK_FALSE(make_sequence(0, {1.0}) == make_sequence(1, {1.0}));
    CHECK(Sequence::zero().at(12345) == 0.0);
}

TEST_CASE("lp norms") {
    const Sequence b = spike();
    for (double p : {0.5, 1.0, 2.0}) CHECK(lp_norm(Sequence::delta(0), p) == 1.0);
    CHECK(lp_norm(Sequence::delta(0), std::numeric_limits<double>::infinity()) == 1.0);
    CHECK(lp_norm(b, 1.0) == 4.0);
    CHECK(lp_norm(b, std::numeric_limits<double>::infinity()) == 2.0);
    CHECK(lp_norm(b, 2.0) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    CHECK_THROWS_AS(lp_norm(b, 0.0), UsageError);
    CHECK_THROWS_AS(lp_norm(b, -1.0), UsageError);
}

TEST_CASE("norm monotonicity across exponents") {
    Rng rng(42);
    const double ps[] = {0.5, 0.8, 1.0, 1.5, 2.0, std::numeric_limits<double>::infinity()};
    for (int t = 0; t < 200; ++t) {
        const Sequence b = oracle::random_sequence(rng, -50, 50, 20);
        for (std::size_t a = 0; a + 1 < 6; ++a)
            for (std::size_t c = a + 1; c < 6; ++c)
                CHECK(lp_norm(b, ps[c]) <= lp_norm(b, ps[a]) * (1.0 + 1e-12));
    }
}

TEST_CASE("moments") {
    const Sequence b = spike();
    CHECK(moment(b, 0) == 0.0);
    CHECK(moment(b, 1) == 0.0);
    CHECK(moment(b, 2) == 2.0);
    CHECK(moment(Sequence::delta(0), 0) == 1.0);  // 0^0 = 1
    CHECK_THROWS_AS(moment(b, -1), UsageError);

    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        const Sequence x = oracle::random_sequence(rng, -30, 30, 12);
        const Sequence y = oracle::random_sequence(rng, -30, 30, 12);
        for (int k = 0; k <= 3; ++k) {
            const double lhs = moment(x + y, k);
            const double rhs = moment(x, k) + moment(y, k);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
        }
    }
}

TEST_CASE("centered maximal examples") {
    const Sequence d = Sequence::delta(0);
    CHECK(maximal_apply(d, 0) == 1.0);
    CHECK(maximal_apply(d, 3) == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
    CHECK(maximal_apply(Sequence::zero(), 5) == 0.0);

    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        const Sequence b = oracle::random_sequence(rng, -20, 20, 10);
        const long long j = rng.uniform_int(-30, 30);
        CHECK(maximal_apply(2.0 * b, j) == doctest::Approx(2.0 * maximal_apply(b, j)).epsilon(1e-14));
    }
}

TEST_CASE("maximal agrees with brute force over a 10x radius range") {
    Rng rng(2024);
    for (int t = 0; t < 100; ++t) {
        const Sequence b = oracle::random_sequence(rng, -25, 25, 14);
        const long long j = rng.uniform_int(-40, 40);
        const long long n_star = std::max(std::llabs(j - b.first()), std::llabs(j - b.last()));
        const double expect = oracle::maximal_brute(b, j, 10 * std::max<long long>(1, n_star));
        CHECK(maximal_apply(b, j) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("maximal dominates the sequence") {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const Sequence b = oracle::random_sequence(rng, -20, 20, 10);
        for (long long j = b.first() - 3; j <= b.last() + 3; ++j)
            CHECK(std::abs(b.at(j)) <= maximal_apply(b, j) * (1.0 + 1e-15));
    }
}

TEST_CASE("enclosure arithmetic preserves containment") {
    Rng rng(99);
    for (int t = 0; t < 500; ++t) {
        const double a = rng.uniform(-10.0, 10.0);
        const double b = rng.uniform(-10.0, 10.0);
        const Enclosure ea = exact(a), eb = exact(b);
        CHECK((ea + eb).contains(a + b));
        CHECK((ea - eb).contains(a - b));
        CHECK((ea * eb).contains(a * b));
        if (std::abs(b) > 1e-3) CHECK((ea / eb).contains(a / b));
        const double base = 0.1 + std::abs(a);
        CHECK(pow_pos(exact(base), eb).contains(std::pow(base, b)));
        CHECK(abs_pow(ea, 1.5).contains(std::pow(std::abs(a), 1.5)));
    }
    const Enclosure straddling{-1.0, 1.0};
    const Enclosure negative_base{-1.0, 2.0};
    CHECK_THROWS_AS(exact(1.0) / straddling, UsageError);
    CHECK_THROWS_AS(pow_pos(negative_base, exact(2.0)), UsageError);
}

TEST_SUITE_END();
