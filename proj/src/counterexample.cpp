#include "dhz/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "dhz/operators.hpp"

namespace dhz {

namespace {

// s = (1-gamma)/2 as an interval
Enclosure half_exponent(double gamma) {
    return (exact(1.0) - exact(gamma)) * exact(0.5);
}

// term_j = (j^2-1)^{-s} - j^{-2s}, rigorously enclosed.  j^2 stays exactly
// representable for j <= 3*10^7.
Enclosure term_enclosure(long long j, Enclosure s) {
    const double jsq = static_cast<double>(j) * static_cast<double>(j);
    return pow_pos(exact(jsq - 1.0), -s) - pow_pos(exact(jsq), -s);
}

// Interval sum of term_j over [lo, hi], split into fixed-size chunks that
// are combined in index order, so the result is independent of the number
// of threads.
Enclosure term_sum(long long lo, long long hi, Enclosure s) {
    if (hi < lo) return {0.0, 0.0};
    constexpr long long kChunk = 1 << 16;
    const long long n_chunks = (hi - lo) / kChunk + 1;
    std::vector<Enclosure> partial(static_cast<std::size_t>(n_chunks), Enclosure{0.0, 0.0});
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < n_chunks; ++c) {
        const long long a = lo + c * kChunk;
        const long long b = std::min(hi, a + kChunk - 1);
        Enclosure acc{0.0, 0.0};
        for (long long j = a; j <= b; ++j) acc = acc + term_enclosure(j, s);
        partial[static_cast<std::size_t>(c)] = acc;
    }
    Enclosure total{0.0, 0.0};
    for (const Enclosure& e : partial) total = total + e;
    return total;
}

// [0, T] with T >= sum_{j > J} term_j:  term_j <= s (j^2-1)^{-s-1} by the
// mean value theorem, (x^2-1) >= x^2 (1 - 1/J^2) for x >= J, and the
// decreasing majorant s (1-1/J^2)^{-s-1} x^{-2s-2} integrates to
// s (1-1/J^2)^{-s-1} J^{-2s-1} / (2s+1).
Enclosure term_tail(long long J, Enclosure s) {
    const Enclosure jd = exact(static_cast<double>(J));
    const Enclosure one = exact(1.0);
    const Enclosure slack = pow_pos(one - one / (jd * jd), -(s + one));
    const Enclosure two_s_plus_1 = exact(2.0) * s + one;
    const Enclosure t = s * slack * pow_pos(jd, -two_s_plus_1) / two_s_plus_1;
    return {0.0, t.hi};
}

// Enclosure of sum_{j >= j_start} term_j (tail included).
Enclosure series_from(long long j_start, long long J, Enclosure s) {
    const Enclosure partial = term_sum(j_start, J, s);
    const Enclosure tail = term_tail(J, s);
    return partial + tail;
}

Enclosure g_enclosure(double gamma) {
    const Enclosure s = half_exponent(gamma);
    return pow_pos(exact(3.0), -s) - pow_pos(exact(2.0), exact(-2.0) * s);
}

// valid on the closed interval [0, 1/3]; h extends continuously with
// h(1/3) = 0
Enclosure h_enclosure(double gamma) {
    const Enclosure s = half_exponent(gamma);
    return exact(0.5) - pow_pos(exact(8.0), -s);
}

void check_gamma_range(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw UsageError("gamma must lie in [0, 1)");
}

}  // namespace

Sequence counterexample_sequence() { return Sequence(-1, {1.0, -2.0, 1.0}); }

double u_apply_closed(double gamma, long long j) {
    check_gamma_range(gamma);
    const long long a = std::llabs(j);
    if (a == 1) return -2.0;
    if (a == 0) return 2.0;
    const double jsq = static_cast<double>(j) * static_cast<double>(j);
    return 2.0 * std::pow(jsq - 1.0, -(1.0 - gamma) / 2.0) -
           2.0 * std::pow(static_cast<double>(a), -(1.0 - gamma));
}

Enclosure total_sum_enclosure(double gamma, long long J) {
    check_gamma_range(gamma);
    if (J < 10) throw UsageError("total_sum_enclosure: J must be at least 10");
    if (J > 30'000'000) throw UsageError("total_sum_enclosure: J above the exact-square range");
    const Enclosure s = half_exponent(gamma);
    const Enclosure sum = series_from(2, J, s);
    return exact(-2.0) + exact(4.0) * sum;
}

double g_eval(double gamma) {
    check_gamma_range(gamma);
    return std::pow(3.0, -(1.0 - gamma) / 2.0) - std::pow(2.0, -(1.0 - gamma));
}

double h_eval(double gamma) {
    if (!(gamma >= 0.0 && gamma < 1.0 / 3.0)) throw UsageError("h_eval: gamma must lie in [0, 1/3)");
    return 0.5 - std::pow(8.0, -(1.0 - gamma) / 2.0);
}

Enclosure epsilon_root(double tolerance) {
    if (!(tolerance > 0.0)) throw UsageError("epsilon_root: tolerance must be positive");
    auto f = [](double gamma) { return g_enclosure(gamma) - h_enclosure(gamma); };

    double lo = 0.0;
    double hi = 1.0 / 3.0;
    const Enclosure f_lo = f(lo);
    const Enclosure f_hi = f(hi);
    if (!(f_lo.hi < 0.0))
        throw std::runtime_error("epsilon_root: sign check failed, g - h not certified negative at 0");
    if (!(f_hi.lo > 0.0))
        throw std::runtime_error("epsilon_root: sign check failed, g - h not certified positive at 1/3");

    while (hi - lo > tolerance) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid == lo || mid == hi) break;  // hit double resolution
        const Enclosure fm = f(mid);
        if (fm.hi < 0.0) {
            lo = mid;
        } else if (fm.lo > 0.0) {
            hi = mid;
        } else {
            throw InconclusiveEnclosure("epsilon_root: sign undecidable at requested tolerance");
        }
    }
    return {lo, hi};
}

ExperimentReport chain_check(double gamma) {
    const Enclosure eps = epsilon_root(1e-10);
    if (!(gamma >= 0.0 && gamma < eps.lo))
        throw UsageError("chain_check: gamma must be below the certified root of g - h");

    constexpr long long kPartial = 100'000;
    const Enclosure s = half_exponent(gamma);
    const Enclosure from3 = series_from(3, kPartial, s);
    const Enclosure g = g_enclosure(gamma);
    const Enclosure bound8 = pow_pos(exact(8.0), -s);
    const Enclosure from2 = from3 + g;
    const Enclosure rhs = bound8 + g;
    const Enclosure total = exact(-2.0) + exact(4.0) * from2;

    const bool v1 = from3.hi <= bound8.lo;
    const bool v2 = from2.hi <= rhs.lo;
    const bool v3 = rhs.hi < 0.5;
    const bool v4 = total.hi < 0.0;

    ExperimentReport report;
    report.name = "counterexample-chain";
    report.set_param("gamma", gamma);
    report.set_param("tail_sum_hi", from3.hi);
    report.set_param("eight_pow_lo", bound8.lo);
    report.set_param("full_sum_hi", from2.hi);
    report.set_param("total_sum_hi", total.hi);
    report.samples = 4;
    report.columns = {"step", "verdict"};
    report.rows = {{1, v1 ? 1.0 : 0.0}, {2, v2 ? 1.0 : 0.0}, {3, v3 ? 1.0 : 0.0}, {4, v4 ? 1.0 : 0.0}};
    const double r1 = from3.hi / bound8.lo;
    const double r2 = from2.hi / rhs.lo;
    const double r3 = rhs.hi / 0.5;
    const double r4 = v4 ? 0.0 : 2.0;
    report.worst_ratio = std::max(std::max(r1, r2), std::max(r3, r4));
    report.finalize();
    return report;
}

CounterexampleCertificate certify_unbounded(double gamma, double p, long long J) {
    check_gamma_range(gamma);
    if (!(p > 0.5 && p <= 1.0)) throw UsageError("certify_unbounded: p must lie in (1/2, 1]");
    const double q = 1.0 / (1.0 / p - gamma);
    if (q > 1.0 + 1e-12)
        throw UsageError("certify_unbounded: requires q <= 1, i.e. p <= 1/(1+gamma)");

    const Sequence b = counterexample_sequence();
    const bool moments_vanish = moment(b, 0) == 0.0 && moment(b, 1) == 0.0;
    const bool b_in_hp = moments_vanish && 3.0 * p > 1.0;

    CounterexampleCertificate cert;
    cert.gamma = gamma;
    cert.p = p;
    cert.q = q;
    cert.total_sum = total_sum_enclosure(gamma, J);
    cert.b_in_hp = b_in_hp;
    cert.first_nonzero_moment = 2;
    if (!cert.total_sum.excludes_zero())
        throw InconclusiveEnclosure("certify_unbounded: sum enclosure straddles zero; raise J");
    cert.conclusion = cert.total_sum.excludes_zero() && b_in_hp;
    return cert;
}

ExperimentReport sign_scan(const std::vector<double>& gamma_grid, long long J) {
    for (double g : gamma_grid) check_gamma_range(g);

    ExperimentReport report;
    report.name = "sign-scan";
    report.set_param("J", static_cast<double>(J));
    report.samples = static_cast<long long>(gamma_grid.size());
    report.columns = {"gamma", "lo", "hi", "sign"};
    report.rows.resize(gamma_grid.size());
    bool all_conclusive = true;
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < static_cast<long long>(gamma_grid.size()); ++k) {
        const double gamma = gamma_grid[static_cast<std::size_t>(k)];
        const Enclosure e = total_sum_enclosure(gamma, J);
        double sign = 0.0;
        if (e.hi < 0.0) sign = -1.0;
        else if (e.lo > 0.0) sign = 1.0;
        report.rows[static_cast<std::size_t>(k)] = {gamma, e.lo, e.hi, sign};
    }
    for (const auto& row : report.rows)
        if (row[3] == 0.0) all_conclusive = false;
    report.worst_ratio = all_conclusive ? 0.0 : 2.0;
    report.finalize();
    return report;
}

}  // namespace dhz
