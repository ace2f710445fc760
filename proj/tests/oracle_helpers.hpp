#pragma once

// Test-only oracles, kept independent of the library paths they check.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dhz/operators.hpp"
#include "dhz/rng.hpp"
#include "dhz/sequence.hpp"
#include "dhz/summation.hpp"

namespace oracle {

// exact symbolic first derivatives of K(x,y) = |x-y|^-a |x+y|^-b
inline double kernel_dx(double a, double b, double x, double y) {
    const double u = std::abs(x - y);
    const double v = std::abs(x + y);
    const double k = std::pow(u, -a) * std::pow(v, -b);
    const double su = x - y > 0 ? 1.0 : -1.0;
    const double sv = x + y > 0 ? 1.0 : -1.0;
    return k * (-a * su / u - b * sv / v);
}

inline double kernel_dy(double a, double b, double x, double y) {
    const double u = std::abs(x - y);
    const double v = std::abs(x + y);
    const double k = std::pow(u, -a) * std::pow(v, -b);
    const double su = x - y > 0 ? 1.0 : -1.0;
    const double sv = x + y > 0 ? 1.0 : -1.0;
    return k * (a * su / u - b * sv / v);
}

// central finite differences in x (orders 1..3)
template <typename F>
double central_difference(F&& f, double x, double h, int order) {
    switch (order) {
        case 1: return (f(x + h) - f(x - h)) / (2.0 * h);
        case 2: return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        default:
            return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) /
                   (2.0 * h * h * h);
    }
}

// brute-force centered maximal value: scan every radius up to the limit
inline double maximal_brute(const dhz::Sequence& b, long long j, long long n_max) {
    double best = 0.0;
    for (long long n = 0; n <= n_max; ++n) {
        double s = 0.0;
        for (long long i = j - n; i <= j + n; ++i) s += std::abs(b.at(i));
        best = std::max(best, s / static_cast<double>(2 * n + 1));
    }
    return best;
}

// sum_{J < |j| <= limit} |(T b)(j)|^q by direct evaluation, long double
// accumulation, parallel over fixed chunks combined in order
inline long double image_tail_brute(const dhz::Sequence& b, const dhz::OperatorParams& params, long long J,
                             long long limit, double q) {
    constexpr long long kChunk = 1 << 18;
    const long long n_chunks = (limit - J - 1) / kChunk + 1;
    std::vector<long double> partial(static_cast<std::size_t>(n_chunks), 0.0L);
    const bool symmetric = params.alpha == params.beta;
    const bool half = symmetric && params.alpha == 0.5;
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < n_chunks; ++c) {
        const long long lo = J + 1 + c * kChunk;
        const long long hi = std::min(limit, lo + kChunk - 1);
        dhz::CompensatedSum<long double> acc;
        for (long long j = lo; j <= hi; ++j) {
            for (long long sign : {1ll, -1ll}) {
                const long long jj = sign * j;
                long double s = 0.0L;
                for (long long i = b.first(); i <= b.last(); ++i) {
                    if (i == jj || i == -jj) continue;
                    const double x = b.at(i);
                    if (x == 0.0) continue;
                    const long double u = static_cast<long double>(std::llabs(i - jj));
                    const long double v = static_cast<long double>(std::llabs(i + jj));
                    long double kernel;
                    if (half) {
                        kernel = 1.0L / sqrtl(u * v);
                    } else if (symmetric) {
                        kernel = powl(u * v, -static_cast<long double>(params.alpha));
                    } else {
                        kernel = powl(u, -static_cast<long double>(params.alpha)) *
                                 powl(v, -static_cast<long double>(params.beta));
                    }
                    s += static_cast<long double>(x) * kernel;
                }
                acc.add(q == 1.0 ? fabsl(s) : powl(fabsl(s), static_cast<long double>(q)));
            }
        }
        partial[static_cast<std::size_t>(c)] = acc.value();
    }
    long double total = 0.0L;
    for (long double x : partial) total += x;
    return total;
}

// sum_{J < |j| <= limit} |(Hb)(j)|^p, same scheme
inline long double hilbert_tail_brute(const dhz::Sequence& b, long long J, long long limit, double p) {
    constexpr long double kPi = 3.14159265358979323846L;
    constexpr long long kChunk = 1 << 18;
    const long long n_chunks = (limit - J - 1) / kChunk + 1;
    std::vector<long double> partial(static_cast<std::size_t>(n_chunks), 0.0L);
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < n_chunks; ++c) {
        const long long lo = J + 1 + c * kChunk;
        const long long hi = std::min(limit, lo + kChunk - 1);
        dhz::CompensatedSum<long double> acc;
        for (long long j = lo; j <= hi; ++j) {
            for (long long sign : {1ll, -1ll}) {
                const long long jj = sign * j;
                long double s = 0.0L;
                for (long long i = b.first(); i <= b.last(); ++i) {
                    const double x = b.at(i);
                    if (x == 0.0) continue;
                    s += static_cast<long double>(x) /
                         (static_cast<long double>(jj + i) + 0.5L);
                }
                s /= kPi;
                acc.add(p == 1.0 ? fabsl(s) : powl(fabsl(s), static_cast<long double>(p)));
            }
        }
        partial[static_cast<std::size_t>(c)] = acc.value();
    }
    long double total = 0.0L;
    for (long double x : partial) total += x;
    return total;
}

// Extended-precision bracket of  sum_{j >= 2} [ (j^2-1)^{-s} - j^{-2s} ]  at
// gamma = 0 (s = 1/2): partial sum to `limit` plus elementary tail brackets
//   0.5 (j^2)^{-3/2} <= term_j <= 0.5 (j^2-1)^{-3/2}.
struct SeriesBracket {
    long double lo;
    long double hi;
};

inline SeriesBracket gamma0_series_bracket(long long limit) {
    constexpr long long kChunk = 1 << 20;
    const long long n_chunks = (limit - 2) / kChunk + 1;
    std::vector<long double> partial(static_cast<std::size_t>(n_chunks), 0.0L);
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < n_chunks; ++c) {
        const long long lo = 2 + c * kChunk;
        const long long hi = std::min(limit, lo + kChunk - 1);
        dhz::CompensatedSum<long double> acc;
        for (long long j = lo; j <= hi; ++j) {
            const long double jsq = static_cast<long double>(j) * static_cast<long double>(j);
            acc.add(1.0L / sqrtl(jsq - 1.0L) - 1.0L / static_cast<long double>(j));
        }
        partial[static_cast<std::size_t>(c)] = acc.value();
    }
    long double sum = 0.0L;
    for (long double x : partial) sum += x;
    // integral comparison on the monotone majorant/minorant
    const long double l = static_cast<long double>(limit);
    const long double tail_lo = 0.25L / ((l + 1.0L) * (l + 1.0L));
    const long double tail_hi = 0.5L * powl(l * l - 1.0L, -1.5L) + 0.25L / (l * l - 1.0L);
    return {sum + tail_lo, sum + tail_hi};
}

// Both brute tails in one pass over j, double precision with compensation.
// The factor-two-plus margins of the certified bounds make double accuracy
// ample for containment checks, and one pass keeps the 10^7-term sweeps
// affordable.
struct TailPair {
    double image;
    double hilbert;
};

inline TailPair combined_tail_brute(const dhz::Sequence& b, const dhz::OperatorParams& params,
                                    long long J, long long limit, double q, double p) {
    constexpr long long kChunk = 1 << 18;
    const long long n_chunks = (limit - J - 1) / kChunk + 1;
    std::vector<double> part_i(static_cast<std::size_t>(n_chunks), 0.0);
    std::vector<double> part_h(static_cast<std::size_t>(n_chunks), 0.0);
    const long long i_lo = b.first(), i_hi = b.last();
    const std::size_t nsup = static_cast<std::size_t>(i_hi - i_lo + 1);
    std::vector<double> vals(nsup), isq(nsup), ioff(nsup);
    for (std::size_t k = 0; k < nsup; ++k) {
        const long long i = i_lo + static_cast<long long>(k);
        vals[k] = b.at(i);
        isq[k] = static_cast<double>(i) * static_cast<double>(i);
        ioff[k] = static_cast<double>(i) + 0.5;
    }
    if (params.alpha != params.beta)
        throw std::invalid_argument("combined_tail_brute: symmetric kernels only");
    const bool half = params.alpha == 0.5 && params.beta == 0.5;
    const double inv_pi = 1.0 / 3.141592653589793;
#pragma omp parallel for schedule(dynamic)
    for (long long c = 0; c < n_chunks; ++c) {
        const long long lo = J + 1 + c * kChunk;
        const long long hi = std::min(limit, lo + kChunk - 1);
        dhz::CompensatedSum<double> acc_i, acc_h;
        for (long long j = lo; j <= hi; ++j) {
            for (long long sign : {1ll, -1ll}) {
                const long long jj = sign * j;
                const double jsq = static_cast<double>(jj) * static_cast<double>(jj);
                const double jd = static_cast<double>(jj);
                double s = 0.0, sh = 0.0;
                for (std::size_t k = 0; k < nsup; ++k) {
                    if (vals[k] == 0.0) continue;
                    const double prod = std::abs(jsq - isq[k]);
                    const double kernel = half ? 1.0 / std::sqrt(prod)
                                               : std::pow(prod, -params.alpha);
                    s += vals[k] * kernel;
                    sh += vals[k] / (jd + ioff[k]);
                }
                acc_i.add(q == 1.0 ? std::abs(s) : std::pow(std::abs(s), q));
                const double hv = std::abs(sh) * inv_pi;
                acc_h.add(p == 1.0 ? hv : std::pow(hv, p));
            }
        }
        part_i[static_cast<std::size_t>(c)] = acc_i.value();
        part_h[static_cast<std::size_t>(c)] = acc_h.value();
    }
    double ti = 0.0, th = 0.0;
    for (long long c = 0; c < n_chunks; ++c) {
        ti += part_i[static_cast<std::size_t>(c)];
        th += part_h[static_cast<std::size_t>(c)];
    }
    return {ti, th};
}

inline dhz::Sequence random_sequence(dhz::Rng& rng, long long lo_min, long long hi_max,
                                     long long max_extent, bool nonnegative = false) {
    const long long extent = rng.uniform_int(1, max_extent);
    const long long lo = rng.uniform_int(lo_min, hi_max - extent + 1);
    std::vector<double> v(static_cast<std::size_t>(extent));
    bool any = false;
    for (double& x : v) {
        x = nonnegative ? rng.uniform01() : rng.uniform(-1.0, 1.0);
        any = any || x != 0.0;
    }
    if (!any) v[0] = 0.5;
    return dhz::Sequence(lo, std::move(v));
}

}  // namespace oracle
