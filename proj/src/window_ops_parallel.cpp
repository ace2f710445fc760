#include <cmath>

#include "dhz/window_ops.hpp"

namespace dhz {

std::vector<double> hilbert_window_serial(const Sequence&, long long, long long);
std::vector<double> riesz_window_serial(const Sequence&, double, long long, long long);
std::vector<double> fractional_window_serial(const Sequence&, const OperatorParams&, long long, long long);
std::vector<double> maximal_window_serial(const Sequence&, long long, long long);

namespace detail {

std::vector<double> power_taps(long long d_max, double exponent) {
    std::vector<double> taps(static_cast<std::size_t>(d_max) + 1);
    taps[0] = 0.0;
#pragma omp parallel for schedule(static)
    for (long long d = 1; d <= d_max; ++d)
        taps[static_cast<std::size_t>(d)] = std::pow(static_cast<double>(d), exponent);
    return taps;
}

std::vector<double> hilbert_taps(long long s_min, long long s_max) {
    std::vector<double> taps(static_cast<std::size_t>(s_max - s_min + 1));
#pragma omp parallel for schedule(static)
    for (long long s = s_min; s <= s_max; ++s)
        taps[static_cast<std::size_t>(s - s_min)] = 1.0 / (static_cast<double>(s) + 0.5);
    return taps;
}

}  // namespace detail

namespace {

constexpr double kInvPi = 0.3183098861837906715;  // 1/pi, shortest round-trip

struct SupportView {
    const double* v;
    long long i_lo;
    long long i_hi;
};

SupportView view(const Sequence& b) { return {b.values().data(), b.first(), b.last()}; }

}  // namespace

std::vector<double> hilbert_window(const Sequence& b, long long j_lo, long long j_hi, Exec exec) {
    if (exec == Exec::serial) return hilbert_window_serial(b, j_lo, j_hi);
    if (j_hi < j_lo) throw UsageError("window: empty output range");
    std::vector<double> out(static_cast<std::size_t>(j_hi - j_lo + 1), 0.0);
    if (b.is_zero()) return out;
    const SupportView s = view(b);
    const auto taps = detail::hilbert_taps(j_lo + s.i_lo, j_hi + s.i_hi);
    const long long tap_base = j_lo + s.i_lo;
#pragma omp parallel for schedule(static)
    for (long long j = j_lo; j <= j_hi; ++j) {
        double acc = 0.0;
        const double* tap = taps.data() + (j - tap_base);
        for (long long i = s.i_lo; i <= s.i_hi; ++i) acc += s.v[i - s.i_lo] * tap[i];
        out[static_cast<std::size_t>(j - j_lo)] = acc * kInvPi;
    }
    return out;
}

std::vector<double> riesz_window(const Sequence& b, double gamma, long long j_lo, long long j_hi,
                                 Exec exec) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw UsageError("riesz_window: gamma must lie in (0, 1)");
    if (exec == Exec::serial) return riesz_window_serial(b, gamma, j_lo, j_hi);
    if (j_hi < j_lo) throw UsageError("window: empty output range");
    std::vector<double> out(static_cast<std::size_t>(j_hi - j_lo + 1), 0.0);
    if (b.is_zero()) return out;
    const SupportView s = view(b);
    const long long d_max =
        std::max(std::llabs(j_hi - s.i_lo), std::llabs(s.i_hi - j_lo));
    const auto taps = detail::power_taps(d_max, gamma - 1.0);
#pragma omp parallel for schedule(static)
    for (long long j = j_lo; j <= j_hi; ++j) {
        double acc = 0.0;
        for (long long i = s.i_lo; i <= s.i_hi; ++i)
            acc += s.v[i - s.i_lo] * taps[static_cast<std::size_t>(std::llabs(i - j))];
        out[static_cast<std::size_t>(j - j_lo)] = acc;
    }
    return out;
}

std::vector<double> fractional_window(const Sequence& b, const OperatorParams& params, long long j_lo,
                                      long long j_hi, Exec exec) {
    if (exec == Exec::serial) return fractional_window_serial(b, params, j_lo, j_hi);
    if (j_hi < j_lo) throw UsageError("window: empty output range");
    std::vector<double> out(static_cast<std::size_t>(j_hi - j_lo + 1), 0.0);
    if (b.is_zero()) return out;
    const SupportView s = view(b);
    const long long abs_j = std::max(std::llabs(j_lo), std::llabs(j_hi));
    const long long abs_i = std::max(std::llabs(s.i_lo), std::llabs(s.i_hi));
    const long long d_max = abs_j + abs_i;
    const auto taps_a = detail::power_taps(d_max, -params.alpha);
    const auto taps_b =
        params.alpha == params.beta ? taps_a : detail::power_taps(d_max, -params.beta);
#pragma omp parallel for schedule(static)
    for (long long j = j_lo; j <= j_hi; ++j) {
        double acc = 0.0;
        // taps[0] = 0 removes both excluded indices i = j and i = -j.
        for (long long i = s.i_lo; i <= s.i_hi; ++i)
            acc += s.v[i - s.i_lo] * taps_a[static_cast<std::size_t>(std::llabs(i - j))] *
                   taps_b[static_cast<std::size_t>(std::llabs(i + j))];
        out[static_cast<std::size_t>(j - j_lo)] = acc;
    }
    return out;
}

std::vector<double> maximal_window(const Sequence& b, long long j_lo, long long j_hi, Exec exec) {
    if (exec == Exec::serial) return maximal_window_serial(b, j_lo, j_hi);
    if (j_hi < j_lo) throw UsageError("window: empty output range");
    std::vector<double> out(static_cast<std::size_t>(j_hi - j_lo + 1), 0.0);
    if (b.is_zero()) return out;
    const MaximalEvaluator eval(b);
#pragma omp parallel for schedule(static)
    for (long long j = j_lo; j <= j_hi; ++j) out[static_cast<std::size_t>(j - j_lo)] = eval.at(j);
    return out;
}

}  // namespace dhz
