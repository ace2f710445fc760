#include <cmath>

#include "dhz/window_ops.hpp"

namespace dhz {

namespace {

void check_window(long long j_lo, long long j_hi) {
    if (j_hi < j_lo) throw UsageError("window: empty output range");
}

}  // namespace

// Serial reference paths: one textbook per-point evaluation per output index.

std::vector<double> hilbert_window_serial(const Sequence& b, long long j_lo, long long j_hi) {
    check_window(j_lo, j_hi);
    std::vector<double> out(static_cast<std::size_t>(j_hi - j_lo + 1));
    for (long long j = j_lo; j <= j_hi; ++j) out[static_cast<std::size_t>(j - j_lo)] = hilbert_apply(b, j);
    return out;
}

std::vector<double> riesz_window_serial(const Sequence& b, double gamma, long long j_lo, long long j_hi) {
    check_window(j_lo, j_hi);
    std::vector<double> out(static_cast<std::size_t>(j_hi - j_lo + 1));
    for (long long j = j_lo; j <= j_hi; ++j)
        out[static_cast<std::size_t>(j - j_lo)] = riesz_apply(b, gamma, j);
    return out;
}

std::vector<double> fractional_window_serial(const Sequence& b, const OperatorParams& params,
                                             long long j_lo, long long j_hi) {
    check_window(j_lo, j_hi);
    std::vector<double> out(static_cast<std::size_t>(j_hi - j_lo + 1));
    for (long long j = j_lo; j <= j_hi; ++j)
        out[static_cast<std::size_t>(j - j_lo)] = fractional_apply(b, params, j);
    return out;
}

std::vector<double> maximal_window_serial(const Sequence& b, long long j_lo, long long j_hi) {
    check_window(j_lo, j_hi);
    const MaximalEvaluator eval(b);
    std::vector<double> out(static_cast<std::size_t>(j_hi - j_lo + 1));
    for (long long j = j_lo; j <= j_hi; ++j) out[static_cast<std::size_t>(j - j_lo)] = eval.at(j);
    return out;
}

}  // namespace dhz
