#pragma once

#include <cstddef>
#include <vector>

#include "dhz/report.hpp"
#include "dhz/sequence.hpp"

namespace dhz {

// Geometry of one FFT-backed operator application: which outputs to produce,
// which inputs the plan covers, and the transform length.  The padding
// invariant padded_len >= output extent + input extent rules out circular
// wrap-around in the slice of the convolution that is read back, so the fast
// path computes exact (up to rounding) linear convolutions.
struct WindowPlan {
    long long j_lo, j_hi;  // output window
    long long i_lo, i_hi;  // input support covered by the plan
    std::size_t padded_len;

    WindowPlan(long long j_lo, long long j_hi, long long i_lo, long long i_hi);
    WindowPlan(long long j_lo, long long j_hi, long long i_lo, long long i_hi, std::size_t padded);

    std::size_t output_extent() const { return static_cast<std::size_t>(j_hi - j_lo + 1); }
    std::size_t input_extent() const { return static_cast<std::size_t>(i_hi - i_lo + 1); }
};

// O(L log L) evaluation of the Riesz potential over the plan's window.  The
// kernel depends on i - j only (Toeplitz), with the 0-lag tap set to 0 to
// implement the excluded diagonal.
Sequence riesz_apply_fast(const Sequence& b, double gamma, const WindowPlan& plan);

// Same for the discrete Hilbert transform, whose kernel depends on j + i:
// convolution against the index-reversed input (Hankel structure).
Sequence hilbert_apply_fast(const Sequence& b, const WindowPlan& plan);

// Times the direct path against the fast path on square problems (support
// size = window size = N) and fits log-log scaling exponents.
ExperimentReport throughput_benchmark(const std::vector<std::size_t>& sizes, int repeats);

}  // namespace dhz
