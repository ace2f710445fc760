#pragma once

#include <vector>

#include "dhz/operators.hpp"
#include "dhz/sequence.hpp"

namespace dhz {

// Direct O(window * support) evaluation of the operators over an output
// window [j_lo, j_hi].  The serial path applies the per-point operators one
// output at a time and is the reference the parallel kernels are tested
// against; the parallel path precomputes kernel taps and splits the window
// across OpenMP threads.  Every output element is an independent sum, so
// the parallel results do not depend on the thread count.
enum class Exec { serial, parallel };

std::vector<double> hilbert_window(const Sequence& b, long long j_lo, long long j_hi, Exec exec);
std::vector<double> riesz_window(const Sequence& b, double gamma, long long j_lo, long long j_hi,
                                 Exec exec);
std::vector<double> fractional_window(const Sequence& b, const OperatorParams& params, long long j_lo,
                                      long long j_hi, Exec exec);
std::vector<double> maximal_window(const Sequence& b, long long j_lo, long long j_hi, Exec exec);

namespace detail {

// taps[d] = d^exponent for d >= 1, taps[0] = 0 so that indexing by |i - j|
// silently drops the excluded diagonal terms.
std::vector<double> power_taps(long long d_max, double exponent);

// taps[s - s_min] = 1 / (s + 1/2)
std::vector<double> hilbert_taps(long long s_min, long long s_max);

}  // namespace detail

}  // namespace dhz
