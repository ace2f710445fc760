#pragma once

#include <cstdint>
#include <vector>

#include "dhz/operators.hpp"
#include "dhz/report.hpp"
#include "dhz/sequence.hpp"

namespace dhz {

// Empirical checks of the inequalities behind the operators.  Checks of
// proved inequalities must hold on every sample: a single violation makes
// the report's verdict false and is treated as a build-breaking failure by
// the tests.  Checks whose constants are not pinned down (hlp, weak-type)
// only report the observed constants and assert stability, never a value.

// Random nonnegative sequences on {1..max_support}:
//   sum_ij b(i) b(j) / (i+j)  <=  2 pi sum b(i)^2.
ExperimentReport hilbert_inequality_check(long long trials, long long max_support,
                                          std::uint64_t seed);

// |sum_{i != j} |i-j|^(-lambda) b(i) c(j)| <= C ||b||_p ||c||_q with
// lambda = 2 - 1/p - 1/q in (0, 1).  Reports the empirical constant per
// support size and asserts it stays within a factor 2 across sizes.
ExperimentReport hlp_inequality_check(double p, double q, long long trials, std::uint64_t seed);

// c = Hb on [-J, J], then Hc compared against b on supp(b).  The error is
// bounded by the l2 mass of Hb beyond J: H is a self-adjoint involution on
// l2, so its operator norm there is exactly 1.
ExperimentReport involution_check(const Sequence& b, long long J);

// Level-set counts of the centered maximal sequence:
//   C_emp(alpha) = alpha * #{ j : (Mb)(j) > alpha } / ||b||_1.
// The window is widened automatically until it provably contains every
// level set (Mb(j) <= ||b||_1 / (2 dist(j, supp b) + 1)).
ExperimentReport weak_type_check(const Sequence& b, const std::vector<double>& alphas,
                                 long long window_lo, long long window_hi);

// gamma = 0 three-region split at j0: verifies
//   sum_{I1} <= 2^(2+alpha)/(1 - 2^-(1-alpha)) (M|b|)(j0)
//   sum_{I2} <= 2^(2+beta) /(1 - 2^-(1-beta))  (M|b|)(-j0)
//   sum_{I3} <= 2 ||b||_p (2 sum_{i>2|j0|} i^-p')^(1/p')
// with fully explicit right-hand sides.
ExperimentReport pointwise_domination_check(const Sequence& b, long long j0,
                                            const OperatorParams& params, double p);

// Random (p, inf, d_p)-atoms at each half-width m, random centers in
// [-4m, 4m]; computes ||T a||_q from the window sum plus the certified tail
// and asserts the per-m suprema do not grow: sup at the largest m must stay
// within twice the sup at the smallest.
ExperimentReport atom_image_sweep(double p, double gamma, const std::vector<long long>& m_values,
                                  long long trials_per_m, std::uint64_t seed);

// The two standard unboundedness examples: the delta sequence, whose image
// is |j|^(gamma-1) and fails to be q-summable for q <= 1/(1-gamma); and for
// gamma > 0 the sequence |i|^-gamma / log|i| truncated to [-B, B], whose
// image at 0 grows without bound in B.
ExperimentReport unbounded_examples_demo(double gamma, const std::vector<long long>& J_list);

}  // namespace dhz
