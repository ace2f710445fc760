#pragma once

#include <vector>

#include "dhz/enclosure.hpp"
#include "dhz/report.hpp"
#include "dhz/sequence.hpp"

namespace dhz {

// The three-point sequence b(-1) = b(1) = 1, b(0) = -2.  Its moments of
// order 0 and 1 vanish exactly, which drives every certificate below.
Sequence counterexample_sequence();

// Closed form of (U_gamma b)(j) for that b, where U_gamma is the symmetric
// kernel alpha = beta = (1-gamma)/2:  -2 at j = +-1, 2 at j = 0, and
// 2 |j^2-1|^{-(1-gamma)/2} - 2 |j|^{-(1-gamma)} for |j| >= 2.
double u_apply_closed(double gamma, long long j);

// Enclosure of S(gamma) = sum_j (U_gamma b)(j)
//                       = -2 + 4 sum_{j>=2} [ (j^2-1)^{-s} - j^{-2s} ],
// s = (1-gamma)/2: exact partial sum to J plus a one-sided tail interval
// [0, T(J)] from the mean-value estimate term_j <= s (j^2-1)^{-s-1} summed
// by integral comparison.  Requires 10 <= J <= 3*10^7.
Enclosure total_sum_enclosure(double gamma, long long J);

double g_eval(double gamma);  // 3^{-(1-gamma)/2} - 2^{-(1-gamma)}, gamma in [0, 1)
double h_eval(double gamma);  // 1/2 - 8^{-(1-gamma)/2},            gamma in [0, 1/3)

// Bisection enclosure of the root of g - h in (0, 1/3), with certified sign
// checks g - h < 0 at 0 and > 0 at 1/3 first.  g - h is strictly increasing
// there, so the root is unique and this is the supremum of the gammas with
// g < h.
Enclosure epsilon_root(double tolerance);

// Verifies the inequality chain that forces S(gamma) < 0:
//   (i)  sum_{j>=3} term_j <= 8^{-(1-gamma)/2}   (disjoint-interval bound)
//   (ii) sum_{j>=2} term_j <= 8^{-(1-gamma)/2} + g(gamma)
//   (iii) that bound < 1/2
//   (iv) hence S(gamma) < 0.
// Requires gamma below the certified root of g - h.
ExperimentReport chain_check(double gamma);

struct CounterexampleCertificate {
    double gamma;
    double p;
    double q;                      // 1/q = 1/p - gamma
    Enclosure total_sum;           // encloses S(gamma)
    bool b_in_hp;                  // moments 0,1 vanish and 3p > 1
    int first_nonzero_moment;      // the H^p witness, = 2 for this b
    bool conclusion;               // total_sum excludes 0 and b_in_hp
};

// Assembles the unboundedness certificate for U_gamma between the Hardy
// spaces with exponents p and q.  Requires p in (1/2, 1] and q <= 1, i.e.
// p <= 1/(1+gamma).  Throws InconclusiveEnclosure when the sum enclosure
// straddles zero at this J.
CounterexampleCertificate certify_unbounded(double gamma, double p, long long J);

// Sign of S(gamma) across a grid; entries whose enclosure straddles zero are
// flagged inconclusive.  Exploration only: rows are (gamma, lo, hi, sign).
ExperimentReport sign_scan(const std::vector<double>& gamma_grid, long long J);

}  // namespace dhz
