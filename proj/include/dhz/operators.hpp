#pragma once

#include "dhz/enclosure.hpp"
#include "dhz/sequence.hpp"

namespace dhz {

// Parameters of the two-singularity kernel |i-j|^-alpha |i+j|^-beta with
// alpha, beta > 0 and alpha + beta = 1 - gamma, 0 <= gamma < 1.
struct OperatorParams {
    double gamma;
    double alpha;
    double beta;

    OperatorParams(double gamma, double alpha, double beta);
    static OperatorParams symmetric(double gamma);  // alpha = beta = (1 - gamma)/2
};

// Data for Taylor-remainder tail estimates of operator images of a sequence
// supported in [center - half_width, center + half_width] whose moments
// 0 .. taylor_order-1 vanish.
struct TaylorTailSpec {
    int taylor_order;       // N >= 1; equals 1 + (highest vanishing moment)
    long long center;       // n0
    long long half_width;   // m >= 1
    double l1_mass;         // ||b||_1

    TaylorTailSpec(int taylor_order, long long center, long long half_width, double l1_mass);
    static TaylorTailSpec for_sequence(const Sequence& b, int taylor_order);
};

// (Hb)(j) = (1/pi) sum_i b(i) / (j + i + 1/2); exact finite sum, the
// denominator never vanishes at integer arguments.
double hilbert_apply(const Sequence& b, long long j);

// (I_gamma b)(j) = sum_{i != j} b(i) |i-j|^{gamma-1}, 0 < gamma < 1.
double riesz_apply(const Sequence& b, double gamma, long long j);

// (T b)(j) = sum_{i != +-j} b(i) |i-j|^-alpha |i+j|^-beta.
double fractional_apply(const Sequence& b, const OperatorParams& params, long long j);

// K(x, y) = |x-y|^-alpha |x+y|^-beta; throws on x = +-y.
double kernel_eval(const OperatorParams& params, double x, double y);

// Certified upper bound for |d^N/dx^N K| + |d^N/dy^N K| at (x, y):
//   2 (alpha+beta)_N K(x,y) (|x-y|^-1 + |x+y|^-1)^N,
// where (.)_N is the rising factorial.  Leibniz on the two factors gives
// sum_k C(N,k) (alpha)_k (beta)_{N-k} u^-k v^-(N-k) per derivative, and each
// coefficient is at most (alpha+beta)_N by the Vandermonde identity
// sum_k C(N,k) (alpha)_k (beta)_{N-k} = (alpha+beta)_N with all terms >= 0.
double kernel_derivative_bound(const OperatorParams& params, int n, double x, double y);

// Enclosure of  sum_{|j| > J} |(T b)(j)|^q  for b as described by `spec`.
// Requires J >= 3*half_width + 3*|center| and q*(1 - gamma + N) > 1.
Enclosure image_tail_bound(const Sequence& b, const OperatorParams& params,
                           const TaylorTailSpec& spec, long long J, double q);

// Enclosure of  sum_{|j| > J} |(Hb)(j)|^p.  Requires (N+1)p > 1 and J large
// enough that |j + center + 1/2| - half_width > 0 for all |j| > J.
Enclosure hilbert_tail_bound(const Sequence& b, const TaylorTailSpec& spec, long long J, double p);

// (x)(x+1)...(x+n-1); empty product is 1.
double rising_factorial(double x, int n);

// Throws unless |moment(b, k)| <= tol for k = 0 .. count-1.
void require_vanishing_moments(const Sequence& b, int count, double tol);

}  // namespace dhz
