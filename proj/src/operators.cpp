#include "dhz/operators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dhz/summation.hpp"

namespace dhz {

namespace {
constexpr double kMomentTol = 1e-10;
}

OperatorParams::OperatorParams(double gamma_, double alpha_, double beta_)
    : gamma(gamma_), alpha(alpha_), beta(beta_) {
    if (!(gamma >= 0.0 && gamma < 1.0)) throw UsageError("OperatorParams: gamma must lie in [0, 1)");
    if (!(alpha > 0.0) || !(beta > 0.0)) throw UsageError("OperatorParams: alpha and beta must be positive");
    if (std::abs(alpha + beta - (1.0 - gamma)) > 1e-12)
        throw UsageError("OperatorParams: alpha + beta must equal 1 - gamma");
}

OperatorParams OperatorParams::symmetric(double gamma) {
    const double half = (1.0 - gamma) / 2.0;
    return OperatorParams(gamma, half, half);
}

TaylorTailSpec::TaylorTailSpec(int taylor_order_, long long center_, long long half_width_, double l1_mass_)
    : taylor_order(taylor_order_), center(center_), half_width(half_width_), l1_mass(l1_mass_) {
    if (taylor_order < 1) throw UsageError("TaylorTailSpec: taylor_order must be >= 1");
    if (half_width < 1) throw UsageError("TaylorTailSpec: half_width must be >= 1");
    if (!(l1_mass >= 0.0)) throw UsageError("TaylorTailSpec: l1_mass must be nonnegative");
}

TaylorTailSpec TaylorTailSpec::for_sequence(const Sequence& b, int taylor_order) {
    if (b.is_zero()) return TaylorTailSpec(taylor_order, 0, 1, 0.0);
    const long long lo = b.first();
    const long long hi = b.last();
    const long long center = lo + (hi - lo) / 2;
    const long long m = std::max<long long>(1, std::max(center - lo, hi - center));
    return TaylorTailSpec(taylor_order, center, m, lp_norm(b, 1.0));
}

double hilbert_apply(const Sequence& b, long long j) {
    if (b.is_zero()) return 0.0;
    CompensatedSum<double> s;
    for (long long i = b.first(); i <= b.last(); ++i) {
        const double x = b.at(i);
        if (x == 0.0) continue;
        s.add(x / (static_cast<double>(j + i) + 0.5));
    }
    return s.value() / std::numbers::pi;
}

double riesz_apply(const Sequence& b, double gamma, long long j) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw UsageError("riesz_apply: gamma must lie in (0, 1)");
    if (b.is_zero()) return 0.0;
    CompensatedSum<double> s;
    for (long long i = b.first(); i <= b.last(); ++i) {
        if (i == j) continue;
        const double x = b.at(i);
        if (x == 0.0) continue;
        s.add(x * std::pow(static_cast<double>(std::llabs(i - j)), gamma - 1.0));
    }
    return s.value();
}

double fractional_apply(const Sequence& b, const OperatorParams& params, long long j) {
    if (b.is_zero()) return 0.0;
    CompensatedSum<double> s;
    for (long long i = b.first(); i <= b.last(); ++i) {
        if (i == j || i == -j) continue;
        const double x = b.at(i);
        if (x == 0.0) continue;
        const double u = static_cast<double>(std::llabs(i - j));
        const double v = static_cast<double>(std::llabs(i + j));
        s.add(x * std::pow(u, -params.alpha) * std::pow(v, -params.beta));
    }
    return s.value();
}

double kernel_eval(const OperatorParams& params, double x, double y) {
    const double u = std::abs(x - y);
    const double v = std::abs(x + y);
    if (u == 0.0 || v == 0.0) throw UsageError("kernel_eval: singular input x = +-y");
    return std::pow(u, -params.alpha) * std::pow(v, -params.beta);
}

double rising_factorial(double x, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= x + static_cast<double>(k);
    return r;
}

double kernel_derivative_bound(const OperatorParams& params, int n, double x, double y) {
    if (n < 1) throw UsageError("kernel_derivative_bound: derivative order must be >= 1");
    const double u = std::abs(x - y);
    const double v = std::abs(x + y);
    if (u == 0.0 || v == 0.0) throw UsageError("kernel_derivative_bound: singular input x = +-y");
    const double c = 2.0 * rising_factorial(params.alpha + params.beta, n);
    return c * kernel_eval(params, x, y) * std::pow(1.0 / u + 1.0 / v, n);
}

void require_vanishing_moments(const Sequence& b, int count, double tol) {
    for (int k = 0; k < count; ++k) {
        const double mk = moment(b, k);
        if (std::abs(mk) > tol)
            throw UsageError("moment " + std::to_string(k) + " does not vanish (|" +
                             std::to_string(mk) + "| > tol)");
    }
}

namespace {

// Upper bound for sum_{j >= start} (j + shift)^(-r) with r > 1 and
// start + shift > 0: first term plus the comparison integral, since the
// summand is decreasing.
Enclosure decreasing_power_tail(double start, Enclosure shift, Enclosure r) {
    const Enclosure base = exact(start) + shift;
    if (!(base.lo > 0.0)) throw UsageError("power tail: nonpositive base");
    const Enclosure first = pow_pos(base, -r);
    const Enclosure integral = pow_pos(base, exact(1.0) - r) / (r - exact(1.0));
    const Enclosure total = first + integral;
    return {0.0, total.hi};
}

}  // namespace

Enclosure image_tail_bound(const Sequence& b, const OperatorParams& params,
                           const TaylorTailSpec& spec, long long J, double q) {
    if (!(q > 0.0)) throw UsageError("image_tail_bound: q must be positive");
    if (J < 1) throw UsageError("image_tail_bound: J must be positive");
    const int n_order = spec.taylor_order;
    const long long n0 = spec.center;
    const long long m = spec.half_width;
    if (!b.is_zero()) {
        if (b.first() < n0 - m || b.last() > n0 + m)
            throw UsageError("image_tail_bound: sequence support exceeds the stated window");
        require_vanishing_moments(b, n_order, kMomentTol);
    }
    if (J < 3 * m + 3 * std::llabs(n0))
        throw UsageError("image_tail_bound: J must be at least 3*half_width + 3*|center|");
    const double r_val = q * (1.0 - params.gamma + n_order);
    if (!(r_val > 1.0))
        throw UsageError("image_tail_bound: q*(1 - gamma + N) <= 1, tail not summable by this estimate");
    if (b.is_zero()) return {0.0, 0.0};

    // Pointwise certified bound for |j| > J:
    //   |(T b)(j)| <= (alpha+beta)_N / N! * ||b||_1 * m^N
    //                 * D-^-alpha D+^-beta (D-^-1 + D+^-1)^N,
    // with D-+ = |j -+ n0| - m > 0.  This is the Lagrange remainder of the
    // degree N-1 Taylor polynomial of K(., j) at n0 combined with the
    // kernel derivative bound, evaluated at the worst point of the support
    // window.  Both distances are at least |j| - c with c = |n0| + m, so
    //   |(T b)(j)| <= C0 * 2^N * (|j| - c)^-(1 - gamma + N).
    // n_order multiplications went into the rising factorial; widen to match.
    Enclosure c0 = widened(exact(rising_factorial(params.alpha + params.beta, n_order)), n_order + 1);
    for (int k = 2; k <= n_order; ++k) c0 = c0 / exact(static_cast<double>(k));
    c0 = c0 * exact(spec.l1_mass);
    c0 = c0 * pow_pos(exact(static_cast<double>(m)), exact(static_cast<double>(n_order)));
    c0 = c0 * pow_pos(exact(2.0), exact(static_cast<double>(n_order)));

    const Enclosure r =
        exact(q) * ((exact(1.0) - exact(params.gamma)) + exact(static_cast<double>(n_order)));
    const double c_shift = -static_cast<double>(std::llabs(n0) + m);
    const Enclosure lattice = decreasing_power_tail(static_cast<double>(J + 1), exact(c_shift), r);

    Enclosure amplitude = c0;
    if (q != 1.0) amplitude = pow_pos(c0, exact(q));
    const Enclosure total = exact(2.0) * amplitude * lattice;
    return {0.0, total.hi};
}

Enclosure hilbert_tail_bound(const Sequence& b, const TaylorTailSpec& spec, long long J, double p) {
    if (!(p > 0.0)) throw UsageError("hilbert_tail_bound: p must be positive");
    if (J < 1) throw UsageError("hilbert_tail_bound: J must be positive");
    const int n_order = spec.taylor_order;
    const long long n0 = spec.center;
    const long long m = spec.half_width;
    if (!b.is_zero()) {
        if (b.first() < n0 - m || b.last() > n0 + m)
            throw UsageError("hilbert_tail_bound: sequence support exceeds the stated window");
        require_vanishing_moments(b, n_order, kMomentTol);
    }
    const double r_val = (n_order + 1) * p;
    if (!(r_val > 1.0)) throw UsageError("hilbert_tail_bound: (N+1)p <= 1, tail not summable");
    if (J < std::llabs(n0) + m)
        throw UsageError("hilbert_tail_bound: J too small for the kernel distance to stay positive");
    if (b.is_zero()) return {0.0, 0.0};

    // Pointwise: |(Hb)(j)| <= (1/pi) ||b||_1 m^N / (|j + n0 + 1/2| - m)^(N+1);
    // the N-th derivative of x -> 1/(j + x + 1/2) is exactly
    // (-1)^N N! (j + x + 1/2)^-(N+1), so the Lagrange constant is sharp.
    Enclosure amp = exact(spec.l1_mass) *
                    pow_pos(exact(static_cast<double>(m)), exact(static_cast<double>(n_order)));
    amp = amp / widened(exact(std::numbers::pi), 1);
    if (p != 1.0) amp = pow_pos(amp, exact(p));

    const Enclosure r = exact(p) * exact(static_cast<double>(n_order + 1));
    // positive side: distance = j + (n0 + 1/2 - m); negative side j = -t:
    // distance = t - (n0 + 1/2 + m).
    const Enclosure shift_pos = exact(static_cast<double>(n0)) + exact(0.5) - exact(static_cast<double>(m));
    const Enclosure shift_neg = -(exact(static_cast<double>(n0)) + exact(0.5) + exact(static_cast<double>(m)));
    const Enclosure side_pos = decreasing_power_tail(static_cast<double>(J + 1), shift_pos, r);
    const Enclosure side_neg = decreasing_power_tail(static_cast<double>(J + 1), shift_neg, r);
    const Enclosure total = amp * (side_pos + side_neg);
    return {0.0, total.hi};
}

}  // namespace dhz
