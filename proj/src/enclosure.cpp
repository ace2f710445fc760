#include "dhz/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dhz {

namespace {
constexpr int kPowUlps = 4;  // margin for std::pow / transcendental libm calls
}

double step_down(double x, int ulps) {
    for (int k = 0; k < ulps; ++k) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    return x;
}

double step_up(double x, int ulps) {
    for (int k = 0; k < ulps; ++k) x = std::nextafter(x, std::numeric_limits<double>::infinity());
    return x;
}

Enclosure exact(double x) { return {x, x}; }

Enclosure hull(double a, double b) { return {std::min(a, b), std::max(a, b)}; }

Enclosure widened(Enclosure x, int ulps) { return {step_down(x.lo, ulps), step_up(x.hi, ulps)}; }

Enclosure operator+(Enclosure a, Enclosure b) {
    return {step_down(a.lo + b.lo, 1), step_up(a.hi + b.hi, 1)};
}

Enclosure operator-(Enclosure a, Enclosure b) {
    return {step_down(a.lo - b.hi, 1), step_up(a.hi - b.lo, 1)};
}

Enclosure operator-(Enclosure a) { return {-a.hi, -a.lo}; }

Enclosure operator*(Enclosure a, Enclosure b) {
    const double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    const double lo = std::min(std::min(c[0], c[1]), std::min(c[2], c[3]));
    const double hi = std::max(std::max(c[0], c[1]), std::max(c[2], c[3]));
    return {step_down(lo, 1), step_up(hi, 1)};
}

Enclosure operator/(Enclosure a, Enclosure b) {
    if (b.lo <= 0.0 && b.hi >= 0.0) throw UsageError("enclosure division by interval containing zero");
    const double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    const double lo = std::min(std::min(c[0], c[1]), std::min(c[2], c[3]));
    const double hi = std::max(std::max(c[0], c[1]), std::max(c[2], c[3]));
    return {step_down(lo, 1), step_up(hi, 1)};
}

Enclosure sqrt_enclosure(Enclosure x) {
    if (x.lo < 0.0) throw UsageError("sqrt_enclosure of interval with negative lower end");
    return {step_down(std::sqrt(x.lo), 1), step_up(std::sqrt(x.hi), 1)};
}

Enclosure pow_pos(Enclosure base, Enclosure exponent) {
    if (base.lo <= 0.0) throw UsageError("pow_pos requires a strictly positive base interval");
    const double c[4] = {std::pow(base.lo, exponent.lo), std::pow(base.lo, exponent.hi),
                         std::pow(base.hi, exponent.lo), std::pow(base.hi, exponent.hi)};
    // x^e = exp(e log x) is monotone in each argument separately, so the
    // extrema over a box sit at its corners.
    const double lo = std::min(std::min(c[0], c[1]), std::min(c[2], c[3]));
    const double hi = std::max(std::max(c[0], c[1]), std::max(c[2], c[3]));
    return {std::max(0.0, step_down(lo, kPowUlps)), step_up(hi, kPowUlps)};
}

Enclosure abs_enclosure(Enclosure x) {
    if (x.lo >= 0.0) return x;
    if (x.hi <= 0.0) return {-x.hi, -x.lo};
    return {0.0, std::max(-x.lo, x.hi)};
}

Enclosure abs_pow(Enclosure x, double p) {
    if (!(p > 0.0)) throw UsageError("abs_pow requires p > 0");
    const Enclosure a = abs_enclosure(x);
    if (p == 1.0) return a;
    const double lo = a.lo > 0.0 ? step_down(std::pow(a.lo, p), kPowUlps) : 0.0;
    const double hi = a.hi > 0.0 ? step_up(std::pow(a.hi, p), kPowUlps) : 0.0;
    return {std::max(0.0, lo), hi};
}

}  // namespace dhz
