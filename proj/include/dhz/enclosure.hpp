#pragma once

#include <stdexcept>

namespace dhz {

// Thrown on violated preconditions; the CLI maps it to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an interval answer straddles the decision boundary and the
// caller has to retry with a larger truncation point; CLI exit code 3.
struct InconclusiveEnclosure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed interval [lo, hi] certified to contain an exact real quantity.
//
// All arithmetic on enclosures rounds outward.  IEEE +, -, *, / and sqrt are
// correctly rounded, so one ulp of widening per endpoint suffices for them;
// std::pow is only accurate to a few ulp (glibc documents <= 2), so results
// that pass through pow are widened by four ulp.  Containment is preserved
// by every operation in this header.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
    bool excludes_zero() const { return hi < 0.0 || lo > 0.0; }
};

double step_down(double x, int ulps);
double step_up(double x, int ulps);

Enclosure exact(double x);
Enclosure hull(double a, double b);
Enclosure widened(Enclosure x, int ulps);

Enclosure operator+(Enclosure a, Enclosure b);
Enclosure operator-(Enclosure a, Enclosure b);
Enclosure operator-(Enclosure a);
Enclosure operator*(Enclosure a, Enclosure b);
Enclosure operator/(Enclosure a, Enclosure b);  // b must exclude zero

Enclosure sqrt_enclosure(Enclosure x);                 // requires x.lo >= 0
Enclosure pow_pos(Enclosure base, Enclosure exponent); // requires base.lo > 0
Enclosure abs_enclosure(Enclosure x);
Enclosure abs_pow(Enclosure x, double p);              // encloses |x|^p, p > 0

}  // namespace dhz
