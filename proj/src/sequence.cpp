#include "dhz/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dhz/enclosure.hpp"
#include "dhz/summation.hpp"

namespace dhz {

Sequence::Sequence(long long offset, std::vector<double> values) {
    std::size_t lo = 0;
    std::size_t hi = values.size();
    while (lo < hi && values[lo] == 0.0) ++lo;
    while (hi > lo && values[hi - 1] == 0.0) --hi;
    if (lo == hi) return;  // canonical zero
    offset_ = offset + static_cast<long long>(lo);
    values_.assign(values.begin() + static_cast<std::ptrdiff_t>(lo),
                   values.begin() + static_cast<std::ptrdiff_t>(hi));
}

long long Sequence::first() const {
    if (is_zero()) throw UsageError("zero sequence has no support endpoints");
    return offset_;
}

long long Sequence::last() const {
    if (is_zero()) throw UsageError("zero sequence has no support endpoints");
    return offset_ + support_span() - 1;
}

Sequence make_sequence(long long offset, const std::vector<double>& values) {
    if (values.empty()) throw UsageError("make_sequence: empty value list");
    return Sequence(offset, values);
}

Sequence operator+(const Sequence& a, const Sequence& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long long lo = std::min(a.first(), b.first());
    const long long hi = std::max(a.last(), b.last());
    std::vector<double> v(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (long long i = lo; i <= hi; ++i) v[static_cast<std::size_t>(i - lo)] = a.at(i) + b.at(i);
    return Sequence(lo, std::move(v));
}

Sequence operator*(double c, const Sequence& a) {
    if (c == 0.0 || a.is_zero()) return Sequence::zero();
    std::vector<double> v = a.values();
    for (double& x : v) x *= c;
    return Sequence(a.offset(), std::move(v));
}

double lp_norm(const Sequence& b, double p) {
    if (!(p > 0.0)) throw UsageError("lp_norm: p must be positive");
    if (b.is_zero()) return 0.0;
    if (std::isinf(p)) {
        double m = 0.0;
        for (double x : b.values()) m = std::max(m, std::abs(x));
        return m;
    }
    CompensatedSum<double> s;
    if (p == 1.0) {
        for (double x : b.values()) s.add(std::abs(x));
        return s.value();
    }
    for (double x : b.values()) {
        if (x != 0.0) s.add(std::pow(std::abs(x), p));
    }
    return std::pow(s.value(), 1.0 / p);
}

double moment(const Sequence& b, int k) {
    if (k < 0) throw UsageError("moment: order must be nonnegative");
    if (b.is_zero()) return 0.0;
    CompensatedSum<double> s;
    for (long long i = b.first(); i <= b.last(); ++i) {
        const double x = b.at(i);
        if (x == 0.0) continue;
        double power = 1.0;  // i^0, covering 0^0 := 1
        for (int t = 0; t < k; ++t) power *= static_cast<double>(i);
        s.add(power * x);
    }
    return s.value();
}

MaximalEvaluator::MaximalEvaluator(const Sequence& b) {
    if (b.is_zero()) return;
    first_ = b.first();
    last_ = b.last();
    prefix_.resize(b.values().size() + 1, 0.0);
    for (std::size_t k = 0; k < b.values().size(); ++k) prefix_[k + 1] = prefix_[k] + std::abs(b.values()[k]);
}

double MaximalEvaluator::at(long long j) const {
    if (prefix_.empty()) return 0.0;
    // The window sum is a step function of the radius N that only changes
    // when the window edge crosses a support index, and the average decays
    // between those radii, so it is enough to test N = 0 and N = |i - j| for
    // each support index i.
    auto window_sum = [&](long long n) {
        const long long lo = std::max(first_, j - n);
        const long long hi = std::min(last_, j + n);
        if (hi < lo) return 0.0;
        return prefix_[static_cast<std::size_t>(hi - first_ + 1)] -
               prefix_[static_cast<std::size_t>(lo - first_)];
    };
    double best = window_sum(0);
    for (long long i = first_; i <= last_; ++i) {
        const long long n = std::llabs(i - j);
        best = std::max(best, window_sum(n) / static_cast<double>(2 * n + 1));
    }
    return best;
}

double maximal_apply(const Sequence& b, long long j) { return MaximalEvaluator(b).at(j); }

}  // namespace dhz
