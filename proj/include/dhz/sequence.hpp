#pragma once

#include <vector>

namespace dhz {

// Finitely supported real sequence on Z, stored densely over its support
// interval.  Canonical form: the value block is trimmed so its first and
// last entries are nonzero; the zero sequence is the distinguished value
// with an empty block.  Entries outside the block are exactly 0, and
// equality means equality of all entries over Z.
class Sequence {
public:
    Sequence() = default;  // zero sequence
    Sequence(long long offset, std::vector<double> values);

    static Sequence zero() { return Sequence(); }
    static Sequence delta(long long position) { return Sequence(position, {1.0}); }

    bool is_zero() const { return values_.empty(); }
    long long offset() const { return offset_; }
    const std::vector<double>& values() const { return values_; }

    long long first() const;  // support endpoints; throw on the zero sequence
    long long last() const;
    long long support_span() const { return static_cast<long long>(values_.size()); }

    double at(long long i) const {
        if (i < offset_ || i >= offset_ + support_span()) return 0.0;
        return values_[static_cast<std::size_t>(i - offset_)];
    }

    bool operator==(const Sequence& o) const { return offset_ == o.offset_ && values_ == o.values_; }

private:
    long long offset_ = 0;
    std::vector<double> values_;
};

// Throws on an empty value list; an all-zero list yields the canonical zero.
Sequence make_sequence(long long offset, const std::vector<double>& values);

Sequence operator+(const Sequence& a, const Sequence& b);
Sequence operator*(double c, const Sequence& a);

// (sum |b(i)|^p)^(1/p) for finite p, sup |b(i)| for p = inf; throws for p <= 0.
double lp_norm(const Sequence& b, double p);

// sum i^k b(i), with 0^0 := 1.
double moment(const Sequence& b, int k);

// Centered maximal value  sup_N (2N+1)^{-1} sum_{|i-j|<=N} |b(i)|.
// The sup over all N is attained for some N no larger than the distance from
// j to the farthest support endpoint, since growing the window beyond the
// full support only shrinks the average.
double maximal_apply(const Sequence& b, long long j);

// Shared-prefix evaluator for scanning the maximal sequence over a window.
class MaximalEvaluator {
public:
    explicit MaximalEvaluator(const Sequence& b);
    double at(long long j) const;

private:
    long long first_ = 0;
    long long last_ = -1;
    std::vector<double> prefix_;  // prefix_[k] = sum of |b| over the first k entries
};

}  // namespace dhz
