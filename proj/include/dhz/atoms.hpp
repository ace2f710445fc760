#pragma once

#include <cstdint>

#include "dhz/enclosure.hpp"
#include "dhz/sequence.hpp"

namespace dhz {

// A (p, q, d)-atom centered at n0 with half-width m is supported in
// [n0 - m, n0 + m], obeys the size bound ||a||_q <= (2m+1)^(1/q - 1/p), and
// has vanishing moments through degree d.
struct AtomSpec {
    double p;           // in (0, 1]
    double q;           // in [1, inf], p < q
    int d;              // highest vanishing moment, >= 0
    long long center;   // n0
    long long half_width;  // m >= 1

    AtomSpec(double p, double q, int d, long long center, long long half_width);
};

struct AtomReport {
    bool support_ok = false;
    bool size_ok = false;
    bool moments_ok = false;
    double max_moment_residual = 0.0;

    bool verdict() const { return support_ok && size_ok && moments_ok; }
};

AtomReport validate_atom(const Sequence& a, const AtomSpec& spec, double tol);

// Deterministic in the seed: uniform draw on the window, orthogonal
// projection against the (centered, scaled) polynomial vectors, rescaled to
// saturate the size condition.  Output passes validate_atom at tol 1e-10.
Sequence random_atom(const AtomSpec& spec, std::uint64_t seed);

// Euclidean projection of b onto the sequences supported in
// [window_lo, window_hi] whose moments 0..L vanish.
Sequence nearest_moment_free(const Sequence& b, int L, long long window_lo, long long window_hi);

struct QuasinormResult {
    bool diverged = false;
    int witness_moment = -1;  // first non-vanishing moment when diverged
    Enclosure value{0.0, 0.0};
};

// ||b||_p + ||Hb||_p as an enclosure, or Diverged with the witness moment
// index when (d* + 1) p <= 1, where d* is the first non-vanishing moment
// (|moment| > 1e-10; residuals at or below that are treated as exact zeros,
// which mirrors the vanishing-moment tolerance used everywhere else).
QuasinormResult hardy_quasinorm(const Sequence& b, double p, long long J);

}  // namespace dhz
