#include "dhz/atoms.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "dhz/operators.hpp"
#include "dhz/rng.hpp"
#include "dhz/summation.hpp"

namespace dhz {

namespace {

constexpr double kMomentTol = 1e-10;

double size_target(const AtomSpec& spec) {
    const double inv_q = std::isinf(spec.q) ? 0.0 : 1.0 / spec.q;
    return std::pow(2.0 * static_cast<double>(spec.half_width) + 1.0, inv_q - 1.0 / spec.p);
}

// Orthonormal basis of span{ ((i - c)/h)^k : k = 0..degree } over a window of
// size len, built by twice-iterated modified Gram-Schmidt.  Centering and
// scaling keep the monomials well conditioned even for wide windows.
std::vector<std::vector<double>> polynomial_basis(long long w_lo, long long w_hi, int degree) {
    const std::size_t len = static_cast<std::size_t>(w_hi - w_lo + 1);
    const double c = 0.5 * (static_cast<double>(w_lo) + static_cast<double>(w_hi));
    const double h = std::max(1.0, 0.5 * (static_cast<double>(w_hi) - static_cast<double>(w_lo)));

    std::vector<std::vector<double>> basis;
    for (int k = 0; k <= degree; ++k) {
        std::vector<double> v(len);
        for (std::size_t t = 0; t < len; ++t) {
            const double u = (static_cast<double>(w_lo) + static_cast<double>(t) - c) / h;
            v[t] = std::pow(u, k);
        }
        double orig = 0.0;
        for (double x : v) orig += x * x;
        orig = std::sqrt(orig);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& e : basis) {
                double dot = 0.0;
                for (std::size_t t = 0; t < len; ++t) dot += v[t] * e[t];
                for (std::size_t t = 0; t < len; ++t) v[t] -= dot * e[t];
            }
        }
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm < 1e-13 * orig || nrm == 0.0)
            throw UsageError("moment constraints are numerically degenerate on this window "
                             "(condition estimate " +
                             std::to_string(orig / (nrm > 0.0 ? nrm : 1e-300)) + ")");
        for (double& x : v) x /= nrm;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Removes the component of v spanned by the basis; two sweeps push the
// residual projections to roundoff.
void project_out(std::vector<double>& v, const std::vector<std::vector<double>>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& e : basis) {
            double dot = 0.0;
            for (std::size_t t = 0; t < v.size(); ++t) dot += v[t] * e[t];
            for (std::size_t t = 0; t < v.size(); ++t) v[t] -= dot * e[t];
        }
    }
}

}  // namespace

AtomSpec::AtomSpec(double p_, double q_, int d_, long long center_, long long half_width_)
    : p(p_), q(q_), d(d_), center(center_), half_width(half_width_) {
    if (!(p > 0.0 && p <= 1.0)) throw UsageError("AtomSpec: p must lie in (0, 1]");
    if (!(q >= 1.0)) throw UsageError("AtomSpec: q must lie in [1, inf]");
    if (!(p < q)) throw UsageError("AtomSpec: p < q required");
    if (d < 0) throw UsageError("AtomSpec: d must be nonnegative");
    if (half_width < 1) throw UsageError("AtomSpec: half_width must be >= 1");
}

AtomReport validate_atom(const Sequence& a, const AtomSpec& spec, double tol) {
    if (!(tol > 0.0)) throw UsageError("validate_atom: tol must be positive");
    AtomReport report;
    report.support_ok = a.is_zero() || (a.first() >= spec.center - spec.half_width &&
                                        a.last() <= spec.center + spec.half_width);
    report.size_ok = lp_norm(a, spec.q) <= size_target(spec) + tol;
    report.max_moment_residual = 0.0;
    for (int k = 0; k <= spec.d; ++k)
        report.max_moment_residual = std::max(report.max_moment_residual, std::abs(moment(a, k)));
    report.moments_ok = report.max_moment_residual <= tol;
    return report;
}

Sequence random_atom(const AtomSpec& spec, std::uint64_t seed) {
    const long long m = spec.half_width;
    const std::size_t len = static_cast<std::size_t>(2 * m + 1);
    if (static_cast<long long>(len) <= spec.d + 1)
        throw UsageError("random_atom: window too small for the moment constraints");
    const auto basis = polynomial_basis(spec.center - m, spec.center + m, spec.d);

    for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
        Rng rng = Rng::substream(seed, attempt);
        std::vector<double> v(len);
        for (double& x : v) x = rng.uniform(-1.0, 1.0);
        project_out(v, basis);

        Sequence candidate(spec.center - m, v);
        const double nq = lp_norm(candidate, spec.q);
        if (nq < 1e-8) continue;  // degenerate draw, use the next substream
        return (size_target(spec) / nq) * candidate;
    }
    throw std::runtime_error("random_atom: 32 consecutive degenerate draws");
}

Sequence nearest_moment_free(const Sequence& b, int L, long long window_lo, long long window_hi) {
    if (L < 0) throw UsageError("nearest_moment_free: L must be nonnegative");
    if (window_hi < window_lo) throw UsageError("nearest_moment_free: empty window");
    const long long len = window_hi - window_lo + 1;
    if (len <= L + 1) throw UsageError("nearest_moment_free: window size must exceed L + 1");
    if (!b.is_zero() && (b.first() < window_lo || b.last() > window_hi))
        throw UsageError("nearest_moment_free: window does not contain the support");
    if (b.is_zero()) return Sequence::zero();

    const auto basis = polynomial_basis(window_lo, window_hi, L);
    std::vector<double> v(static_cast<std::size_t>(len), 0.0);
    for (long long i = b.first(); i <= b.last(); ++i)
        v[static_cast<std::size_t>(i - window_lo)] = b.at(i);
    project_out(v, basis);
    return Sequence(window_lo, std::move(v));
}

QuasinormResult hardy_quasinorm(const Sequence& b, double p, long long J) {
    if (!(p > 0.0 && p <= 1.0)) throw UsageError("hardy_quasinorm: p must lie in (0, 1]");
    if (J < 1) throw UsageError("hardy_quasinorm: J must be positive");
    QuasinormResult result;
    if (b.is_zero()) return result;  // finite [0, 0]

    // d* = first non-vanishing moment; a nonzero sequence on n points cannot
    // have n vanishing moments (Vandermonde), so scanning n orders suffices.
    int d_star = -1;
    for (int k = 0; k < static_cast<int>(b.support_span()) + 1; ++k) {
        if (std::abs(moment(b, k)) > kMomentTol) {
            d_star = k;
            break;
        }
    }
    if (d_star >= 0 && (d_star + 1) * p <= 1.0) {
        result.diverged = true;
        result.witness_moment = d_star;
        return result;
    }
    const int n_order = d_star >= 0 ? d_star : static_cast<int>(b.support_span());

    const TaylorTailSpec spec = TaylorTailSpec::for_sequence(b, n_order);
    const Enclosure tail = hilbert_tail_bound(b, spec, J, p);  // validates J as well

    // finite part sum_{|j| <= J} |Hb(j)|^p, evaluated in interval arithmetic
    Enclosure finite{0.0, 0.0};
    const Enclosure inv_pi = exact(1.0) / widened(exact(std::numbers::pi), 1);
    for (long long j = -J; j <= J; ++j) {
        Enclosure s{0.0, 0.0};
        for (long long i = b.first(); i <= b.last(); ++i) {
            const double x = b.at(i);
            if (x == 0.0) continue;
            s = s + exact(x) / exact(static_cast<double>(j + i) + 0.5);
        }
        finite = finite + abs_pow(s * inv_pi, p);
    }

    Enclosure lp_b{0.0, 0.0};
    for (long long i = b.first(); i <= b.last(); ++i) lp_b = lp_b + abs_pow(exact(b.at(i)), p);
    lp_b = abs_pow(lp_b, 1.0 / p);
    const Enclosure hp = abs_pow(finite + tail, 1.0 / p);
    result.value = lp_b + hp;
    return result;
}

}  // namespace dhz
