#include "dhz/fastops.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "dhz/fft.hpp"
#include "dhz/rng.hpp"
#include "dhz/window_ops.hpp"

namespace dhz {

namespace {

void validate_geometry(long long j_lo, long long j_hi, long long i_lo, long long i_hi) {
    if (j_hi < j_lo) throw UsageError("WindowPlan: empty output window");
    if (i_hi < i_lo) throw UsageError("WindowPlan: empty input range");
}

void check_covers(const WindowPlan& plan, const Sequence& b) {
    if (b.is_zero()) return;
    if (b.first() < plan.i_lo || b.last() > plan.i_hi)
        throw UsageError("plan does not cover the input support");
}

long long conv_read_base(const WindowPlan& plan) {
    return static_cast<long long>(plan.input_extent()) - 1 - plan.j_lo;
}

}  // namespace

WindowPlan::WindowPlan(long long j_lo_, long long j_hi_, long long i_lo_, long long i_hi_)
    : j_lo(j_lo_), j_hi(j_hi_), i_lo(i_lo_), i_hi(i_hi_), padded_len(0) {
    validate_geometry(j_lo, j_hi, i_lo, i_hi);
    padded_len = next_pow2(output_extent() + input_extent());
}

WindowPlan::WindowPlan(long long j_lo_, long long j_hi_, long long i_lo_, long long i_hi_,
                       std::size_t padded)
    : j_lo(j_lo_), j_hi(j_hi_), i_lo(i_lo_), i_hi(i_hi_), padded_len(padded) {
    validate_geometry(j_lo, j_hi, i_lo, i_hi);
    if (padded_len == 0 || (padded_len & (padded_len - 1)) != 0)
        throw UsageError("WindowPlan: padded length must be a power of two");
    if (padded_len < output_extent() + input_extent())
        throw UsageError("WindowPlan: padded length too small, circular aliasing would occur");
}

Sequence riesz_apply_fast(const Sequence& b, double gamma, const WindowPlan& plan) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw UsageError("riesz_apply_fast: gamma must lie in (0, 1)");
    check_covers(plan, b);
    if (b.is_zero()) return Sequence::zero();

    const std::size_t in = plan.input_extent();
    const std::size_t out = plan.output_extent();
    std::vector<double> x(in, 0.0);
    for (long long i = b.first(); i <= b.last(); ++i)
        x[static_cast<std::size_t>(i - plan.i_lo)] = b.at(i);

    // lags d = j - i run over [j_lo - i_hi, j_hi - i_lo]
    const long long d_min = plan.j_lo - plan.i_hi;
    std::vector<double> kernel(out + in - 1);
    for (std::size_t v = 0; v < kernel.size(); ++v) {
        const long long d = d_min + static_cast<long long>(v);
        kernel[v] = d == 0 ? 0.0 : std::pow(static_cast<double>(std::llabs(d)), gamma - 1.0);
    }

    const auto conv = circular_convolution(x, kernel, plan.padded_len);
    const long long base = conv_read_base(plan);
    std::vector<double> vals(out);
    for (long long j = plan.j_lo; j <= plan.j_hi; ++j)
        vals[static_cast<std::size_t>(j - plan.j_lo)] = conv[static_cast<std::size_t>(j + base)];
    return Sequence(plan.j_lo, std::move(vals));
}

Sequence hilbert_apply_fast(const Sequence& b, const WindowPlan& plan) {
    check_covers(plan, b);
    if (b.is_zero()) return Sequence::zero();

    const std::size_t in = plan.input_extent();
    const std::size_t out = plan.output_extent();
    // reversed input turns the j + i dependence into a convolution lag
    std::vector<double> x(in, 0.0);
    for (long long i = b.first(); i <= b.last(); ++i)
        x[static_cast<std::size_t>(plan.i_hi - i)] = b.at(i);

    const long long s_min = plan.j_lo + plan.i_lo;
    std::vector<double> kernel(out + in - 1);
    for (std::size_t v = 0; v < kernel.size(); ++v)
        kernel[v] = 1.0 / (static_cast<double>(s_min + static_cast<long long>(v)) + 0.5);

    const auto conv = circular_convolution(x, kernel, plan.padded_len);
    const long long base = conv_read_base(plan);
    std::vector<double> vals(out);
    const double inv_pi = 1.0 / std::numbers::pi;
    for (long long j = plan.j_lo; j <= plan.j_hi; ++j)
        vals[static_cast<std::size_t>(j - plan.j_lo)] = inv_pi * conv[static_cast<std::size_t>(j + base)];
    return Sequence(plan.j_lo, std::move(vals));
}

namespace {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        num += (x[k] - mx) * (y[k] - my);
        den += (x[k] - mx) * (x[k] - mx);
    }
    return num / den;
}

template <typename F>
long long min_time_ns(F&& body, int repeats) {
    long long best = -1;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        const long long ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
        if (best < 0 || ns < best) best = ns;
    }
    return best;
}

}  // namespace

ExperimentReport throughput_benchmark(const std::vector<std::size_t>& sizes, int repeats) {
    if (repeats < 0) throw UsageError("throughput_benchmark: repeats must be nonnegative");
    for (std::size_t n : sizes)
        if (n < 256) throw UsageError("throughput_benchmark: sizes must be at least 2^8");

    ExperimentReport report;
    report.name = "throughput-benchmark";
    report.set_param("repeats", repeats);
    report.tolerance = 0.0;
    report.columns = {"size", "direct_ns", "fast_ns"};
    if (repeats == 0 || sizes.empty()) {
        report.finalize();
        return report;
    }

    const double gamma = 0.5;
    std::vector<double> log_size, log_direct, log_fast;
    for (std::size_t n : sizes) {
        Rng rng = Rng::substream(12345, n);
        std::vector<double> vals(n);
        for (double& v : vals) v = rng.uniform(-1.0, 1.0);
        const Sequence b(0, std::move(vals));
        const long long hi = static_cast<long long>(n) - 1;
        const WindowPlan plan(0, hi, 0, hi);

        volatile double sink = 0.0;
        const long long direct_ns = min_time_ns(
            [&] {
                const auto out = riesz_window(b, gamma, 0, hi, Exec::parallel);
                sink = sink + out[out.size() / 2];
            },
            repeats);
        const long long fast_ns = min_time_ns(
            [&] {
                const Sequence out = riesz_apply_fast(b, gamma, plan);
                sink = sink + out.at(hi / 2);
            },
            repeats);

        report.rows.push_back({static_cast<double>(n), static_cast<double>(direct_ns),
                               static_cast<double>(fast_ns)});
        log_size.push_back(std::log2(static_cast<double>(n)));
        log_direct.push_back(std::log2(static_cast<double>(direct_ns)));
        log_fast.push_back(std::log2(static_cast<double>(fast_ns)));
    }
    report.samples = static_cast<long long>(sizes.size());

    if (sizes.size() >= 2) {
        const double direct_exp = fit_slope(log_size, log_direct);
        const double fast_exp = fit_slope(log_size, log_fast);
        report.set_param("direct_exponent", direct_exp);
        report.set_param("fast_exponent", fast_exp);
        report.worst_ratio =
            std::max(fast_exp / 1.4, direct_exp > 0.0 ? 1.8 / direct_exp : 2.0);
    }
    report.finalize();
    return report;
}

}  // namespace dhz
