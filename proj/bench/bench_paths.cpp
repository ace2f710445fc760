// Compares the three evaluation paths for the Riesz potential on square
// problems: serial direct, OpenMP direct, and the FFT fast path.
//
//   ./path_bench [size ...]        (defaults: 1024 4096 16384)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "dhz/fastops.hpp"
#include "dhz/rng.hpp"
#include "dhz/window_ops.hpp"

namespace {

template <typename F>
double time_ms(F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<long long> sizes;
    for (int k = 1; k < argc; ++k) sizes.push_back(std::atoll(argv[k]));
    if (sizes.empty()) sizes = {1024, 4096, 16384};

    const double gamma = 0.5;
    std::printf("%10s %14s %14s %14s %9s %9s\n", "size", "serial_ms", "parallel_ms", "fast_ms",
                "par_spdup", "fft_spdup");
    for (long long n : sizes) {
        dhz::Rng rng = dhz::Rng::substream(2024, static_cast<std::uint64_t>(n));
        std::vector<double> vals(static_cast<std::size_t>(n));
        for (double& v : vals) v = rng.uniform(-1.0, 1.0);
        const dhz::Sequence b(0, std::move(vals));
        const long long hi = n - 1;

        volatile double sink = 0.0;
        const double t_serial = time_ms([&] {
            const auto out = dhz::riesz_window(b, gamma, 0, hi, dhz::Exec::serial);
            sink = sink + out.back();
        });
        const double t_parallel = time_ms([&] {
            const auto out = dhz::riesz_window(b, gamma, 0, hi, dhz::Exec::parallel);
            sink = sink + out.back();
        });
        const dhz::WindowPlan plan(0, hi, 0, hi);
        const double t_fast = time_ms([&] {
            const dhz::Sequence out = dhz::riesz_apply_fast(b, gamma, plan);
            sink = sink + out.at(hi);
        });

        std::printf("%10lld %14.3f %14.3f %14.3f %9.2f %9.2f\n", n, t_serial, t_parallel, t_fast,
                    t_serial / t_parallel, t_serial / t_fast);
    }
    return 0;
}
