#include "dhz/fft.hpp"

#include <cmath>
#include <numbers>

#include "dhz/enclosure.hpp"

namespace dhz {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw UsageError("fft: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= inv;
    }
}

std::vector<double> circular_convolution(const std::vector<double>& x, const std::vector<double>& k,
                                         std::size_t n) {
    if (n < x.size() || n < k.size()) throw UsageError("convolution: transform length too small");
    std::vector<std::complex<double>> fx(n), fk(n);
    for (std::size_t i = 0; i < x.size(); ++i) fx[i] = x[i];
    for (std::size_t i = 0; i < k.size(); ++i) fk[i] = k[i];
    fft_inplace(fx, false);
    fft_inplace(fk, false);
    for (std::size_t i = 0; i < n; ++i) fx[i] *= fk[i];
    fft_inplace(fx, true);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fx[i].real();
    return out;
}

}  // namespace dhz
