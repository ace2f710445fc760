#pragma once

#include <complex>
#include <vector>

namespace dhz {

// In-place iterative radix-2 transform; size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// Circular convolution of x and k, both zero-padded to length n (a power of
// two >= max(x.size(), k.size())).
std::vector<double> circular_convolution(const std::vector<double>& x, const std::vector<double>& k,
                                         std::size_t n);

std::size_t next_pow2(std::size_t n);

}  // namespace dhz
