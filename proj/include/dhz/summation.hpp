#pragma once

#include <cmath>

namespace dhz {

// Neumaier-compensated accumulator; error is O(eps * sum |x|) independent of
// the number of terms.
template <typename T = double>
struct CompensatedSum {
    T sum = 0;
    T comp = 0;

    void add(T x) {
        const T t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    T value() const { return sum + comp; }
};

}  // namespace dhz
