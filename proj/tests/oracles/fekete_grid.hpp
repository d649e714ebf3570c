#pragma once

// Exhaustive search for small Fekete problems on a closed curve or an arc:
// maximizes the product of pairwise distances over a uniform parameter grid.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

inline double fekete_grid(const std::function<std::complex<double>(double)>& point, int n, int grid,
                          bool periodic) {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    double best = -1e300;
    const int first_max = periodic ? 0 : grid;  // fix the first point on closed curves
    std::function<void(int, int)> rec = [&](int level, int start) {
        if (level == n) {
            double s = 0.0;
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    const double d = std::abs(point(idx[j] / static_cast<double>(grid)) -
                                              point(idx[k] / static_cast<double>(grid)));
                    s += std::log(d);
                }
            best = std::max(best, s);
            return;
        }
        const int hi = level == 0 ? first_max : grid;
        for (int i = start; i <= hi; ++i) {
            idx[static_cast<std::size_t>(level)] = i;
            rec(level + 1, i + 1);
        }
    };
    rec(0, 0);
    return std::exp(2.0 * best / (n * (n - 1)));
}

}  // namespace oracle
