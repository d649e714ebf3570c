#pragma once

// Weierstrass functions by summing the lattice row by row: each row
// sum over m of 1/(z + m - n tau)^k has a closed trigonometric form, and the
// rows decay like exp(-2 pi |n| Im tau). Shares no code with the theta-series
// implementation.

#include <complex>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;

inline cplx wp_rows(cplx z, cplx tau, int rows = 40) {
    const double pi = std::numbers::pi;
    auto csc2 = [pi](cplx w) {
        const cplx s = std::sin(pi * w);
        return pi * pi / (s * s);
    };
    cplx sum = csc2(z) - pi * pi / 3.0;
    for (int n = 1; n <= rows; ++n) {
        const cplx shift = static_cast<double>(n) * tau;
        sum += csc2(z - shift) + csc2(z + shift) - 2.0 * csc2(shift);
    }
    return sum;
}

inline cplx wp_prime_rows(cplx z, cplx tau, int rows = 40) {
    const double pi = std::numbers::pi;
    auto term = [pi](cplx w) {
        const cplx s = std::sin(pi * w);
        return -2.0 * pi * pi * pi * std::cos(pi * w) / (s * s * s);
    };
    cplx sum = term(z);
    for (int n = 1; n <= rows; ++n) {
        const cplx shift = static_cast<double>(n) * tau;
        sum += term(z - shift) + term(z + shift);
    }
    return sum;
}

}  // namespace oracle
