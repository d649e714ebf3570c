#include "potkit/elliptic.hpp"

#include <cmath>

namespace potkit {

namespace {

constexpr double series_floor = 1e-18;
constexpr int max_terms = 4000;

void check_tau(cplx tau) {
    require_finite(tau, "tau");
    if (tau.imag() < 0.05) fail(ErrorKind::conditioning, "Im tau below 0.05: q-series convergence not guaranteed");
}

void check_off_lattice(const TorusLattice::Reduced& r) {
    if (std::abs(r.w) < 1e-12) fail(ErrorKind::pole, "argument within 1e-12 of a lattice point");
}

// Sum_{n>=1} n^k q^n/(1-q^n) trig(2 pi n w) with trig = cos or sin.
template <class Trig>
cplx lambert_sum(cplx w, cplx q, int power, Trig trig) {
    cplx sum{};
    cplx qn = q;
    for (int n = 1; n <= max_terms; ++n) {
        const double nn = static_cast<double>(n);
        const cplx term = std::pow(nn, power) * qn / (1.0 - qn) * trig(2.0 * pi * nn * w);
        sum += term;
        if (std::abs(term) < series_floor * (1.0 + std::abs(sum)) && std::abs(qn) < 1e-3) break;
        qn *= q;
    }
    return sum;
}

cplx cos_c(cplx x) { return std::cos(x); }
cplx sin_c(cplx x) { return std::sin(x); }

cplx wp_reduced(cplx w, const TorusLattice& L) {
    const cplx s = std::sin(pi * w);
    return -L.eta1() + pi * pi / (s * s) - 8.0 * pi * pi * lambert_sum(w, L.q(), 1, cos_c);
}

cplx log_derivative_reduced(cplx w, const TorusLattice& L) {
    return pi * std::cos(pi * w) / std::sin(pi * w) + 4.0 * pi * lambert_sum(w, L.q(), 0, sin_c);
}

// theta1 series on the reduced cell.
cplx theta1_reduced(cplx w, cplx nome) {
    cplx sum{};
    for (int n = 0; n <= max_terms; ++n) {
        const double k = n + 0.5;
        const cplx term = (n % 2 == 0 ? 1.0 : -1.0) * std::pow(nome, k * k) * std::sin((2.0 * n + 1.0) * pi * w);
        sum += term;
        if (std::abs(term) < series_floor * std::abs(sum) && n > 1) break;
    }
    return 2.0 * sum;
}

}  // namespace

TorusLattice::TorusLattice(cplx tau) : tau_(tau) {
    check_tau(tau);
    q_ = std::exp(2.0 * pi * I * tau);
    nome_ = std::exp(pi * I * tau);
    // Eisenstein series: eta1 = pi^2/3 - 8 pi^2 sum n q^n/(1-q^n)
    cplx s{};
    cplx qn = q_;
    for (int n = 1; n <= max_terms; ++n) {
        const cplx term = static_cast<double>(n) * qn / (1.0 - qn);
        s += term;
        if (std::abs(term) < series_floor * (1.0 + std::abs(s)) && std::abs(qn) < 1e-3) break;
        qn *= q_;
    }
    eta1_ = pi * pi / 3.0 - 8.0 * pi * pi * s;
    eta2_ = eta1_ * tau_ - 2.0 * pi * I;

    cplx d{};
    for (int n = 0; n <= max_terms; ++n) {
        const double k = n + 0.5;
        const cplx term = (n % 2 == 0 ? 1.0 : -1.0) * (2.0 * n + 1.0) * std::pow(nome_, k * k);
        d += term;
        if (std::abs(term) < series_floor * std::abs(d) && n > 1) break;
    }
    theta1_prime0_ = 2.0 * pi * d;

    e1_ = wp_reduced(0.5, *this);
    e2_ = wp(0.5 * (1.0 + tau_), *this);
    e3_ = wp(0.5 * tau_, *this);
    g2_ = -4.0 * (e1_ * e2_ + e1_ * e3_ + e2_ * e3_);
    g3_ = 4.0 * e1_ * e2_ * e3_;
}

double TorusLattice::legendre_residual() const noexcept { return std::abs(eta1_ * tau_ - eta2_ - 2.0 * pi * I); }

TorusLattice::Reduced TorusLattice::reduce(cplx z) const {
    require_finite(z, "lattice argument");
    const long n = std::lround(z.imag() / tau_.imag());
    const cplx shifted = z - static_cast<double>(n) * tau_;
    const long m = std::lround(shifted.real());
    return {shifted - static_cast<double>(m), m, n};
}

cplx wp(cplx z, const TorusLattice& L) {
    const auto r = L.reduce(z);
    check_off_lattice(r);
    return wp_reduced(r.w, L);
}

cplx wp_prime(cplx z, const TorusLattice& L) {
    const auto r = L.reduce(z);
    check_off_lattice(r);
    const cplx s = std::sin(pi * r.w);
    const cplx c = std::cos(pi * r.w);
    return -2.0 * pi * pi * pi * c / (s * s * s) + 16.0 * pi * pi * pi * lambert_sum(r.w, L.q(), 2, sin_c);
}

cplx theta1_log_derivative(cplx z, const TorusLattice& L) {
    const auto r = L.reduce(z);
    check_off_lattice(r);
    // theta1(w + n tau) picks up exp(-2 pi i n w) and constants
    return log_derivative_reduced(r.w, L) - 2.0 * pi * I * static_cast<double>(r.n);
}

cplx zeta_w(cplx z, const TorusLattice& L) {
    const auto r = L.reduce(z);
    check_off_lattice(r);
    return L.eta1() * r.w + log_derivative_reduced(r.w, L) + static_cast<double>(r.m) * L.eta1() +
           static_cast<double>(r.n) * L.eta2();
}

cplx theta1(cplx z, const TorusLattice& L) {
    const auto r = L.reduce(z);
    const double nd = static_cast<double>(r.n);
    const cplx factor = std::exp(-pi * I * L.tau() * nd * nd - 2.0 * pi * I * nd * r.w);
    const double sign = ((r.m + r.n) % 2 == 0) ? 1.0 : -1.0;
    return sign * factor * theta1_reduced(r.w, L.nome());
}

double log_abs_theta1(cplx z, const TorusLattice& L) {
    const auto r = L.reduce(z);
    const double nd = static_cast<double>(r.n);
    return std::log(std::abs(theta1_reduced(r.w, L.nome()))) + pi * L.height() * nd * nd +
           2.0 * pi * nd * r.w.imag();
}

cplx theta1_ratio(cplx z, const TorusLattice& L) {
    cplx sum{};
    for (int n = 0; n <= max_terms; ++n) {
        const double k = n + 0.5;
        const double freq = (2.0 * n + 1.0) * pi;
        const cplx x = freq * z;
        const cplx sinc = std::abs(x) < 1e-4 ? 1.0 - x * x / 6.0 + x * x * x * x / 120.0 : std::sin(x) / x;
        const cplx term = (n % 2 == 0 ? 1.0 : -1.0) * std::pow(L.nome(), k * k) * freq * sinc;
        sum += term;
        if (std::abs(term) < series_floor * std::abs(sum) && n > 1) break;
    }
    return 2.0 * sum / L.theta1_prime0();
}

cplx theta3(cplx z, const TorusLattice& L) {
    // 1 + 2 sum p^{n^2} cos(2 pi n z), evaluated after reduction
    const auto r = L.reduce(z);
    cplx sum = 1.0;
    for (int n = 1; n <= max_terms; ++n) {
        const double nn = n;
        const cplx term = 2.0 * std::pow(L.nome(), nn * nn) * std::cos(2.0 * pi * nn * r.w);
        sum += term;
        if (std::abs(term) < series_floor * std::abs(sum)) break;
    }
    const double nd = static_cast<double>(r.n);
    return std::exp(-pi * I * L.tau() * nd * nd - 2.0 * pi * I * nd * r.w) * sum;
}

}  // namespace potkit
