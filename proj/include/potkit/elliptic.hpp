#pragma once

#include "potkit/numkit.hpp"

namespace potkit {

// Lattice Z + tau Z together with the constants the series evaluations need.
// Immutable after construction.
class TorusLattice {
public:
    explicit TorusLattice(cplx tau);

    [[nodiscard]] cplx tau() const noexcept { return tau_; }
    [[nodiscard]] double height() const noexcept { return tau_.imag(); }
    [[nodiscard]] cplx q() const noexcept { return q_; }          // exp(2 pi i tau)
    [[nodiscard]] cplx nome() const noexcept { return nome_; }    // exp(pi i tau)
    [[nodiscard]] cplx eta1() const noexcept { return eta1_; }
    [[nodiscard]] cplx eta2() const noexcept { return eta2_; }
    [[nodiscard]] cplx g2() const noexcept { return g2_; }
    [[nodiscard]] cplx g3() const noexcept { return g3_; }
    [[nodiscard]] cplx e1() const noexcept { return e1_; }  // wp(1/2)
    [[nodiscard]] cplx e2() const noexcept { return e2_; }  // wp((1+tau)/2)
    [[nodiscard]] cplx e3() const noexcept { return e3_; }  // wp(tau/2)
    [[nodiscard]] cplx theta1_prime0() const noexcept { return theta1_prime0_; }

    [[nodiscard]] double legendre_residual() const noexcept;

    // z = w + m + n tau with w in the cell centred at the origin.
    struct Reduced {
        cplx w;
        long m;
        long n;
    };
    [[nodiscard]] Reduced reduce(cplx z) const;

private:
    cplx tau_;
    cplx q_;
    cplx nome_;
    cplx eta1_;
    cplx eta2_;
    cplx g2_;
    cplx g3_;
    cplx e1_;
    cplx e2_;
    cplx e3_;
    cplx theta1_prime0_;
};

cplx wp(cplx z, const TorusLattice& L);
cplx wp_prime(cplx z, const TorusLattice& L);
cplx zeta_w(cplx z, const TorusLattice& L);

// Odd theta function with zeros on the lattice, theta1(z+1) = -theta1(z).
cplx theta1(cplx z, const TorusLattice& L);

// log|theta1(z)| without overflow for large Im z.
double log_abs_theta1(cplx z, const TorusLattice& L);

// theta1(z) / (theta1'(0) z), analytic and equal to 1 at z = 0; meant for |z| small.
cplx theta1_ratio(cplx z, const TorusLattice& L);

// theta1'(z)/theta1(z) = zeta(z) - eta1 z.
cplx theta1_log_derivative(cplx z, const TorusLattice& L);

// Classical theta function with zeros at (1+tau)/2 + lattice; used for the
// square-root kernels of the strip double.
cplx theta3(cplx z, const TorusLattice& L);

}  // namespace potkit
