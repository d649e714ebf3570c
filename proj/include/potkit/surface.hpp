#pragma once

#include <Eigen/Dense>
#include <functional>

#include "potkit/elliptic.hpp"
#include "potkit/numkit.hpp"

namespace potkit {

// ---------------------------------------------------------------- unit sphere in the stereographic chart

struct SurfaceExpansion {
    double h0 = 0.0;
    cplx h1{};
    cplx h2{};
    double h11 = 0.0;
    double lambda_sq = 0.0;
};

namespace sphere {

inline constexpr double volume = 4.0 * pi;

double metric_density_sq(cplx z);
double green(cplx z, cplx a);
cplx green_dz(cplx z, cplx a);
// Regular part H(z,a) = 2 pi G + log|z-a| in the chart.
double regular_part(cplx z, cplx a);
SurfaceExpansion expansion(cplx a);
cplx bergman(cplx z, cplx a);
cplx schiffer(cplx z, cplx a);

// Integral of f against the area form over the whole sphere, split into the
// charts |z| < 1 and |1/z| < 1. At most one singular chart point.
QuadratureResult integrate(const std::function<double(cplx)>& f, std::size_t resolution,
                           std::optional<cplx> singular_point = std::nullopt, Exec exec = Exec::parallel);

// Dirichlet integral of G(.,a) and G(.,b); equals G(a,b) for the normalized
// monopole Green function. Requires |a| < 1 < |b| so each chart holds one pole.
QuadratureResult mutual_energy(cplx a, cplx b, std::size_t resolution, Exec exec = Exec::parallel);

}  // namespace sphere

// ---------------------------------------------------------------- flat torus C/(Z + tau Z)

class TorusSpec {
public:
    explicit TorusSpec(cplx tau);

    [[nodiscard]] const TorusLattice& lattice() const noexcept { return lattice_; }
    [[nodiscard]] cplx tau() const noexcept { return lattice_.tau(); }
    [[nodiscard]] double volume() const noexcept { return lattice_.height(); }
    // Additive constant fixed by the zero-mean normalization of the Green function.
    [[nodiscard]] double green_constant() const noexcept { return constant_; }
    [[nodiscard]] Region cell_centered_at(cplx center) const;

private:
    TorusLattice lattice_;
    double constant_;
};

double torus_green(cplx z, cplx a, const TorusSpec& spec);
cplx torus_green_dz(cplx z, cplx a, const TorusSpec& spec);
// H(z,a) = 2 pi G + log|w| with w the lattice translate of z - a nearest to 0.
double torus_regular_part(cplx z, cplx a, const TorusSpec& spec);

struct TorusKernels {
    cplx bergman;
    cplx schiffer;
};
TorusKernels torus_kernels(cplx z, cplx a, const TorusSpec& spec);

// A one-form f dx + g dy with complex coefficients.
struct OneForm {
    std::function<cplx(cplx)> dx;
    std::function<cplx(cplx)> dy;

    static OneForm constant(cplx cx, cplx cy);
    static OneForm holomorphic(std::function<cplx(cplx)> coefficient);
    [[nodiscard]] OneForm star() const;
};

struct PeriodMatrices {
    Eigen::MatrixXd P;
    Eigen::MatrixXd Q;
    Eigen::MatrixXd R;

    [[nodiscard]] int genus() const noexcept { return static_cast<int>(P.rows()); }
    // Largest residual among PQ = I + R^2, symmetry of P, Q, RP, QR.
    [[nodiscard]] double identity_residual() const;
    [[nodiscard]] bool positive_definite() const;
};

struct TorusHarmonicBasis {
    OneForm eta_alpha;
    OneForm eta_beta;
    OneForm star_eta_alpha;
    OneForm star_eta_beta;
    OneForm omega_alpha;
    OneForm omega_beta;
    cplx omega_alpha_coefficient;
    cplx omega_beta_coefficient;
    PeriodMatrices periods;  // closed forms
};
TorusHarmonicBasis torus_harmonic_basis(const TorusSpec& spec);

// Straight closed cycle start -> start + displacement (a lattice vector).
struct Cycle {
    cplx start;
    cplx displacement;
};
Cycle alpha_cycle(const TorusSpec& spec);
Cycle beta_cycle(const TorusSpec& spec);

cplx form_period(const OneForm& form, const Cycle& cycle, std::size_t n = 64);
cplx form_period(const OneForm& form, const Curve& curve, std::size_t n);

// Integral over the fundamental cell of the two-form a ^ b.
cplx wedge_integral(const OneForm& a, const OneForm& b, const TorusSpec& spec, std::size_t resolution = 32);

// Period matrices recomputed by quadrature from the harmonic basis.
PeriodMatrices torus_period_matrices_numeric(const TorusSpec& spec, std::size_t n = 64);

struct ExpansionResidual {
    double p_form;  // via P^{-1} and the beta-normalized forms
    double q_form;  // via Q^{-1} and the alpha-normalized forms
};
ExpansionResidual bergman_expansion_check(const TorusSpec& spec, std::size_t samples = 16);

}  // namespace potkit
