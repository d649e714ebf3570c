#include "potkit/surface.hpp"

#include <cmath>

namespace potkit {

// ---------------------------------------------------------------- sphere

namespace sphere {

double metric_density_sq(cplx z) {
    const double s = 1.0 + std::norm(z);
    return 4.0 / (s * s);
}

double green(cplx z, cplx a) {
    require_finite(z, "z");
    require_finite(a, "a");
    if (z == a) fail(ErrorKind::pole, "sphere Green function at its pole");
    const double ratio = std::norm(z - a) / ((1.0 + std::norm(z)) * (1.0 + std::norm(a)));
    return -(std::log(ratio) + 1.0) / (4.0 * pi);
}

cplx green_dz(cplx z, cplx a) {
    if (z == a) fail(ErrorKind::pole, "sphere Green gradient at its pole");
    return -(1.0 / (z - a) - std::conj(z) / (1.0 + std::norm(z))) / (4.0 * pi);
}

double regular_part(cplx z, cplx a) {
    return 0.5 * std::log(1.0 + std::norm(z)) + 0.5 * std::log(1.0 + std::norm(a)) - 0.5;
}

SurfaceExpansion expansion(cplx a) {
    require_finite(a, "a");
    const double s = 1.0 + std::norm(a);
    SurfaceExpansion e;
    e.h0 = std::log(s) - 0.5;
    e.h1 = std::conj(a) / s;
    e.h2 = -std::conj(a) * std::conj(a) / (2.0 * s * s);
    e.h11 = 1.0 / (2.0 * s * s);
    e.lambda_sq = 4.0 / (s * s);
    return e;
}

cplx bergman(cplx, cplx) { return 0.0; }

cplx schiffer(cplx z, cplx a) {
    if (z == a) fail(ErrorKind::pole, "Schiffer kernel at its pole");
    return 1.0 / (pi * (z - a) * (z - a));
}

QuadratureResult integrate(const std::function<double(cplx)>& f, std::size_t resolution,
                           std::optional<cplx> singular_point, Exec exec) {
    std::optional<cplx> inner;
    std::optional<cplx> outer;
    if (singular_point) {
        const double r = std::abs(*singular_point);
        if (std::abs(r - 1.0) < 1e-6) fail(ErrorKind::domain, "singular point on the chart seam |z| = 1");
        if (r < 1.0) inner = singular_point;
        else outer = 1.0 / *singular_point;
    }
    const Region unit = Region::make_disk(0.0, 1.0);
    const auto a = area_quadrature([&](cplx z) { return cplx(f(z) * metric_density_sq(z)); }, unit, resolution,
                                   inner, exec);
    const auto b = area_quadrature([&](cplx w) { return cplx(f(1.0 / w) * metric_density_sq(w)); }, unit,
                                   resolution, outer, exec);
    return {a.value + b.value, a.error_estimate + b.error_estimate};
}

QuadratureResult mutual_energy(cplx a, cplx b, std::size_t resolution, Exec exec) {
    if (!(std::abs(a) < 1.0 && std::abs(b) > 1.0)) {
        fail(ErrorKind::parameter, "mutual energy expects |a| < 1 < |b|");
    }
    const Region unit = Region::make_disk(0.0, 1.0);
    auto dot = [](cplx u, cplx v) { return 4.0 * std::real(u * std::conj(v)); };
    const auto inner = area_quadrature([&](cplx z) { return cplx(dot(green_dz(z, a), green_dz(z, b))); }, unit,
                                       resolution, a, exec);
    const auto outer = area_quadrature(
        [&](cplx w) {
            const cplx z = 1.0 / w;
            const cplx jac = -1.0 / (w * w);
            return cplx(dot(green_dz(z, a) * jac, green_dz(z, b) * jac));
        },
        unit, resolution, 1.0 / b, exec);
    return {inner.value + outer.value, inner.error_estimate + outer.error_estimate};
}

}  // namespace sphere

// ---------------------------------------------------------------- torus

namespace {

double jensen_constant(const TorusLattice& L) {
    // Zero-mean normalization evaluated in closed form through the product
    // expansion of theta1 and Jensen's formula on horizontal lines.
    double s = 0.0;
    cplx qn = L.q();
    for (int n = 1; n < 4000; ++n) {
        const double term = std::log(std::abs(1.0 - qn));
        s += term;
        if (std::abs(qn) < 1e-18) break;
        qn *= L.q();
    }
    const double T = L.height();
    return -T / 24.0 + (s - std::log(std::abs(L.theta1_prime0()))) / (2.0 * pi);
}

}  // namespace

TorusSpec::TorusSpec(cplx tau) : lattice_(tau), constant_(jensen_constant(lattice_)) {}

Region TorusSpec::cell_centered_at(cplx center) const {
    return Region::make_parallelogram(center - 0.5 * (1.0 + tau()), 1.0, tau());
}

double torus_green(cplx z, cplx a, const TorusSpec& spec) {
    const TorusLattice& L = spec.lattice();
    const cplx w = L.reduce(z - a).w;
    if (std::abs(w) < 1e-14) fail(ErrorKind::pole, "torus Green function at its pole");
    const double y = w.imag();
    return -(log_abs_theta1(w, L) - std::log(std::abs(L.theta1_prime0()))) / (2.0 * pi) +
           y * y / (2.0 * L.height()) + spec.green_constant();
}

cplx torus_green_dz(cplx z, cplx a, const TorusSpec& spec) {
    const TorusLattice& L = spec.lattice();
    const cplx w = L.reduce(z - a).w;
    if (std::abs(w) < 1e-14) fail(ErrorKind::pole, "torus Green gradient at its pole");
    return -theta1_log_derivative(w, L) / (4.0 * pi) - I * w.imag() / (2.0 * L.height());
}

double torus_regular_part(cplx z, cplx a, const TorusSpec& spec) {
    const TorusLattice& L = spec.lattice();
    const cplx w = L.reduce(z - a).w;
    const double y = w.imag();
    return -std::log(std::abs(theta1_ratio(w, L))) + pi * y * y / L.height() + 2.0 * pi * spec.green_constant();
}

TorusKernels torus_kernels(cplx z, cplx a, const TorusSpec& spec) {
    const TorusLattice& L = spec.lattice();
    const double T = L.height();
    return {cplx(1.0 / T, 0.0), (wp(z - a, L) + L.eta1()) / pi - 1.0 / T};
}

// ---------------------------------------------------------------- one-forms and periods

OneForm OneForm::constant(cplx cx, cplx cy) {
    return {[cx](cplx) { return cx; }, [cy](cplx) { return cy; }};
}

OneForm OneForm::holomorphic(std::function<cplx(cplx)> coefficient) {
    return {coefficient, [coefficient](cplx z) { return I * coefficient(z); }};
}

OneForm OneForm::star() const {
    auto fx = dx;
    auto fy = dy;
    return {[fy](cplx z) { return -fy(z); }, [fx](cplx z) { return fx(z); }};
}

double PeriodMatrices::identity_residual() const {
    const auto g = P.rows();
    const Eigen::MatrixXd Id = Eigen::MatrixXd::Identity(g, g);
    const Eigen::MatrixXd RP = R * P;
    const Eigen::MatrixXd QR = Q * R;
    double r = (P * Q - Id - R * R).cwiseAbs().maxCoeff();
    r = std::max(r, (P - P.transpose()).cwiseAbs().maxCoeff());
    r = std::max(r, (Q - Q.transpose()).cwiseAbs().maxCoeff());
    r = std::max(r, (RP - RP.transpose()).cwiseAbs().maxCoeff());
    r = std::max(r, (QR - QR.transpose()).cwiseAbs().maxCoeff());
    return r;
}

bool PeriodMatrices::positive_definite() const {
    const Eigen::LLT<Eigen::MatrixXd> lp(P);
    const Eigen::LLT<Eigen::MatrixXd> lq(Q);
    return lp.info() == Eigen::Success && lq.info() == Eigen::Success;
}

TorusHarmonicBasis torus_harmonic_basis(const TorusSpec& spec) {
    const cplx tau = spec.tau();
    const double T = tau.imag();
    const double X = tau.real();
    TorusHarmonicBasis b;
    b.eta_alpha = OneForm::constant(0.0, 1.0 / T);
    b.eta_beta = OneForm::constant(-1.0, X / T);
    b.star_eta_alpha = b.eta_alpha.star();
    b.star_eta_beta = b.eta_beta.star();
    b.omega_alpha_coefficient = -I / T;
    b.omega_beta_coefficient = -I * std::conj(tau) / T;
    const cplx ca = b.omega_alpha_coefficient;
    const cplx cb = b.omega_beta_coefficient;
    b.omega_alpha = OneForm::holomorphic([ca](cplx) { return ca; });
    b.omega_beta = OneForm::holomorphic([cb](cplx) { return cb; });
    b.periods.P = Eigen::MatrixXd::Constant(1, 1, std::norm(tau) / T);
    b.periods.Q = Eigen::MatrixXd::Constant(1, 1, 1.0 / T);
    b.periods.R = Eigen::MatrixXd::Constant(1, 1, -X / T);
    return b;
}

Cycle alpha_cycle(const TorusSpec&) { return {0.0, 1.0}; }
Cycle beta_cycle(const TorusSpec& spec) { return {0.0, spec.tau()}; }

cplx form_period(const OneForm& form, const Cycle& cycle, std::size_t n) {
    const cplx v = cycle.displacement;
    return segment_integral(
        [&](cplx z) { return form.dx(z) * v.real() + form.dy(z) * v.imag(); }, cycle.start, cycle.start + v,
        std::max<std::size_t>(1, n / 16), 16) /
           v;
}

cplx form_period(const OneForm& form, const Curve& curve, std::size_t n) {
    if (n < 16) fail(ErrorKind::parameter, "form period needs at least 16 samples");
    std::vector<cplx> terms(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n);
        const cplx z = curve.point(t);
        const cplx d = curve.tangent(t);
        terms[k] = form.dx(z) * d.real() + form.dy(z) * d.imag();
        require_finite(terms[k], "one-form on cycle");
    }
    return static_cast<double>(curve.orientation) * ordered_sum<cplx>(terms) / static_cast<double>(n);
}

cplx wedge_integral(const OneForm& a, const OneForm& b, const TorusSpec& spec, std::size_t resolution) {
    const Region cell = Region::make_parallelogram(0.0, 1.0, spec.tau());
    return area_quadrature([&](cplx z) { return a.dx(z) * b.dy(z) - a.dy(z) * b.dx(z); }, cell, resolution)
        .value;
}

PeriodMatrices torus_period_matrices_numeric(const TorusSpec& spec, std::size_t n) {
    const auto basis = torus_harmonic_basis(spec);
    const Cycle al = alpha_cycle(spec);
    const Cycle be = beta_cycle(spec);
    PeriodMatrices m;
    m.P = Eigen::MatrixXd::Constant(1, 1, -form_period(basis.star_eta_beta, be, n).real());
    m.Q = Eigen::MatrixXd::Constant(1, 1, -form_period(basis.star_eta_alpha, al, n).real());
    m.R = Eigen::MatrixXd::Constant(1, 1, form_period(basis.star_eta_alpha, be, n).real());
    return m;
}

ExpansionResidual bergman_expansion_check(const TorusSpec& spec, std::size_t samples) {
    const auto basis = torus_harmonic_basis(spec);
    const double P = basis.periods.P(0, 0);
    const double Q = basis.periods.Q(0, 0);
    ExpansionResidual r{0.0, 0.0};
    for (std::size_t i = 0; i < samples; ++i) {
        for (std::size_t j = 0; j < samples; ++j) {
            const cplx z = (static_cast<double>(i) + 0.3) / static_cast<double>(samples) +
                           spec.tau() * (static_cast<double>(j) + 0.6) / static_cast<double>(samples);
            const cplx a = spec.tau() * 0.37 + 0.21 + 0.5 * z * z;
            const cplx K = torus_kernels(z, a + 0.123, spec).bergman;
            const cplx wb_z = basis.omega_beta.dx(z);
            const cplx wb_a = basis.omega_beta.dx(a);
            const cplx wa_z = basis.omega_alpha.dx(z);
            const cplx wa_a = basis.omega_alpha.dx(a);
            r.p_form = std::max(r.p_form, std::abs(wb_z * std::conj(wb_a) / P - K));
            r.q_form = std::max(r.q_form, std::abs(wa_z * std::conj(wa_a) / Q - K));
        }
    }
    return r;
}

}  // namespace potkit
