#include "potkit/hadamard.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace potkit {

BoundaryVariation BoundaryVariation::dilation(double epsilon, double radius) {
    BoundaryVariation v;
    v.mode = Mode::dilation;
    v.epsilon = epsilon;
    v.radius = radius;
    v.validate();
    return v;
}

BoundaryVariation BoundaryVariation::translation(double epsilon, double radius) {
    BoundaryVariation v = dilation(epsilon, radius);
    v.mode = Mode::translation;
    return v;
}

BoundaryVariation BoundaryVariation::general(std::function<double(double)> speed, double epsilon, double radius) {
    BoundaryVariation v;
    v.mode = Mode::general;
    v.epsilon = epsilon;
    v.radius = radius;
    v.normal_speed = std::move(speed);
    v.validate();
    return v;
}

double BoundaryVariation::speed(double theta) const {
    switch (mode) {
        case Mode::dilation: return 1.0;
        case Mode::translation: return std::cos(theta);
        case Mode::general: return normal_speed(theta);
    }
    return 0.0;
}

void BoundaryVariation::validate() const {
    if (!(radius > 0.0)) fail(ErrorKind::parameter, "base disk radius must be positive");
    if (mode == Mode::general && !normal_speed) fail(ErrorKind::parameter, "general variation needs a normal speed");
    double peak = 0.0;
    for (int k = 0; k < 256; ++k) peak = std::max(peak, std::abs(speed(2.0 * pi * k / 256.0)));
    if (std::abs(epsilon) * peak > radius / 10.0) {
        fail(ErrorKind::domain, "perturbation too large: the varied domain may leave the star-shaped class");
    }
}

double disk_normal_derivative(cplx z, cplx a, double R) {
    return -(R * R - std::norm(a)) / (2.0 * pi * R * std::norm(z - a));
}

namespace {

double disk_green(cplx z, cplx a, double R) {
    return -std::log(std::abs(R * (z - a) / (R * R - z * std::conj(a)))) / (2.0 * pi);
}

double disk_h0(cplx a, double R) { return std::log((R * R - std::norm(a)) / R); }

// Harmonic function on the perturbed disk with boundary values log|zeta - a|, at z.
double collocated_regular_part(const BoundaryVariation& var, double eps, cplx z, cplx a, std::size_t degree) {
    const double R = var.radius;
    const std::size_t nodes = 4 * degree;
    const auto rows = static_cast<Eigen::Index>(nodes);
    const auto cols = static_cast<Eigen::Index>(2 * degree + 1);
    Eigen::MatrixXd A(rows, cols);
    Eigen::VectorXd b(rows);
    for (std::size_t k = 0; k < nodes; ++k) {
        const double th = 2.0 * pi * static_cast<double>(k) / static_cast<double>(nodes);
        const cplx zeta = std::polar(R + eps * var.speed(th), th);
        const cplx u = zeta / R;
        const auto r = static_cast<Eigen::Index>(k);
        A(r, 0) = 1.0;
        cplx p = 1.0;
        for (std::size_t m = 1; m <= degree; ++m) {
            p *= u;
            A(r, static_cast<Eigen::Index>(2 * m - 1)) = p.real();
            A(r, static_cast<Eigen::Index>(2 * m)) = p.imag();
        }
        b(r) = std::log(std::abs(zeta - a));
    }
    const Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
    const cplx u = z / R;
    double value = c(0);
    cplx p = 1.0;
    for (std::size_t m = 1; m <= degree; ++m) {
        p *= u;
        value += c(static_cast<Eigen::Index>(2 * m - 1)) * p.real() + c(static_cast<Eigen::Index>(2 * m)) * p.imag();
    }
    return value;
}

void assert_normalization(cplx a, double R, std::size_t n) {
    double flux = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx z = std::polar(R, 2.0 * pi * static_cast<double>(k) / static_cast<double>(n));
        flux -= disk_normal_derivative(z, a, R);
    }
    flux *= 2.0 * pi * R / static_cast<double>(n);
    if (std::abs(flux - 1.0) > 1e-8) {
        fail(ErrorKind::normalization, "boundary flux of the Green function differs from 1; refine n");
    }
}

void require_inside(cplx p, double R, const char* name) {
    require_finite(p, name);
    if (std::abs(p) >= R) fail(ErrorKind::domain, std::string(name) + " is not inside the disk");
}

template <class F>
double difference(F&& value, double eps, Difference scheme) {
    if (scheme == Difference::central) return (value(eps) - value(-eps)) / (2.0 * eps);
    return (value(eps) - value(0.0)) / eps;
}

double boundary_sum(const std::function<double(cplx, double)>& f, double R, std::size_t n) {
    std::vector<double> terms(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double th = 2.0 * pi * static_cast<double>(k) / static_cast<double>(n);
        terms[k] = f(std::polar(R, th), th);
    }
    return ordered_sum<double>(terms) * 2.0 * pi * R / static_cast<double>(n);
}

}  // namespace

double perturbed_disk_green(const BoundaryVariation& var, double eps, cplx z, cplx a, std::size_t degree) {
    const double R = var.radius;
    switch (var.mode) {
        case BoundaryVariation::Mode::dilation: return disk_green(z, a, R + eps);
        case BoundaryVariation::Mode::translation: return disk_green(z - eps, a - eps, R);
        case BoundaryVariation::Mode::general: break;
    }
    if (z == a) fail(ErrorKind::pole, "Green function at its pole");
    return (-std::log(std::abs(z - a)) + collocated_regular_part(var, eps, z, a, degree)) / (2.0 * pi);
}

double perturbed_disk_h0(const BoundaryVariation& var, double eps, cplx a, std::size_t degree) {
    const double R = var.radius;
    switch (var.mode) {
        case BoundaryVariation::Mode::dilation: return disk_h0(a, R + eps);
        case BoundaryVariation::Mode::translation: return disk_h0(a - eps, R);
        case BoundaryVariation::Mode::general: break;
    }
    return collocated_regular_part(var, eps, a, a, degree);
}

VariationPair hadamard_delta_green(const BoundaryVariation& var, cplx a, cplx b, std::size_t n, Difference scheme) {
    var.validate();
    const double R = var.radius;
    require_inside(a, R, "a");
    require_inside(b, R, "b");
    if (a == b) fail(ErrorKind::pole, "Hadamard variation needs distinct points");
    if (n < 16) fail(ErrorKind::parameter, "boundary rule needs at least 16 nodes");
    assert_normalization(a, R, n);
    assert_normalization(b, R, n);
    const double lhs =
        difference([&](double e) { return perturbed_disk_green(var, e, a, b); }, var.epsilon, scheme);
    const double rhs = boundary_sum(
        [&](cplx z, double th) {
            return disk_normal_derivative(z, a, R) * disk_normal_derivative(z, b, R) * var.speed(th);
        },
        R, n);
    return {lhs, rhs};
}

VariationPair hadamard_delta_h0(const BoundaryVariation& var, cplx a, std::size_t n, Difference scheme) {
    var.validate();
    const double R = var.radius;
    require_inside(a, R, "a");
    if (n < 16) fail(ErrorKind::parameter, "boundary rule needs at least 16 nodes");
    assert_normalization(a, R, n);
    const double lhs = difference([&](double e) { return perturbed_disk_h0(var, e, a); }, var.epsilon, scheme);
    const double rhs = 2.0 * pi * boundary_sum(
                                      [&](cplx z, double th) {
                                          const double d = disk_normal_derivative(z, a, R);
                                          return d * d * var.speed(th);
                                      },
                                      R, n);
    return {lhs, rhs};
}

double triple_green(cplx a, cplx b, cplx c, std::size_t n) {
    require_inside(a, 1.0, "a");
    require_inside(b, 1.0, "b");
    require_inside(c, 1.0, "c");
    if (n < 16) fail(ErrorKind::parameter, "boundary rule needs at least 16 nodes");
    for (cplx p : {a, b, c}) assert_normalization(p, 1.0, n);
    return boundary_sum(
        [&](cplx z, double) {
            return disk_normal_derivative(z, a, 1.0) * disk_normal_derivative(z, b, 1.0) *
                   disk_normal_derivative(z, c, 1.0);
        },
        1.0, n);
}

}  // namespace potkit
