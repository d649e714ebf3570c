#include "potkit/planar_green.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "potkit/schottky.hpp"

namespace potkit {

// ---------------------------------------------------------------- descriptor

DomainDescriptor DomainDescriptor::disk(double R) {
    DomainDescriptor d;
    d.kind = Kind::disk;
    d.radius = R;
    d.validate();
    return d;
}

DomainDescriptor DomainDescriptor::half_plane() {
    DomainDescriptor d;
    d.kind = Kind::half_plane;
    return d;
}

DomainDescriptor DomainDescriptor::slit_plane() {
    DomainDescriptor d;
    d.kind = Kind::slit_plane;
    return d;
}

DomainDescriptor DomainDescriptor::rectangle(double w, double h, std::size_t grid) {
    DomainDescriptor d;
    d.kind = Kind::rectangle;
    d.width = w;
    d.height = h;
    d.grid = grid;
    d.validate();
    return d;
}

DomainDescriptor DomainDescriptor::periodic_strip(double period) {
    DomainDescriptor d;
    d.kind = Kind::periodic_strip;
    d.strip_period = period;
    d.validate();
    return d;
}

void DomainDescriptor::validate() const {
    switch (kind) {
        case Kind::disk:
            if (!(radius > 0.0)) fail(ErrorKind::parameter, "disk radius must be positive");
            break;
        case Kind::rectangle:
            if (!(width > 0.0 && height > 0.0)) fail(ErrorKind::parameter, "rectangle sides must be positive");
            if (grid < 8) fail(ErrorKind::parameter, "rectangle grid must have at least 8 cells");
            break;
        case Kind::periodic_strip:
            if (!(strip_period > 0.0)) fail(ErrorKind::parameter, "strip period must be positive");
            break;
        default: break;
    }
}

std::string kind_name(DomainDescriptor::Kind kind) {
    switch (kind) {
        case DomainDescriptor::Kind::disk: return "disk";
        case DomainDescriptor::Kind::half_plane: return "half_plane";
        case DomainDescriptor::Kind::slit_plane: return "slit_plane";
        case DomainDescriptor::Kind::rectangle: return "rectangle";
        case DomainDescriptor::Kind::periodic_strip: return "periodic_strip";
    }
    return "unknown";
}

bool DomainDescriptor::contains(cplx z) const {
    if (!is_finite(z)) return false;
    switch (kind) {
        case Kind::disk: return std::abs(z) < radius;
        case Kind::half_plane: return z.imag() > 0.0;
        case Kind::slit_plane: return !(z.imag() == 0.0 && z.real() <= 0.0);
        case Kind::rectangle: return z.real() > 0.0 && z.real() < width && z.imag() > 0.0 && z.imag() < height;
        case Kind::periodic_strip: return z.real() > -0.5 && z.real() < 0.0;
    }
    return false;
}

double DomainDescriptor::boundary_distance(cplx z) const {
    switch (kind) {
        case Kind::disk: return radius - std::abs(z);
        case Kind::half_plane: return z.imag();
        case Kind::slit_plane: return z.real() >= 0.0 ? std::abs(z) : std::abs(z.imag());
        case Kind::rectangle:
            return std::min({z.real(), width - z.real(), z.imag(), height - z.imag()});
        case Kind::periodic_strip: return std::min(-z.real(), z.real() + 0.5);
    }
    return 0.0;
}

bool DomainDescriptor::is_convex() const { return kind != Kind::slit_plane; }

namespace {

void require_interior(const DomainDescriptor& dom, cplx p, const char* name) {
    require_finite(p, name);
    if (!dom.contains(p)) {
        std::ostringstream msg;
        msg << name << " = (" << p.real() << ", " << p.imag() << ") is not inside the " << kind_name(dom.kind);
        fail(ErrorKind::domain, msg.str());
    }
}

void require_distinct(cplx z, cplx a) {
    if (z == a) fail(ErrorKind::pole, "Green function evaluated at its pole");
}

cplx principal_sqrt(cplx z) { return std::sqrt(z); }

StripDouble strip_for(const DomainDescriptor& dom) { return StripDouble(dom.strip_period); }

// Rectangle regular part: harmonic extension of log|z-a| with Richardson in the grid.
std::size_t rect_ny(const DomainDescriptor& dom, std::size_t nx) {
    return std::max<std::size_t>(8, static_cast<std::size_t>(std::lround(dom.height / dom.width * static_cast<double>(nx))));
}

double rectangle_regular_part(const DomainDescriptor& dom, cplx z, cplx a) {
    auto level = [&](std::size_t nx) {
        const auto& solver = rectangle_solver(dom.width, dom.height, nx, rect_ny(dom, nx));
        const GridField u = solver.harmonic([a](cplx b) { return std::log(std::abs(b - a)); });
        return u.interpolate(z);
    };
    const double coarse = level(dom.grid);
    const double fine = level(2 * dom.grid);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

// ---------------------------------------------------------------- Green functions

double regular_part(const DomainDescriptor& dom, cplx z, cplx a) {
    require_interior(dom, a, "a");
    switch (dom.kind) {
        case DomainDescriptor::Kind::disk: {
            const double R = dom.radius;
            return std::log(std::abs(R * R - z * std::conj(a))) - std::log(R);
        }
        case DomainDescriptor::Kind::half_plane: return std::log(std::abs(z - std::conj(a)));
        case DomainDescriptor::Kind::slit_plane: {
            const cplx w = principal_sqrt(z);
            const cplx wa = principal_sqrt(a);
            return std::log(std::abs(w + std::conj(wa))) + std::log(std::abs(w + wa));
        }
        case DomainDescriptor::Kind::rectangle: return rectangle_regular_part(dom, z, a);
        case DomainDescriptor::Kind::periodic_strip: {
            if (z == a) return strip_for(dom).robin_electro(a);
            return 2.0 * pi * green(dom, z, a) + std::log(std::abs(z - a));
        }
    }
    return 0.0;
}

double green(const DomainDescriptor& dom, cplx z, cplx a) {
    require_interior(dom, a, "a");
    require_finite(z, "z");
    require_distinct(z, a);
    switch (dom.kind) {
        case DomainDescriptor::Kind::disk: {
            if (std::abs(z) > dom.radius) fail(ErrorKind::domain, "z outside the disk");
            const double R = dom.radius;
            return -std::log(std::abs(R * (z - a) / (R * R - z * std::conj(a)))) / (2.0 * pi);
        }
        case DomainDescriptor::Kind::half_plane:
            if (z.imag() < 0.0) fail(ErrorKind::domain, "z below the real axis");
            return -std::log(std::abs((z - a) / (z - std::conj(a)))) / (2.0 * pi);
        case DomainDescriptor::Kind::slit_plane: {
            const cplx w = principal_sqrt(z);
            const cplx wa = principal_sqrt(a);
            return -std::log(std::abs((w - wa) / (w + std::conj(wa)))) / (2.0 * pi);
        }
        case DomainDescriptor::Kind::rectangle: {
            if (z.real() < 0.0 || z.real() > dom.width || z.imag() < 0.0 || z.imag() > dom.height) {
                fail(ErrorKind::domain, "z outside the rectangle");
            }
            return (-std::log(std::abs(z - a)) + rectangle_regular_part(dom, z, a)) / (2.0 * pi);
        }
        case DomainDescriptor::Kind::periodic_strip: return strip_for(dom).green_electro(z, a);
    }
    return 0.0;
}

cplx green_dz(const DomainDescriptor& dom, cplx z, cplx a) {
    require_interior(dom, a, "a");
    require_distinct(z, a);
    switch (dom.kind) {
        case DomainDescriptor::Kind::disk: {
            const double R = dom.radius;
            return -(1.0 / (z - a) + std::conj(a) / (R * R - z * std::conj(a))) / (4.0 * pi);
        }
        case DomainDescriptor::Kind::half_plane:
            return -(1.0 / (z - a) - 1.0 / (z - std::conj(a))) / (4.0 * pi);
        case DomainDescriptor::Kind::slit_plane: {
            const cplx w = principal_sqrt(z);
            const cplx wa = principal_sqrt(a);
            return -(1.0 / (w - wa) - 1.0 / (w + std::conj(wa))) / (8.0 * pi * w);
        }
        case DomainDescriptor::Kind::periodic_strip: return strip_for(dom).green_electro_dz(z, a);
        case DomainDescriptor::Kind::rectangle: break;
    }
    fail(ErrorKind::domain, "no closed-form gradient for the " + kind_name(dom.kind));
}

cplx regular_part_2dz(const DomainDescriptor& dom, cplx z, cplx a) {
    require_interior(dom, a, "a");
    switch (dom.kind) {
        case DomainDescriptor::Kind::disk: {
            const double R = dom.radius;
            return -std::conj(a) / (R * R - z * std::conj(a));
        }
        case DomainDescriptor::Kind::half_plane: return 1.0 / (z - std::conj(a));
        case DomainDescriptor::Kind::slit_plane: {
            const cplx w = principal_sqrt(z);
            const cplx wa = principal_sqrt(a);
            return (1.0 / (w + std::conj(wa)) + 1.0 / (w + wa)) / (2.0 * w);
        }
        default: break;
    }
    fail(ErrorKind::domain, "no closed-form regular-part gradient for the " + kind_name(dom.kind));
}

GreenExpansion robin_data(const DomainDescriptor& dom, cplx a) {
    require_interior(dom, a, "a");
    if (dom.boundary_distance(a) < 1e-9) fail(ErrorKind::conditioning, "point within 1e-9 of the boundary");
    GreenExpansion out;
    out.curvature = -4.0;
    switch (dom.kind) {
        case DomainDescriptor::Kind::disk: {
            const double R = dom.radius;
            const double s = R * R - std::norm(a);
            out.h0 = std::log(s / R);
            out.h1 = -std::conj(a) / s;
            return out;
        }
        case DomainDescriptor::Kind::half_plane:
            out.h0 = std::log(2.0 * a.imag());
            out.h1 = -I / (2.0 * a.imag());
            return out;
        case DomainDescriptor::Kind::slit_plane: {
            const cplx w = principal_sqrt(a);
            out.h0 = std::log(4.0 * w.real() * std::abs(w));
            out.h1 = (1.0 / (2.0 * w.real()) + 1.0 / (2.0 * w)) / (2.0 * w);
            return out;
        }
        case DomainDescriptor::Kind::rectangle: {
            auto h0 = [&](cplx p) { return rectangle_regular_part(dom, p, p); };
            const double step = std::min(1e-3, 0.25 * dom.boundary_distance(a));
            out.h0 = h0(a);
            const double hx = (h0(a + step) - h0(a - step)) / (2.0 * step);
            const double hy = (h0(a + I * step) - h0(a - I * step)) / (2.0 * step);
            out.h1 = 0.5 * cplx(hx, -hy);
            const double kstep = std::min(2e-2, 0.25 * dom.boundary_distance(a));
            out.curvature = std::exp(2.0 * out.h0) * laplacian(h0, a, kstep, true);
            return out;
        }
        case DomainDescriptor::Kind::periodic_strip: {
            const StripDouble strip = strip_for(dom);
            out.h0 = strip.robin_electro(a);
            out.h1 = strip.robin_electro_2dz(a);
            out.curvature = std::exp(2.0 * out.h0) * laplacian([&](cplx p) { return strip.robin_electro(p); }, a,
                                                               std::min(1e-2, 0.25 * dom.boundary_distance(a)), true);
            return out;
        }
    }
    return out;
}

ContourEstimate h1_contour(const DomainDescriptor& dom, cplx a, std::size_t n, Exec exec) {
    require_interior(dom, a, "a");
    auto integrand = [&](cplx z) {
        const cplx g = green_dz(dom, z, a);
        return g * g;
    };
    if (dom.kind == DomainDescriptor::Kind::disk) {
        const Curve c = Curve::circle(0.0, dom.radius, n);
        return {4.0 * pi * I * contour_integral(integrand, c, n, exec), 0.0};
    }
    if (dom.kind == DomainDescriptor::Kind::half_plane) {
        // real axis, left to right, truncated at |x - Re a| = L via x = Re a + y sinh(u)
        const double y = a.imag();
        const double L = 200.0 * (1.0 + std::abs(a));
        const double U = std::asinh(L / y);
        const std::size_t panels = std::max<std::size_t>(8, n / 16);
        const GaussRule& g = gauss_legendre(16);
        auto panel = [&](std::size_t p) {
            const double u0 = -U + 2.0 * U * static_cast<double>(p) / static_cast<double>(panels);
            const double du = 2.0 * U / static_cast<double>(panels);
            cplx acc{};
            for (std::size_t k = 0; k < g.nodes.size(); ++k) {
                const double u = u0 + 0.5 * du * (g.nodes[k] + 1.0);
                const cplx x{a.real() + y * std::sinh(u), 0.0};
                acc += g.weights[k] * integrand(x) * y * std::cosh(u);
            }
            return 0.5 * du * acc;
        };
        auto parts = parallel_map(panels, panel, exec);
        const cplx value = 4.0 * pi * I * ordered_sum<cplx>(parts);
        // |(dG/dz)^2| ~ y^2 / (4 pi^2 x^4) beyond the cut
        const double tail = 4.0 * pi * 2.0 * y * y / (4.0 * pi * pi) / (3.0 * L * L * L);
        return {value, tail};
    }
    fail(ErrorKind::domain, "no boundary contour available for the " + kind_name(dom.kind));
}

double poisson_value(const RealFn& boundary_data, cplx a, double R, std::size_t n, Exec exec) {
    if (!(R > 0.0) || std::abs(a) >= R) fail(ErrorKind::domain, "Poisson evaluation point outside the disk");
    if (n < 16) fail(ErrorKind::parameter, "Poisson rule needs at least 16 nodes");
    const double r2 = std::norm(a);
    auto term = [&](std::size_t k) {
        const cplx z = std::polar(R, 2.0 * pi * static_cast<double>(k) / static_cast<double>(n));
        const double u = boundary_data(z);
        if (!std::isfinite(u)) fail(ErrorKind::evaluation, "non-finite boundary datum");
        return u * (R * R - r2) / std::norm(z - a);
    };
    auto values = parallel_map(n, term, exec);
    return ordered_sum<double>(values) / static_cast<double>(n);
}

GreenExpansion conformal_transport(const GreenExpansion& src, const MapJet& jet) {
    if (std::abs(jet.derivative) < 1e-300 || !is_finite(jet.derivative) || !is_finite(jet.second_derivative)) {
        fail(ErrorKind::singular_map, "map derivative vanishes at the expansion point");
    }
    GreenExpansion out;
    out.h0 = src.h0 + std::log(std::abs(jet.derivative));
    out.h1 = (src.h1 + jet.second_derivative / (2.0 * jet.derivative)) / jet.derivative;
    out.curvature = src.curvature;
    return out;
}

double curvature_of_metric(const RealFn& gamma, cplx z, double h) {
    return std::exp(2.0 * gamma(z)) * laplacian(gamma, z, h, true);
}

cplx bergman_disk(cplx z, cplx a) {
    const cplx d = 1.0 - z * std::conj(a);
    return 1.0 / (pi * d * d);
}

// ---------------------------------------------------------------- rectangle oracle

double GridField::interpolate(cplx z) const {
    const double fx = z.real() / dx;
    const double fy = z.imag() / dy;
    auto start = [](double f, std::size_t n) {
        const long s = static_cast<long>(std::floor(f)) - 1;
        return static_cast<std::size_t>(std::clamp<long>(s, 0, static_cast<long>(n) - 3));
    };
    const std::size_t i0 = start(fx, nx);
    const std::size_t j0 = start(fy, ny);
    auto weights = [](double f, std::size_t s) {
        std::array<double, 4> w{};
        for (std::size_t k = 0; k < 4; ++k) {
            double v = 1.0;
            for (std::size_t l = 0; l < 4; ++l) {
                if (l == k) continue;
                v *= (f - static_cast<double>(s + l)) / (static_cast<double>(k) - static_cast<double>(l));
            }
            w[k] = v;
        }
        return w;
    };
    const auto wx = weights(fx, i0);
    const auto wy = weights(fy, j0);
    double sum = 0.0;
    for (std::size_t b = 0; b < 4; ++b) {
        for (std::size_t c = 0; c < 4; ++c) sum += wx[c] * wy[b] * at(i0 + c, j0 + b);
    }
    return sum;
}

struct RectangleDirichlet::Factor {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
};

RectangleDirichlet::RectangleDirichlet(double w, double h, std::size_t nx, std::size_t ny)
    : w_(w), h_(h), nx_(nx), ny_(ny), dx_(w / static_cast<double>(nx)), dy_(h / static_cast<double>(ny)),
      factor_(std::make_unique<Factor>()) {
    if (nx < 4 || ny < 4) fail(ErrorKind::solver, "degenerate rectangle grid");
    const std::size_t mx = nx - 1;
    const std::size_t my = ny - 1;
    const auto n = static_cast<Eigen::Index>(mx * my);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(n) * 5);
    const double cx = 1.0 / (dx_ * dx_);
    const double cy = 1.0 / (dy_ * dy_);
    auto id = [mx](std::size_t i, std::size_t j) { return static_cast<Eigen::Index>((j - 1) * mx + (i - 1)); };
    for (std::size_t j = 1; j <= my; ++j) {
        for (std::size_t i = 1; i <= mx; ++i) {
            const auto r = id(i, j);
            trip.emplace_back(r, r, 2.0 * cx + 2.0 * cy);
            if (i > 1) trip.emplace_back(r, id(i - 1, j), -cx);
            if (i < mx) trip.emplace_back(r, id(i + 1, j), -cx);
            if (j > 1) trip.emplace_back(r, id(i, j - 1), -cy);
            if (j < my) trip.emplace_back(r, id(i, j + 1), -cy);
        }
    }
    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(trip.begin(), trip.end());
    factor_->ldlt.compute(A);
    if (factor_->ldlt.info() != Eigen::Success) fail(ErrorKind::solver, "rectangle Laplacian factorization failed");
}

RectangleDirichlet::~RectangleDirichlet() = default;

GridField RectangleDirichlet::point_source(std::size_t i, std::size_t j) const {
    if (i == 0 || j == 0 || i >= nx_ || j >= ny_) fail(ErrorKind::domain, "point source must sit on an interior node");
    const std::size_t mx = nx_ - 1;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mx * (ny_ - 1)));
    rhs(static_cast<Eigen::Index>((j - 1) * mx + (i - 1))) = 1.0 / (dx_ * dy_);
    const Eigen::VectorXd sol = factor_->ldlt.solve(rhs);
    if (factor_->ldlt.info() != Eigen::Success) fail(ErrorKind::solver, "rectangle solve failed");
    GridField g{nx_, ny_, dx_, dy_, std::vector<double>((nx_ + 1) * (ny_ + 1), 0.0)};
    for (std::size_t jj = 1; jj < ny_; ++jj) {
        for (std::size_t ii = 1; ii < nx_; ++ii) {
            g.values[jj * (nx_ + 1) + ii] = sol(static_cast<Eigen::Index>((jj - 1) * mx + (ii - 1)));
        }
    }
    return g;
}

GridField RectangleDirichlet::harmonic(const RealFn& boundary_values) const {
    GridField g{nx_, ny_, dx_, dy_, std::vector<double>((nx_ + 1) * (ny_ + 1), 0.0)};
    for (std::size_t i = 0; i <= nx_; ++i) {
        g.values[i] = boundary_values(g.node(i, 0));
        g.values[ny_ * (nx_ + 1) + i] = boundary_values(g.node(i, ny_));
    }
    for (std::size_t j = 0; j <= ny_; ++j) {
        g.values[j * (nx_ + 1)] = boundary_values(g.node(0, j));
        g.values[j * (nx_ + 1) + nx_] = boundary_values(g.node(nx_, j));
    }
    const std::size_t mx = nx_ - 1;
    const double cx = 1.0 / (dx_ * dx_);
    const double cy = 1.0 / (dy_ * dy_);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mx * (ny_ - 1)));
    for (std::size_t j = 1; j < ny_; ++j) {
        for (std::size_t i = 1; i < nx_; ++i) {
            double b = 0.0;
            if (i == 1) b += cx * g.at(0, j);
            if (i == nx_ - 1) b += cx * g.at(nx_, j);
            if (j == 1) b += cy * g.at(i, 0);
            if (j == ny_ - 1) b += cy * g.at(i, ny_);
            rhs(static_cast<Eigen::Index>((j - 1) * mx + (i - 1))) = b;
        }
    }
    const Eigen::VectorXd sol = factor_->ldlt.solve(rhs);
    for (std::size_t j = 1; j < ny_; ++j) {
        for (std::size_t i = 1; i < nx_; ++i) {
            g.values[j * (nx_ + 1) + i] = sol(static_cast<Eigen::Index>((j - 1) * mx + (i - 1)));
        }
    }
    return g;
}

const RectangleDirichlet& rectangle_solver(double w, double h, std::size_t nx, std::size_t ny) {
    static std::mutex mutex;
    static std::map<std::tuple<double, double, std::size_t, std::size_t>, std::unique_ptr<RectangleDirichlet>> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(w, h, nx, ny);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<RectangleDirichlet>(w, h, nx, ny)).first;
    return *it->second;
}

GridField fd_dirichlet_green(const DomainDescriptor& dom, cplx a) {
    if (dom.kind != DomainDescriptor::Kind::rectangle) fail(ErrorKind::domain, "fd oracle needs a rectangle");
    const std::size_t nx = dom.grid;
    const std::size_t ny = rect_ny(dom, nx);
    const double dx = dom.width / static_cast<double>(nx);
    const double dy = dom.height / static_cast<double>(ny);
    if (std::max(dx, dy) > std::min(dom.width, dom.height) / 32.0 + 1e-15) {
        fail(ErrorKind::parameter, "grid spacing must not exceed min(w,h)/32");
    }
    const double fi = a.real() / dx;
    const double fj = a.imag() / dy;
    const double ri = std::round(fi);
    const double rj = std::round(fj);
    if (std::abs(fi - ri) > 1e-9 || std::abs(fj - rj) > 1e-9) fail(ErrorKind::domain, "source must be a grid node");
    return rectangle_solver(dom.width, dom.height, nx, ny)
        .point_source(static_cast<std::size_t>(ri), static_cast<std::size_t>(rj));
}

}  // namespace potkit
