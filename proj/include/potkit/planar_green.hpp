#pragma once

#include <memory>
#include <string>
#include <vector>

#include "potkit/numkit.hpp"

namespace potkit {

// Canonical planar domains. Rectangles occupy [0,w] x [0,h]; the slit plane is
// the complement of the ray (-inf, 0]; the half-plane is Im z > 0; the periodic
// strip is -1/2 < Re z < 0 with Im z taken modulo Im tau.
struct DomainDescriptor {
    enum class Kind { disk, half_plane, slit_plane, rectangle, periodic_strip };

    Kind kind = Kind::disk;
    double radius = 1.0;
    double width = 1.0;
    double height = 1.0;
    std::size_t grid = 128;  // cells along the width for the rectangle oracle
    double strip_period = 2.0;

    static DomainDescriptor disk(double R = 1.0);
    static DomainDescriptor half_plane();
    static DomainDescriptor slit_plane();
    static DomainDescriptor rectangle(double w, double h, std::size_t grid = 128);
    static DomainDescriptor periodic_strip(double period);

    [[nodiscard]] bool contains(cplx z) const;
    // Euclidean distance to the boundary.
    [[nodiscard]] double boundary_distance(cplx z) const;
    [[nodiscard]] bool is_convex() const;
    void validate() const;
};

std::string kind_name(DomainDescriptor::Kind kind);

struct GreenExpansion {
    double h0 = 0.0;
    cplx h1{};
    double curvature = 0.0;
};

// Green function with the physics normalization G = (1/2pi)(-log|z-a| + H).
double green(const DomainDescriptor& dom, cplx z, cplx a);

// Regular part H(z,a) = 2 pi G(z,a) + log|z-a|.
double regular_part(const DomainDescriptor& dom, cplx z, cplx a);

// dG/dz for the closed-form kinds (disk, half-plane, slit plane).
cplx green_dz(const DomainDescriptor& dom, cplx z, cplx a);

// 2 dH/dz (z, a); at z = a this is h1(a).
cplx regular_part_2dz(const DomainDescriptor& dom, cplx z, cplx a);

GreenExpansion robin_data(const DomainDescriptor& dom, cplx a);

// h1 from the boundary integral 4 pi i * contour integral of (dG/dz)^2 dz.
struct ContourEstimate {
    cplx value;
    double truncation_error = 0.0;
};
ContourEstimate h1_contour(const DomainDescriptor& dom, cplx a, std::size_t n, Exec exec = Exec::parallel);

double poisson_value(const RealFn& boundary_data, cplx a, double R, std::size_t n, Exec exec = Exec::parallel);

struct MapJet {
    cplx derivative;         // f'(a~)
    cplx second_derivative;  // f''(a~)
};
GreenExpansion conformal_transport(const GreenExpansion& src, const MapJet& jet);

// Curvature e^{2 gamma} Laplacian(gamma) of the metric e^{-gamma}|dz|.
double curvature_of_metric(const RealFn& gamma, cplx z, double h = 1e-3);

// Bergman kernel of the unit disk.
cplx bergman_disk(cplx z, cplx a);

// ---------------------------------------------------------------- rectangle oracle

struct GridField {
    std::size_t nx = 0;  // cells along x
    std::size_t ny = 0;  // cells along y
    double dx = 0.0;
    double dy = 0.0;
    std::vector<double> values;  // (nx+1)*(ny+1), row-major in y

    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return values[j * (nx + 1) + i]; }
    [[nodiscard]] cplx node(std::size_t i, std::size_t j) const {
        return {static_cast<double>(i) * dx, static_cast<double>(j) * dy};
    }
    // Fourth-order Lagrange interpolation from the 4x4 surrounding nodes.
    [[nodiscard]] double interpolate(cplx z) const;
};

// Five-point discrete Laplacian on a rectangle with zero boundary values.
// The factorization is reused across right-hand sides.
class RectangleDirichlet {
public:
    RectangleDirichlet(double w, double h, std::size_t nx, std::size_t ny);
    ~RectangleDirichlet();
    RectangleDirichlet(const RectangleDirichlet&) = delete;
    RectangleDirichlet& operator=(const RectangleDirichlet&) = delete;

    // Discrete Green function with a unit point source at node (i, j).
    [[nodiscard]] GridField point_source(std::size_t i, std::size_t j) const;
    // Discrete harmonic function with the given boundary values.
    [[nodiscard]] GridField harmonic(const RealFn& boundary_values) const;

    [[nodiscard]] std::size_t nx() const noexcept { return nx_; }
    [[nodiscard]] std::size_t ny() const noexcept { return ny_; }

private:
    struct Factor;
    double w_, h_;
    std::size_t nx_, ny_;
    double dx_, dy_;
    std::unique_ptr<Factor> factor_;
};

// Shared, lazily factorized solvers keyed by geometry.
const RectangleDirichlet& rectangle_solver(double w, double h, std::size_t nx, std::size_t ny);

// fd Green function on the rectangle grid of `dom` with the source at node a.
GridField fd_dirichlet_green(const DomainDescriptor& dom, cplx a);

}  // namespace potkit
