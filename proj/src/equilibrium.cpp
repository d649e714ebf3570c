#include "potkit/equilibrium.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace potkit {

// ---------------------------------------------------------------- carrier sets

CompactSet CompactSet::circle(double R) {
    CompactSet k;
    k.kind = Kind::circle;
    k.radius = R;
    k.validate();
    return k;
}

CompactSet CompactSet::disk(double R) {
    CompactSet k = circle(R);
    k.kind = Kind::disk;
    return k;
}

CompactSet CompactSet::segment(double length) {
    CompactSet k;
    k.kind = Kind::segment;
    k.length = length;
    k.validate();
    return k;
}

CompactSet CompactSet::rectangle_boundary(double w, double h) {
    CompactSet k;
    k.kind = Kind::rectangle_boundary;
    k.width = w;
    k.height = h;
    k.validate();
    return k;
}

CompactSet CompactSet::disk_complement(double R) {
    CompactSet k = circle(R);
    k.kind = Kind::disk_complement;
    return k;
}

void CompactSet::validate() const {
    const bool ok = kind == Kind::segment              ? length > 0.0
                    : kind == Kind::rectangle_boundary ? (width > 0.0 && height > 0.0)
                                                       : radius > 0.0;
    if (!ok) fail(ErrorKind::parameter, "compact set parameters must be positive");
}

std::string kind_name(CompactSet::Kind kind) {
    switch (kind) {
        case CompactSet::Kind::circle: return "circle";
        case CompactSet::Kind::disk: return "disk";
        case CompactSet::Kind::segment: return "segment";
        case CompactSet::Kind::rectangle_boundary: return "rectangle_boundary";
        case CompactSet::Kind::disk_complement: return "disk_complement";
    }
    return "unknown";
}

namespace {

struct RectangleEdge {
    cplx start;
    cplx direction;  // unit
    double s0;       // arclength offset
};

std::array<RectangleEdge, 4> rectangle_edges(double w, double h) {
    return {{{0.0, 1.0, 0.0}, {w, I, w}, {cplx(w, h), -1.0, w + h}, {cplx(0.0, h), -I, 2.0 * w + h}}};
}

std::size_t rectangle_edge_index(double s, double w, double h) {
    if (s < w) return 0;
    if (s < w + h) return 1;
    if (s < 2.0 * w + h) return 2;
    return 3;
}

double wrap_unit(double t) { return t - std::floor(t); }

}  // namespace

cplx CompactSet::point(double t) const {
    switch (kind) {
        case Kind::segment: return -0.5 * length * std::cos(pi * t);
        case Kind::rectangle_boundary: {
            const double P = 2.0 * (width + height);
            const double s = wrap_unit(t) * P;
            const auto e = rectangle_edges(width, height)[rectangle_edge_index(s, width, height)];
            return e.start + (s - e.s0) * e.direction;
        }
        default: return std::polar(radius, 2.0 * pi * t);
    }
}

cplx CompactSet::tangent(double t) const {
    switch (kind) {
        case Kind::segment: return 0.5 * length * pi * std::sin(pi * t);
        case Kind::rectangle_boundary: {
            const double P = 2.0 * (width + height);
            const double s = wrap_unit(t) * P;
            return P * rectangle_edges(width, height)[rectangle_edge_index(s, width, height)].direction;
        }
        default: return 2.0 * pi * I * std::polar(radius, 2.0 * pi * t);
    }
}

cplx CompactSet::second_derivative(double t) const {
    switch (kind) {
        case Kind::segment: return 0.5 * length * pi * pi * std::cos(pi * t);
        case Kind::rectangle_boundary: return 0.0;
        default: return -4.0 * pi * pi * std::polar(radius, 2.0 * pi * t);
    }
}

bool CompactSet::contains(cplx z, double tol) const {
    switch (kind) {
        case Kind::circle: return std::abs(std::abs(z) - radius) <= tol * (1.0 + radius);
        case Kind::disk: return std::abs(z) <= radius * (1.0 + tol);
        case Kind::disk_complement: return std::abs(z) >= radius * (1.0 - tol);
        case Kind::segment: return std::abs(z.imag()) <= tol && std::abs(z.real()) <= 0.5 * length * (1.0 + tol);
        case Kind::rectangle_boundary: {
            const double x = z.real();
            const double y = z.imag();
            const double s = tol * (1.0 + width + height);
            const bool inside = x >= -s && x <= width + s && y >= -s && y <= height + s;
            const bool on_edge = std::abs(x) <= s || std::abs(x - width) <= s || std::abs(y) <= s ||
                                 std::abs(y - height) <= s;
            return inside && on_edge;
        }
    }
    return false;
}

// ---------------------------------------------------------------- measures

double WeightedMeasure::total() const {
    return ordered_sum<double>(weights);
}

double WeightedMeasure::integrate(const RealFn& f) const {
    std::vector<double> terms(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) terms[k] = weights[k] * f(points[k]);
    return ordered_sum<double>(terms);
}

double WeightedMeasure::potential(cplx z) const {
    std::vector<double> terms(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        const double d = std::abs(z - points[k]);
        if (d == 0.0) fail(ErrorKind::pole, "potential evaluated at a carrier point");
        terms[k] = -weights[k] * std::log(d);
    }
    return ordered_sum<double>(terms) / (2.0 * pi);
}

double discrete_energy(std::span<const cplx> points, std::span<const double> strengths) {
    if (points.size() != strengths.size()) fail(ErrorKind::parameter, "points and strengths differ in length");
    std::vector<double> terms;
    terms.reserve(points.size() * points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        require_finite(points[j], "point");
        for (std::size_t k = j + 1; k < points.size(); ++k) {
            const double d = std::abs(points[j] - points[k]);
            if (d == 0.0) fail(ErrorKind::collision, "coincident points in the energy");
            terms.push_back(-2.0 * strengths[j] * strengths[k] * std::log(d));
        }
    }
    return ordered_sum<double>(terms) / (4.0 * pi);
}

// ---------------------------------------------------------------- Fekete points

namespace {

class LogProduct {
public:
    LogProduct(const CompactSet& K, std::size_t n, std::optional<cplx> pole) : K_(K), n_(n), pole_(pole) {}

    // Contribution of point j at parameter t against all other points.
    [[nodiscard]] double partial(std::span<const cplx> z, std::size_t j, double t) const {
        const cplx p = K_.point(t);
        double s = 0.0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (k == j) continue;
            s += std::log(std::abs(p - z[k]));
        }
        if (pole_) s -= static_cast<double>(n_ - 1) * std::log(std::abs(p - *pole_));
        return s;
    }

    [[nodiscard]] double total(std::span<const cplx> z, Exec exec) const {
        auto rows = parallel_map(
            z.size(),
            [&](std::size_t j) {
                double s = 0.0;
                for (std::size_t k = j + 1; k < z.size(); ++k) s += std::log(std::abs(z[j] - z[k]));
                if (pole_) s -= static_cast<double>(n_ - 1) * std::log(std::abs(z[j] - *pole_));
                return s;
            },
            exec);
        return ordered_sum<double>(rows);
    }

private:
    const CompactSet& K_;
    std::size_t n_;
    std::optional<cplx> pole_;
};

double fold_parameter(const CompactSet& K, double t) {
    if (K.periodic()) return wrap_unit(t);
    // x = -(l/2) cos(pi t) is even about t = 0 and t = 1
    double u = std::fmod(std::abs(t), 2.0);
    if (u > 1.0) u = 2.0 - u;
    return u;
}

std::vector<double> leja_start(const CompactSet& K, std::size_t n, std::optional<cplx> pole) {
    const std::size_t C = std::max<std::size_t>(512, 64 * n);
    std::vector<cplx> cand(C);
    std::vector<double> tc(C);
    for (std::size_t c = 0; c < C; ++c) {
        tc[c] = K.periodic() ? static_cast<double>(c) / static_cast<double>(C)
                             : static_cast<double>(c) / static_cast<double>(C - 1);
        cand[c] = K.point(tc[c]);
    }
    std::vector<double> score(C, 0.0);
    if (pole) {
        for (std::size_t c = 0; c < C; ++c) score[c] = -std::log(std::abs(cand[c] - *pole));
    }
    std::vector<double> chosen;
    std::vector<bool> used(C, false);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = C;
        for (std::size_t c = 0; c < C; ++c) {
            if (used[c]) continue;
            if (best == C || score[c] > score[best]) best = c;
        }
        used[best] = true;
        chosen.push_back(tc[best]);
        for (std::size_t c = 0; c < C; ++c) {
            if (used[c]) continue;
            score[c] += std::log(std::abs(cand[c] - cand[best]));
            if (pole) score[c] -= std::log(std::abs(cand[c] - *pole));
        }
    }
    return chosen;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

FeketeResult fekete_points(const CompactSet& K, std::size_t n, std::optional<cplx> pole, const FeketeOptions& opt) {
    K.validate();
    if (n < 2) fail(ErrorKind::parameter, "Fekete problem needs at least two points");
    if (pole) {
        require_finite(*pole, "pole");
        if (K.contains(*pole, 1e-9)) fail(ErrorKind::domain, "finite pole lies on the compact set");
    } else if (K.kind == CompactSet::Kind::disk_complement) {
        fail(ErrorKind::parameter, "the complement of a disk needs a finite pole");
    }
    const LogProduct F(K, n, pole);
    std::vector<double> t = leja_start(K, n, pole);
    std::vector<cplx> z(n);
    auto refresh = [&] {
        for (std::size_t j = 0; j < n; ++j) z[j] = K.point(t[j]);
    };
    refresh();
    double value = F.total(z, opt.exec);

    // cyclic one-point golden-section sweeps
    const double half = 0.5 / static_cast<double>(n);
    for (std::size_t sweep = 0; sweep < opt.max_sweeps; ++sweep) {
        for (std::size_t j = 0; j < n; ++j) {
            auto phi = [&](double s) { return F.partial(z, j, s); };
            const double cur = phi(t[j]);
            const double s = golden_max(phi, t[j] - half, t[j] + half, 1e-12);
            if (phi(s) > cur) {
                t[j] = fold_parameter(K, s);
                z[j] = K.point(t[j]);
            }
        }
        const double next = F.total(z, opt.exec);
        const double gain = next - value;
        value = next;
        if (gain < opt.sweep_gain) break;
    }

    // Newton polish on the parameters
    FeketeResult res;
    auto gradient_hessian = [&](Eigen::VectorXd& g, Eigen::MatrixXd& H) {
        g.setZero(static_cast<Eigen::Index>(n));
        H.setZero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        std::vector<cplx> d1(n), d2(n);
        for (std::size_t j = 0; j < n; ++j) {
            d1[j] = K.tangent(t[j]);
            d2[j] = K.second_derivative(t[j]);
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto J = static_cast<Eigen::Index>(j);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                const cplx inv = 1.0 / (z[j] - z[k]);
                g(J) += std::real(d1[j] * inv);
                H(J, J) += std::real(d2[j] * inv - d1[j] * d1[j] * inv * inv);
                H(J, static_cast<Eigen::Index>(k)) = std::real(d1[j] * d1[k] * inv * inv);
            }
            if (pole) {
                const double c = static_cast<double>(n - 1);
                const cplx inv = 1.0 / (z[j] - *pole);
                g(J) -= c * std::real(d1[j] * inv);
                H(J, J) -= c * std::real(d2[j] * inv - d1[j] * d1[j] * inv * inv);
            }
        }
    };
    Eigen::VectorXd g;
    Eigen::MatrixXd H;
    for (std::size_t it = 0; it < opt.newton_steps; ++it) {
        gradient_hessian(g, H);
        if (g.lpNorm<Eigen::Infinity>() < 1e-11) {
            res.converged = true;
            break;
        }
        const Eigen::MatrixXd A = -H;
        const double shift = 1e-10 * std::max(1.0, A.diagonal().cwiseAbs().maxCoeff());
        const Eigen::VectorXd step =
            (A + shift * Eigen::MatrixXd::Identity(A.rows(), A.cols())).ldlt().solve(g);
        const std::vector<double> t_old = t;
        bool accepted = false;
        for (double lambda = 1.0; lambda > 1e-6; lambda *= 0.5) {
            for (std::size_t j = 0; j < n; ++j) {
                t[j] = fold_parameter(K, t_old[j] + lambda * step(static_cast<Eigen::Index>(j)));
            }
            refresh();
            const double trial = F.total(z, opt.exec);
            if (std::isfinite(trial) && trial >= value - 1e-13 * std::abs(value)) {
                value = std::max(value, trial);
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            t = t_old;
            refresh();
            break;
        }
    }
    if (!res.converged) {
        gradient_hessian(g, H);
        res.converged = g.lpNorm<Eigen::Infinity>() < 1e-8;
    }
    value = F.total(z, opt.exec);
    res.parameters = t;
    res.points = z;
    res.delta_n = std::exp(2.0 * value / (static_cast<double>(n) * static_cast<double>(n - 1)));
    return res;
}

double fekete_delta_bruteforce(const CompactSet& K, std::size_t n, std::size_t grid) {
    if (n < 2 || n > 4) fail(ErrorKind::parameter, "brute force limited to 2 <= n <= 4");
    const std::size_t free = K.periodic() ? n - 1 : n;
    std::vector<std::size_t> idx(free, 0);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<cplx> z(n);
    auto param = [&](std::size_t i) {
        return K.periodic() ? static_cast<double>(i) / static_cast<double>(grid)
                            : static_cast<double>(i) / static_cast<double>(grid - 1);
    };
    while (true) {
        std::size_t off = 0;
        if (K.periodic()) z[off++] = K.point(0.0);
        for (std::size_t i = 0; i < free; ++i) z[off + i] = K.point(param(idx[i]));
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) s += std::log(std::abs(z[j] - z[k]));
        best = std::max(best, s);
        std::size_t pos = 0;
        while (pos < free && ++idx[pos] == grid) idx[pos++] = 0;
        if (pos == free) break;
    }
    return std::exp(2.0 * best / (static_cast<double>(n) * static_cast<double>(n - 1)));
}

CapacityReport transfinite_diameter(const CompactSet& K, std::optional<cplx> pole, std::size_t n_max,
                                    const FeketeOptions& options) {
    if (n_max < 8) fail(ErrorKind::parameter, "n_max must be at least 8");
    CapacityReport rep;
    for (std::size_t n = 8; n <= n_max; n += 4) {
        rep.ladder.push_back(n);
        FeketeResult f = fekete_points(K, n, pole, options);
        rep.delta_n.push_back(f.delta_n);
        rep.points.push_back(std::move(f.points));
    }
    for (std::size_t i = 1; i < rep.delta_n.size(); ++i) {
        if (std::log(rep.delta_n[i]) > std::log(rep.delta_n[i - 1]) + 1e-6) {
            std::ostringstream msg;
            msg << "delta_n ladder increases between n=" << rep.ladder[i - 1] << " and n=" << rep.ladder[i];
            fail(ErrorKind::convergence, msg.str());
        }
    }
    // least-squares fit delta_n = delta + (c0 + c1 log n) / n on the tail of the ladder
    const std::size_t count = rep.delta_n.size();
    const std::size_t use = std::min<std::size_t>(4, count);
    const std::size_t cols = use >= 4 ? 3 : use;
    Eigen::MatrixXd A(static_cast<Eigen::Index>(use), static_cast<Eigen::Index>(cols));
    Eigen::VectorXd b(static_cast<Eigen::Index>(use));
    for (std::size_t i = 0; i < use; ++i) {
        const std::size_t src = count - use + i;
        const double n = static_cast<double>(rep.ladder[src]);
        const auto r = static_cast<Eigen::Index>(i);
        A(r, 0) = 1.0;
        if (cols > 1) A(r, 1) = 1.0 / n;
        if (cols > 2) A(r, 2) = std::log(n) / n;
        b(r) = rep.delta_n[src];
    }
    rep.delta = A.colPivHouseholderQr().solve(b)(0);

    if (pole) {
        rep.gamma = -std::log(rep.delta);
    } else {
        rep.gamma = equilibrium_measure(K, 256).gamma;
    }
    rep.logcap = std::exp(-rep.gamma);
    rep.energy = rep.gamma / (4.0 * pi);
    return rep;
}

// ---------------------------------------------------------------- equilibrium measure

namespace {

std::vector<std::array<double, 2>> make_panels(const CompactSet& K, std::size_t m) {
    std::vector<std::array<double, 2>> panels;
    if (K.kind == CompactSet::Kind::rectangle_boundary) {
        const double P = 2.0 * (K.width + K.height);
        const std::array<double, 4> sides{K.width, K.height, K.width, K.height};
        double s0 = 0.0;
        for (double side : sides) {
            const auto k = std::max<std::size_t>(
                2, static_cast<std::size_t>(std::lround(side / P * static_cast<double>(m))));
            for (std::size_t i = 0; i < k; ++i) {
                panels.push_back({(s0 + side * static_cast<double>(i) / static_cast<double>(k)) / P,
                                  (s0 + side * static_cast<double>(i + 1) / static_cast<double>(k)) / P});
            }
            s0 += side;
        }
        return panels;
    }
    for (std::size_t i = 0; i < m; ++i) {
        panels.push_back({static_cast<double>(i) / static_cast<double>(m),
                          static_cast<double>(i + 1) / static_cast<double>(m)});
    }
    return panels;
}

bool straight_panels(const CompactSet& K) {
    return K.kind == CompactSet::Kind::segment || K.kind == CompactSet::Kind::rectangle_boundary;
}

cplx collocation_point(const CompactSet& K, const std::array<double, 2>& p) {
    if (straight_panels(K)) return 0.5 * (K.point(p[0]) + K.point(p[1]));
    return K.point(0.5 * (p[0] + p[1]));
}

double panel_length(const CompactSet& K, const std::array<double, 2>& p) {
    if (straight_panels(K)) return std::abs(K.point(p[1]) - K.point(p[0]));
    return 2.0 * pi * K.radius * (p[1] - p[0]);
}

// Mean of log(1/|z - zeta|) over the panel with respect to arclength.
double panel_log_mean(const CompactSet& K, const std::array<double, 2>& p, cplx z) {
    const GaussRule& g = gauss_legendre(16);
    if (straight_panels(K)) {
        const cplx a = K.point(p[0]);
        const cplx b = K.point(p[1]);
        double s = 0.0;
        for (std::size_t k = 0; k < g.nodes.size(); ++k) {
            const cplx zeta = a + 0.5 * (g.nodes[k] + 1.0) * (b - a);
            s += 0.5 * g.weights[k] * std::log(std::abs(z - zeta));
        }
        return -s;
    }
    const double h = p[1] - p[0];
    double s = 0.0;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const double t = p[0] + 0.5 * h * (g.nodes[k] + 1.0);
        s += 0.5 * g.weights[k] * std::log(std::abs(z - K.point(t)));
    }
    return -s;
}

// Self term: collocation at the panel midpoint.
double panel_self_mean(const CompactSet& K, const std::array<double, 2>& p) {
    const double L = panel_length(K, p);
    if (straight_panels(K)) return 1.0 - std::log(0.5 * L);
    // arc of radius R and opening D: |chord| = 2R sin(|u|/2) = R|u| * sinc-like factor
    const double R = K.radius;
    const double D = 2.0 * pi * (p[1] - p[0]);
    const GaussRule& g = gauss_legendre(16);
    double smooth = 0.0;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const double u = 0.5 * D * 0.5 * (g.nodes[k] + 1.0);  // half-panel, by symmetry
        smooth += 0.5 * g.weights[k] * std::log(std::sin(0.5 * u) / (0.5 * u));
    }
    return -(std::log(0.5 * R * D) - 1.0 + smooth);
}

}  // namespace

double EquilibriumResult::potential(cplx z) const {
    std::vector<double> terms(panels.size());
    for (std::size_t j = 0; j < panels.size(); ++j) {
        terms[j] = measure.weights[j] * panel_log_mean(set, panels[j], z);
    }
    return ordered_sum<double>(terms) / (2.0 * pi);
}

EquilibriumResult equilibrium_measure(const CompactSet& K, std::size_t m) {
    K.validate();
    if (m < 32) fail(ErrorKind::parameter, "equilibrium discretization needs m >= 32");
    if (K.kind == CompactSet::Kind::disk_complement) {
        fail(ErrorKind::parameter, "the complement of a disk has no equilibrium measure");
    }
    EquilibriumResult res;
    res.set = K;
    res.panels = make_panels(K, m);
    const std::size_t M = res.panels.size();
    std::vector<cplx> nodes(M);
    res.panel_lengths.resize(M);
    for (std::size_t i = 0; i < M; ++i) {
        nodes[i] = collocation_point(K, res.panels[i]);
        res.panel_lengths[i] = panel_length(K, res.panels[i]);
        if (res.panel_lengths[i] < 1e-12) fail(ErrorKind::conditioning, "near-coincident discretization nodes");
    }
    const auto n = static_cast<Eigen::Index>(M);
    Eigen::MatrixXd A(n + 1, n + 1);
    auto rows = parallel_map(M, [&](std::size_t i) {
        std::vector<double> row(M);
        for (std::size_t j = 0; j < M; ++j) {
            row[j] = (i == j ? panel_self_mean(K, res.panels[j]) : panel_log_mean(K, res.panels[j], nodes[i])) /
                     (2.0 * pi);
        }
        return row;
    });
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) A(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        A(i, n) = -1.0;
        A(n, i) = 1.0;
    }
    A(n, n) = 0.0;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    rhs(n) = 1.0;
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double rcond = lu.rcond();
    if (!(rcond > 1e-14)) fail(ErrorKind::conditioning, "equilibrium kernel matrix is ill-conditioned");
    const Eigen::VectorXd sol = lu.solve(rhs);

    res.measure.points = nodes;
    res.measure.weights.assign(sol.data(), sol.data() + n);
    const double level = sol(n);
    res.gamma = 2.0 * pi * level;
    const Eigen::VectorXd w = sol.head(n);
    const Eigen::VectorXd V = A.topLeftCorner(n, n) * w;
    res.energy = 0.5 * w.dot(V);
    res.potential_spread = V.maxCoeff() - V.minCoeff();
    return res;
}

// ---------------------------------------------------------------- harmonic measure

WeightedMeasure harmonic_measure(const DomainDescriptor& domain, cplx a, std::size_t m) {
    domain.validate();
    if (!domain.contains(a)) fail(ErrorKind::domain, "harmonic measure pole outside the domain");
    WeightedMeasure mu;
    if (domain.kind == DomainDescriptor::Kind::disk) {
        if (m < 16) fail(ErrorKind::parameter, "harmonic measure needs at least 16 nodes");
        const double R = domain.radius;
        const double s = R * R - std::norm(a);
        for (std::size_t k = 0; k < m; ++k) {
            const cplx z = std::polar(R, 2.0 * pi * static_cast<double>(k) / static_cast<double>(m));
            mu.points.push_back(z);
            mu.weights.push_back(s / std::norm(z - a) / static_cast<double>(m));
        }
        return mu;
    }
    if (domain.kind == DomainDescriptor::Kind::rectangle) {
        const GridField G = fd_dirichlet_green(domain, a);
        const double rx = G.dy / G.dx;
        const double ry = G.dx / G.dy;
        for (std::size_t i = 1; i < G.nx; ++i) {
            mu.points.push_back(G.node(i, 0));
            mu.weights.push_back(G.at(i, 1) * ry);
        }
        for (std::size_t j = 1; j < G.ny; ++j) {
            mu.points.push_back(G.node(G.nx, j));
            mu.weights.push_back(G.at(G.nx - 1, j) * rx);
        }
        for (std::size_t i = G.nx - 1; i >= 1; --i) {
            mu.points.push_back(G.node(i, G.ny));
            mu.weights.push_back(G.at(i, G.ny - 1) * ry);
        }
        for (std::size_t j = G.ny - 1; j >= 1; --j) {
            mu.points.push_back(G.node(0, j));
            mu.weights.push_back(G.at(1, j) * rx);
        }
        return mu;
    }
    fail(ErrorKind::domain, "harmonic measure is available for the disk and the rectangle only");
}

double condenser_capacity(double r, double R, int n_dim) {
    if (!(r > 0.0) || !(R > r)) fail(ErrorKind::parameter, "condenser radii must satisfy 0 < r < R");
    if (n_dim < 2) fail(ErrorKind::parameter, "dimension must be at least 2");
    if (n_dim == 2) return std::isinf(R) ? 0.0 : 2.0 * pi / std::log(R / r);
    const double n = static_cast<double>(n_dim);
    const double sphere_area = 2.0 * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n);
    const double outer = std::isinf(R) ? 0.0 : std::pow(R, 2.0 - n);
    return (n - 2.0) * sphere_area / (std::pow(r, 2.0 - n) - outer);
}

}  // namespace potkit
