#include "potkit/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "potkit/elliptic.hpp"
#include "potkit/schottky.hpp"
#include "potkit/surface.hpp"
#include "potkit/verify.hpp"

namespace potkit::cli {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    fail(ErrorKind::schema, path + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) schema_error(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) schema_error(path, "missing field '" + key + "'");
    return *it;
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) schema_error(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) schema_error(path, "expected a finite number");
    return x;
}

double number_or(const json& obj, const std::string& key, double fallback, const std::string& path) {
    const auto it = obj.find(key);
    return it == obj.end() ? fallback : as_number(*it, path + "." + key);
}

cplx as_point(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) schema_error(path, "expected [re, im]");
    return {as_number(v[0], path + "[0]"), as_number(v[1], path + "[1]")};
}

std::string kind_of(const json& doc, const std::string& path) {
    const json& k = member(doc, "kind", path);
    if (!k.is_string()) schema_error(path + ".kind", "expected a string");
    return k.get<std::string>();
}

std::string csv_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

cplx parse_pair_flag(const std::string& text, const std::string& flag) {
    double re = 0.0;
    double im = 0.0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &tail) != 2) {
        throw CLI::ValidationError(flag, "expected two numbers separated by a comma");
    }
    return {re, im};
}

// Output sink: stdout always, plus a file in --out when requested.
class Output {
public:
    Output(std::ostream& out, std::string dir) : out_(out), dir_(std::move(dir)) {
        if (dir_.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec || !std::filesystem::is_directory(dir_)) {
            throw CLI::ValidationError("--out", "cannot create output directory '" + dir_ + "'");
        }
    }

    void file(const std::string& name, const std::string& body) const {
        if (dir_.empty()) return;
        const auto path = std::filesystem::path(dir_) / name;
        std::ofstream f(path, std::ios::binary);
        f << body;
        if (!f) throw CLI::ValidationError("--out", "cannot write '" + path.string() + "'");
    }

    void print(const std::string& body) const { out_ << body; }

private:
    std::ostream& out_;
    std::string dir_;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Options {
    std::string suite = "all";
    std::string domain;
    std::size_t n = 0;
    std::size_t n_max = 32;
    double tol = 1e-10;
    double t_end = 0.0;
    std::string tau;
    std::string pole;
    std::string out_dir;
    std::string format = "json";
    bool corrupt_tolerance = false;
};

// ---------------------------------------------------------------- verify

int run_verify(const Options& o, std::ostream& out) {
    const Output sink(out, o.out_dir);
    const auto rows = run_suite(o.suite, o.corrupt_tolerance);
    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    std::string body;
    if (o.format == "csv") {
        body = "name,anchor,residual,tolerance,pass\n";
        for (const auto& r : rows) {
            body += r.name + ",\"" + r.anchor + "\"," + csv_number(r.residual) + "," + csv_number(r.tolerance) + "," +
                    (r.pass ? "true" : "false") + "\n";
        }
    } else {
        json table = json::array();
        for (const auto& r : rows) {
            json row{{"name", r.name},
                     {"anchor", r.anchor},
                     {"residual", std::isfinite(r.residual) ? json(r.residual) : json(nullptr)},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass}};
            if (!r.error.empty()) row["error"] = r.error;
            table.push_back(row);
        }
        body = dump(json{{"suite", o.suite}, {"pass", all}, {"rows", table}});
    }
    sink.file("verify." + o.format, body);
    sink.print(body);
    return all ? ok : verification_failed;
}

// ---------------------------------------------------------------- fekete

std::string points_csv(const std::vector<std::size_t>& ns, const std::vector<std::vector<cplx>>& pts) {
    std::string body = "n,k,re,im\n";
    for (std::size_t i = 0; i < ns.size(); ++i) {
        for (std::size_t k = 0; k < pts[i].size(); ++k) {
            body += std::to_string(ns[i]) + "," + std::to_string(k) + "," + csv_number(pts[i][k].real()) + "," +
                    csv_number(pts[i][k].imag()) + "\n";
        }
    }
    return body;
}

int run_fekete(const Options& o, std::ostream& out) {
    const json doc = load_document(o.domain);
    const CompactSet K = parse_compact_set(doc);
    const auto pole = parse_pole(doc);
    const Output sink(out, o.out_dir);

    json report{{"set", kind_name(K.kind)}};
    std::string csv;
    if (o.n > 0) {
        const FeketeResult f = fekete_points(K, o.n, pole);
        report["n"] = o.n;
        report["delta_n"] = f.delta_n;
        report["converged"] = f.converged;
        csv = points_csv({o.n}, {f.points});
    } else {
        const CapacityReport rep = transfinite_diameter(K, pole, o.n_max);
        report["ladder"] = rep.ladder;
        report["delta_n"] = rep.delta_n;
        report["delta"] = rep.delta;
        report["gamma"] = rep.gamma;
        report["logcap"] = rep.logcap;
        report["energy"] = rep.energy;
        csv = points_csv(rep.ladder, rep.points);
    }
    sink.file("capacity.json", dump(report));
    sink.file("fekete_points.csv", csv);
    sink.print(o.format == "csv" ? csv : dump(report));
    return ok;
}

// ---------------------------------------------------------------- vortex

double max_drift(const std::vector<double>& v) {
    double d = 0.0;
    for (double x : v) d = std::max(d, std::abs(x - v.front()));
    return d;
}

int run_vortex(const Options& o, std::ostream& out) {
    const json doc = load_document(o.domain);
    const VortexSystem sys = parse_vortex_system(doc);
    if (!(o.t_end > 0.0)) throw CLI::ValidationError("--t-end", "vortex runs need a positive --t-end");
    const Output sink(out, o.out_dir);

    Trajectory tr;
    json summary;
    try {
        tr = simulate(sys, o.t_end, o.tol);
    } catch (const CollisionError& e) {
        summary = {{"status", "collision"}, {"collision_time", e.time()}, {"message", e.what()}};
        sink.file("summary.json", dump(summary));
        sink.print(dump(summary));
        return simulation_aborted;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::schema) throw;
        summary = {{"status", "aborted"}, {"message", e.what()}};
        sink.file("summary.json", dump(summary));
        sink.print(dump(summary));
        return simulation_aborted;
    }

    static const std::array<const char*, 3> extra{"angular_moment", "moment_re", "moment_im"};
    std::string csv = "t";
    for (std::size_t k = 0; k < sys.size(); ++k) {
        csv += ",re_z" + std::to_string(k + 1) + ",im_z" + std::to_string(k + 1);
    }
    csv += ",energy";
    for (const char* m : extra) csv += std::string(",") + m;
    csv += ",displacement\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        csv += csv_number(tr.times[i]);
        for (cplx z : tr.states[i]) csv += "," + csv_number(z.real()) + "," + csv_number(z.imag());
        csv += "," + csv_number(tr.monitors.at("energy")[i]);
        for (const char* m : extra) csv += "," + csv_number(tr.monitors.at(m)[i]);
        csv += "," + csv_number(tr.monitors.at("displacement")[i]) + "\n";
    }

    double return_error = 0.0;
    for (std::size_t k = 0; k < sys.size(); ++k) {
        return_error = std::max(return_error, std::abs(tr.states.back()[k] - sys.positions[k]));
    }
    const double moment_drift = std::max(max_drift(tr.monitors.at("moment_re")), max_drift(tr.monitors.at("moment_im")));
    summary = {{"status", "ok"},
               {"t_final", tr.times.back()},
               {"steps", tr.times.size() - 1},
               {"energy_drift", max_drift(tr.monitors.at("energy"))},
               {"moment_drift", moment_drift},
               {"angular_moment_drift", max_drift(tr.monitors.at("angular_moment"))},
               {"displacement", tr.monitors.at("displacement").back()},
               {"return_error", return_error},
               {"radius_drift", max_drift(tr.monitors.at("radius"))}};
    sink.file("trajectory.csv", csv);
    sink.file("summary.json", dump(summary));
    sink.print(o.format == "csv" ? csv : dump(summary));
    return ok;
}

// ---------------------------------------------------------------- torus / strip

json torus_report(const TorusInput& in) {
    const TorusSpec spec(in.tau);
    const TorusLattice& L = spec.lattice();
    const auto basis = torus_harmonic_basis(spec);
    const auto numeric = torus_period_matrices_numeric(spec);
    json lattice{{"tau", complex_json(L.tau())}, {"g2", complex_json(L.g2())}, {"g3", complex_json(L.g3())},
                 {"e1", complex_json(L.e1())},   {"e2", complex_json(L.e2())}, {"e3", complex_json(L.e3())},
                 {"eta1", complex_json(L.eta1())}, {"eta2", complex_json(L.eta2())}};
    json identities{{"legendre", L.legendre_residual()},
                    {"root_sum", std::abs(L.e1() + L.e2() + L.e3())},
                    {"period_identity", basis.periods.identity_residual()},
                    {"period_numeric",
                     std::max({(basis.periods.P - numeric.P).cwiseAbs().maxCoeff(),
                               (basis.periods.Q - numeric.Q).cwiseAbs().maxCoeff(),
                               (basis.periods.R - numeric.R).cwiseAbs().maxCoeff()})}};
    return {{"lattice", lattice},
            {"green_constant", spec.green_constant()},
            {"volume", spec.volume()},
            {"period_matrices",
             {{"P", matrix_json(basis.periods.P)}, {"Q", matrix_json(basis.periods.Q)}, {"R", matrix_json(basis.periods.R)}}},
            {"identities", identities}};
}

json strip_report(const TorusInput& in, std::optional<cplx> at) {
    if (std::abs(in.tau.real()) > 0.0) fail(ErrorKind::schema, "$.tau: the strip double needs a purely imaginary tau");
    const double T = in.tau.imag();
    const StripDouble S(T, *in.circulation);
    const cplx a = at.value_or(cplx(-0.25, 0.25 * T));
    if (!S.contains(a)) throw CLI::ValidationError("--pole", "evaluation point outside the strip");
    const cplx start = cplx(-0.5, 0.5 * T) - std::conj(a);
    auto el = [&](cplx z) { return S.kernels(z, a).electro; };
    auto hy = [&](cplx z) { return S.kernels(z, a).hydro; };
    const cplx tau(0.0, T);
    const auto k = S.kernels(a, a);
    const auto c = S.capacity_functions(a);
    const auto pm = S.period_matrices_numeric();
    return {{"p", S.circulation()},
            {"point", complex_json(a)},
            {"kernel_periods",
             {{"alpha_electro", complex_json(segment_integral(el, start, start + 1.0, 32, 16))},
              {"beta_electro", complex_json(segment_integral(el, start, start + tau, 32, 16))},
              {"alpha_hydro", complex_json(segment_integral(hy, start, start + 1.0, 32, 16))},
              {"beta_hydro", complex_json(segment_integral(hy, start, start + tau, 32, 16))}}},
            {"kkh_residual", std::abs(k.electro - k.hydro - 2.0 * k.doubled)},
            {"diagonal", {{"electro", k.electro.real()}, {"hydro", k.hydro.real()}, {"szego", S.szego_diagonal(a)}}},
            {"capacity_functions",
             {{"c1", c.c1}, {"cD", c.cD}, {"cB", c.cB}, {"c_beta", c.c_beta}, {"M_sqrt", c.M_sqrt}}},
            {"robin", {{"electro", S.robin_electro(a)}, {"hydro", S.robin_hydro(a, S.circulation())}}},
            {"period_matrix", {{"P", pm.P(0, 0)}, {"Q", pm.Q(0, 0)}}}};
}

int run_torus(const Options& o, std::ostream& out) {
    TorusInput in;
    if (!o.domain.empty()) in = parse_torus(load_document(o.domain));
    if (!o.tau.empty()) in.tau = parse_pair_flag(o.tau, "--tau");
    if (!(in.tau.imag() > 0.0)) fail(ErrorKind::schema, "$.tau: Im tau must be positive");
    std::optional<cplx> at;
    if (!o.pole.empty()) at = parse_pair_flag(o.pole, "--pole");
    const Output sink(out, o.out_dir);
    json report = torus_report(in);
    if (in.circulation) report["strip"] = strip_report(in, at);
    sink.file("torus.json", dump(report));
    sink.print(dump(report));
    return ok;
}

// ---------------------------------------------------------------- green

cplx default_pole(const DomainDescriptor& d) {
    switch (d.kind) {
        case DomainDescriptor::Kind::disk: return 0.0;
        case DomainDescriptor::Kind::half_plane:
        case DomainDescriptor::Kind::slit_plane: return {0.0, 1.0};
        case DomainDescriptor::Kind::rectangle: return {0.5 * d.width, 0.5 * d.height};
        case DomainDescriptor::Kind::periodic_strip: return {-0.25, 0.5 * d.strip_period};
    }
    return 0.0;
}

// Sample window for tabulating G: the domain itself when bounded, a box around the pole otherwise.
std::array<double, 4> sample_window(const DomainDescriptor& d, cplx a) {
    switch (d.kind) {
        case DomainDescriptor::Kind::disk: return {-d.radius, d.radius, -d.radius, d.radius};
        case DomainDescriptor::Kind::rectangle: return {0.0, d.width, 0.0, d.height};
        case DomainDescriptor::Kind::periodic_strip: return {-0.5, 0.0, 0.0, d.strip_period};
        default: return {a.real() - 2.0, a.real() + 2.0, 0.0, a.imag() + 2.0};
    }
}

int run_green(const Options& o, std::ostream& out) {
    const DomainDescriptor dom = parse_domain(load_document(o.domain));
    const cplx a = o.pole.empty() ? default_pole(dom) : parse_pair_flag(o.pole, "--pole");
    if (!dom.contains(a)) throw CLI::ValidationError("--pole", "pole outside the domain");
    const Output sink(out, o.out_dir);
    const GreenExpansion e = robin_data(dom, a);
    const std::size_t n = o.n > 0 ? o.n : 16;
    const auto w = sample_window(dom, a);
    std::string csv = "x,y,G,H\n";
    json samples = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx z(w[0] + (w[1] - w[0]) * (static_cast<double>(i) + 0.5) / static_cast<double>(n),
                         w[2] + (w[3] - w[2]) * (static_cast<double>(j) + 0.5) / static_cast<double>(n));
            if (!dom.contains(z) || std::abs(z - a) < 1e-12) continue;
            const double g = green(dom, z, a);
            const double h = regular_part(dom, z, a);
            csv += csv_number(z.real()) + "," + csv_number(z.imag()) + "," + csv_number(g) + "," + csv_number(h) + "\n";
            samples.push_back(json::array({z.real(), z.imag(), g, h}));
        }
    }
    const json report{{"domain", kind_name(dom.kind)},
                      {"pole", complex_json(a)},
                      {"h0", e.h0},
                      {"h1", complex_json(e.h1)},
                      {"curvature", e.curvature},
                      {"samples", samples}};
    sink.file("green.json", dump(report));
    sink.file("green.csv", csv);
    sink.print(o.format == "csv" ? csv : dump(report));
    return ok;
}

}  // namespace

// ---------------------------------------------------------------- input documents

json load_document(std::string_view source) {
    std::string text(source);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) fail(ErrorKind::schema, "empty input document");
    if (text[first] != '{' && text[first] != '[') {
        std::ifstream f{std::string(source)};
        if (!f) fail(ErrorKind::schema, "cannot read input file '" + text + "'");
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        std::ostringstream msg;
        msg << "malformed JSON at line " << line << ", column " << col;
        fail(ErrorKind::schema, msg.str());
    }
}

DomainDescriptor parse_domain_unchecked(const json& doc);
CompactSet parse_compact_set_unchecked(const json& doc);

template <class F>
auto checked(const std::string& path, F&& build) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::schema) throw;
        fail(ErrorKind::schema, path + ": " + e.what());
    }
}

DomainDescriptor parse_domain(const json& doc) { return checked("$", [&] { return parse_domain_unchecked(doc); }); }

CompactSet parse_compact_set(const json& doc) { return checked("$", [&] { return parse_compact_set_unchecked(doc); }); }

DomainDescriptor parse_domain_unchecked(const json& doc) {
    const std::string kind = kind_of(doc, "$");
    DomainDescriptor d;
    if (kind == "disk") {
        d = DomainDescriptor::disk(number_or(doc, "R", 1.0, "$"));
    } else if (kind == "half_plane") {
        d = DomainDescriptor::half_plane();
    } else if (kind == "slit_plane") {
        d = DomainDescriptor::slit_plane();
    } else if (kind == "rectangle") {
        const double grid = number_or(doc, "grid", 128.0, "$");
        if (grid < 8.0 || grid != std::floor(grid)) schema_error("$.grid", "expected an integer >= 8");
        d = DomainDescriptor::rectangle(as_number(member(doc, "width", "$"), "$.width"),
                                        as_number(member(doc, "height", "$"), "$.height"),
                                        static_cast<std::size_t>(grid));
    } else if (kind == "periodic_strip") {
        d = DomainDescriptor::periodic_strip(as_point(member(doc, "tau", "$"), "$.tau").imag());
    } else {
        schema_error("$.kind", "unknown domain kind '" + kind + "'");
    }
    return d;
}

CompactSet parse_compact_set_unchecked(const json& doc) {
    const std::string kind = kind_of(doc, "$");
    if (kind == "circle") return CompactSet::circle(number_or(doc, "R", 1.0, "$"));
    if (kind == "disk") return CompactSet::disk(number_or(doc, "R", 1.0, "$"));
    if (kind == "disk_complement") return CompactSet::disk_complement(number_or(doc, "R", 1.0, "$"));
    if (kind == "segment") return CompactSet::segment(number_or(doc, "length", 2.0, "$"));
    if (kind == "rectangle_boundary") {
        return CompactSet::rectangle_boundary(as_number(member(doc, "width", "$"), "$.width"),
                                              as_number(member(doc, "height", "$"), "$.height"));
    }
    schema_error("$.kind", "unknown compact set kind '" + kind + "'");
}

std::optional<cplx> parse_pole(const json& doc) {
    const auto it = doc.find("pole");
    if (it == doc.end()) return std::nullopt;
    return as_point(*it, "$.pole");
}

VortexSystem parse_vortex_system(const json& doc) {
    VortexSystem sys;
    const auto dom = doc.is_object() ? doc.find("domain") : doc.end();
    if (dom != doc.end()) {
        const std::string kind = kind_of(*dom, "$.domain");
        if (kind == "disk") {
            sys.domain = VortexDomain::disk(number_or(*dom, "R", 1.0, "$.domain"));
        } else if (kind != "plane") {
            schema_error("$.domain.kind", "vortex domains are 'plane' or 'disk'");
        }
    }
    const json& list = member(doc, "vortices", "$");
    if (!list.is_array() || list.empty()) schema_error("$.vortices", "expected a non-empty array");
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string path = "$.vortices[" + std::to_string(k) + "]";
        sys.positions.push_back(as_point(member(list[k], "z", path), path + ".z"));
        sys.strengths.push_back(as_number(member(list[k], "gamma", path), path + ".gamma"));
    }
    try {
        sys.validate();
    } catch (const Error& e) {
        fail(ErrorKind::schema, std::string("$.vortices: ") + e.what());
    }
    return sys;
}

TorusInput parse_torus(const json& doc) {
    TorusInput in;
    in.tau = as_point(member(doc, "tau", "$"), "$.tau");
    if (!(in.tau.imag() > 0.0)) schema_error("$.tau", "Im tau must be positive");
    if (doc.contains("p")) in.circulation = as_number(doc["p"], "$.p");
    return in;
}

// ---------------------------------------------------------------- entry point

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Potential theory toolkit: Green and Robin functions, capacities, vortices, kernels"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "Run the identity suites and print the residual table");
    verify->add_option("--suite", o.suite, "planar, surface, schottky or all")
        ->check(CLI::IsMember({"planar", "surface", "schottky", "all"}));
    verify->add_flag("--corrupt-tolerance", o.corrupt_tolerance)->group("");

    auto* fekete = app.add_subcommand("fekete", "Fekete points and capacity of a compact set");
    fekete->add_option("--domain", o.domain, "CompactSet JSON (inline or file)")->required();
    fekete->add_option("--n", o.n, "single point count instead of the ladder")->check(CLI::Range(2, 4096));
    fekete->add_option("--n-max", o.n_max, "largest ladder entry")->check(CLI::Range(8, 4096));

    auto* vortex = app.add_subcommand("vortex", "Integrate a point-vortex system");
    vortex->add_option("--domain", o.domain, "VortexSystem JSON (inline or file)")->required();
    vortex->add_option("--t-end", o.t_end, "final time")->required();
    vortex->add_option("--tol", o.tol, "local error tolerance")->check(CLI::PositiveNumber);

    auto* torus = app.add_subcommand("torus", "Lattice, Green and period data of a torus or strip double");
    torus->add_option("--domain", o.domain, "TorusSpec / StripDouble JSON (inline or file)");
    torus->add_option("--tau", o.tau, "modulus as re,im");
    torus->add_option("--pole", o.pole, "strip evaluation point as re,im");

    auto* greenc = app.add_subcommand("green", "Green function samples and Robin data of a planar domain");
    greenc->add_option("--domain", o.domain, "DomainDescriptor JSON (inline or file)")->required();
    greenc->add_option("--pole", o.pole, "pole as re,im");
    greenc->add_option("--n", o.n, "samples per axis")->check(CLI::Range(1, 1024));

    for (auto* sub : {verify, fekete, vortex, torus, greenc}) {
        sub->add_option("--out", o.out_dir, "directory receiving the output files");
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (verify->parsed()) return run_verify(o, out);
        if (fekete->parsed()) return run_fekete(o, out);
        if (vortex->parsed()) return run_vortex(o, out);
        if (torus->parsed()) return run_torus(o, out);
        return run_green(o, out);
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return e.kind() == ErrorKind::schema ? input_schema : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace potkit::cli
