#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "potkit/equilibrium.hpp"
#include "potkit/planar_green.hpp"
#include "potkit/vortex.hpp"

namespace potkit::cli {

enum ExitCode : int {
    ok = 0,
    verification_failed = 2,
    simulation_aborted = 3,
    usage = 64,
    input_schema = 65,
};

// Runs one command line. Everything the command prints goes to `out`,
// diagnostics to `err`; the return value is the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Input documents. `source` is inline JSON or a path to a JSON file. Parse
// failures raise a schema error whose message carries line and column.
nlohmann::json load_document(std::string_view source);

DomainDescriptor parse_domain(const nlohmann::json& doc);
CompactSet parse_compact_set(const nlohmann::json& doc);
std::optional<cplx> parse_pole(const nlohmann::json& doc);
VortexSystem parse_vortex_system(const nlohmann::json& doc);

struct TorusInput {
    cplx tau{0.0, 2.0};
    std::optional<double> circulation;  // present for a strip double
};
TorusInput parse_torus(const nlohmann::json& doc);

}  // namespace potkit::cli
