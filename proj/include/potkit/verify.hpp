#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace potkit {

struct IdentityRow {
    std::string name;
    std::string anchor;  // short statement of the identity being checked
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string error;  // set when the check itself raised
};

// Suites: "planar", "surface", "schottky", "all". Unknown names raise a parameter error.
// `corrupt_tolerance` replaces every tolerance by -1 so that all rows fail.
std::vector<IdentityRow> run_suite(std::string_view suite, bool corrupt_tolerance = false);

bool is_known_suite(std::string_view suite);

}  // namespace potkit
