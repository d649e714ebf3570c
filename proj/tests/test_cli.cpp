#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "potkit/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "potkit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = potkit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const json* find_row(const json& rows, const std::string& name) {
    for (const auto& r : rows) {
        if (r.at("name") == name) return &r;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("verify suites") {
    const auto planar = invoke({"verify", "--suite", "planar"});
    REQUIRE(planar.code == 0);
    const auto doc = json::parse(planar.out);
    CHECK(doc.at("pass") == true);
    CHECK(find_row(doc.at("rows"), "Deltah0K") != nullptr);

    const auto schottky = invoke({"verify", "--suite", "schottky"});
    REQUIRE(schottky.code == 0);
    const auto schottky_doc = json::parse(schottky.out);
    const auto* kkh = find_row(schottky_doc.at("rows"), "KKH");
    REQUIRE(kkh != nullptr);
    CHECK(kkh->at("residual").get<double>() == 0.0);

    CHECK(invoke({"verify", "--suite", "schottky", "--corrupt-tolerance"}).code == 2);
    CHECK(invoke({"verify", "--suite", "bogus"}).code == 64);
}

TEST_CASE("verify csv") {
    const auto r = invoke({"verify", "--suite", "surface", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("name,", 0) == 0);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 64);
    CHECK(invoke({"frobnicate"}).code == 64);
    CHECK(invoke({"fekete", "--domain", R"({"kind":"circle","R":1.0})", "--n", "abc"}).code == 64);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("schema errors") {
    const auto r = invoke({"fekete", "--domain", "{\n  \"kind\": }"});
    CHECK(r.code == 65);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(r.err.find("column") != std::string::npos);
    CHECK(invoke({"fekete", "--domain", R"({"kind":"circle","R":-1.0})"}).code == 65);
    CHECK(invoke({"fekete", "--domain", R"({"kind":"hexagon"})"}).code == 65);
    CHECK(invoke({"fekete", "--domain", "/nonexistent/domain.json"}).code == 65);
}

TEST_CASE("fekete ladders") {
    const auto circle = invoke({"fekete", "--domain", R"({"kind":"circle","R":1.0})", "--n-max", "32"});
    REQUIRE(circle.code == 0);
    const auto c = json::parse(circle.out);
    CHECK_NEAR(c.at("delta").get<double>(), 1.0, 5e-3);

    const auto segment = invoke({"fekete", "--domain", R"({"kind":"segment","length":2.0})", "--n-max", "32"});
    REQUIRE(segment.code == 0);
    CHECK_NEAR(json::parse(segment.out).at("delta").get<double>(), 0.5, 1e-2);
}

TEST_CASE("vortex runs") {
    const std::string pair = R"({"domain":{"kind":"plane"},"vortices":[{"z":[0,0],"gamma":1},{"z":[1,0],"gamma":-1}]})";
    const auto r = invoke({"vortex", "--domain", pair, "--t-end", "10"});
    REQUIRE(r.code == 0);
    const auto s = json::parse(r.out);
    CHECK(s.at("status") == "ok");
    CHECK_NEAR(s.at("displacement").get<double>(), 10.0 / (2.0 * potkit::pi), 1e-6);

    const std::string collapse =
        R"({"domain":{"kind":"plane"},"vortices":[{"z":[-1,0],"gamma":2},{"z":[1,0],"gamma":2},)"
        R"({"z":[1.6546913374900216,0.5118560126006947],"gamma":-1}]})";
    const auto c = invoke({"vortex", "--domain", collapse, "--t-end", "20"});
    CHECK(c.code == 3);
    const auto cs = json::parse(c.out);
    CHECK(cs.at("status") == "collision");
    CHECK(cs.at("collision_time").get<double>() > 1.0);
}

TEST_CASE("deterministic output and files") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "potkit_cli_test";
    fs::remove_all(dir);
    const std::string pair = R"({"domain":{"kind":"disk","R":1.0},"vortices":[{"z":[0.5,0],"gamma":1}]})";
    const auto a = invoke({"vortex", "--domain", pair, "--t-end", "3", "--out", dir.string()});
    const auto b = invoke({"vortex", "--domain", pair, "--t-end", "3"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    bool any_csv = false;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".csv") {
            any_csv = true;
            std::ifstream in(entry.path());
            std::string header;
            std::string row;
            std::getline(in, header);
            std::getline(in, row);
            CHECK(header.rfind("t,", 0) == 0);
            // a 17-significant-digit field somewhere in the first data row
            std::stringstream ss(row);
            std::string field;
            std::size_t widest = 0;
            while (std::getline(ss, field, ',')) widest = std::max(widest, field.size());
            CHECK(widest >= 17);
        }
    }
    CHECK(any_csv);
    fs::remove_all(dir);
}

TEST_CASE("green and torus") {
    const auto g = invoke({"green", "--domain", R"({"kind":"disk","R":1.0})", "--pole", "0.5,0", "--n", "4"});
    REQUIRE(g.code == 0);
    CHECK(invoke({"green", "--domain", R"({"kind":"disk","R":1.0})", "--pole", "2,0"}).code == 64);
    const auto t = invoke({"torus", "--tau", "0,2"});
    REQUIRE(t.code == 0);
    CHECK(json::parse(t.out).is_object());
}
