#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "curveforge/cli.hpp"
#include "curveforge/parse.hpp"

using namespace curveforge;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Case {
    std::string name;
    std::vector<std::string> args;
    int code;
};

const char* kLemniscate = "(X^2 + Y^2)^2 - (X^2 - Y^2)*Z^2";
const char* kLemMap = "t*(t^2 + 1)/(t^4 + 1); t*(t^2 - 1)/(t^4 + 1)";

const std::vector<Case>& cases() {
    static const std::vector<Case> all{
        {"param_split_cubic", {"param", "split", "y^2 = x^3 + x^2"}, 0},
        {"param_split_gap", {"param", "split", "(x^2 + y^2)^2 - (x^2 - y^2)"}, 1},
        {"param_conic_circle", {"param", "conic", "X^2 + Y^2 - Z^2", "--point", "[-1:0:1]"}, 0},
        {"param_conic_parabola", {"param", "conic", "Y*Z - X^2", "--point", "[0:0:1]"}, 0},
        {"param_conic_sqrt3", {"param", "conic", "X^2 + Y^2 - 3*Z^2", "--point", "[sqrt(3):0:1]"}, 0},
        {"param_conic_reducible", {"param", "conic", "X*Y", "--point", "[0:0:1]"}, 1},
        {"param_quartic3", {"param", "quartic3", "X^2*Y^2 - Y^2*Z^2 - X^2*Z^2", "--nodes", "[1:0:0];[0:1:0];[0:0:1]"}, 0},
        {"param_quartic3_no_point",
         {"param", "quartic3", "X^2*Y^2 + Y^2*Z^2 + X^2*Z^2", "--nodes", "[1:0:0];[0:1:0];[0:0:1]"}, 3},
        {"param_quartic3_lemniscate", {"param", "quartic3", kLemniscate, "--nodes", "[0:0:1];[1:i:0];[1:-i:0]"}, 1},
        {"singular_tacnode", {"singular", "Y^2*Z^2 - X^4 - Z^4"}, 0},
        {"singular_lemniscate", {"singular", kLemniscate}, 0},
        {"singular_cubic", {"singular", "X^3 + X^2*Z - Y^2*Z"}, 0},
        {"singular_parse_error", {"singular", "nonsense((("}, 2},
        {"singular_degree_cap", {"singular", "--degree-cap", "4", "X^5 + Y^5 - Z^5"}, 3},
        {"genus_lemniscate", {"genus", kLemniscate}, 0},
        {"genus_tacnode", {"genus", "Y^2*Z^2 - X^4 - Z^4"}, 1},
        {"genus_fermat3", {"genus", "X^3 + Y^3 - Z^3"}, 0},
        {"smooth_fermat3", {"smooth", "X^3 + Y^3 - Z^3"}, 0},
        {"smooth_nodal", {"smooth", "X^3 + X^2*Z - Y^2*Z"}, 1},
        {"certificate_fermat3", {"certificate", "X^3 + Y^3 - Z^3"}, 0},
        {"certificate_elliptic", {"certificate", "Y^2*Z - X^3 + X*Z^2"}, 0},
        {"certificate_nodal", {"certificate", "X^3 + X^2*Z - Y^2*Z"}, 1},
        {"certificate_conic", {"certificate", "X^2 + Y^2 - Z^2"}, 1},
        {"verify_lemniscate", {"verify", kLemniscate, "--map", kLemMap}, 0},
        {"verify_circle_bad", {"verify", "X^2 + Y^2 - Z^2", "--map", "t; t"}, 1},
        {"implicitize_lemniscate",
         {"implicitize", "--x", "t*(t^2 + 1)/(t^4 + 1)", "--y", "t*(t^2 - 1)/(t^4 + 1)"}, 0},
        {"kapferer_circle", {"kapferer", "X^2 + Y^2 - Z^2", "--map", "v^2 - u^2; 2*u*v; u^2 + v^2"}, 0},
        {"kapferer_cubic", {"kapferer", "X^3 + X^2*Z - Y^2*Z", "--map", "(u^2 - v^2)*v; u*(u^2 - v^2); v^3"}, 0},
        {"kapferer_not_a_param", {"kapferer", "X^3 + Y^3 - Z^3", "--map", "t; t"}, 2},
        {"area_loop", {"area", "--map", "t^2 - 1; t^3 - t", "--from", "-1", "--to", "1"}, 0},
        {"pythagorean_3_4_5", {"pythagorean", "2", "1"}, 0},
        {"mason_example", {"mason", "T^2", "1 - T^2", "-1"}, 0},
        {"mason_common_factor", {"mason", "T", "T", "-2*T"}, 2},
        {"fermatpoly_pythagorean", {"fermatpoly", "1 - T^2", "2*T", "1 + T^2", "2"}, 0},
        {"fermatpoly_not_solution", {"fermatpoly", "T", "1", "T", "3"}, 1},
        {"pell_possible", {"pell", "T^2 - 1", "--solution", "T; 1"}, 0},
        {"pell_t4", {"pell", "T^4"}, 1},
        {"local_example", {"local", "2", "1", "3", "5"}, 0},
        {"local_cross_check", {"local", "1", "2", "1", "3", "--cross-check"}, 0},
        {"local_p2", {"local", "1", "1", "1", "2"}, 2},
    };
    return all;
}

std::string transcript(const Run& r) {
    return "exit: " + std::to_string(r.code) + "\n--- stdout\n" + r.out + "--- stderr\n" + r.err;
}

std::filesystem::path golden_path(const std::string& name) {
    return std::filesystem::path(CURVEFORGE_GOLDEN_DIR) / (name + ".txt");
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Re-parses every polynomial-valued string of a JSON payload and checks that
// rendering the parse gives back the same text.
void check_reparse(const json& j, const std::string& key, int& count) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            check_reparse(v, k, count);
        return;
    }
    if (j.is_array()) {
        for (const auto& v : j)
            check_reparse(v, key, count);
        return;
    }
    if (!j.is_string())
        return;
    const std::string s = j.get<std::string>();
    static const std::set<std::string> kForms{"f", "g", "h", "gcd", "p", "q", "P", "Q", "R", "F_X", "F_Y", "F_Z"};
    if (key == "curve" || key == "conic" || key == "transformed") {
        CHECK(render_poly(parse_poly<3>({s}, kProjectiveNames), kProjectiveNames) == s);
        ++count;
    } else if (kForms.count(key)) {
        // Forms over Q(sqrt(d)) are not in the rational parser's domain.
        if (s.find("sqrt") != std::string::npos)
            return;
        CHECK(render_poly(parse_poly<2>({s}, kFormNames), kFormNames) == s);
        ++count;
    } else if (key == "implicit") {
        CHECK(render_poly(parse_poly<2>({s}, kAffineNames), kAffineNames) == s);
        ++count;
    } else if (key == "x" || key == "y") {
        if (s.find('t') == std::string::npos)
            return;
        auto [n, d] = parse_fraction({s}, "t");
        CHECK(render_fraction(n, d, "t") == s);
        ++count;
    } else if (key == "point" || key == "conic_point") {
        CHECK(render_point(parse_point({s})) == s);
        ++count;
    }
}

}  // namespace

TEST_CASE("golden transcripts") {
    bool update = std::getenv("CURVEFORGE_UPDATE_GOLDEN") != nullptr;
    for (const auto& c : cases()) {
        CAPTURE(c.name);
        Run r = invoke(c.args);
        CHECK(r.code == c.code);
        std::string got = transcript(r);
        auto path = golden_path(c.name);
        if (update) {
            std::ofstream(path, std::ios::binary) << got;
            continue;
        }
        REQUIRE_MESSAGE(std::filesystem::exists(path), "missing golden file " << path.string());
        CHECK(got == read_file(path));
    }
}

TEST_CASE("json output re-parses and is deterministic") {
    int reparsed = 0;
    for (const auto& c : cases()) {
        CAPTURE(c.name);
        std::vector<std::string> args{"--json"};
        args.insert(args.end(), c.args.begin(), c.args.end());
        Run a = invoke(args);
        Run b = invoke(args);
        CHECK(a.code == c.code);
        CHECK(a.out == b.out);
        CHECK(a.code != kExitContradiction);
        json j = json::parse(a.out);
        CHECK(j["exit_code"] == c.code);
        CHECK(j.contains("verdict"));
        CHECK(j["diagnostics"].is_array());
        CHECK(j.dump(2) + "\n" == a.out);
        check_reparse(j, "", reparsed);
    }
    CHECK(reparsed > 60);
}

TEST_CASE("exit codes and usage errors") {
    CHECK(invoke({}).code == kExitInput);
    CHECK(invoke({"frobnicate"}).code == kExitInput);
    CHECK(invoke({"--help"}).code == kExitOk);
    CHECK(invoke({"param", "conic", "X^2 + Y^2 - Z^2"}).code == kExitInput);
    CHECK(invoke({"local", "1", "1", "1", "9"}).code == kExitInput);
    CHECK(invoke({"local", "3", "3", "3", "3"}).code == kExitInconclusive);
    CHECK(invoke({"pythagorean", "2", "x"}).code == kExitInput);
    CHECK(invoke({"area", "--map", "1/t; t", "--from", "1", "--to", "2"}).code == kExitNegative);
    CHECK(invoke({"pell", "5"}).code == kExitInput);
    CHECK(invoke({"verify", "X^2 + Y^2 - Z^2", "--map", "u; v"}).code == kExitInput);
}

TEST_CASE("degree cap from the environment") {
    ::setenv("CURVE_FORGE_DEGREE_CAP", "4", 1);
    CHECK(invoke({"singular", "X^5 + Y^5 - Z^5"}).code == kExitInconclusive);
    CHECK(invoke({"singular", "--degree-cap", "5", "X^5 + Y^5 - Z^5"}).code == kExitOk);
    ::setenv("CURVE_FORGE_DEGREE_CAP", "zero", 1);
    CHECK(invoke({"singular", "X^3 + Y^3 - Z^3"}).code == kExitInput);
    ::unsetenv("CURVE_FORGE_DEGREE_CAP");
    CHECK(invoke({"singular", "X^5 + Y^5 - Z^5"}).code == kExitOk);
}
