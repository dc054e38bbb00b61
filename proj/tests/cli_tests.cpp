#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("A4_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "A4_CLI must point at the built binary");
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

json run_json(const std::string& args, int expected_exit) {
    RunResult r = run_cli(args);
    CHECK_MESSAGE(r.exit_code == expected_exit, r.output);
    return json::parse(r.output);
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("classify: the three classes and the negative case") {
    json j = run_json("classify --alpha 1,0,0,0,0", 0);
    CHECK(j["status"] == "ok");
    CHECK(j["payload"]["label"] == "Class1");

    j = run_json("classify --alpha 1/3,1/3,1/3,0,0", 0);
    CHECK(j["payload"]["label"] == "Class2");
    CHECK(j["payload"]["canonical"] == "(1/3, 1/3, 1/3, 0, 0)");

    j = run_json("classify --alpha 1/5,1/5,1/5,1/5,1/5", 0);
    CHECK(j["payload"]["label"] == "Class3");

    j = run_json("classify --alpha 1/2,1/2,0,0,0", 1);
    CHECK(j["status"] == "no_solution");
    CHECK(j["payload"]["label"] == "None");
}

TEST_CASE("construct: documented outputs") {
    json j = run_json("construct --alpha -1,1,0,0,1", 0);
    auto f = j["payload"]["f"];
    CHECK(f[0] == "t");
    CHECK(f[1] == "1/t");
    CHECK(f[2] == "0");
    CHECK(f[3] == "0");
    CHECK(f[4] == "-1/t");

    RunResult text = run_cli("construct --alpha -1,1,0,0,1 --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("f1 = 1/t") != std::string::npos);

    CHECK(run_cli("construct --alpha 1/2,1/2,0,0,0").exit_code == 1);
}

TEST_CASE("construct output feeds verify") {
    json j = run_json("construct --alpha 1/3,1/3,0,0,1/3", 0);
    auto f = j["payload"]["f"];
    std::string args = "verify --alpha 1/3,1/3,0,0,1/3";
    for (int i = 0; i < 5; ++i)
        args += " --f" + std::to_string(i) + " " + quote(f[static_cast<std::size_t>(i)]);
    json v = run_json(args, 0);
    CHECK(v["payload"]["ok"] == true);
}

TEST_CASE("verify failures and contract errors") {
    // A perturbed component that still sums correctly: nonzero residuals.
    RunResult r = run_cli(
        "verify --alpha -1,1,0,0,1 --f0 t --f1 '1/t+1' --f2 -1 --f3 0 --f4 -1/t");
    CHECK(r.exit_code == 1);
    // Components that do not sum to t: contract error.
    r = run_cli("verify --alpha -1,1,0,0,1 --f0 t --f1 1 --f2 0 --f3 0 --f4 0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("parse errors exit with code 2") {
    CHECK(run_cli("classify --alpha 0.5,0.5,0,0,0").exit_code == 2);
    CHECK(run_cli("classify --alpha 1,0,0,0").exit_code == 2);
    CHECK(run_cli("classify --alpha 1/2,1/3,0,0,0").exit_code == 2);  // sum != 1
    CHECK(run_cli("construct --alpha t,0,0,0,0").exit_code == 2);
}

TEST_CASE("tables match the reference grids") {
    json j = run_json("tables", 0);
    CHECK(j["payload"]["table1"]["rows"][0]["values"] ==
          json({"1/3", "1/3", "1/3", "2/3", "1/3"}));
    CHECK(j["payload"]["table2"]["rows"][1]["values"] == json({"0", "0", "0", "0", "1"}));
}

TEST_CASE("relations over random samples") {
    json j = run_json("relations --samples 25", 0);
    CHECK(j["payload"]["violations"].empty());
}

TEST_CASE("expand emits the formal series") {
    json j = run_json("expand --alpha -1,1,0,0,1 --type A1:0 --floor -4", 0);
    auto series = j["payload"]["series"];
    REQUIRE(series.size() == 5);
    std::string f1 = series[1];
    CHECK(f1.find("t^-1") != std::string::npos);
}

TEST_CASE("hamiltonian audit") {
    json j = run_json("hamiltonian --alpha 1/5,1/5,1/5,1/5,1/5", 0);
    CHECK(j["payload"]["hm1"] == "0");
    CHECK(j["payload"]["closed_form_hm1"] == "0");
    CHECK(j["payload"]["balance_ok"] == true);
}

TEST_CASE("apply transports parameters and tuples") {
    json j = run_json("apply --word 's0' --alpha 1,0,0,0,0 --f t 0 0 0 0", 0);
    CHECK(j["payload"]["params"] == "(-1, 1, 0, 0, 1)");
    auto f = j["payload"]["f"];
    CHECK(f[1] == "1/t");
}

TEST_CASE("caps from the environment give exit code 3") {
    RunResult r = run_cli("construct --alpha 7/3,1/3,-5/3,0,0");
    CHECK(r.exit_code == 0);
    const char* bin = std::getenv("A4_CLI");
    std::string cmd = std::string("A4_DEGREE_CAP=2 ") + bin +
                      " construct --alpha 7/3,1/3,-5/3,0,0 >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
}
