#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using Json = nlohmann::json;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

std::string binary_path() {
    const char* env = std::getenv("DIFFEO_BIN");
    REQUIRE_MESSAGE(env != nullptr, "DIFFEO_BIN must point at the diffeo binary");
    return env;
}

CommandResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    const std::string command = env_prefix + "'" + binary_path() + "' " + args + " 2>/dev/null";
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t read = 0;
    while ((read = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), read);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("bn subcommand prints the closed form") {
    const CommandResult result = run_cli("bn --n 3 --method closed");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "12*a1^2 - 6*a2\n");
}

TEST_CASE("bn with numeric coefficients") {
    const CommandResult result = run_cli("bn --n 3 --coeffs a1=1,a2=1");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "6\n");
}

TEST_CASE("bn json output carries the sampling fields") {
    const CommandResult result = run_cli("bn --n 4 --method direct --trials 5 --seed 9 --json");
    CHECK(result.exit_code == 0);
    const Json json = Json::parse(result.output);
    CHECK(json["n"] == 4);
    CHECK(json["method"] == "direct");
    CHECK(json["trials"] == 5);
    CHECK(json["point_independent"] == true);
    CHECK(json["poly"] == "-120*a1^3 + 120*a1*a2 - 24*a3");

    const Json closed = Json::parse(run_cli("bn --n 4 --method closed --json").output);
    CHECK(closed.contains("poly"));
    CHECK(!closed.contains("point_independent"));
}

TEST_CASE("bell subcommand") {
    CHECK(run_cli("bell --n 3 --k 2").output == "3*x1*x2\n");
    CHECK(run_cli("bell --n 4 --k 2 --subst x1=1,x2=1").output == "4*x3 + 3\n");
    const CommandResult verify = run_cli("bell verify --suite starter --nmax 6");
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("suite starter") != std::string::npos);
}

TEST_CASE("verify json report round-trips the schema") {
    const CommandResult result = run_cli("verify --suite smatrix --order 5 --json");
    CHECK(result.exit_code == 0);
    const Json reports = Json::parse(result.output);
    REQUIRE(reports.is_array());
    REQUIRE(reports.size() == 1);
    CHECK(reports[0]["suite"] == "smatrix");
    CHECK(reports[0]["passed"] == true);
    CHECK(reports[0]["checks"] == reports[0]["items"].size());
    for (const auto& item : reports[0]["items"]) CHECK(item["ok"] == true);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("bn").exit_code == 2);
    CHECK(run_cli("verify --suite nonsense").exit_code == 2);
    CHECK(run_cli("bn --n 3 --coeffs a1").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("inverse subcommand lists coefficients") {
    const CommandResult result = run_cli("inverse --order 4 --kind egf");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("b_2 = -2*a1") != std::string::npos);
    CHECK(result.output.find("b_3 = 12*a1^2 - 6*a2") != std::string::npos);
}

TEST_CASE("export emits the documented series schema") {
    const CommandResult result = run_cli("export --series inverse --order 4 --kind ogf");
    CHECK(result.exit_code == 0);
    const Json json = Json::parse(result.output);
    CHECK(json["kind"] == "ogf");
    CHECK(json["variable"] == "t");
    CHECK(json["truncation"] == 4);
    REQUIRE(json["coefficients"].size() == 5);
    CHECK(json["coefficients"][2]["poly"] == "-1*a1");
}

TEST_CASE("smatrix subcommand") {
    const CommandResult result = run_cli("smatrix --s 3 --n 4 --json");
    CHECK(result.exit_code == 0);
    const Json json = Json::parse(result.output);
    CHECK(json["w"] == "12*a1*l3");
    CHECK(json["W"] == "0");
}

TEST_CASE("legendre subcommand") {
    const CommandResult result = run_cli("legendre --order 6");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("L_3 = -1/3*a1") != std::string::npos);
    CHECK(result.output.find("suite legendre") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::string args = "verify --suite amplitudes --order 4 --trials 6 --seed 42";
    const CommandResult first = run_cli(args);
    const CommandResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("thread cap does not change the report bytes") {
    const std::string args = "verify --suite amplitudes --order 4 --trials 6 --seed 7";
    const CommandResult serial = run_cli(args, "DIFFEO_THREADS=1 ");
    const CommandResult threaded = run_cli(args, "DIFFEO_THREADS=4 ");
    CHECK(serial.exit_code == 0);
    CHECK(threaded.exit_code == 0);
    CHECK(serial.output == threaded.output);
}

TEST_CASE("config file supplies defaults, flags win") {
    const std::string path = "/tmp/diffeo_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"order": 5, "seed": 42, "output": "json", "coeffs": {"a1": "1", "a2": "1"}})";
    }
    const Json from_config = Json::parse(run_cli("bn --n 3 --config " + path).output);
    CHECK(from_config["poly"] == "6");

    // Explicit --coeffs overrides the config's substitutions.
    const Json overridden = Json::parse(run_cli("bn --n 3 --config " + path + " --coeffs a1=0,a2=1").output);
    CHECK(overridden["poly"] == "-6");

    // The config's order reaches subcommands with their own --order default.
    const Json inverse = Json::parse(run_cli("inverse --config " + path).output);
    CHECK(inverse["truncation"] == 5);
    std::remove(path.c_str());
}
