#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& input) {
    const std::string in_path = "cli_input." + std::to_string(getpid()) + ".tmp";
    {
        std::ofstream f(in_path);
        f << input;
    }
    const std::string cmd =
        std::string(SEMICM_CLI_PATH) + " " + args + " " + in_path + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult r;
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("buchsbaum subcommand on the pentagon curve") {
    const auto r = run_cli("buchsbaum --no-timing", "1 3 4");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "buchsbaum");
    CHECK(j["buchsbaum"]["cm"] == json(false));
    CHECK(j["buchsbaum"]["buchsbaum"] == json(true));
    CHECK(j["buchsbaum"]["t_star_generators"] ==
          json::parse(R"([["4","0"],["3","1"],["2","2"],["1","3"],["0","4"]])"));
    CHECK(!j["warnings"].empty());  // {1,3,4} is not a minimal numerical generating set
}

TEST_CASE("lift subcommand reports mu equality") {
    const auto r = run_cli("lift --k 2 --no-timing", "3 4 5");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["lifting"]["mu_equal"] == json(true));
    CHECK(j["lifting"]["lifted_generators"] == json::parse(R"([["3"],["8"],["10"]])"));
    CHECK(j["lifting"]["flat"] == json(true));
}

TEST_CASE("buchsbaum on a dim-2 input exits with a precondition code") {
    const auto r = run_cli("buchsbaum", R"({"dim":2,"generators":[[4,0],[3,1],[1,3],[0,4]]})");
    CHECK(r.exit_code == 2);
}

TEST_CASE("parse errors exit with code 1") {
    CHECK(run_cli("analyze", R"({"dim":2,"generators":[[1,-1]]})").exit_code == 1);
    CHECK(run_cli("analyze", R"({"dim":2,"generators":[[1,2],[3]]})").exit_code == 1);
    CHECK(run_cli("analyze", "3 4 x").exit_code == 1);
    CHECK(run_cli("analyze", "").exit_code == 1);
    CHECK(run_cli("analyze", R"({"dim":2 "generators":[[1,2]]})").exit_code == 1);
}

TEST_CASE("json inputs accept integers and decimal strings") {
    const auto a = run_cli("apery --no-timing", R"({"dim":1,"generators":[3,4,5]})");
    const auto b = run_cli("apery --no-timing", R"({"dim":1,"generators":[["3"],["4"],["5"]]})");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(json::parse(a.out)["apery"] == json::parse(b.out)["apery"]);
}

TEST_CASE("the input echo round-trips") {
    const auto r = run_cli("analyze --no-timing", R"({"dim":2,"generators":[[2,0],[0,2],[1,1]]})");
    REQUIRE(r.exit_code == 0);
    const json echo = json::parse(r.out)["input"];
    const auto again = run_cli("analyze --no-timing", echo.dump());
    REQUIRE(again.exit_code == 0);
    CHECK(json::parse(again.out)["input"] == echo);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const std::string input : {"3 4 5", "1 3 4"}) {
        const auto a = run_cli("analyze --no-timing", input);
        const auto b = run_cli("analyze --no-timing", input);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("golden report for the pentagon curve") {
    const auto r = run_cli("buchsbaum --no-timing", "1 3 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == read_file(std::string(SEMICM_FIXTURES) + "/buchsbaum_1_3_4.json"));
}

TEST_CASE("golden report for <3,4,5>") {
    const auto r = run_cli("analyze --no-timing", "3 4 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == read_file(std::string(SEMICM_FIXTURES) + "/analyze_3_4_5.json"));
}

TEST_CASE("text format renders") {
    const auto r = run_cli("cm --format text --no-timing", "3 4 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("projective: true") != std::string::npos);
}

TEST_CASE("order override changes the reported ranking") {
    const auto r = run_cli("gb --order 1,2,3 --no-timing", "3 4 5");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["ideal"]["order"] == json::parse(R"(["z1","z2","z3"])"));
}

TEST_CASE("timing is present by default and absent with --no-timing") {
    const auto with = run_cli("apery", "3 4 5");
    const auto without = run_cli("apery --no-timing", "3 4 5");
    CHECK(json::parse(with.out).contains("timing_ms"));
    CHECK(!json::parse(without.out).contains("timing_ms"));
}

TEST_CASE("non-simplicial input is a precondition failure") {
    const auto r =
        run_cli("analyze", R"({"dim":3,"generators":[[0,0,1],[1,0,1],[0,1,1],[1,1,1]]})");
    CHECK(r.exit_code == 2);
}

TEST_CASE("the budget flag yields exit 3 and a partial report") {
    // a deliberately heavy Betti bound with a tiny budget
    const auto r = run_cli("betti --bound 40 --max-seconds 1",
                           R"({"dim":3,"generators":[[4,0,1],[1,5,2],[0,1,7],[2,3,4],[9,9,9]]})");
    REQUIRE(r.exit_code == 3);
    const json j = json::parse(r.out);
    CHECK(j["partial"] == json(true));
}
