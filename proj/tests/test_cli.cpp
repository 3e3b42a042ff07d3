#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PLUMBD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    return std::string(PLUMBD_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("dinv on the -2 vertex reports both classes") {
    RunResult r = run("dinv " + fixture("single_m2.json"));
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["classes"].size() == 2);
    std::vector<std::string> ds = {doc["classes"][0]["d"], doc["classes"][1]["d"]};
    std::sort(ds.begin(), ds.end());
    CHECK(ds == std::vector<std::string>{"-1/4", "1/4"});
}

TEST_CASE("dinv on the E8 fixture gives the single class d = 2") {
    RunResult r = run("dinv " + fixture("e8.json"));
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["classes"].size() == 1);
    CHECK(doc["classes"][0]["d"] == "2");
    CHECK(doc["manifold"]["h1_order"] == 1);
}

TEST_CASE("dinv output is identical with and without --parallel") {
    RunResult serial = run("dinv " + fixture("pair_m2_m3.json"));
    RunResult parallel = run("dinv --parallel " + fixture("pair_m2_m3.json"));
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("dinv csv format") {
    RunResult r = run("dinv --format csv " + fixture("pair_m2_m3.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("index,rep,maximizer,max_square,d\n", 0) == 0);
}

TEST_CASE("validate prints the matrix and certificate for the E8 fixture") {
    RunResult r = run("validate " + fixture("e8.json"));
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["valid"] == true);
    CHECK(doc["accepted"] == true);
    CHECK(doc["negative_definite"] == true);
    CHECK(doc["manifold"]["det"] == 1);
    CHECK(doc["matrix"].size() == 8);
    CHECK(doc["ldl_pivots"].size() == 8);
}

TEST_CASE("validate rejects broken graphs with exit code 2") {
    RunResult r = run("validate " + fixture("bad_selfloop.json"));
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("SelfLoop") != std::string::npos);

    RunResult c = run("validate " + fixture("bad_cycle.json"));
    CHECK(c.exit_code == 2);
    CHECK(c.out.find("CycleFound") != std::string::npos);
}

TEST_CASE("compute commands reject invalid input with exit code 2") {
    CHECK(run("dinv " + fixture("bad_selfloop.json")).exit_code == 2);
    CHECK(run("dinv " + fixture("positive.json")).exit_code == 2);
    CHECK(run("dinv /nonexistent.json").exit_code == 2);
    CHECK(run("spinc --format dot " + fixture("single_m2.json")).exit_code == 2);
}

TEST_CASE("spinc table lists |det| classes") {
    RunResult r = run("spinc " + fixture("pair_m2_m3.json"));
    REQUIRE(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["classes"].size() == 5);
    for (const auto& row : doc["classes"]) {
        CHECK(row.contains("index"));
        CHECK(row["rep"].is_array());
    }
}

TEST_CASE("root emits a digraph per class") {
    RunResult r = run("root --format dot " + fixture("single_m2.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("digraph \"class_0\"") != std::string::npos);
    CHECK(r.out.find("digraph \"class_1\"") != std::string::npos);
    CHECK(r.out.find("t=0") != std::string::npos);

    RunResult j = run("root --format json --t-max 3 " + fixture("single_m2.json"));
    REQUIRE(j.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(j.out);
    REQUIRE(doc["roots"].size() == 2);
    CHECK(doc["roots"][0]["cutoff"] == 3);
}

TEST_CASE("verify runs a small seeded corpus cleanly") {
    RunResult r = run("verify --count 8 --max-vertices 3 --seed 42");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("0 failures") != std::string::npos);
}

TEST_CASE("verify accepts an explicit manifold too") {
    RunResult r = run("verify " + fixture("pair_m2_m3.json") + " --count 2 --seed 7");
    REQUIRE(r.exit_code == 0);
}
