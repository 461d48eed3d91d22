#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

namespace {

const std::string cli = LEONARD_CLI_PATH;
const std::string data = LEONARD_TEST_DATA_DIR;

struct RunResult {
    int exit_code;
    std::string output;
};

std::string temp_path(const char* suffix) {
    std::string tmpl = "/tmp/leonard_cli_XXXXXX";
    int fd = mkstemp(tmpl.data());
    REQUIRE(fd >= 0);
    close(fd);
    std::remove(tmpl.c_str());
    return tmpl + suffix;
}

RunResult run(const std::string& args) {
    std::string out_file = temp_path(".out");
    std::string cmd = cli + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(out_file.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buf.str()};
}

std::string write_temp(const std::string& content) {
    std::string path = temp_path(".json");
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("validate: valid instance exits 0") {
    RunResult r = run("validate " + data + "/q_d3_a.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("valid Leonard system") != std::string::npos);
}

TEST_CASE("validate: repeated theta exits 1 and names the invariant") {
    std::string path = write_temp(R"({"d": 1, "field": "rational",
        "theta": ["1", "1"], "theta_star": ["0", "1"], "varphi": ["1"]})");
    RunResult r = run("validate " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("theta entries are not mutually distinct") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("validate: missing key exits 2") {
    std::string path = write_temp(R"({"d": 1, "theta": ["0", "1"],
        "theta_star": ["0", "1"], "varphi": ["1"]})");
    RunResult r = run("validate " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("field") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("validate: unreadable file exits 2") {
    RunResult r = run("validate /nonexistent/nope.json");
    CHECK(r.exit_code == 2);
}

TEST_CASE("transition: identity pair prints I with its equation tag") {
    RunResult r = run("transition " + data +
                      "/q_d2_a.json --from E.fwd.xis0 --to E.fwd.xis0 --emit matrix");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("eq:Eivs0toXivs0") != std::string::npos);
    CHECK(r.output.find("verified against the change-of-basis oracle") != std::string::npos);
    // a 3x3 identity matrix rendered exactly
    CHECK(r.output.find("1") != std::string::npos);
}

TEST_CASE("transition: cross-family map verifies against the oracle") {
    RunResult r = run("transition " + data +
                      "/q_d2_c.json --from E.fwd.xis0 --to tauA.fwd.xisd --emit both");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("eq:Eivs0toXivsd") != std::string::npos);
    CHECK(r.output.find("verified") != std::string::npos);
}

TEST_CASE("transition: formula-only emission over a prime field") {
    RunResult r = run("transition " + data +
                      "/gf101_d3.json --from Es.fwd.xi0 --to etaAs.rev.xid --emit formula");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("T =") != std::string::npos);
    CHECK(r.output.find("[ ") == std::string::npos); // no matrix block
    CHECK(r.output.find("verified") != std::string::npos);
}

TEST_CASE("verify: suite subset over GF(101)") {
    RunResult r = run("verify " + data + "/gf101_d3.json --suites axioms,bases,scalars");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ALL SUITES PASS") != std::string::npos);
}

TEST_CASE("transition: unknown tag exits 2 and lists legal tags") {
    RunResult r = run("transition " + data + "/q_d2_a.json --from bogus --to E.fwd.xis0");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("E.fwd.xis0") != std::string::npos); // the legal-tag listing
}

TEST_CASE("verify: full run on a valid d = 4 instance") {
    RunResult r = run("verify " + data + "/q_d4_a.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ALL SUITES PASS") != std::string::npos);
    for (const char* suite : {"axioms", "bases", "split", "d4", "scalars", "reductions",
                              "transitions"})
        CHECK(r.output.find(suite) != std::string::npos);
}

TEST_CASE("verify: suite filtering and json report") {
    std::string json_path = temp_path(".json");
    RunResult r = run("verify " + data + "/q_d2_a.json --suites transitions --json " + json_path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("transitions") != std::string::npos);
    CHECK(r.output.find("axioms") == std::string::npos);
    std::ifstream in(json_path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("\"schema_version\": 1") != std::string::npos);
    CHECK(buf.str().find("\"all_pass\": true") != std::string::npos);
    std::remove(json_path.c_str());
}

TEST_CASE("verify: corrupted varphi entry exits 1 at the invariant stage") {
    std::string path = write_temp(R"({"d": 2, "field": "rational",
        "theta": ["0", "1", "2"], "theta_star": ["2", "0", "-2"], "varphi": ["0", "3"]})");
    RunResult r = run("verify " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("varphi") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify: rescale check and explicit anchor seeds") {
    RunResult r = run("verify " + data +
                      "/q_d1_a.json --rescale-check --seed-anchors 1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("rescale-invariance") != std::string::npos);
}

TEST_CASE("verify: the relatives flag repeats the identity suites on all 8") {
    RunResult r = run("verify " + data + "/q_d1_b.json --suites reductions --relatives");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ALL SUITES PASS") != std::string::npos);
    // 8 systems x (8(d+1)^2 + 8(d+1) + 1 + 2(d+1) + (d+1)) checks at d = 1
    CHECK(r.output.find("440/440") != std::string::npos);
}

TEST_CASE("formula-table prints all 48 displays") {
    RunResult r = run("formula-table");
    CHECK(r.exit_code == 0);
    std::size_t count = 0;
    for (std::size_t pos = r.output.find("eq:"); pos != std::string::npos;
         pos = r.output.find("eq:", pos + 1))
        ++count;
    CHECK(count == 48);
}

TEST_CASE("orbit: prints all eight relatives consistently") {
    RunResult r = run("orbit " + data + "/q_d2_c.json");
    CHECK(r.exit_code == 0);
    for (const char* label : {"Phi:", "Phi^d:", "Phi^D:", "Phi^dD:", "Phi^s:", "Phi^ds:",
                              "Phi^Ds:", "Phi^dDs:"})
        CHECK(r.output.find(label) != std::string::npos);
}

TEST_CASE("no subcommand exits 2") {
    RunResult r = run("");
    CHECK(r.exit_code == 2);
}
