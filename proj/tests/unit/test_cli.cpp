// End-to-end checks against the installed command-line binary.  The test
// runner passes its location through ARREXP_CLI_BIN and the sample-input
// directory through ARREXP_DATA_DIR; without them the cases are skipped.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    const char* bin = std::getenv("ARREXP_CLI_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data_file(const std::string& name) {
    const char* dir = std::getenv("ARREXP_DATA_DIR");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

bool configured() {
    return std::getenv("ARREXP_CLI_BIN") != nullptr &&
           std::getenv("ARREXP_DATA_DIR") != nullptr;
}

}  // namespace

TEST_CASE("cli reports exponents as json", "[cli]") {
    if (!configured()) SKIP("ARREXP_CLI_BIN / ARREXP_DATA_DIR not set");

    RunResult r = run("exponents " + data_file("main.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"d1\":10") != std::string::npos);
    CHECK(r.output.find("\"d2\":10") != std::string::npos);
    CHECK(r.output.find("\"delta\":0") != std::string::npos);
    CHECK(r.output.find("\"method\":\"wy-kernel-search\"") != std::string::npos);

    SECTION("flag form of the input path") {
        RunResult f = run("exponents --input " + data_file("b2.json"));
        CHECK(f.exit_code == 0);
        CHECK(f.output.find("\"d1\":12") != std::string::npos);
    }
}

TEST_CASE("cli prints the symbolic determinant factored", "[cli]") {
    if (!configured()) SKIP("ARREXP_CLI_BIN / ARREXP_DATA_DIR not set");

    RunResult r = run("symbolic-det " + data_file("2213.json") + " --symbolic 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2*z^4 - 2*z^2 = 2 z^2 (z-1)(z+1)\n");
}

TEST_CASE("cli exit codes distinguish domain and usage errors", "[cli]") {
    if (!configured()) SKIP("ARREXP_CLI_BIN / ARREXP_DATA_DIR not set");

    CHECK(run("exponents does-not-exist.json", true).exit_code == 1);
    CHECK(run("exponents", true).exit_code == 2);
    CHECK(run("no-such-subcommand", true).exit_code == 2);
    CHECK(run("padic 10 6", true).exit_code == 1);  // 6 is not prime
}

TEST_CASE("cli theorem checks emit certificates", "[cli]") {
    if (!configured()) SKIP("ARREXP_CLI_BIN / ARREXP_DATA_DIR not set");

    RunResult r = run("check " + data_file("main.json") + " --theorem main");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"applies\":true") != std::string::npos);
    CHECK(r.output.find("\"I1\":[3,4,5]") != std::string::npos);
    CHECK(r.output.find("\"I2\":[6]") != std::string::npos);
    CHECK(r.output.find("\"confirmed\":true") != std::string::npos);

    SECTION("zero locus lists roots with validity") {
        RunResult z = run("check " + data_file("2213.json") + " --theorem zero-locus");
        CHECK(z.exit_code == 0);
        CHECK(z.output.find("\"polynomial\":\"2*z^4 - 2*z^2\"") != std::string::npos);
        CHECK(z.output.find("\"valid_slope\":true") != std::string::npos);
    }
}

TEST_CASE("cli wy-matrix shows blocks and factor check", "[cli]") {
    if (!configured()) SKIP("ARREXP_CLI_BIN / ARREXP_DATA_DIR not set");

    RunResult r = run("wy-matrix " + data_file("2213.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("(x)^2(y)^2(x-y)(x+y)^3") != std::string::npos);
    CHECK(r.output.find("M = P o W entrywise: ok") != std::string::npos);
}

TEST_CASE("cli sweep emits deterministic csv", "[cli]") {
    if (!configured()) SKIP("ARREXP_CLI_BIN / ARREXP_DATA_DIR not set");

    std::string cmd = "sweep " + data_file("b2.json") + " --max 2";
    RunResult a = run(cmd + " --workers 1");
    RunResult b = run(cmd + " --workers 4");
    CHECK(a.exit_code == 0);
    REQUIRE(!a.output.empty());
    CHECK(a.output.substr(0, a.output.find('\n')) == "m1,m2,m3,m4,d1,d2,delta,method,ms");

    // strip the timing column before comparing runs
    auto strip_ms = [](std::string s) {
        std::string out;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t nl = s.find('\n', pos);
            if (nl == std::string::npos) nl = s.size();
            std::string line = s.substr(pos, nl - pos);
            std::size_t comma = line.rfind(',');
            out += line.substr(0, comma) + "\n";
            pos = nl + 1;
        }
        return out;
    };
    CHECK(strip_ms(a.output) == strip_ms(b.output));
}

TEST_CASE("cli wronskian and padic speak plain text", "[cli]") {
    if (!configured()) SKIP("ARREXP_CLI_BIN / ARREXP_DATA_DIR not set");

    RunResult w = run("wronskian 5 4 2 0");
    CHECK(w.exit_code == 0);
    CHECK(w.output.find("closed: 240") != std::string::npos);
    CHECK(w.output.find("direct: 240") != std::string::npos);

    RunResult p = run("padic 24 2");
    CHECK(p.exit_code == 0);
    CHECK(p.output.find("v_2(24) = 3") != std::string::npos);
}
