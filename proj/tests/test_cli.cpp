#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cmd(const std::string& args) {
    std::string cmd = std::string(ASAI_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST_CASE("verify emits one record per case and a summary on stderr") {
    RunResult r = run_cmd("verify --suite unramified --tuples 1 --n-max 2 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "case=unramified/split/n1/t0 q=2 ext=split n=1 status=pass\n"
                   "case=unramified/split/n2/t0 q=3 ext=split n=2 status=pass\n"
                   "case=unramified/inert_unramified/n1/t0 q=5 ext=inert_unramified n=1 "
                   "status=pass\n"
                   "case=unramified/inert_unramified/n2/t0 q=7 ext=inert_unramified n=2 "
                   "status=pass\n"
                   "case=unramified/inert_ramified/n1/t0 q=9 ext=inert_ramified n=1 "
                   "status=pass\n"
                   "case=unramified/inert_ramified/n2/t0 q=2 ext=inert_ramified n=2 "
                   "status=pass\n");

    RunResult summary =
        run_cmd("verify --suite unramified --tuples 1 --n-max 2 2>&1 1>/dev/null");
    CHECK(summary.out == "suite=unramified cases=6 failures=0\n");
}

TEST_CASE("verify is deterministic for a fixed seed") {
    const std::string args = "verify --suite all --tuples 2 --n-max 2 --seed 11 2>/dev/null";
    RunResult a = run_cmd(args);
    RunResult b = run_cmd(args);
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("status=fail") == std::string::npos);
}

TEST_CASE("factors prints the exact local data for a configured case") {
    std::string path = write_temp("asai_cli_case.cfg",
                                  "q = 5\n"
                                  "extension = inert_unramified\n"
                                  "n = 2\n"
                                  "satake = 2, 1/3\n"
                                  "lambda_ef = i\n"
                                  "tau_valuation = 1\n");
    RunResult r = run_cmd("factors --config " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("case=config q=5 ext=inert_unramified n=2\n") != std::string::npos);
    CHECK(r.out.find("L = prod (1 - 1/3 X^1)^-1 (1 - 2 X^1)^-1 (1 - 2/3 X^2)^-1\n") !=
          std::string::npos);
    CHECK(r.out.find("epsilon = 3/10*i * X^-2\n") != std::string::npos);
    CHECK(r.out.find("gamma = (") != std::string::npos);
    CHECK(r.out.find("poles = [") != std::string::npos);
}

TEST_CASE("verify accepts a configured single case") {
    std::string path = write_temp("asai_cli_single.cfg",
                                  "q = 3\n"
                                  "extension = inert_ramified\n"
                                  "n = 2\n"
                                  "satake = 2, -1/2\n"
                                  "depth = 6\n");
    RunResult r = run_cmd("verify --suite all --config " + path + " 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "case=config/unramified q=3 ext=inert_ramified n=2 status=pass\n"
                   "case=config/fe q=3 ext=inert_ramified n=2 status=pass\n"
                   "case=config/identities/cauchy q=3 ext=- n=2 status=pass\n"
                   "case=config/identities/littlewood q=3 ext=- n=2 status=pass\n"
                   "case=config/identities/littlewood_even q=3 ext=- n=2 status=pass\n"
                   "case=config/twist/m0 q=3 ext=inert_ramified n=2 status=pass\n"
                   "case=config/twist/m1 q=3 ext=inert_ramified n=2 status=pass\n"
                   "case=config/twist/m2 q=3 ext=inert_ramified n=2 status=pass\n");
}

TEST_CASE("usage and configuration errors exit with code 2") {
    RunResult unknown = run_cmd("verify --suite bogus 2>&1");
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.out.find("unknown suite: bogus") != std::string::npos);

    std::string bad = write_temp("asai_cli_bad.cfg", "qq = 5\n");
    RunResult badcfg = run_cmd("verify --suite fe --config " + bad + " 2>&1");
    CHECK(badcfg.exit_code == 2);
    CHECK(badcfg.out.find("unknown key 'qq'") != std::string::npos);

    RunResult missing = run_cmd("tate 2>&1");
    CHECK(missing.exit_code == 2);

    RunResult badchar = run_cmd("tate --char weird --s 0.5 2>&1");
    CHECK(badchar.exit_code == 2);
    CHECK(badchar.out.find("unknown character") != std::string::npos);

    RunResult nosub = run_cmd("2>&1");
    CHECK(nosub.exit_code == 2);
}

TEST_CASE("tate reports a small functional equation residual") {
    RunResult r = run_cmd("tate --char sgn --s 0.7-0.4i");
    CHECK(r.exit_code == 0);
    auto pos = r.out.find("fe_residual = ");
    REQUIRE(pos != std::string::npos);
    double residual = std::stod(r.out.substr(pos + 14));
    CHECK(residual < 1e-9);
    CHECK(r.out.find("Z = ") != std::string::npos);
    CHECK(r.out.find("gamma = ") != std::string::npos);
}

TEST_CASE("contour reconstructs the sample function") {
    RunResult r = run_cmd("contour --D 2 --s 0.3+0.2i");
    CHECK(r.exit_code == 0);
    auto pos = r.out.find("error = ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::stod(r.out.substr(pos + 8)) < 1e-6);
}
