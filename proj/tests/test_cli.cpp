#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Drives the installed CLI binary through a shell; the path arrives in the
// MCCONF_BIN environment variable set by CTest.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
    const char* path = std::getenv("MCCONF_BIN");
    REQUIRE_MESSAGE(path != nullptr, "MCCONF_BIN must point at the CLI binary");
    return path;
}

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string cmd = bin() + " " + args + " >" + out_path + " 2>" + err_path;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

}  // namespace

TEST_CASE("estimate: accounting and byte-identical reruns") {
    const std::string args = "estimate --est stratified --m 16 --fn holder:beta=1,d=1 --seed 7";
    auto a = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("\"evals_used\":16") != std::string::npos);
    CHECK(a.out.find("\"seed\":7") != std::string::npos);
    auto b = run(args);
    CHECK(a.out == b.out);
}

TEST_CASE("estimate: usage errors exit 2") {
    auto even_k = run("estimate --est median --k 2 --inner plain --n 8 --fn holder:beta=1,d=1");
    CHECK(even_k.exit_code == 2);
    CHECK(even_k.err.find("odd") != std::string::npos);

    CHECK(run("estimate --est nosuch --fn holder:beta=1,d=1").exit_code == 2);
    CHECK(run("estimate --est plain --fn holder:beta=7,d=1").exit_code == 2);
    CHECK(run("estimate --est plain --fn holder:beta=1,d=1,bogus=3").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
}

TEST_CASE("failure-prob: identical output for any thread count") {
    const std::string base =
        "failure-prob --est stratified --m 32 --fn holder:beta=1,d=1 --eps 0.002 "
        "--trials 3000 --seed 99";
    auto one = run(base + " --threads 1");
    auto four = run(base + " --threads 4");
    CHECK(one.exit_code == 0);
    CHECK(one.out == four.out);
    CHECK(one.out.find("\"failures\":") != std::string::npos);
}

TEST_CASE("verify-lemmas: clean scan, csv shape, io failure") {
    auto small = run("verify-lemmas --k-max 40");
    CHECK(small.exit_code == 0);
    CHECK(small.out.rfind("lemma,k,param,lhs,rhs,holds", 0) == 0);
    CHECK(small.out.find("A1,9,1,130/2^9,") != std::string::npos);
    CHECK(small.out.find(",0\n") == std::string::npos);  // no violated rows

    auto k1 = run("verify-lemmas --k-max 1");
    CHECK(k1.exit_code == 0);
    // k=1: header, one A1 row (t=0), two A2 rows (k'=0,1)
    std::stringstream lines(k1.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "lemma,k,param,lhs,rhs,holds");
    std::getline(lines, line);
    CHECK(line.rfind("A1,1,0,1/2^1,", 0) == 0);
    std::getline(lines, line);
    CHECK(line == "A2,1,0,2/2^1,1,1");  // k'=0 removes nothing
    std::getline(lines, line);
    CHECK(line == "A2,1,1,1/2^1,0.5,1");
    CHECK(!std::getline(lines, line));

    auto bad = run("verify-lemmas --k-max 5 --out /nonexistent-dir/x.csv");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("verify-bounds: suites pass and unknown suite exits 2") {
    auto med = run("verify-bounds --suite median --alpha 0.125 --k 3 --trials 20000 --seed 5");
    CHECK(med.exit_code == 0);
    CHECK(med.out.find("[PASS]") != std::string::npos);

    auto cx = run("verify-bounds --suite counterexample --n 8 --trials 20000 --seed 5");
    CHECK(cx.exit_code == 0);
    CHECK(cx.out.find("zero-return probability") != std::string::npos);

    CHECK(run("verify-bounds --suite nosuch").exit_code == 2);
}

TEST_CASE("counterexample alias matches the suite") {
    auto alias = run("counterexample --n 4 --trials 5000 --seed 3");
    CHECK(alias.exit_code == 0);
    CHECK(alias.out.find("\"suite\":\"counterexample\"") != std::string::npos);
}

TEST_CASE("rate-sweep: slope summary and point-count guard") {
    auto sweep = run(
        "rate-sweep --est stratified --fn holder:beta=1,d=1 "
        "--ns 16,64,256,1024 --reps 300 --stat mae --seed 11");
    CHECK(sweep.exit_code == 0);
    CHECK(sweep.out.rfind("n,statistic", 0) == 0);
    CHECK(sweep.out.find("\"slope\":") != std::string::npos);

    auto narrow = run("rate-sweep --est plain --fn holder:beta=1,d=1 --ns 64 --reps 10");
    CHECK(narrow.exit_code == 2);
    CHECK(narrow.err.find("3 points") != std::string::npos);

    auto as_json = run(
        "rate-sweep --est plain --fn holder:beta=1,d=1 --ns 16,64,256 --reps 50 "
        "--stat rmse --seed 4 --json");
    CHECK(as_json.exit_code == 0);
    CHECK(as_json.out.rfind("{\"command\":\"rate-sweep\"", 0) == 0);
    CHECK(as_json.out.find("\"rows\":[[16,") != std::string::npos);
}

TEST_CASE("config file provides defaults, flags win, unknown keys rejected") {
    {
        std::ofstream cfg("cli_test.ini");
        cfg << "[estimate]\nseed=31\nm=4\n";
    }
    auto from_cfg = run("estimate --est stratified --fn holder:beta=1,d=1 --config cli_test.ini");
    CHECK(from_cfg.exit_code == 0);
    CHECK(from_cfg.out.find("\"seed\":31") != std::string::npos);
    CHECK(from_cfg.out.find("\"evals_used\":4") != std::string::npos);

    auto overridden = run(
        "estimate --est stratified --m 8 --fn holder:beta=1,d=1 --config cli_test.ini");
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.out.find("\"evals_used\":8") != std::string::npos);

    {
        std::ofstream cfg("cli_bad.ini");
        cfg << "[estimate]\nnot_an_option=1\n";
    }
    auto rejected = run("estimate --est plain --fn holder:beta=1,d=1 --config cli_bad.ini");
    CHECK(rejected.exit_code == 2);

    std::remove("cli_test.ini");
    std::remove("cli_bad.ini");
}
