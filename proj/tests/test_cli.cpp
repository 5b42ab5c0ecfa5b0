#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gamecol/cli.hpp"

using namespace gamecol;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    const int code = cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen emits graph6") {
    const CliResult r = run_cli({"gen", "--family", "turan", "--n", "6", "--r", "3"});
    CHECK(r.code == 0);
    // hand-encoded: upper-triangle stream 011110 111111 110(000) over '?'+63
    CHECK(r.out == "E]~o\n");

    const CliResult k2 = run_cli({"gen", "--family", "complete", "--n", "2"});
    CHECK(k2.out == "A_\n");

    const CliResult bad = run_cli({"gen", "--family", "nonsense"});
    CHECK(bad.code != 0);
}

TEST_CASE("solve reports values and winners") {
    const CliResult plain = run_cli({"solve", "--variant", "plain", "Bw"});
    CHECK(plain.code == 0);
    CHECK(plain.out == "chi_g = 3\n");

    const CliResult fixed = run_cli({"solve", "--variant", "plain", "--k", "2", "Bw"});
    CHECK(fixed.out == "winner = Breaker\n");

    const CliResult marked = run_cli(
        {"solve", "--variant", "blanks", "--marked", "0", "--k", "1", "A?"});
    CHECK(marked.out == "winner = Maker\n");

    const CliResult profile = run_cli({"solve", "--variant", "plain", "--profile", "A?"});
    CHECK(profile.out.find("profile: 0:L 1:W 2:W") != std::string::npos);

    const CliResult invalid = run_cli({"solve", "--variant", "plain", "!!"});
    CHECK(invalid.code != 0);
    CHECK(invalid.err.find("error") != std::string::npos);
}

TEST_CASE("solve accepts the blanks variant on the separating example") {
    const CliResult gen = run_cli({"gen", "--family", "separating_example"});
    std::string g6 = gen.out;
    g6.pop_back();  // strip newline
    const CliResult blanks = run_cli({"solve", "--variant", "blanks", g6});
    CHECK(blanks.out == "chi_gb = 3\n");
    const CliResult plain = run_cli({"solve", "--variant", "plain", g6});
    CHECK(plain.out == "chi_g = 2\n");
}

TEST_CASE("enumerate prints csv") {
    const CliResult r = run_cli({"enumerate", "--n", "3", "--invariant", "chi_g"});
    CHECK(r.code == 0);
    CHECK(r.out.find("graph6,invariant,params,value") == 0);
    CHECK(r.out.find("Bw,chi_g,,3") != std::string::npos);
}

TEST_CASE("verify runs a suite and exits zero on pass") {
    const CliResult r = run_cli({"verify", "--suite", "marking", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    CHECK(r.out.find("ALL SUITES PASS") != std::string::npos);
}

TEST_CASE("verify separation at order 3 reports the example values") {
    const CliResult r = run_cli({"verify", "--suite", "separation", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2,2,3") != std::string::npos);
}

TEST_CASE("unknown flags are rejected") {
    const CliResult r = run_cli({"verify", "--nonsense"});
    CHECK(r.code != 0);
}

TEST_CASE("verify writes cache and csv files") {
    const std::string cache_path = "test_cli_cache.tsv";
    const std::string csv_path = "test_cli_witness.csv";
    std::remove(cache_path.c_str());
    std::remove(csv_path.c_str());
    const CliResult first = run_cli({"verify", "--suite", "basic", "--n", "4", "--cache",
                                     cache_path, "--csv", csv_path});
    CHECK(first.code == 0);
    const CliResult second = run_cli({"verify", "--suite", "basic", "--n", "4", "--cache",
                                      cache_path, "--csv", csv_path});
    CHECK(second.code == 0);
    // identical modulo the timing lines
    auto strip = [](const std::string& text) {
        std::istringstream in(text);
        std::string line, kept;
        while (std::getline(in, line))
            if (line.rfind("(took", 0) != 0) kept += line + "\n";
        return kept;
    };
    CHECK(strip(first.out) == strip(second.out));
    std::ifstream csv(csv_path);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "suite,kind,graph6,invariant,params,value");
    std::remove(cache_path.c_str());
    std::remove(csv_path.c_str());
}

TEST_CASE("play rejects illegal moves and answers optimally") {
    // Human is Maker on K2 with one colour: colour vertex 0, engine must
    // respond; the game ends in a Breaker win (chi_g(K2) = 2 > 1).
    const CliResult r = run_cli(
        {"play", "--variant", "plain", "--human", "maker", "--k", "1", "A_"},
        "0 7\n0 1\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("illegal move") != std::string::npos);
    CHECK(r.out.find("Breaker wins.") != std::string::npos);

    // Human is Breaker on E2 with one colour: engine opens, human replies.
    const CliResult win = run_cli(
        {"play", "--variant", "plain", "--human", "breaker", "--k", "1", "A?"},
        "1 1\n");
    CHECK(win.code == 0);
    CHECK(win.out.find("engine plays: M ") != std::string::npos);
    CHECK(win.out.find("Maker wins.") != std::string::npos);

    // Input ending mid-game is reported, not crashed on.
    const CliResult eof = run_cli(
        {"play", "--variant", "plain", "--human", "maker", "--k", "2", "A_"}, "");
    CHECK(eof.code == 1);
}
