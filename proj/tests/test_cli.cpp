// End-to-end tests that drive the installed command-line binary through a
// shell, checking exit codes, the JSON record on stdout, and diagnostics.

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using json = nlohmann::json;

struct RunOutput {
    int code = -1;
    std::string out;
};

// Captures stdout; stderr is silenced unless the caller redirects it.
RunOutput run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string("\"") + KRECT_BIN_PATH + "\" " + args +
                      (merge_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunOutput r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.code = WEXITSTATUS(status);
    return r;
}

json parse_record(const std::string& text) {
    json j = json::parse(text);
    REQUIRE(j.is_object());
    return j;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

const char* kStairFile = "cli_stair.tmp";

struct StairFixture {
    StairFixture() { write_file(kStairFile, "0 0\n1 1\n2 2\n3 3\n"); }
    ~StairFixture() { std::remove(kStairFile); }
};

}  // namespace

TEST_CASE("min-area reports the staircase optimum and rejects bad k") {
    StairFixture fx;
    json j = parse_record(run_cli(std::string("min-area ") + kStairFile + " 2").out);
    CHECK(j["command"] == "min-area");
    CHECK(j["algorithm"] == "divide-and-conquer");
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["area"] == 1.0);
    CHECK(j["count"] == 2);
    CHECK(j["rect"]["xmax"].get<double>() - j["rect"]["xmin"].get<double>() == 1.0);
    CHECK(j.contains("wall_ms"));

    json j1 = parse_record(run_cli(std::string("min-area ") + kStairFile + " 1").out);
    CHECK(j1["area"] == 0.0);

    RunOutput over = run_cli(std::string("min-area ") + kStairFile + " 5", true);
    CHECK(over.code == 2);
    CHECK(over.out.find("k exceeds point count") != std::string::npos);

    CHECK(run_cli(std::string("min-area ") + kStairFile + " 0").code == 2);
}

TEST_CASE("min-area oracle flag cross-checks the fast solver") {
    StairFixture fx;
    for (int k : {2, 3, 4}) {
        json fast =
            parse_record(run_cli(std::string("min-area ") + kStairFile + " " + std::to_string(k)).out);
        json slow = parse_record(
            run_cli(std::string("min-area ") + kStairFile + " " + std::to_string(k) + " --oracle").out);
        CHECK(slow["algorithm"] == "oracle-enumeration");
        CHECK(fast["area"] == slow["area"]);
    }
}

TEST_CASE("max-points exact and approximate runs") {
    StairFixture fx;
    json exact = parse_record(run_cli(std::string("max-points ") + kStairFile + " 1 --exact").out);
    CHECK(exact["algorithm"] == "duality-binary-search");
    CHECK(exact["count"] == 2);
    CHECK(exact["area"].get<double>() <= 1.0);

    json all = parse_record(run_cli(std::string("max-points ") + kStairFile + " 20 --exact").out);
    CHECK(all["count"] == 4);

    // Fixed seed: identical records except the wall time.
    json a = parse_record(run_cli(std::string("max-points ") + kStairFile + " 1 --seed 9").out);
    json b = parse_record(run_cli(std::string("max-points ") + kStairFile + " 1 --seed 9").out);
    CHECK(a["algorithm"] == "sampled-approximation");
    CHECK(a["eps"] == 0.25);
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a.dump() == b.dump());

    CHECK(run_cli(std::string("max-points ") + kStairFile + " 0").code == 2);
    CHECK(run_cli(std::string("max-points ") + kStairFile + " 1 --eps 0.6").code == 2);
    CHECK(run_cli(std::string("max-points ") + kStairFile + " 1 --eps 0.5").code == 0);
}

TEST_CASE("kappa stays within its factor of the exact count") {
    StairFixture fx;
    json kr = parse_record(run_cli(std::string("kappa ") + kStairFile + " 0.5").out);
    CHECK(kr["algorithm"] == "four-approximation");
    CHECK(kr["kappa"] == 1);
    CHECK(kr["count"] == 1);
    CHECK(kr["area"].get<double>() <= 0.5);

    json wide = parse_record(run_cli(std::string("kappa ") + kStairFile + " 100").out);
    json opt = parse_record(run_cli(std::string("max-points ") + kStairFile + " 100 --exact").out);
    int kap = wide["kappa"].get<int>();
    CHECK(kap >= 1);
    CHECK(kap <= opt["count"].get<int>());
    CHECK(4 * kap >= opt["count"].get<int>());

    CHECK(run_cli(std::string("kappa ") + kStairFile + " 0").code == 2);
}

TEST_CASE("gen is deterministic and round-trips through the solvers") {
    CHECK(run_cli("gen 5 uniform 1 cli_g1.tmp").code == 0);
    CHECK(run_cli("gen 5 uniform 1 cli_g2.tmp").code == 0);
    std::ifstream f1("cli_g1.tmp"), f2("cli_g2.tmp");
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK(std::count(s1.begin(), s1.end(), '\n') == 5);

    CHECK(run_cli("gen 1 uniform 3 cli_one.tmp").code == 0);
    std::ifstream fo("cli_one.tmp");
    std::string so((std::istreambuf_iterator<char>(fo)), std::istreambuf_iterator<char>());
    CHECK(std::count(so.begin(), so.end(), '\n') == 1);

    CHECK(run_cli("gen 30 clusters 4 cli_c.tmp").code == 0);
    json j = parse_record(run_cli("min-area cli_c.tmp 5").out);
    CHECK(j["n"] == 30);
    CHECK(j["count"].get<int>() >= 5);

    CHECK(run_cli("gen 0 uniform 1 cli_z.tmp").code == 2);
    CHECK(run_cli("gen 5 bogus 1 cli_z.tmp").code == 2);
    CHECK(run_cli("gen 5 uniform 1 /nonexistent/cli.tmp").code == 3);
    for (const char* f : {"cli_g1.tmp", "cli_g2.tmp", "cli_one.tmp", "cli_c.tmp"}) std::remove(f);
}

TEST_CASE("dataset errors map to the documented exit codes") {
    RunOutput missing = run_cli("min-area cli_missing.tmp 1", true);
    CHECK(missing.code == 3);
    CHECK(missing.out.find("cannot open") != std::string::npos);

    write_file("cli_bad.tmp", "1 2\noops\n");
    RunOutput bad = run_cli("min-area cli_bad.tmp 1", true);
    CHECK(bad.code == 2);
    CHECK(bad.out.find("line 2") != std::string::npos);

    write_file("cli_dup.tmp", "1 2\n3 4\n1 2\n");
    RunOutput dup = run_cli("min-area cli_dup.tmp 1", true);
    CHECK(dup.code == 2);
    CHECK(dup.out.find("lines 1 and 3") != std::string::npos);
    std::remove("cli_bad.tmp");
    std::remove("cli_dup.tmp");
}

TEST_CASE("verify command runs suites and maps failures to exit codes") {
    RunOutput oracle = run_cli("verify oracle --seed 3");
    CHECK(oracle.code == 0);
    json j = parse_record(oracle.out);
    CHECK(j["suite"] == "oracle");
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() == 4);
    for (const json& c : j["checks"]) CHECK(c["pass"] == true);

    RunOutput lines = run_cli("verify invariants --seed 3", true);
    CHECK(lines.code == 0);
    CHECK(lines.out.find("[PASS] exact-matches-oracle") != std::string::npos);

    CHECK(run_cli("verify sampling --trials 4 --seed 7").code == 0);
    CHECK(run_cli("verify bogus").code == 2);
    CHECK(run_cli("verify sampling --trials 0").code == 2);
}

TEST_CASE("bench fits a growth exponent and validates its inputs") {
    RunOutput one = run_cli("bench --k 1 200", true);
    CHECK(one.code == 2);
    CHECK(one.out.find("need >= 2 sizes") != std::string::npos);

    RunOutput r = run_cli("bench --k 1 120 240");
    CHECK(r.code == 0);
    json j = parse_record(r.out);
    CHECK(j["k"] == 1);
    CHECK(j["rows"].size() == 2);
    for (const json& row : j["rows"]) {
        CHECK(row["area"] == 0.0);
        CHECK(row.contains("wall_ms"));
    }
    CHECK(j.contains("exponent"));

    CHECK(run_cli("bench --k 500 120 240").code == 2);
}

TEST_CASE("top-level usage errors") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("min-area").code == 2);
    CHECK(run_cli("frobnicate x").code == 2);
}
