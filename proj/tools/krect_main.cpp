// Command-line front end: dataset I/O, generators, solvers, verification
// suites, and a scaling benchmark. Machine-readable single-record output
// goes to stdout; human summaries and diagnostics go to stderr.
//
// Exit codes: 0 success, 1 check failure, 2 usage/validation error,
// 3 I/O error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "krect/approx_count.hpp"
#include "krect/dataset.hpp"
#include "krect/exact_min_area.hpp"
#include "krect/oracle.hpp"
#include "krect/sampling.hpp"
#include "krect/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using krect::AreaResult;
using krect::PointSet;
using krect::Rect;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct cli_error {
    int code;
    std::string msg;
};

[[noreturn]] void usage_error(const std::string& msg) { throw cli_error{kExitUsage, msg}; }

class Timer {
  public:
    double ms() const {
        auto dt = std::chrono::steady_clock::now() - t0_;
        return std::chrono::duration<double, std::milli>(dt).count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// Open failures are I/O errors; malformed content is a validation error.
PointSet load_points(const std::string& path) {
    try {
        return krect::read_points_file(path);
    } catch (const std::runtime_error& e) {
        std::string m = e.what();
        int code = m.find("cannot open") != std::string::npos ? kExitIo : kExitUsage;
        throw cli_error{code, m};
    }
}

void check_alpha_flag(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) usage_error("alpha must be positive and finite");
}

json rect_json(const Rect& r) {
    return json{{"xmin", r.xmin}, {"ymin", r.ymin}, {"xmax", r.xmax}, {"ymax", r.ymax}};
}

void add_result(json& j, const AreaResult& r) {
    if (r.feasible()) {
        j["area"] = r.area;
        j["rect"] = rect_json(*r.rect);
    }
    j["count"] = r.count;
}

void emit(const json& j, const std::string& human) {
    std::cout << j.dump() << "\n";
    std::cerr << human << "\n";
}

int cmd_min_area(const std::string& file, int k, bool oracle) {
    PointSet ps = load_points(file);
    int n = static_cast<int>(ps.size());
    if (k < 1) usage_error("k must be at least 1");
    if (k > n) usage_error("k exceeds point count");
    Timer timer;
    AreaResult r = oracle ? krect::oracle_min_area(ps, k) : krect::min_area_rect(ps, k);
    double ms = timer.ms();
    json j{{"command", "min-area"},
           {"algorithm", oracle ? "oracle-enumeration" : "divide-and-conquer"},
           {"file", file},
           {"n", n},
           {"k", k}};
    add_result(j, r);
    j["wall_ms"] = ms;
    std::string human = "min-area: smallest rectangle covering " + std::to_string(k) + " of " +
                        std::to_string(n) + " points has area " + std::to_string(r.area);
    emit(j, human);
    return kExitOk;
}

int cmd_max_points(const std::string& file, double alpha, double eps, std::uint64_t seed,
                   bool exact) {
    check_alpha_flag(alpha);
    if (!exact && !(eps > 0.0 && eps <= 0.5)) usage_error("eps must be in (0, 1/2]");
    PointSet ps = load_points(file);
    Timer timer;
    AreaResult r =
        exact ? krect::max_points_exact(ps, alpha) : krect::approx_max_points(ps, alpha, eps, seed);
    double ms = timer.ms();
    json j{{"command", "max-points"},
           {"algorithm", exact ? "duality-binary-search" : "sampled-approximation"},
           {"file", file},
           {"n", static_cast<int>(ps.size())},
           {"alpha", alpha}};
    if (!exact) {
        j["eps"] = eps;
        j["seed"] = seed;
    }
    add_result(j, r);
    j["wall_ms"] = ms;
    std::string human = "max-points: a rectangle of area at most " + std::to_string(alpha) +
                        " covers " + std::to_string(r.count) + " of " + std::to_string(ps.size()) +
                        " points" + (exact ? " (exact)" : " (approximate)");
    emit(j, human);
    return kExitOk;
}

int cmd_kappa(const std::string& file, double alpha) {
    check_alpha_flag(alpha);
    PointSet ps = load_points(file);
    Timer timer;
    krect::KappaResult r = krect::kappa(ps, alpha);
    double ms = timer.ms();
    json j{{"command", "kappa"},
           {"algorithm", "four-approximation"},
           {"file", file},
           {"n", static_cast<int>(ps.size())},
           {"alpha", alpha},
           {"kappa", r.kappa},
           {"area", r.witness.area()},
           {"rect", rect_json(r.witness)},
           {"count", r.kappa},
           {"wall_ms", ms}};
    std::string human = "kappa: " + std::to_string(r.kappa) +
                        " points covered by the witness; the optimum is between kappa and 4*kappa";
    emit(j, human);
    return kExitOk;
}

int cmd_gen(int n, const std::string& distribution, std::uint64_t seed, const std::string& out) {
    if (n < 1) usage_error("n must be at least 1");
    Timer timer;
    PointSet ps =
        distribution == "uniform" ? krect::gen_uniform(n, seed) : krect::gen_clusters(n, seed);
    try {
        krect::write_points_file(out, ps);
    } catch (const std::runtime_error& e) {
        throw cli_error{kExitIo, e.what()};
    }
    json j{{"command", "gen"},      {"distribution", distribution},
           {"n", n},                {"seed", seed},
           {"file", out},           {"wall_ms", timer.ms()}};
    emit(j, "gen: wrote " + std::to_string(n) + " " + distribution + " points to " + out);
    return kExitOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed) {
    if (trials < 1) usage_error("trials must be at least 1");
    Timer timer;
    std::vector<krect::CheckResult> results;
    if (suite == "oracle") {
        results = krect::verify_oracle_suite(seed);
    } else if (suite == "invariants") {
        results = krect::verify_invariants_suite(seed);
    } else {
        results = krect::verify_sampling_suite(trials, seed);
    }
    bool all_pass = true;
    json checks = json::array();
    for (const krect::CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        checks.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    json j{{"command", "verify"}, {"suite", suite},       {"trials", trials}, {"seed", seed},
           {"checks", checks},    {"all_pass", all_pass}, {"wall_ms", timer.ms()}};
    std::cout << j.dump() << "\n";
    std::cerr << "verify: " << suite << " suite " << (all_pass ? "passed" : "FAILED") << "\n";
    return all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_bench(int k, const std::vector<int>& sizes) {
    if (sizes.size() < 2) usage_error("need >= 2 sizes");
    if (k < 1) usage_error("k must be at least 1");
    for (int n : sizes)
        if (k > n) usage_error("k exceeds the smallest size");
    Timer total;
    json rows = json::array();
    std::vector<double> log_n, log_ms;
    for (size_t i = 0; i < sizes.size(); ++i) {
        PointSet ps = krect::gen_uniform(sizes[i], 1000 + i);
        Timer timer;
        AreaResult r = krect::min_area_rect(ps, k);
        double ms = timer.ms();
        rows.push_back(json{{"n", sizes[i]}, {"k", k}, {"area", r.area}, {"wall_ms", ms}});
        std::cerr << "bench: n=" << sizes[i] << " k=" << k << " area=" << r.area << " " << ms
                  << " ms\n";
        // Sub-resolution timings would explode the log fit.
        log_n.push_back(std::log(static_cast<double>(sizes[i])));
        log_ms.push_back(std::log(std::max(ms, 1e-3)));
    }
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < log_n.size(); ++i) {
        mx += log_n[i];
        my += log_ms[i];
    }
    mx /= static_cast<double>(log_n.size());
    my /= static_cast<double>(log_n.size());
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < log_n.size(); ++i) {
        num += (log_n[i] - mx) * (log_ms[i] - my);
        den += (log_n[i] - mx) * (log_n[i] - mx);
    }
    double exponent = num / den;
    json j{{"command", "bench"},
           {"k", k},
           {"rows", rows},
           {"exponent", exponent},
           {"wall_ms", total.ms()}};
    emit(j, "bench: fitted growth exponent " + std::to_string(exponent));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Minimum-area rectangles covering k points, and the dual maximum-coverage "
        "problem under an area budget"};
    app.require_subcommand(1);

    std::string file, out, distribution = "uniform", suite;
    int k = 0, n = 0, trials = 100;
    double alpha = 0.0, eps = 0.25;
    std::uint64_t seed = 0;
    bool oracle = false, exact = false;
    std::vector<int> sizes;

    CLI::App* c_min = app.add_subcommand("min-area", "Smallest rectangle covering k points");
    c_min->add_option("file", file, "dataset file")->required();
    c_min->add_option("k", k, "points to cover")->required();
    c_min->add_flag("--oracle", oracle, "use the quartic enumeration oracle");

    CLI::App* c_max = app.add_subcommand("max-points", "Most points coverable within an area budget");
    c_max->add_option("file", file, "dataset file")->required();
    c_max->add_option("alpha", alpha, "area budget")->required();
    c_max->add_option("--eps", eps, "approximation slack in (0, 1/2]");
    c_max->add_option("--seed", seed, "sampling seed");
    c_max->add_flag("--exact", exact, "binary search over exact decision queries");

    CLI::App* c_kappa = app.add_subcommand("kappa", "Constant-factor coverage approximation");
    c_kappa->add_option("file", file, "dataset file")->required();
    c_kappa->add_option("alpha", alpha, "area budget")->required();

    CLI::App* c_gen = app.add_subcommand("gen", "Generate a deterministic instance");
    c_gen->add_option("n", n, "number of points")->required();
    c_gen->add_option("distribution", distribution, "uniform or clusters")
        ->required()
        ->check(CLI::IsMember({"uniform", "clusters"}));
    c_gen->add_option("seed", seed, "generator seed")->required();
    c_gen->add_option("out", out, "output file")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "Run a self-check suite");
    c_verify->add_option("suite", suite, "oracle, invariants, or sampling")
        ->required()
        ->check(CLI::IsMember({"oracle", "invariants", "sampling"}));
    c_verify->add_option("--trials", trials, "Monte-Carlo repetitions");
    c_verify->add_option("--seed", seed, "suite seed");

    CLI::App* c_bench = app.add_subcommand("bench", "Time the exact solver across sizes");
    c_bench->add_option("--k", k, "points to cover")->default_val(10);
    c_bench->add_option("sizes", sizes, "instance sizes (need at least 2)");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(c_min)) return cmd_min_area(file, k, oracle);
        if (app.got_subcommand(c_max)) return cmd_max_points(file, alpha, eps, seed, exact);
        if (app.got_subcommand(c_kappa)) return cmd_kappa(file, alpha);
        if (app.got_subcommand(c_gen)) return cmd_gen(n, distribution, seed, out);
        if (app.got_subcommand(c_verify)) return cmd_verify(suite, trials, seed);
        if (app.got_subcommand(c_bench)) return cmd_bench(k, sizes);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const cli_error& e) {
        std::cerr << "error: " << e.msg << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
