#pragma once

// Bernoulli sampling with concentration constants sized so rectangle counts
// transfer from the sample to the full set, the output-sensitive
// (1-eps)-approximation built on the exact solver, the randomized
// approximate max-coverage pipeline, and a Monte-Carlo verifier for the
// sampling guarantees.

#include <cstdint>
#include <optional>
#include <vector>

#include "krect/geometry.hpp"

namespace krect {

struct SamplingPlan {
    int n = 0;            // size of the set the sample is drawn from
    int kappa_a = 0;      // 4-approximation of the target count
    double eps = 0.0;     // caller's accuracy target
    double delta = 0.0;   // accuracy the sample itself must support
    double rho = 0.0;     // Bernoulli inclusion probability
    std::uint64_t seed = 0;

    // delta = eps / 3: three composed losses (sampling down, solving on the
    // sample at delta, transferring back) add up to eps.
    static SamplingPlan for_algorithm(int n, int kappa_a, double eps,
                                      std::uint64_t seed);

    // delta = eps: probes the concentration bound at eps directly.
    static SamplingPlan direct(int n, int kappa_a, double eps, std::uint64_t seed);
};

// Independent Bernoulli(plan.rho) subset of ps, deterministic in plan.seed,
// ids and relative order preserved. rho = 1 returns ps unchanged and draws
// nothing.
PointSet rho_sample(const PointSet& ps, const SamplingPlan& plan);

// Deterministic (1-eps)-approximation of the max number of points coverable
// by a rectangle of area <= alpha. Runs the 4-approximation, preprocesses
// the exact solver once with budget min(4 kappa_a, n), and binary-searches
// the geometric grid {kappa_a (1 + i eps)} for the largest feasible target.
// The result's area is <= alpha and its count is an exact count against ps.
AreaResult approx_max_points_os(const PointSet& ps, double alpha, double eps);

// Randomized (1-eps)-approximation: samples with rho from the plan
// (delta = eps/3), solves on the sample at delta, and re-counts the winning
// rectangle against the full set. Succeeds with probability >= 1 - 2/n^2;
// never returns fewer points than the deterministic 4-approximation's
// witness. area <= alpha always. eps must lie in (0, 1/2].
AreaResult approx_max_points(const PointSet& ps, double alpha, double eps,
                             std::uint64_t seed);

struct MonteCarloReport {
    int trials = 0;
    double freq_estimate_ok = 0.0;   // trials where every heavy rectangle's
                                     // estimate landed within (1 +- eps)
    double freq_smallrect_ok = 0.0;  // trials where every light rectangle's
                                     // estimate stayed below kappa/2
    double freq_joint_ok = 0.0;
    std::vector<int> sample_sizes;            // |S| per trial
    std::vector<unsigned char> estimate_ok;   // per-trial event flags
    std::vector<unsigned char> smallrect_ok;
    std::vector<int> max_tracked_count;  // per trial: max |R cap S| over
                                         // tracked rectangles (see below)
    double tracked_count_bound = 0.0;    // 144 ln(n) / eps^2
    std::uint64_t trial_seed_base = 0;   // trial t sampled with base + t
};

// Draws `trials` independent samples and, per trial, evaluates the scaled
// estimate X_R = |R cap S| / rho over a rectangle battery realizing the
// distinct subsets cut off by coordinate-pair rectangles (all of them for
// n <= 40, a seeded random selection otherwise). Heavy rectangles are those
// with |R cap P| >= kappa/4; max_tracked_count tracks |R cap S| over
// rectangles of area <= alpha when alpha is given, else over rectangles
// with |R cap P| <= 4 kappa.
MonteCarloReport verify_sampling_events(const PointSet& ps, int kappa_value,
                                        double eps, int trials,
                                        std::uint64_t seed,
                                        std::optional<double> alpha = std::nullopt);

}  // namespace krect
