#pragma once

// Self-checking suites behind the verify command. Each check reports a
// named pass/fail with a one-line detail instead of asserting, so a
// failure in one check never hides the others.

#include <cstdint>
#include <string>
#include <vector>

namespace krect {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Ground-truth self-consistency: subset enumeration against rectangle
// enumeration, duality round-trip, crossing restriction, and batched
// reporting against a direct per-anchor filter.
std::vector<CheckResult> verify_oracle_suite(std::uint64_t seed);

// Fast-solver invariants against the oracles: exact agreement for every k,
// the root merge sandwich, candidate-set budgets, affine scale behavior,
// the kappa bounds, and both decision queries.
std::vector<CheckResult> verify_invariants_suite(std::uint64_t seed);

// Sampling layer: plan formulas, identity sampling at rho = 1, binomial
// concentration of the sample size, per-rectangle event frequencies, the
// end-to-end approximation guarantee, and seed determinism. trials sets
// the Monte-Carlo repetition count; must be >= 1.
std::vector<CheckResult> verify_sampling_suite(int trials, std::uint64_t seed);

}  // namespace krect
