#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bootperc/dynamics.hpp"
#include "bootperc/topology.hpp"

namespace bootperc::mc {

enum class Target { Percolation, RingMajority, Vertex0Final, BlockSpreading };

std::string to_string(Target t);
Target target_from_string(const std::string& s);

struct TrialPlan {
    TopologySpec topology;
    Rule rule = Rule::StrictMajority;
    double p = 0.5;
    Target target = Target::Percolation;
    std::int64_t trials = 1;
    std::uint64_t master_seed = 0;
    double confidence = 0.95;
    std::int64_t block_len = 0;  // BlockSpreading only
};

// A pure function of the plan: independent of worker count and execution
// order, so repeated runs are bit-identical.
struct EstimateRecord {
    TrialPlan plan;
    std::int64_t successes = 0;
    double estimate = 0;
    double ci_low = 0;
    double ci_high = 0;
    double elapsed_seconds = 0;
};

// Deterministic collision-free mixing: distinct trial indices always map to
// distinct seeds for a fixed master seed (both stages are bijections).
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

// Worker count resolution: explicit argument, else BOOTPERC_THREADS, else
// hardware concurrency. Never affects results, only wall time.
int resolve_thread_count(int requested);

// Outcome of one trial, exposed so tests can check the per-trial coupling
// monotonicity in p directly.
bool run_single_trial(const Topology* topology, const TrialPlan& plan, std::uint64_t trial_index);

EstimateRecord run_estimate(const TrialPlan& plan, int threads = 0);

// Wilson score interval, endpoints clamped to [0, 1].
std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials,
                                          double confidence);

struct GridSpec {
    std::vector<double> p_values;
    std::vector<std::int64_t> r_values;
    // When positive, each cell uses n = n_per_r * r instead of the base n.
    std::int64_t n_per_r = 0;
};

// One record per (p, r) cell, row-major over p then r. Each cell gets its own
// master seed derived from (master_seed, cell index).
std::vector<EstimateRecord> scan_grid(const TrialPlan& base_plan, const GridSpec& grid,
                                      int threads = 0);

struct BisectResult {
    double p_hat = 0;
    double estimate_lo = 0;   // at the initial bracket endpoints
    double estimate_hi = 0;
    std::vector<EstimateRecord> probes;
};

// Bisects the empirical response for the least p with estimate >= target_prob.
// All probes reuse the template's master seed (common random numbers), which
// makes the empirical response exactly monotone in p.
BisectResult bisect_threshold(const TrialPlan& plan_template, double target_prob, double p_lo,
                              double p_hi, double tol, int threads = 0);

// Same bisection against an injected response, for tests.
double bisect_response(const std::function<double(double)>& response, double target_prob,
                       double p_lo, double p_hi, double tol);

// Monte Carlo for the three-state line model: segment cells drawn iid
// (wall/spreading/empty), spreading expands into empty neighbors each round,
// boundary frozen; a trial succeeds when the middle cell ends spreading.
struct SimEstimate {
    std::int64_t successes = 0;
    std::int64_t trials = 0;
    double estimate = 0;
};
SimEstimate three_state_simulate(double p_wall, double p_spreading, double p_empty,
                                 std::int64_t segment_len, std::int64_t trials,
                                 std::uint64_t master_seed);

// Mean hitting time of the reset chain by direct simulation, with the sample
// standard error.
struct ChainSimResult {
    double mean = 0;
    double std_error = 0;
    std::int64_t runs = 0;
};
ChainSimResult hitting_time_simulate(std::int64_t r, double p, std::int64_t runs,
                                     std::uint64_t master_seed);

}  // namespace bootperc::mc
