#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bootperc/dynamics.hpp"
#include "bootperc/topology.hpp"

// Exact, brute-force, and closed-form computations used as independent
// oracles against the simulator and the sampling estimators.
namespace bootperc::oracles {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Enumeration guards. Each guarded function takes an accept_cost flag that
// trades the guard for runtime.
inline constexpr std::int64_t kMaxEnumTrRadius = 12;   // enumerate_tr: 2^(2r+1) words
inline constexpr std::int64_t kMaxEnumBlockLen = 24;   // mu_spreading_exact: 2^len words
inline constexpr std::int64_t kMaxEnumVertices = 22;   // exact enumeration: 2^V configs

// Wall distances relative to vertex 0 of a ring configuration: the least
// l > 0 such that position +-l is active and the r+1 positions beyond it are
// all passive (indices mod n). nullopt when no such l < n exists; this
// replaces the l = n sentinel so that "no wall" is not a legal distance.
struct WallDistances {
    std::optional<std::int64_t> left;
    std::optional<std::int64_t> right;
};
WallDistances wall_distances(const Configuration& ring_config, std::int64_t r);

enum class BlockClass { Wall, Spreading, Empty };
std::string to_string(BlockClass c);

// Wall: the word contains a run of r+1 zeros. Spreading: no such run, and the
// block fully activates under the strict rule when embedded between r
// permanently-passive cells per side. Empty: anything else.
//
// The frozen all-passive exterior is the worst case over every exterior
// configuration (the dynamics is monotone in the initial set), and cells
// beyond distance r can never be neighbors of a block cell, so r frozen cells
// per side decide Spreading exactly.
BlockClass classify_block(std::span<const std::uint8_t> bits, std::int64_t r);

// Membership in T_r: |v| = 2r+1 with r+1 ones, v_0 = v_{2r} = 1, v_r = 0, and
// the paired word w_i = (v_i, v_{i+r}), i = 1..r-1, a generalized Dyck word
// under the weight +1 for (0,0), -1 for (1,1), 0 otherwise (all prefix sums
// nonnegative, total zero).
bool is_member_tr(std::span<const std::uint8_t> v, std::int64_t r);

// All members of T_r, each packed with bit i = v_i, sorted ascending.
std::vector<std::uint32_t> enumerate_tr(std::int64_t r, bool accept_cost = false);

std::string word_to_string(std::uint32_t word, std::int64_t length);
std::vector<std::uint8_t> word_to_bits(std::uint32_t word, std::int64_t length);

// Exact count lower bound Catalan(k) * C(4k, 2k) * 2^(2k) for r = 4k+1.
BigInt tr_lower_bound(std::int64_t r);

BigInt binomial_coefficient(std::int64_t n, std::int64_t k);
BigInt catalan_number(std::int64_t k);

// Exact probability that a length-len word of independent Bernoulli(p) cells
// contains a run of at least r+1 zeros. Dynamic program over trailing-run
// lengths, O(len * r); requires len >= r+1.
double mu_wall_exact(std::int64_t len, std::int64_t r, double p);

// Exact probability that a length-len word classifies Spreading, by
// enumeration of all 2^len words (guarded).
double mu_spreading_exact(std::int64_t len, std::int64_t r, double p, bool accept_cost = false);

// Expected steps for the reset chain (advance with probability q = 1-p, fall
// back to 0 with probability p) to first reach state r+1 from state 0:
// sum_{j=1..r+1} q^{-j}.
double markov_hitting_expectation(std::int64_t r, double p);

struct ThreeStateParams {
    double p_wall = 0;
    double p_spreading = 0;
    double p_empty = 0;
};

struct ThreeStateActivation {
    double exact = 0;  // closed form for the probability that site 0 ends spreading
    double bound = 0;  // 1 / (1 + p_wall / p_spreading); exact > bound whenever p_empty > 0
};

// Requires p_wall > 0, p_spreading > 0, p_empty >= 0, summing to 1.
ThreeStateActivation three_state_activation(const ThreeStateParams& params);

// Exact P(Bin(trials, p) >= threshold) by stable summation of binomial terms.
double binomial_tail(std::int64_t trials, double p, std::int64_t threshold);

enum class EnumTarget { Percolation, RingMajority, Vertex0Final };
std::string to_string(EnumTarget t);

// counts.by_active_count[k] = number of initial configurations with exactly k
// active vertices (hub included for RWheel) for which the event holds at the
// fixed point. Weighting by p^k q^(V-k) is left to the evaluation helpers so
// the enumeration itself stays exact-integer.
struct EventCounts {
    std::int64_t vertex_count = 0;
    std::vector<std::uint64_t> by_active_count;  // size vertex_count + 1
};

struct RingEventCounts {
    EventCounts percolation;
    EventCounts ring_majority;
    EventCounts vertex0_final;
};

// Single pass over all 2^V initial configurations (guarded).
EventCounts enumerate_event_counts(const Topology& topology, Rule rule, EnumTarget target,
                                   bool accept_cost = false);
RingEventCounts enumerate_ring_event_counts(const Topology& topology, Rule rule,
                                            bool accept_cost = false);

// sum_k counts[k] p^k q^(V-k), accumulated in ascending magnitude with
// compensated summation.
double eval_event_probability(const EventCounts& counts, double p);
// Same sum in exact rational arithmetic.
BigRational eval_event_probability_rational(const EventCounts& counts, const BigRational& p);

double exact_event_probability(const Topology& topology, Rule rule, EnumTarget target, double p,
                               bool accept_cost = false);
double exact_percolation_probability(const Topology& topology, Rule rule, double p,
                                     bool accept_cost = false);

// "0.3" -> 3/10. Exact decimal-to-rational conversion for zero-tolerance checks.
BigRational rational_from_decimal(const std::string& text);

}  // namespace bootperc::oracles
