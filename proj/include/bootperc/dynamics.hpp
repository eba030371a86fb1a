#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bootperc/rng.hpp"
#include "bootperc/topology.hpp"

namespace bootperc {

// Bit-packed vertex states, 0 = passive, 1 = active. The dynamics only ever
// flips bits 0 -> 1; Configuration has no per-bit clear to match.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::int64_t size, bool all_active = false);
    static Configuration from_bits(const std::vector<int>& bits);

    std::int64_t size() const { return size_; }
    bool test(std::int64_t i) const {
        return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    }
    void set(std::int64_t i) { words_[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63); }

    std::int64_t count() const;
    // Popcount of bits [0, k). Used to count ring actives when a hub bit trails.
    std::int64_t count_first(std::int64_t k) const;

    // Draws bit i = (uniform_i < p) in index order 0..size-1. Index order is
    // load-bearing: it is what couples configurations across p for one seed.
    void fill_random(SplitMix64& rng, double p);

    std::vector<int> to_bits() const;
    bool is_subset_of(const Configuration& other) const;
    bool operator==(const Configuration& other) const = default;

private:
    std::int64_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class ScheduleKind { Synchronous, Sequential };

// Sequential schedules exist for the schedule-independence property and the
// sequential-sweep verification; they are correct, not fast.
struct Schedule {
    ScheduleKind kind = ScheduleKind::Synchronous;
    std::vector<std::int64_t> order;  // Sequential only; must visit every vertex

    static Schedule synchronous() { return {}; }
    static Schedule sequential(std::vector<std::int64_t> order) {
        return {ScheduleKind::Sequential, std::move(order)};
    }
};

struct FixpointResult {
    Configuration final;
    std::int64_t rounds = 0;
    std::int64_t active_count = 0;
    bool percolated = false;
    std::optional<bool> hub_active;  // present iff the topology has a hub
};

// One synchronous update: every passive vertex whose active-neighbor count in
// `config` meets its threshold is active in the result; nothing deactivates.
// Ring neighbor counts come from a sliding window, O(n) per call.
Configuration step_synchronous(const Topology& topology, const Configuration& config, Rule rule);

// Runs the dynamics to its fixed point. `rounds` counts synchronous rounds
// (or sequential sweeps) that activated at least one vertex.
FixpointResult run_to_fixpoint(const Topology& topology, Configuration config, Rule rule,
                               const Schedule& schedule = Schedule::synchronous());

// State of one vertex in the fixed point.
int final_state_of(const Topology& topology, const Configuration& config, Rule rule,
                   std::int64_t vertex);

// Target events whose truth is monotone along the run, so the run may stop as
// soon as the event holds. Used by the Monte Carlo trial loop.
enum class StopEvent { Percolation, RingMajority, VertexActive };

// Returns whether the event holds at (or before) the fixed point. `config` is
// consumed. RingMajority counts ring vertices only.
bool run_until_event(const Topology& topology, Configuration config, Rule rule, StopEvent event,
                     std::int64_t vertex = 0);

}  // namespace bootperc
