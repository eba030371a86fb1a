#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bootperc {

// Raised when an argument violates a documented bound or precondition.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Family { Ring, RWheel };
enum class Rule { StrictMajority, SimpleMajority };

std::string to_string(Family family);
std::string to_string(Rule rule);
Family family_from_string(const std::string& s);
Rule rule_from_string(const std::string& s);

struct TopologySpec {
    Family family = Family::Ring;
    std::int64_t n = 0;  // ring length
    std::int64_t r = 0;  // radius
};

// Threshold on a vertex of the given degree: ceil((deg+1)/2) for strict
// majority, ceil(deg/2) for simple majority.
inline constexpr std::int64_t activation_threshold(std::int64_t degree, Rule rule) {
    return rule == Rule::StrictMajority ? (degree + 2) / 2 : (degree + 1) / 2;
}

// A ring of n vertices each adjacent to its r nearest neighbors per side,
// optionally augmented with a hub adjacent to every ring vertex. Vertex ids
// 0..n-1 are ring positions (arithmetic mod n); the hub, when present, is id n.
// Neighborhoods are computed on the fly; nothing is materialized, so instances
// are cheap to copy and safe to share across concurrent trial workers.
class Topology {
public:
    static Topology build(const TopologySpec& spec);

    Family family() const { return spec_.family; }
    std::int64_t ring_size() const { return spec_.n; }
    std::int64_t radius() const { return spec_.r; }
    const TopologySpec& spec() const { return spec_; }

    bool has_hub() const { return spec_.family == Family::RWheel; }
    std::int64_t hub_id() const;
    std::int64_t vertex_count() const { return spec_.n + (has_hub() ? 1 : 0); }

    bool is_valid_vertex(std::int64_t v) const { return v >= 0 && v < vertex_count(); }
    std::int64_t degree(std::int64_t v) const;
    std::int64_t threshold(std::int64_t v, Rule rule) const;

    // Ring vertex: offsets -r..-1, +1..+r ascending, then the hub if present.
    // Hub: all ring vertices ascending.
    std::vector<std::int64_t> neighbors(std::int64_t v) const;

private:
    explicit Topology(TopologySpec spec) : spec_(spec) {}
    void require_vertex(std::int64_t v) const;

    TopologySpec spec_;
};

inline Topology build_topology(const TopologySpec& spec) { return Topology::build(spec); }

}  // namespace bootperc
