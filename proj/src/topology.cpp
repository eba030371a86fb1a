#include "bootperc/topology.hpp"

namespace bootperc {

std::string to_string(Family family) {
    return family == Family::Ring ? "ring" : "rwheel";
}

std::string to_string(Rule rule) {
    return rule == Rule::StrictMajority ? "strict" : "simple";
}

Family family_from_string(const std::string& s) {
    if (s == "ring") return Family::Ring;
    if (s == "rwheel") return Family::RWheel;
    throw ValidationError("unknown family '" + s + "' (expected ring or rwheel)");
}

Rule rule_from_string(const std::string& s) {
    if (s == "strict") return Rule::StrictMajority;
    if (s == "simple") return Rule::SimpleMajority;
    throw ValidationError("unknown rule '" + s + "' (expected strict or simple)");
}

Topology Topology::build(const TopologySpec& spec) {
    if (spec.r < 1) {
        throw ValidationError("radius must satisfy r >= 1, got r=" + std::to_string(spec.r));
    }
    if (spec.n <= 2 * spec.r + 1) {
        throw ValidationError("ring length must satisfy n > 2r+1, got n=" + std::to_string(spec.n) +
                              " with 2r+1=" + std::to_string(2 * spec.r + 1));
    }
    return Topology(spec);
}

std::int64_t Topology::hub_id() const {
    if (!has_hub()) throw ValidationError("topology has no hub");
    return spec_.n;
}

void Topology::require_vertex(std::int64_t v) const {
    if (!is_valid_vertex(v)) {
        throw ValidationError("invalid vertex id " + std::to_string(v) + " for " +
                              to_string(spec_.family) + " with " +
                              std::to_string(vertex_count()) + " vertices");
    }
}

std::int64_t Topology::degree(std::int64_t v) const {
    require_vertex(v);
    if (has_hub() && v == spec_.n) return spec_.n;
    return 2 * spec_.r + (has_hub() ? 1 : 0);
}

std::int64_t Topology::threshold(std::int64_t v, Rule rule) const {
    return activation_threshold(degree(v), rule);
}

std::vector<std::int64_t> Topology::neighbors(std::int64_t v) const {
    require_vertex(v);
    const std::int64_t n = spec_.n;
    std::vector<std::int64_t> out;
    if (has_hub() && v == n) {
        out.reserve(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) out.push_back(i);
        return out;
    }
    out.reserve(static_cast<std::size_t>(2 * spec_.r + (has_hub() ? 1 : 0)));
    for (std::int64_t off = -spec_.r; off <= spec_.r; ++off) {
        if (off == 0) continue;
        out.push_back(((v + off) % n + n) % n);
    }
    if (has_hub()) out.push_back(n);
    return out;
}

}  // namespace bootperc
