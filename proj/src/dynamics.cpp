#include "bootperc/dynamics.hpp"

#include <algorithm>
#include <bit>

namespace bootperc {

namespace {

inline std::int64_t wrap(std::int64_t i, std::int64_t n) {
    if (i >= n) return i - n;
    if (i < 0) return i + n;
    return i;
}

void require_size(const Topology& topo, const Configuration& config) {
    if (config.size() != topo.vertex_count()) {
        throw ValidationError("configuration length " + std::to_string(config.size()) +
                              " does not match vertex count " +
                              std::to_string(topo.vertex_count()));
    }
}

}  // namespace

Configuration::Configuration(std::int64_t size, bool all_active) : size_(size) {
    if (size < 0) throw ValidationError("configuration size must be nonnegative");
    words_.assign(static_cast<std::size_t>((size + 63) / 64), 0);
    if (all_active) {
        for (std::int64_t i = 0; i < size; ++i) set(i);
    }
}

Configuration Configuration::from_bits(const std::vector<int>& bits) {
    Configuration c(static_cast<std::int64_t>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0) c.set(static_cast<std::int64_t>(i));
    }
    return c;
}

std::int64_t Configuration::count() const {
    std::int64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

std::int64_t Configuration::count_first(std::int64_t k) const {
    std::int64_t total = 0;
    std::int64_t full = k / 64;
    for (std::int64_t i = 0; i < full; ++i) total += std::popcount(words_[static_cast<std::size_t>(i)]);
    const int rem = static_cast<int>(k & 63);
    if (rem != 0) {
        const std::uint64_t mask = (1ULL << rem) - 1;
        total += std::popcount(words_[static_cast<std::size_t>(full)] & mask);
    }
    return total;
}

void Configuration::fill_random(SplitMix64& rng, double p) {
    for (std::int64_t i = 0; i < size_; ++i) {
        if (rng.bernoulli(p)) set(i);
    }
}

std::vector<int> Configuration::to_bits() const {
    std::vector<int> out(static_cast<std::size_t>(size_));
    for (std::int64_t i = 0; i < size_; ++i) out[static_cast<std::size_t>(i)] = test(i) ? 1 : 0;
    return out;
}

bool Configuration::is_subset_of(const Configuration& other) const {
    if (size_ != other.size_) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
}

Configuration step_synchronous(const Topology& topo, const Configuration& config, Rule rule) {
    require_size(topo, config);
    const std::int64_t n = topo.ring_size();
    const std::int64_t r = topo.radius();
    const std::int64_t ring_thr = activation_threshold(2 * r + (topo.has_hub() ? 1 : 0), rule);
    const bool hub_in = topo.has_hub() && config.test(topo.hub_id());

    Configuration out = config;

    // Window sum over positions v-r..v+r; active neighbors = window - self.
    std::int64_t window = 0;
    for (std::int64_t off = -r; off <= r; ++off) window += config.test(wrap(off, n));
    for (std::int64_t v = 0; v < n; ++v) {
        if (!config.test(v)) {
            const std::int64_t active = window + (hub_in ? 1 : 0);
            if (active >= ring_thr) out.set(v);
        }
        window -= config.test(wrap(v - r, n));
        window += config.test(wrap(v + r + 1, n));
    }

    if (topo.has_hub() && !hub_in) {
        const std::int64_t ring_active = config.count_first(n);
        if (ring_active >= topo.threshold(topo.hub_id(), rule)) out.set(topo.hub_id());
    }
    return out;
}

namespace {

// Synchronous fixpoint driver. Per-vertex active-ring-neighbor counters; each
// round either folds the newly active vertices into the counters
// (O(activations * r)) or, when that would exceed one ring pass, recomputes
// the counters with the sliding window (O(n)). The hub enters as a broadcast
// +1 rather than a counter entry.
class SyncEngine {
public:
    SyncEngine(const Topology& topo, Configuration config, Rule rule)
        : topo_(topo),
          cfg_(std::move(config)),
          n_(topo.ring_size()),
          r_(topo.radius()),
          ring_thr_(activation_threshold(2 * r_ + (topo.has_hub() ? 1 : 0), rule)),
          hub_thr_(topo.has_hub() ? topo.threshold(topo.hub_id(), rule) : 0) {
        require_size(topo_, cfg_);
        counts_.assign(static_cast<std::size_t>(n_), 0);
        stamp_.assign(static_cast<std::size_t>(n_), 0);
        recompute_counts();
        ring_active_ = cfg_.count_first(n_);
        hub_active_ = topo_.has_hub() && cfg_.test(topo_.hub_id());
        scan_all_ = true;
    }

    // Advances to the fixed point, or stops early once stop() returns true
    // (checked on entry and after every round).
    template <class Stop>
    void run(Stop&& stop) {
        if (stop(*this)) return;
        std::vector<std::int64_t> newly;
        while (true) {
            newly.clear();
            const std::int64_t bonus = hub_active_ ? 1 : 0;
            if (scan_all_) {
                for (std::int64_t v = 0; v < n_; ++v) {
                    if (!cfg_.test(v) && counts_[static_cast<std::size_t>(v)] + bonus >= ring_thr_)
                        newly.push_back(v);
                }
            } else {
                for (std::int64_t v : cand_) {
                    if (!cfg_.test(v) && counts_[static_cast<std::size_t>(v)] + bonus >= ring_thr_)
                        newly.push_back(v);
                }
            }
            const bool hub_newly = topo_.has_hub() && !hub_active_ && ring_active_ >= hub_thr_;
            if (newly.empty() && !hub_newly) break;

            ++rounds_;
            for (std::int64_t v : newly) cfg_.set(v);
            ring_active_ += static_cast<std::int64_t>(newly.size());
            if (hub_newly) {
                cfg_.set(topo_.hub_id());
                hub_active_ = true;
            }

            if (hub_newly || static_cast<std::int64_t>(newly.size()) * 2 * r_ >= n_) {
                recompute_counts();
                scan_all_ = true;
            } else {
                scan_all_ = false;
                cand_.clear();
                ++round_id_;
                for (std::int64_t w : newly) {
                    for (std::int64_t off = 1; off <= r_; ++off) {
                        bump(wrap(w - off, n_));
                        bump(wrap(w + off, n_));
                    }
                }
            }
            if (stop(*this)) return;
        }
    }

    std::int64_t rounds() const { return rounds_; }
    std::int64_t ring_active() const { return ring_active_; }
    std::int64_t total_active() const { return ring_active_ + (hub_active_ ? 1 : 0); }
    bool hub_active() const { return hub_active_; }
    const Configuration& config() const { return cfg_; }
    Configuration take_config() { return std::move(cfg_); }

private:
    void bump(std::int64_t v) {
        ++counts_[static_cast<std::size_t>(v)];
        if (!cfg_.test(v) && stamp_[static_cast<std::size_t>(v)] != round_id_) {
            stamp_[static_cast<std::size_t>(v)] = round_id_;
            cand_.push_back(v);
        }
    }

    void recompute_counts() {
        std::int64_t window = 0;
        for (std::int64_t off = -r_; off <= r_; ++off) window += cfg_.test(wrap(off, n_));
        for (std::int64_t v = 0; v < n_; ++v) {
            counts_[static_cast<std::size_t>(v)] =
                static_cast<std::int32_t>(window - cfg_.test(v));
            window -= cfg_.test(wrap(v - r_, n_));
            window += cfg_.test(wrap(v + r_ + 1, n_));
        }
    }

    const Topology& topo_;
    Configuration cfg_;
    std::int64_t n_, r_;
    std::int64_t ring_thr_, hub_thr_;
    std::vector<std::int32_t> counts_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::int64_t> cand_;
    std::uint32_t round_id_ = 0;
    std::int64_t ring_active_ = 0;
    bool hub_active_ = false;
    bool scan_all_ = true;
    std::int64_t rounds_ = 0;
};

FixpointResult run_sequential(const Topology& topo, Configuration cfg, Rule rule,
                              const std::vector<std::int64_t>& order) {
    require_size(topo, cfg);
    const std::int64_t vcount = topo.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(vcount), 0);
    for (std::int64_t v : order) {
        if (v < 0 || v >= vcount) {
            throw ValidationError("sequential order contains invalid vertex id " +
                                  std::to_string(v));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw ValidationError("sequential order must visit every vertex at least once per sweep");
    }

    const std::int64_t n = topo.ring_size();
    const std::int64_t r = topo.radius();
    const std::int64_t ring_thr = activation_threshold(2 * r + (topo.has_hub() ? 1 : 0), rule);
    std::int64_t rounds = 0;
    while (true) {
        bool changed = false;
        for (std::int64_t v : order) {
            if (cfg.test(v)) continue;
            if (topo.has_hub() && v == topo.hub_id()) {
                if (cfg.count_first(n) >= topo.threshold(v, rule)) {
                    cfg.set(v);
                    changed = true;
                }
                continue;
            }
            std::int64_t active = 0;
            for (std::int64_t off = 1; off <= r; ++off) {
                active += cfg.test(wrap(v - off, n));
                active += cfg.test(wrap(v + off, n));
            }
            if (topo.has_hub() && cfg.test(topo.hub_id())) ++active;
            if (active >= ring_thr) {
                cfg.set(v);
                changed = true;
            }
        }
        if (!changed) break;
        ++rounds;
    }

    FixpointResult result;
    result.active_count = cfg.count();
    result.percolated = result.active_count == vcount;
    if (topo.has_hub()) result.hub_active = cfg.test(topo.hub_id());
    result.rounds = rounds;
    result.final = std::move(cfg);
    return result;
}

}  // namespace

FixpointResult run_to_fixpoint(const Topology& topo, Configuration config, Rule rule,
                               const Schedule& schedule) {
    if (schedule.kind == ScheduleKind::Sequential) {
        return run_sequential(topo, std::move(config), rule, schedule.order);
    }
    SyncEngine engine(topo, std::move(config), rule);
    engine.run([](const SyncEngine&) { return false; });
    FixpointResult result;
    result.rounds = engine.rounds();
    result.active_count = engine.total_active();
    result.percolated = result.active_count == topo.vertex_count();
    if (topo.has_hub()) result.hub_active = engine.hub_active();
    result.final = engine.take_config();
    return result;
}

int final_state_of(const Topology& topo, const Configuration& config, Rule rule,
                   std::int64_t vertex) {
    if (!topo.is_valid_vertex(vertex)) {
        throw ValidationError("invalid vertex id " + std::to_string(vertex));
    }
    return run_to_fixpoint(topo, config, rule).final.test(vertex) ? 1 : 0;
}

bool run_until_event(const Topology& topo, Configuration config, Rule rule, StopEvent event,
                     std::int64_t vertex) {
    if (event == StopEvent::VertexActive && !topo.is_valid_vertex(vertex)) {
        throw ValidationError("invalid vertex id " + std::to_string(vertex));
    }
    SyncEngine engine(topo, std::move(config), rule);
    bool hit = false;
    const std::int64_t n = topo.ring_size();
    const std::int64_t vcount = topo.vertex_count();
    engine.run([&](const SyncEngine& e) {
        switch (event) {
            case StopEvent::Percolation:
                hit = e.total_active() == vcount;
                break;
            case StopEvent::RingMajority:
                hit = 2 * e.ring_active() > n;
                break;
            case StopEvent::VertexActive:
                hit = e.config().test(vertex);
                break;
        }
        return hit;
    });
    return hit;
}

}  // namespace bootperc
