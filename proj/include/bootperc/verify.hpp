#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bootperc/montecarlo.hpp"

namespace bootperc::mc {

// One instantiated inequality (or equality within tolerance). lhs/rhs hold
// decimal renderings so exact-arithmetic checks can report exact values.
struct LemmaCheck {
    std::string name;
    std::string relation;  // e.g. "lhs <= rhs"
    double lhs = 0;
    double rhs = 0;
    bool pass = false;
    std::string note;
};

struct VerificationReport {
    std::string lemma_id;
    std::vector<std::pair<std::string, std::string>> params;  // resolved, in order
    std::vector<LemmaCheck> checks;
    bool pass = false;
    double elapsed_seconds = 0;
};

// Optional knobs; each lemma fills documented defaults for what the caller
// leaves unset.
struct LemmaParams {
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> block_len;
    std::optional<std::string> p;  // decimal text, kept exact for rational checks
    std::optional<double> p_wall;
    std::optional<double> p_spreading;
    std::optional<double> p_empty;
    std::optional<std::int64_t> delta;
    std::optional<std::int64_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> segment_len;
    bool accept_cost = false;
};

// Known ids: lemma1 lemma2 lemma3 corollary4 lemma5 lemma6 lemma7 lemma8
// theorem9. Unknown ids raise ValidationError.
std::vector<std::string> all_lemma_ids();
VerificationReport verify_lemma(const std::string& lemma_id, const LemmaParams& params = {},
                                int threads = 0);

}  // namespace bootperc::mc
