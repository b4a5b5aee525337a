#pragma once

// Exact minor containment with an explicit branch-set witness, plus the
// three-obstruction battery K_{3,5}, K_{4,4}^-, F_0 used for non-membership
// certificates.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppg2/graph.hpp"

namespace ppg2 {

// Branch sets indexed by pattern vertex, as host-vertex bitmasks.  A valid
// model has nonempty, pairwise disjoint, connected branch sets, and a host
// edge between B(p) and B(q) for every pattern edge pq.
struct MinorModel {
    std::vector<std::uint64_t> branch_sets;
};

struct MinorLimits {
    int max_pattern_order = 10;
    int max_host_order = 24;
};

// Exhaustive within the limits: returns a model iff the pattern is a minor of
// the host, the first one in canonical search order.  Throws SizeBoundError
// beyond the limits.
std::optional<MinorModel> find_minor(const Graph& pattern, const Graph& host,
                                     const MinorLimits& limits = {});

// Independent witness checker; never reuses the search internals.
bool verify_model(const MinorModel& model, const Graph& pattern, const Graph& host);

enum class Obstruction { k35, k44_minus, f0 };

Graph obstruction_pattern(Obstruction o);
std::string_view obstruction_name(Obstruction o);

// Tries K_{3,5}, then K_{4,4}^-, then F_0; first hit wins.
std::optional<std::pair<Obstruction, MinorModel>> obstruction_certificate(
    const Graph& host, const MinorLimits& limits = {});

// One line per pattern vertex: "p: v1 v2 ...".
std::string format_model(const MinorModel& model);

}  // namespace ppg2
