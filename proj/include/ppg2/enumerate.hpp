#pragma once

// Isomorph-free generation of connected maximal triangle-free graphs, and the
// verification harnesses built on it.  Triangle-freeness is the hereditary
// generation invariant (one new vertex attached to an independent set of a
// connected parent); maximality is filtered at emission.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ppg2/graph.hpp"

namespace ppg2 {

inline constexpr int kEnumerateCap = 12;

// Streams one representative per isomorphism class of connected maximal
// triangle-free graphs, orders ascending, and within each order in ascending
// canonical-graph6 order.  Deterministic for every job count.
void enumerate_mtf(int max_n, const std::function<void(const Graph&)>& emit, int jobs = 1);

std::vector<Graph> enumerate_mtf(int max_n, int jobs = 1);

struct OrderReport {
    int n = 0;
    long total = 0;       // connected triangle-free diameter-2 graphs
    long members = 0;
    long nonmembers = 0;
    std::array<long, 3> obstructions{};         // histogram: K35, K44minus, F0
    std::vector<std::string> anomalies;         // canonical graph6 + reason
};

struct EnumerationReport {
    int max_n = 0;
    std::vector<OrderReport> per_order;
    bool ok() const {
        for (const auto& r : per_order)
            if (!r.anomalies.empty()) return false;
        return true;
    }
};

// Classifies every enumerated diameter-2 graph, rechecks each verdict's
// witness, and reports the member/non-member split per order.  A graph whose
// verdict fails its recheck, or that lands outside the dichotomy, is an
// anomaly.
EnumerationReport verify_theorem2(int max_n, int jobs = 1);

struct DominationReport {
    int max_n = 0;
    long members_checked = 0;
    int max_gamma = 0;
    std::vector<std::string> gamma3;           // canonical graph6 of members with gamma = 3
    std::vector<std::string> expected_gamma3;  // the seven fixed graphs with order <= max_n
    std::vector<std::string> anomalies;
    bool ok() const { return anomalies.empty() && gamma3 == expected_gamma3 && max_gamma <= 3; }
};

// Over all enumerated members: gamma <= 3 always, and the gamma = 3 set
// equals the fixed seven restricted to order <= max_n.
DominationReport verify_domination(int max_n, int jobs = 1);

}  // namespace ppg2
