#include "ppg2/mncliques.hpp"

#include <algorithm>
#include <cmath>

namespace ppg2 {

namespace {

std::vector<std::pair<int, int>> canonical_edges(const Graph& g) { return g.edges(); }

std::vector<int> build_edge_index(const Graph& g,
                                  const std::vector<std::pair<int, int>>& edge_list) {
    std::vector<int> index(static_cast<size_t>(g.order()) * g.order(), -1);
    for (size_t e = 0; e < edge_list.size(); ++e) {
        auto [u, v] = edge_list[e];
        index[static_cast<size_t>(u) * g.order() + v] = static_cast<int>(e);
        index[static_cast<size_t>(v) * g.order() + u] = static_cast<int>(e);
    }
    return index;
}

// Digit-level special-2-path test.  into1/into2: whether the arc on the
// first/second step points into the middle vertex.
bool special_from_labels(const EdgeLabel& l1, bool into1, const EdgeLabel& l2, bool into2) {
    if (l1.is_arc != l2.is_arc) return true;           // exactly one edge
    if (!l1.is_arc) return l1.color != l2.color;       // two edges
    if (into1 != into2) return true;                   // directed 2-path
    return l1.color != l2.color;                       // both in or both out
}

// Checked number of labelings r^e, capped at `budget + 1` to avoid overflow.
std::uint64_t labeling_count(std::uint64_t r, int e, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int i = 0; i < e; ++i) {
        if (r != 0 && total > budget / r) return budget + 1;
        total *= r;
    }
    return total;
}

// Non-adjacent pairs with, per pair, the candidate middle vertices and the
// two edge indices with orientation flags (true: the pair vertex is the lower
// endpoint of that edge, so "into the middle" means the forward direction).
struct PairTable {
    struct Candidate {
        int e1, e2;
        bool lower1, lower2;
    };
    struct Pair {
        int u, w;
        std::vector<Candidate> candidates;
    };
    std::vector<Pair> pairs;

    PairTable(const Graph& g, const std::vector<int>& edge_index) {
        const int n = g.order();
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) {
                if (g.adjacent(u, w)) continue;
                Pair pair{u, w, {}};
                for (std::uint64_t m = g.neighbors(u) & g.neighbors(w); m;) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    pair.candidates.push_back({edge_index[static_cast<size_t>(u) * n + v],
                                               edge_index[static_cast<size_t>(v) * n + w],
                                               u < v, w < v});
                }
                pairs.push_back(std::move(pair));
            }
    }
};

// 4-cycle table: for each non-adjacent pair, every unordered pair {a, b} of
// common neighbors with the four edge indices of the cycle u-a-w-b-u and the
// traversal flags (true: traversal leaves the lower endpoint).
struct CycleTable {
    struct Cycle {
        int e[4];
        bool along[4];
    };
    struct Pair {
        int u, w;
        std::vector<Cycle> cycles;
    };
    std::vector<Pair> pairs;

    CycleTable(const Graph& g, const std::vector<int>& edge_index) {
        const int n = g.order();
        auto idx = [&](int a, int b) { return edge_index[static_cast<size_t>(a) * n + b]; };
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) {
                if (g.adjacent(u, w)) continue;
                Pair pair{u, w, {}};
                std::uint64_t common = g.neighbors(u) & g.neighbors(w);
                for (std::uint64_t ma = common; ma;) {
                    int a = std::countr_zero(ma);
                    ma &= ma - 1;
                    for (std::uint64_t mb = ma; mb;) {
                        int b = std::countr_zero(mb);
                        mb &= mb - 1;
                        Cycle c{{idx(u, a), idx(a, w), idx(w, b), idx(b, u)},
                                {u < a, a < w, w < b, b < u}};
                        pair.cycles.push_back(c);
                    }
                }
                pairs.push_back(std::move(pair));
            }
    }
};

}  // namespace

int MixedGraph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= base.order() || v >= base.order()) return -1;
    for (size_t e = 0; e < edge_list.size(); ++e)
        if ((edge_list[e].first == u && edge_list[e].second == v) ||
            (edge_list[e].first == v && edge_list[e].second == u))
            return static_cast<int>(e);
    return -1;
}

EdgeLabel label_from_digit(int digit, int arc_types) {
    if (digit < 2 * arc_types) return EdgeLabel{true, digit / 2 + 1, digit % 2 == 0};
    return EdgeLabel{false, digit - 2 * arc_types + 1, true};
}

MixedGraph mixed_from_digits(const Graph& base, int arc_types, int edge_types,
                             std::span<const int> digits) {
    MixedGraph g{base, arc_types, edge_types, canonical_edges(base), {}};
    if (digits.size() != g.edge_list.size())
        throw ParamError("mixed_from_digits: digit count does not match edge count");
    const int radix = 2 * arc_types + edge_types;
    g.labels.reserve(digits.size());
    for (int d : digits) {
        if (d < 0 || d >= radix) throw ParamError("mixed_from_digits: digit out of radix range");
        g.labels.push_back(label_from_digit(d, arc_types));
    }
    return g;
}

SignedGraph signed_from_bits(const Graph& base, std::uint64_t bits) {
    SignedGraph g{base, canonical_edges(base), {}};
    g.negative.resize(g.edge_list.size());
    for (size_t e = 0; e < g.edge_list.size(); ++e) g.negative[e] = bits >> e & 1;
    return g;
}

OrientedGraph oriented_from_bits(const Graph& base, std::uint64_t bits) {
    OrientedGraph g{base, canonical_edges(base), {}};
    g.forward.resize(g.edge_list.size());
    for (size_t e = 0; e < g.edge_list.size(); ++e) g.forward[e] = (bits >> e & 1) == 0;
    return g;
}

bool is_special_2path(const MixedGraph& g, int u, int v, int w) {
    if (u == w) throw NotA2PathError("is_special_2path: u == w");
    int e1 = g.edge_index(u, v);
    int e2 = g.edge_index(v, w);
    if (e1 < 0 || e2 < 0) throw NotA2PathError("is_special_2path: uv and vw must be base edges");
    const EdgeLabel& l1 = g.labels[e1];
    const EdgeLabel& l2 = g.labels[e2];
    bool into1 = u < v ? l1.forward : !l1.forward;
    bool into2 = w < v ? l2.forward : !l2.forward;
    return special_from_labels(l1, into1, l2, into2);
}

CliqueCheck is_mn_clique(const MixedGraph& g) {
    const int n = g.base.order();
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            if (g.base.adjacent(u, w)) continue;
            bool seen = false;
            for (std::uint64_t m = g.base.neighbors(u) & g.base.neighbors(w); m && !seen;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                seen = is_special_2path(g, u, v, w);
            }
            if (!seen) return CliqueCheck{false, u, w};
        }
    return CliqueCheck{true, -1, -1};
}

SearchOutcome<MixedGraph> search_mn_clique_labeling(const Graph& g, int arc_types, int edge_types,
                                                    std::uint64_t budget) {
    if (arc_types < 0 || edge_types < 0)
        throw ParamError("search_mn_clique_labeling: negative type count");
    const auto edge_list = canonical_edges(g);
    const int e = static_cast<int>(edge_list.size());
    const std::uint64_t radix = 2 * static_cast<std::uint64_t>(arc_types) + edge_types;
    if (radix == 0 && e > 0) return {};  // no labels to assign
    const std::uint64_t total = labeling_count(radix, e, budget);
    if (total > budget)
        throw SearchBudgetError("search_mn_clique_labeling: " + std::to_string(radix) + "^" +
                                std::to_string(e) + " labelings exceed budget " +
                                std::to_string(budget));
    const auto edge_index = build_edge_index(g, edge_list);
    const PairTable table(g, edge_index);
    std::vector<int> digits(e, 0);
    std::vector<EdgeLabel> labels(e, label_from_digit(0, arc_types));
    SearchOutcome<MixedGraph> outcome;
    for (std::uint64_t iter = 0;; ++iter) {
        if (iter >= total && e > 0) break;
        bool clique = true;
        for (const auto& pair : table.pairs) {
            bool seen = false;
            for (const auto& c : pair.candidates) {
                const EdgeLabel& l1 = labels[c.e1];
                const EdgeLabel& l2 = labels[c.e2];
                bool into1 = c.lower1 ? l1.forward : !l1.forward;
                bool into2 = c.lower2 ? l2.forward : !l2.forward;
                if (special_from_labels(l1, into1, l2, into2)) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                clique = false;
                break;
            }
        }
        ++outcome.tried;
        if (clique) {
            outcome.witness = mixed_from_digits(g, arc_types, edge_types, digits);
            return outcome;
        }
        if (e == 0) break;
        // Odometer: least significant digit is the last edge.
        int pos = e - 1;
        while (pos >= 0 && digits[pos] == static_cast<int>(radix) - 1) {
            digits[pos] = 0;
            labels[pos] = label_from_digit(0, arc_types);
            --pos;
        }
        if (pos < 0) break;
        ++digits[pos];
        labels[pos] = label_from_digit(digits[pos], arc_types);
    }
    return outcome;
}

namespace {

CliqueCheck four_cycle_check(const CycleTable& table, const std::vector<char>& mark) {
    // mark[e]: 1 when the edge counts toward the parity in its stored state
    // (negative edge, or arc agreeing with traversal; resolved by caller).
    for (const auto& pair : table.pairs) {
        bool seen = false;
        for (const auto& c : pair.cycles) {
            int parity = mark[c.e[0]] + mark[c.e[1]] + mark[c.e[2]] + mark[c.e[3]];
            if (parity % 2 == 1) {
                seen = true;
                break;
            }
        }
        if (!seen) return CliqueCheck{false, pair.u, pair.w};
    }
    return CliqueCheck{true, -1, -1};
}

}  // namespace

CliqueCheck pushable_clique_check(const OrientedGraph& g) {
    const auto edge_index = build_edge_index(g.base, g.edge_list);
    const CycleTable table(g.base, edge_index);
    for (const auto& pair : table.pairs) {
        bool seen = false;
        for (const auto& c : pair.cycles) {
            int forward_arcs = 0;
            for (int k = 0; k < 4; ++k)
                forward_arcs += g.forward[c.e[k]] == c.along[k] ? 1 : 0;
            if (forward_arcs % 2 == 1) {
                seen = true;
                break;
            }
        }
        if (!seen) return CliqueCheck{false, pair.u, pair.w};
    }
    return CliqueCheck{true, -1, -1};
}

bool is_pushable_absolute_clique(const OrientedGraph& g) {
    return pushable_clique_check(g).is_clique;
}

CliqueCheck signed_clique_check(const SignedGraph& g) {
    const auto edge_index = build_edge_index(g.base, g.edge_list);
    const CycleTable table(g.base, edge_index);
    std::vector<char> mark(g.edge_list.size());
    for (size_t e = 0; e < g.edge_list.size(); ++e) mark[e] = g.negative[e] ? 1 : 0;
    return four_cycle_check(table, mark);
}

bool is_signed_absolute_clique(const SignedGraph& g) {
    return signed_clique_check(g).is_clique;
}

namespace {

template <typename Witness, typename MakeWitness, typename CycleGood>
SearchOutcome<Witness> search_four_cycle_clique(const Graph& g, std::uint64_t budget,
                                                MakeWitness make, CycleGood good) {
    const auto edge_list = canonical_edges(g);
    const int e = static_cast<int>(edge_list.size());
    const std::uint64_t total = labeling_count(2, e, budget);
    if (total > budget)
        throw SearchBudgetError("4-cycle clique search: 2^" + std::to_string(e) +
                                " labelings exceed budget " + std::to_string(budget));
    const auto edge_index = build_edge_index(g, edge_list);
    const CycleTable table(g, edge_index);
    SearchOutcome<Witness> outcome;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        bool clique = true;
        for (const auto& pair : table.pairs) {
            bool seen = false;
            for (const auto& c : pair.cycles)
                if (good(bits, c)) {
                    seen = true;
                    break;
                }
            if (!seen) {
                clique = false;
                break;
            }
        }
        ++outcome.tried;
        if (clique) {
            outcome.witness = make(bits);
            return outcome;
        }
    }
    return outcome;
}

}  // namespace

SearchOutcome<OrientedGraph> search_pushable_clique(const Graph& g, std::uint64_t budget) {
    return search_four_cycle_clique<OrientedGraph>(
        g, budget, [&](std::uint64_t bits) { return oriented_from_bits(g, bits); },
        [](std::uint64_t bits, const CycleTable::Cycle& c) {
            int forward_arcs = 0;
            for (int k = 0; k < 4; ++k) {
                bool forward = (bits >> c.e[k] & 1) == 0;
                forward_arcs += forward == c.along[k] ? 1 : 0;
            }
            return forward_arcs % 2 == 1;
        });
}

SearchOutcome<SignedGraph> search_signed_clique(const Graph& g, std::uint64_t budget) {
    return search_four_cycle_clique<SignedGraph>(
        g, budget, [&](std::uint64_t bits) { return signed_from_bits(g, bits); },
        [](std::uint64_t bits, const CycleTable::Cycle& c) {
            int negatives = 0;
            for (int k = 0; k < 4; ++k) negatives += bits >> c.e[k] & 1;
            return negatives % 2 == 1;
        });
}

bool two_disjoint_2paths_property(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int w = u + 1; w < g.order(); ++w)
            if (!g.adjacent(u, w) && std::popcount(g.neighbors(u) & g.neighbors(w)) < 2)
                return false;
    return true;
}

long degree2_agreement_bound(int m, int n) {
    long options = 2L * m + n;
    if (options < 1) throw ParamError("degree2_agreement_bound: 2m+n must be >= 1");
    return (options - 1) * (options - 1);
}

}  // namespace ppg2
