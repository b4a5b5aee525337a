#pragma once

// (m,n)-colored mixed graphs, the special-2-path clique criterion, signed and
// pushable absolute-clique checks, and the exhaustive labeling searches over
// them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ppg2/graph.hpp"

namespace ppg2 {

inline constexpr std::uint64_t kDefaultLabelingBudget = std::uint64_t{1} << 24;

// Label of one base edge (u, v) with u < v.  Digit encoding with radix
// 2m + n: digits [0, 2m) are arcs, color d/2 + 1, directed u->v when d is
// even; digits [2m, 2m+n) are edges of color d - 2m + 1.
struct EdgeLabel {
    bool is_arc = false;
    int color = 1;
    bool forward = true;  // arc points from the lower endpoint to the higher
};

struct MixedGraph {
    Graph base;
    int arc_types = 0;   // m
    int edge_types = 0;  // n
    std::vector<std::pair<int, int>> edge_list;  // base.edges(), canonical order
    std::vector<EdgeLabel> labels;               // parallel to edge_list

    int edge_index(int u, int v) const;  // -1 when not a base edge
};

struct SignedGraph {
    Graph base;
    std::vector<std::pair<int, int>> edge_list;
    std::vector<bool> negative;  // parallel to edge_list
};

struct OrientedGraph {
    Graph base;
    std::vector<std::pair<int, int>> edge_list;
    std::vector<bool> forward;  // arc points from the lower endpoint to the higher
};

EdgeLabel label_from_digit(int digit, int arc_types);
MixedGraph mixed_from_digits(const Graph& base, int arc_types, int edge_types,
                             std::span<const int> digits);
SignedGraph signed_from_bits(const Graph& base, std::uint64_t bits);
OrientedGraph oriented_from_bits(const Graph& base, std::uint64_t bits);

// The six special 2-path types between u and w via v: edges of different
// colors; a directed path u->v->w or w->v->u; two in-arcs or two out-arcs at
// v of different colors; or exactly one edge.  Throws NotA2PathError when uv
// or vw is not a base edge or u == w.
bool is_special_2path(const MixedGraph& g, int u, int v, int w);

struct CliqueCheck {
    bool is_clique = false;
    int u = -1, w = -1;  // first non-adjacent pair that sees no special 2-path
};

// Every non-adjacent pair must see each other via some common neighbor.
CliqueCheck is_mn_clique(const MixedGraph& g);

template <typename Witness>
struct SearchOutcome {
    std::optional<Witness> witness;
    std::uint64_t tried = 0;
};

// Exhaustive over all (2m+n)^|E| labelings in mixed-radix order; returns the
// first labeling that is an (m,n)-clique, else nothing after trying them all.
// Throws SearchBudgetError when the labeling count exceeds the budget.
SearchOutcome<MixedGraph> search_mn_clique_labeling(
    const Graph& g, int arc_types, int edge_types,
    std::uint64_t budget = kDefaultLabelingBudget);

// Pushable absolute clique: every non-adjacent pair lies on a 4-cycle with an
// odd number of arcs agreeing with one fixed traversal direction (the parity
// is rotation- and reflection-invariant on a 4-cycle).
bool is_pushable_absolute_clique(const OrientedGraph& g);
CliqueCheck pushable_clique_check(const OrientedGraph& g);
SearchOutcome<OrientedGraph> search_pushable_clique(
    const Graph& g, std::uint64_t budget = kDefaultLabelingBudget);

// Signed absolute clique: every non-adjacent pair lies on a 4-cycle with an
// odd number of negative edges.
bool is_signed_absolute_clique(const SignedGraph& g);
CliqueCheck signed_clique_check(const SignedGraph& g);
SearchOutcome<SignedGraph> search_signed_clique(
    const Graph& g, std::uint64_t budget = kDefaultLabelingBudget);

// Every non-adjacent pair has at least two common neighbors (two internally
// disjoint 2-paths), the necessary condition behind both 4-cycle cliques.
bool two_disjoint_2paths_property(const Graph& g);

// (2m+n-1)^2: the bound on the number of degree-2 vertices in an underlying
// (m,n)-clique built over a subdivided biclique.
long degree2_agreement_bound(int m, int n);

}  // namespace ppg2
