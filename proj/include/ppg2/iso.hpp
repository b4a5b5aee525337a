#pragma once

// Exact isomorphism and canonical forms for small graphs: equitable partition
// refinement (degree / neighborhood multisets) followed by individualization
// backtracking, with orbit pruning from automorphisms discovered at leaves.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ppg2/graph.hpp"

namespace ppg2 {

struct CanonicalForm {
    std::string graph6;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Lexicographically minimal graph6 encoding over all labelings reachable by
// the refinement-guided search; equal forms iff isomorphic.
CanonicalForm canonical_form(const Graph& g);

// The relabeling old -> new realizing canonical_form.
std::vector<int> canonical_labeling(const Graph& g);

// Witness permutation sigma with adj_g(u, v) <=> adj_h(sigma[u], sigma[v]).
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace ppg2
