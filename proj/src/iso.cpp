#include "ppg2/iso.hpp"

#include <algorithm>
#include <numeric>

namespace ppg2 {

namespace {

// Ordered partition of the vertex set.  Cell order is part of the state: it
// is maintained isomorphism-invariantly, so "the first non-singleton cell"
// is a sound target-cell rule.
using Partition = std::vector<std::vector<int>>;

bool is_discrete(const Partition& p) {
    for (const auto& cell : p)
        if (cell.size() > 1) return false;
    return true;
}

// Split every cell by the vector of neighbor counts into all cells, repeated
// to a fixpoint.  Sub-cells replace their parent in key order, which depends
// only on the partition structure, never on vertex identities.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint64_t> masks(p.size(), 0);
        for (size_t c = 0; c < p.size(); ++c)
            for (int v : p[c]) masks[c] |= std::uint64_t{1} << v;
        Partition next;
        next.reserve(p.size());
        for (const auto& cell : p) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<std::uint8_t>, int>> keyed;
            keyed.reserve(cell.size());
            for (int v : cell) {
                std::vector<std::uint8_t> key(p.size());
                for (size_t c = 0; c < p.size(); ++c)
                    key[c] = static_cast<std::uint8_t>(std::popcount(g.neighbors(v) & masks[c]));
                keyed.emplace_back(std::move(key), v);
            }
            std::sort(keyed.begin(), keyed.end());
            const size_t before = next.size();
            size_t start = 0;
            for (size_t i = 1; i <= keyed.size(); ++i) {
                if (i == keyed.size() || keyed[i].first != keyed[start].first) {
                    std::vector<int> sub;
                    sub.reserve(i - start);
                    for (size_t j = start; j < i; ++j) sub.push_back(keyed[j].second);
                    next.push_back(std::move(sub));
                    start = i;
                }
            }
            if (next.size() - before > 1) changed = true;
        }
        p = std::move(next);
    }
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::string best;             // graph6 of the best leaf so far
    std::vector<int> best_perm;   // old -> new
    std::vector<std::vector<int>> autos;  // automorphism generators (old -> old)
    std::vector<int> path;        // individualized vertices, root to current

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    void run() {
        Partition p{std::vector<int>(static_cast<size_t>(n))};
        std::iota(p[0].begin(), p[0].end(), 0);
        refine(g, p);
        dfs(p);
    }

    void dfs(const Partition& p) {
        if (is_discrete(p)) {
            leaf(p);
            return;
        }
        size_t ci = 0;
        while (p[ci].size() == 1) ++ci;
        std::vector<int> tried;
        for (int v : p[ci]) {
            if (in_orbit_of_tried(v, tried)) continue;
            tried.push_back(v);
            Partition q;
            q.reserve(p.size() + 1);
            for (size_t c = 0; c < p.size(); ++c) {
                if (c != ci) {
                    q.push_back(p[c]);
                    continue;
                }
                q.push_back({v});
                std::vector<int> rest;
                for (int u : p[c])
                    if (u != v) rest.push_back(u);
                q.push_back(std::move(rest));
            }
            refine(g, q);
            path.push_back(v);
            dfs(q);
            path.pop_back();
        }
    }

    void leaf(const Partition& p) {
        std::vector<int> perm(static_cast<size_t>(n));
        for (size_t pos = 0; pos < p.size(); ++pos) perm[p[pos][0]] = static_cast<int>(pos);
        std::string enc = encode_graph6(g.permuted(perm));
        if (best.empty() || enc < best) {
            best = std::move(enc);
            best_perm = std::move(perm);
        } else if (enc == best) {
            // Two labelings of g produce the same labeled graph, so
            // leaf_perm^-1 . best_perm is an automorphism of g.
            std::vector<int> inv(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) inv[perm[v]] = v;
            std::vector<int> sigma(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) sigma[v] = inv[best_perm[v]];
            autos.push_back(std::move(sigma));
        }
    }

    // Orbit pruning: skip v if some previously tried candidate is in the same
    // orbit under the discovered automorphisms that fix the current path
    // pointwise.
    bool in_orbit_of_tried(int v, const std::vector<int>& tried) {
        if (tried.empty() || autos.empty()) return false;
        std::vector<int> root(static_cast<size_t>(n));
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        bool any = false;
        for (const auto& sigma : autos) {
            bool fixes_path = true;
            for (int u : path)
                if (sigma[u] != u) {
                    fixes_path = false;
                    break;
                }
            if (!fixes_path) continue;
            any = true;
            for (int u = 0; u < n; ++u) {
                int a = find(u), b = find(sigma[u]);
                if (a != b) root[a] = b;
            }
        }
        if (!any) return false;
        for (int u : tried)
            if (find(u) == find(v)) return true;
        return false;
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    CanonSearch s(g);
    s.run();
    return s.best_perm;
}

CanonicalForm canonical_form(const Graph& g) {
    CanonSearch s(g);
    s.run();
    return CanonicalForm{std::move(s.best)};
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
    CanonSearch sg(g), sh(h);
    sg.run();
    sh.run();
    if (sg.best != sh.best) return std::nullopt;
    const int n = g.order();
    std::vector<int> h_inv(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) h_inv[sh.best_perm[v]] = v;
    std::vector<int> sigma(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) sigma[v] = h_inv[sg.best_perm[v]];
    return sigma;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    return find_isomorphism(g, h).has_value();
}

}  // namespace ppg2
