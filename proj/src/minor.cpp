#include "ppg2/minor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ppg2/catalog.hpp"

namespace ppg2 {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t neighborhood_of_set(const Graph& g, std::uint64_t set) {
    std::uint64_t nb = 0;
    for (std::uint64_t m = set; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        nb |= g.neighbors(v);
    }
    return nb & ~set;
}

int boundary_edges(const Graph& g, std::uint64_t set) {
    int count = 0;
    for (std::uint64_t m = set; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        count += std::popcount(g.neighbors(v) & ~set);
    }
    return count;
}

bool mask_connected(const Graph& g, std::uint64_t set) {
    if (set == 0) return false;
    std::uint64_t seen = set & -set;
    for (;;) {
        std::uint64_t grown = (seen | neighborhood_of_set(g, seen)) & set;
        if (grown == seen) break;
        seen = grown;
    }
    return seen == set;
}

// Branch-set backtracking.  Pattern vertices are placed in decreasing-degree
// order; each branch set is grown from an ascending seed so every connected
// candidate set is enumerated exactly once and the first model found is
// canonical.
struct Searcher {
    const Graph& pattern;
    const Graph& host;
    int np, nh;
    std::vector<int> order;     // placement order (pattern vertices)
    std::vector<std::uint64_t> placed_adj;  // per placement index: earlier indices adjacent in pattern
    std::vector<std::uint64_t> nbr_pos;     // per placement index: all neighbor placement indices
    std::vector<int> later_degree;          // per placement index: pattern neighbors placed later
    std::vector<std::uint64_t> branch;      // by placement index
    std::uint64_t used = 0;
    std::uint64_t all;

    Searcher(const Graph& p, const Graph& h) : pattern(p), host(h), np(p.order()), nh(h.order()) {
        all = host.vertex_mask();
        order.resize(np);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int da = pattern.degree(a), db = pattern.degree(b);
            return da != db ? da > db : a < b;
        });
        std::vector<int> pos(np);
        for (int i = 0; i < np; ++i) pos[order[i]] = i;
        placed_adj.assign(np, 0);
        nbr_pos.assign(np, 0);
        later_degree.assign(np, 0);
        for (int i = 0; i < np; ++i) {
            for (std::uint64_t m = pattern.neighbors(order[i]); m;) {
                int q = std::countr_zero(m);
                m &= m - 1;
                nbr_pos[i] |= bit(pos[q]);
                if (pos[q] < i)
                    placed_adj[i] |= bit(pos[q]);
                else
                    ++later_degree[i];
            }
        }
        branch.assign(np, 0);
    }

    bool place(int i) {
        if (i == np) return true;
        std::uint64_t avail = all & ~used;
        if (std::popcount(avail) < np - i) return false;
        // Every placed set with unplaced pattern neighbors needs that many
        // distinct available contact vertices.
        const std::uint64_t unplaced_positions = ~((i == 64 ? 0 : bit(i)) - 1);
        for (int j = 0; j < i; ++j) {
            int remaining = std::popcount(nbr_pos[j] & unplaced_positions);
            if (remaining > std::popcount(neighborhood_of_set(host, branch[j]) & avail)) return false;
        }
        const int cap = std::popcount(avail) - (np - i - 1);
        for (std::uint64_t seeds = avail; seeds;) {
            int s = std::countr_zero(seeds);
            seeds &= seeds - 1;
            std::uint64_t universe = avail & ~(bit(s) - 1);
            if (grow(i, bit(s), universe, 0, cap)) return true;
        }
        return false;
    }

    bool grow(int i, std::uint64_t set, std::uint64_t universe, std::uint64_t excluded, int cap) {
        // Unreachable requirements kill the whole subtree.
        std::uint64_t reachable = set | (universe & ~excluded);
        for (std::uint64_t m = placed_adj[i]; m;) {
            int j = std::countr_zero(m);
            m &= m - 1;
            if ((neighborhood_of_set(host, branch[j]) & reachable) == 0) return false;
        }
        bool satisfied = true;
        for (std::uint64_t m = placed_adj[i]; m;) {
            int j = std::countr_zero(m);
            m &= m - 1;
            if ((neighborhood_of_set(host, branch[j]) & set) == 0) {
                satisfied = false;
                break;
            }
        }
        if (satisfied && boundary_edges(host, set) >= pattern.degree(order[i])) {
            std::uint64_t future_contacts = neighborhood_of_set(host, set) & (all & ~used & ~set);
            if (std::popcount(future_contacts) >= later_degree[i]) {
                branch[i] = set;
                used |= set;
                if (place(i + 1)) return true;
                used &= ~set;
                branch[i] = 0;
            }
        }
        if (std::popcount(set) >= cap) return false;
        std::uint64_t cand = neighborhood_of_set(host, set) & universe & ~excluded;
        while (cand) {
            int x = std::countr_zero(cand);
            cand &= cand - 1;
            if (grow(i, set | bit(x), universe, excluded, cap)) return true;
            excluded |= bit(x);
        }
        return false;
    }
};

}  // namespace

std::optional<MinorModel> find_minor(const Graph& pattern, const Graph& host,
                                     const MinorLimits& limits) {
    if (pattern.order() > limits.max_pattern_order)
        throw SizeBoundError("find_minor: pattern order " + std::to_string(pattern.order()) +
                             " exceeds bound " + std::to_string(limits.max_pattern_order));
    if (host.order() > limits.max_host_order)
        throw SizeBoundError("find_minor: host order " + std::to_string(host.order()) +
                             " exceeds bound " + std::to_string(limits.max_host_order));
    if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
    Searcher s(pattern, host);
    if (!s.place(0)) return std::nullopt;
    MinorModel model;
    model.branch_sets.assign(pattern.order(), 0);
    for (int i = 0; i < pattern.order(); ++i) model.branch_sets[s.order[i]] = s.branch[i];
    return model;
}

bool verify_model(const MinorModel& model, const Graph& pattern, const Graph& host) {
    if (static_cast<int>(model.branch_sets.size()) != pattern.order()) return false;
    std::uint64_t seen = 0;
    for (std::uint64_t set : model.branch_sets) {
        if (set == 0) return false;
        if ((set & ~host.vertex_mask()) != 0) return false;
        if (set & seen) return false;
        seen |= set;
        if (!mask_connected(host, set)) return false;
    }
    for (auto [p, q] : pattern.edges())
        if ((neighborhood_of_set(host, model.branch_sets[p]) & model.branch_sets[q]) == 0)
            return false;
    return true;
}

Graph obstruction_pattern(Obstruction o) {
    switch (o) {
        case Obstruction::k35: {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < 3; ++u)
                for (int v = 0; v < 5; ++v) edges.emplace_back(u, 3 + v);
            return Graph::from_edge_list(8, edges);
        }
        case Obstruction::k44_minus: {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < 4; ++u)
                for (int v = 0; v < 4; ++v)
                    if (u != 0 || v != 0) edges.emplace_back(u, 4 + v);
            return Graph::from_edge_list(8, edges);
        }
        case Obstruction::f0: return construct(FamilySpec::fixed(AuxGraph::f0));
    }
    throw ParamError("unknown obstruction");
}

std::string_view obstruction_name(Obstruction o) {
    switch (o) {
        case Obstruction::k35: return "K35";
        case Obstruction::k44_minus: return "K44minus";
        case Obstruction::f0: return "F0";
    }
    return "?";
}

std::optional<std::pair<Obstruction, MinorModel>> obstruction_certificate(
    const Graph& host, const MinorLimits& limits) {
    for (Obstruction o : {Obstruction::k35, Obstruction::k44_minus, Obstruction::f0})
        if (auto model = find_minor(obstruction_pattern(o), host, limits))
            return std::make_pair(o, std::move(*model));
    return std::nullopt;
}

std::string format_model(const MinorModel& model) {
    std::ostringstream out;
    for (size_t p = 0; p < model.branch_sets.size(); ++p) {
        out << p << ':';
        for (std::uint64_t m = model.branch_sets[p]; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            out << ' ' << v;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace ppg2
