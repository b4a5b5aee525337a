#include "ppg2/classify.hpp"

#include <algorithm>

#include "ppg2/iso.hpp"

namespace ppg2 {

Classification classify(const Graph& g, const MinorLimits& limits) {
    if (!is_connected(g)) return OutOfScope{RejectReason::disconnected};
    if (!is_triangle_free(g)) return OutOfScope{RejectReason::has_triangle};
    if (diameter_of(g) != std::optional<int>{2}) return OutOfScope{RejectReason::wrong_diameter};
    for (const FamilySpec& spec : all_members_with_order(g.order())) {
        if (order_and_size(spec).second != g.size()) continue;
        if (auto witness = find_isomorphism(g, construct(spec)))
            return Member{spec, std::move(*witness)};
    }
    if (g.order() > limits.max_host_order)
        throw SizeBoundError("classify: no family matched and order " +
                             std::to_string(g.order()) + " exceeds the certificate bound " +
                             std::to_string(limits.max_host_order));
    if (auto cert = obstruction_certificate(g, limits))
        return NonMember{cert->first, std::move(cert->second)};
    throw CharacterizationError(
        "classify: connected triangle-free diameter-2 graph matches no family and "
        "contains no obstruction minor: " + encode_graph6(g));
}

bool is_pp2_member(const Graph& g, const MinorLimits& limits) {
    return std::holds_alternative<Member>(classify(g, limits));
}

namespace {

struct DominationSearch {
    const Graph& g;
    int n;
    std::uint64_t full;
    std::vector<std::uint64_t> closed;  // N[v]
    int max_closed = 0;
    std::vector<int> chosen;

    explicit DominationSearch(const Graph& graph) : g(graph), n(graph.order()) {
        full = g.vertex_mask();
        closed.resize(n);
        for (int v = 0; v < n; ++v) {
            closed[v] = g.neighbors(v) | (std::uint64_t{1} << v);
            max_closed = std::max(max_closed, std::popcount(closed[v]));
        }
    }

    bool extend(int first, int remaining, std::uint64_t covered) {
        if (covered == full && remaining == 0) return true;
        if (remaining == 0) return false;
        if (std::popcount(full & ~covered) > remaining * max_closed) return false;
        for (int v = first; v <= n - remaining; ++v) {
            chosen.push_back(v);
            if (extend(v + 1, remaining - 1, covered | closed[v])) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

DominationResult domination_number(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("domination_number: graph is disconnected");
    if (g.order() > 32)
        throw SizeBoundError("domination_number: order " + std::to_string(g.order()) +
                             " exceeds the bound 32");
    DominationSearch s(g);
    for (int size = 1; size <= g.order(); ++size) {
        s.chosen.clear();
        if (s.extend(0, size, 0)) return DominationResult{size, s.chosen};
    }
    throw Error("domination_number: unreachable");  // every full set dominates
}

std::string_view reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::disconnected: return "disconnected";
        case RejectReason::has_triangle: return "has-triangle";
        case RejectReason::wrong_diameter: return "diameter-not-2";
    }
    return "?";
}

}  // namespace ppg2
