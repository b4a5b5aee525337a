#include "ppg2/catalog.hpp"

#include <array>
#include <charconv>

namespace ppg2 {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Fixed graphs, transcribed edge by edge from their standard drawings.
// Letter labels a, b, c, ... map to 0, 1, 2, ... in order.

// Petersen graph: outer 6-cycle a..f, inner claw attachments; a=0 .. j=9.
const EdgeList kP10 = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 8}, {3, 8},
                       {5, 6}, {6, 2}, {4, 7}, {1, 7}, {8, 9}, {6, 9}, {7, 9}};

// Wagner graph: 8-cycle a..h plus the four antipodal chords.
const EdgeList kW8 = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                      {6, 7}, {7, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};

// W8 plus one vertex i=8 adjacent to f, a, c.
const EdgeList kW8Plus = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                          {0, 4}, {1, 5}, {2, 6}, {3, 7}, {8, 5}, {8, 0}, {8, 2}};

// Grotzsch graph: 5-cycle a..e, mirror vertices f..j, hub k=10.
const EdgeList kM11 = {{0, 1}, {1, 2}, {2, 3}, {3, 4},  {4, 0},  {0, 6},  {0, 9},
                       {1, 5}, {1, 7}, {2, 6}, {2, 8},  {3, 7},  {3, 9},  {4, 8},
                       {4, 5}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {10, 9}};

// Grotzsch minus the mirror vertex j; letters a..i, k map to 0..8, 9.
const EdgeList kM11Minus = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 6}, {1, 5}, {1, 7}, {2, 6},
                            {2, 8}, {3, 7}, {4, 8}, {4, 5}, {9, 5}, {9, 6}, {9, 7}, {9, 8}};

// Grotzsch minus mirrors i and j; letters a..h, k map to 0..7, 8.
const EdgeList kM11Eq = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 6}, {1, 5},
                         {1, 7}, {2, 6}, {3, 7}, {4, 5}, {8, 5}, {8, 6}, {8, 7}};

// K34star: 8-cycle a..h plus chords ad, bf, ch, dg, eh.
const EdgeList kK34Star = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                           {7, 0}, {0, 3}, {1, 5}, {2, 7}, {3, 6}, {4, 7}};

// F0, letters a..i.
const EdgeList kF0 = {{0, 1}, {1, 2}, {2, 3}, {0, 5}, {5, 2}, {0, 7}, {7, 2}, {3, 4},
                      {4, 1}, {3, 6}, {6, 1}, {7, 8}, {8, 5}, {4, 8}, {4, 6}};

// F1 = F0 plus the edge da.
const EdgeList kF1 = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 5}, {5, 2}, {0, 7}, {7, 2},
                      {3, 4}, {4, 1}, {3, 6}, {6, 1}, {7, 8}, {8, 5}, {4, 8}, {4, 6}};

// F2: F1 with the edge bc subdivided by j=9 (j also picks up the g edge).
const EdgeList kF2 = {{0, 1}, {1, 9}, {9, 2}, {2, 3}, {3, 0}, {0, 5}, {5, 2}, {0, 7}, {7, 2},
                      {3, 4}, {4, 1}, {3, 6}, {6, 9}, {7, 8}, {8, 5}, {4, 8}, {4, 6}};

// F3: letters a..j, k map to 0..9, 10.
const EdgeList kF3 = {{0, 1}, {1, 9}, {9, 2}, {2, 10}, {3, 10}, {3, 0}, {0, 5}, {5, 2}, {0, 7},
                      {7, 2}, {10, 4}, {4, 1}, {3, 6}, {6, 9},  {7, 8}, {8, 5}, {4, 8}, {4, 6}};

Graph fixed_graph(SpecialGraph s) {
    switch (s) {
        case SpecialGraph::p10: return Graph::from_edge_list(10, kP10);
        case SpecialGraph::w8: return Graph::from_edge_list(8, kW8);
        case SpecialGraph::w8_plus: return Graph::from_edge_list(9, kW8Plus);
        case SpecialGraph::m11: return Graph::from_edge_list(11, kM11);
        case SpecialGraph::m11_minus: return Graph::from_edge_list(10, kM11Minus);
        case SpecialGraph::m11_eq: return Graph::from_edge_list(9, kM11Eq);
        case SpecialGraph::k34_star: return Graph::from_edge_list(8, kK34Star);
    }
    throw ParamError("unknown special graph");
}

Graph fixed_graph(AuxGraph a) {
    switch (a) {
        case AuxGraph::f0: return Graph::from_edge_list(9, kF0);
        case AuxGraph::f1: return Graph::from_edge_list(9, kF1);
        case AuxGraph::f2: return Graph::from_edge_list(10, kF2);
        case AuxGraph::f3: return Graph::from_edge_list(11, kF3);
    }
    throw ParamError("unknown aux graph");
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    EdgeList edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edge_list(a + b, edges);
}

// K_{a,b} with the edge between vertex 0 and vertex a replaced by t paths of
// length 2 through fresh vertices.
Graph subdivided_biclique(int a, int b, int t) {
    const int n = a + b + t;
    EdgeList edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            if (u != 0 || v != 0) edges.emplace_back(u, a + v);
    for (int i = 0; i < t; ++i) {
        edges.emplace_back(0, a + b + i);
        edges.emplace_back(a, a + b + i);
    }
    return Graph::from_edge_list(n, edges);
}

void check_order_cap(int order, const FamilySpec& spec) {
    if (order > kMaxOrder)
        throw ParamError("family " + to_string(spec) + " has order " + std::to_string(order) +
                         " above the cap " + std::to_string(kMaxOrder));
}

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

std::pair<int, int> order_and_size(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::star:
            if (spec.n < 2) throw ParamError("K_{1,n} requires n >= 2");
            return {spec.n + 1, spec.n};
        case FamilyKind::biclique2:
            if (spec.n < 2) throw ParamError("K_{2,n} requires n >= 2");
            return {spec.n + 2, 2 * spec.n};
        case FamilyKind::c5_attach:
            if (spec.m < 0 || spec.n < 0) throw ParamError("C_5(m,n) requires m,n >= 0");
            return {5 + spec.m + spec.n, 5 + 2 * spec.m + 2 * spec.n};
        case FamilyKind::k33: return {6, 9};
        case FamilyKind::k34: return {7, 12};
        case FamilyKind::k33_sub:
            if (spec.n < 1) throw ParamError("K_{3,3}(t) requires t >= 1");
            return {6 + spec.n, 8 + 2 * spec.n};
        case FamilyKind::k34_sub:
            if (spec.n < 1) throw ParamError("K_{3,4}(t) requires t >= 1");
            return {7 + spec.n, 11 + 2 * spec.n};
        case FamilyKind::special:
            switch (spec.special) {
                case SpecialGraph::p10: return {10, 15};
                case SpecialGraph::w8: return {8, 12};
                case SpecialGraph::w8_plus: return {9, 15};
                case SpecialGraph::m11: return {11, 20};
                case SpecialGraph::m11_minus: return {10, 17};
                case SpecialGraph::m11_eq: return {9, 14};
                case SpecialGraph::k34_star: return {8, 13};
            }
            break;
        case FamilyKind::aux:
            switch (spec.aux) {
                case AuxGraph::f0: return {9, 15};
                case AuxGraph::f1: return {9, 16};
                case AuxGraph::f2: return {10, 17};
                case AuxGraph::f3: return {11, 18};
            }
            break;
    }
    throw ParamError("unknown family spec");
}

Graph construct(const FamilySpec& spec) {
    auto [order, size] = order_and_size(spec);
    check_order_cap(order, spec);
    (void)size;
    switch (spec.kind) {
        case FamilyKind::star: return complete_bipartite(1, spec.n);
        case FamilyKind::biclique2: return complete_bipartite(2, spec.n);
        case FamilyKind::c5_attach: {
            // Cycle v1..v5 = 0..4; m attachments adjacent to {v1, v3},
            // n attachments adjacent to {v1, v4}.
            EdgeList edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
            int next = 5;
            for (int i = 0; i < spec.m; ++i, ++next) {
                edges.emplace_back(next, 0);
                edges.emplace_back(next, 2);
            }
            for (int i = 0; i < spec.n; ++i, ++next) {
                edges.emplace_back(next, 0);
                edges.emplace_back(next, 3);
            }
            return Graph::from_edge_list(order, edges);
        }
        case FamilyKind::k33: return complete_bipartite(3, 3);
        case FamilyKind::k34: return complete_bipartite(3, 4);
        case FamilyKind::k33_sub: return subdivided_biclique(3, 3, spec.n);
        case FamilyKind::k34_sub: return subdivided_biclique(3, 4, spec.n);
        case FamilyKind::special: return fixed_graph(spec.special);
        case FamilyKind::aux: return fixed_graph(spec.aux);
    }
    throw ParamError("unknown family spec");
}

std::vector<FamilySpec> all_members_with_order(int k) {
    std::vector<FamilySpec> out;
    if (k < 1) throw ParamError("order must be >= 1");
    constexpr std::array<SpecialGraph, 7> specials = {
        SpecialGraph::p10,    SpecialGraph::w8,     SpecialGraph::w8_plus, SpecialGraph::m11,
        SpecialGraph::m11_minus, SpecialGraph::m11_eq, SpecialGraph::k34_star};
    for (SpecialGraph s : specials)
        if (order_and_size(FamilySpec::fixed(s)).first == k) out.push_back(FamilySpec::fixed(s));
    if (k - 1 >= 2) out.push_back(FamilySpec::star(k - 1));
    if (k - 2 >= 2) out.push_back(FamilySpec::biclique2(k - 2));
    if (k == 6) out.push_back(FamilySpec::k33());
    if (k == 7) out.push_back(FamilySpec::k34());
    if (k - 6 >= 1) out.push_back(FamilySpec::k33_sub(k - 6));
    if (k - 7 >= 1) out.push_back(FamilySpec::k34_sub(k - 7));
    for (int m = 0; 5 + 2 * m <= k; ++m) {
        int n = k - 5 - m;
        if (n >= m) out.push_back(FamilySpec::c5_attach(m, n));
    }
    return out;
}

std::string to_string(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::star: return "k1n:" + std::to_string(spec.n);
        case FamilyKind::biclique2: return "k2n:" + std::to_string(spec.n);
        case FamilyKind::c5_attach:
            return "c5:" + std::to_string(spec.m) + "," + std::to_string(spec.n);
        case FamilyKind::k33: return "k33";
        case FamilyKind::k34: return "k34";
        case FamilyKind::k33_sub: return "k33s:" + std::to_string(spec.n);
        case FamilyKind::k34_sub: return "k34s:" + std::to_string(spec.n);
        case FamilyKind::special:
            switch (spec.special) {
                case SpecialGraph::p10: return "p10";
                case SpecialGraph::w8: return "w8";
                case SpecialGraph::w8_plus: return "w8p";
                case SpecialGraph::m11: return "m11";
                case SpecialGraph::m11_minus: return "m11m";
                case SpecialGraph::m11_eq: return "m11e";
                case SpecialGraph::k34_star: return "k34star";
            }
            break;
        case FamilyKind::aux:
            switch (spec.aux) {
                case AuxGraph::f0: return "f0";
                case AuxGraph::f1: return "f1";
                case AuxGraph::f2: return "f2";
                case AuxGraph::f3: return "f3";
            }
            break;
    }
    return "?";
}

std::optional<FamilySpec> parse_family(std::string_view name) {
    if (name == "k33") return FamilySpec::k33();
    if (name == "k34") return FamilySpec::k34();
    if (name == "p10") return FamilySpec::fixed(SpecialGraph::p10);
    if (name == "w8") return FamilySpec::fixed(SpecialGraph::w8);
    if (name == "w8p") return FamilySpec::fixed(SpecialGraph::w8_plus);
    if (name == "m11") return FamilySpec::fixed(SpecialGraph::m11);
    if (name == "m11m") return FamilySpec::fixed(SpecialGraph::m11_minus);
    if (name == "m11e") return FamilySpec::fixed(SpecialGraph::m11_eq);
    if (name == "k34star") return FamilySpec::fixed(SpecialGraph::k34_star);
    if (name == "f0") return FamilySpec::fixed(AuxGraph::f0);
    if (name == "f1") return FamilySpec::fixed(AuxGraph::f1);
    if (name == "f2") return FamilySpec::fixed(AuxGraph::f2);
    if (name == "f3") return FamilySpec::fixed(AuxGraph::f3);
    auto colon = name.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    auto head = name.substr(0, colon);
    auto tail = name.substr(colon + 1);
    if (head == "c5") {
        auto comma = tail.find(',');
        if (comma == std::string_view::npos) return std::nullopt;
        auto m = parse_int(tail.substr(0, comma));
        auto n = parse_int(tail.substr(comma + 1));
        if (!m || !n || *m < 0 || *n < 0) return std::nullopt;
        return FamilySpec::c5_attach(*m, *n);
    }
    auto value = parse_int(tail);
    if (!value) return std::nullopt;
    if (head == "k1n" && *value >= 2) return FamilySpec::star(*value);
    if (head == "k2n" && *value >= 2) return FamilySpec::biclique2(*value);
    if (head == "k33s" && *value >= 1) return FamilySpec::k33_sub(*value);
    if (head == "k34s" && *value >= 1) return FamilySpec::k34_sub(*value);
    return std::nullopt;
}

}  // namespace ppg2
