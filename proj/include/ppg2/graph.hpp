#pragma once

// Immutable simple undirected graph on up to 64 vertices.  Adjacency is one
// 64-bit row per vertex, so neighborhood intersection is a single AND.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppg2/errors.hpp"

namespace ppg2 {

inline constexpr int kMaxOrder = 64;

class Graph {
public:
    explicit Graph(int n);

    // Duplicate edges collapse; (v,v) throws SelfLoopError, endpoints >= n
    // throw OutOfRangeError.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const;

    bool adjacent(int u, int v) const { return rows_[u] >> v & 1; }
    std::uint64_t neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    std::uint64_t vertex_mask() const;

    // Edge pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const;  // ascending

    Graph with_edge(int u, int v) const;
    // Subgraph induced by `keep`, relabeled 0.. in the order given.
    Graph induced(std::span<const int> keep) const;
    // Relabeling: vertex v of *this becomes perm[v] of the result.
    Graph permuted(std::span<const int> perm) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    std::vector<std::uint64_t> rows_;
};

struct GraphMetrics {
    int min_degree = 0;
    int max_degree = 0;
    int edge_count = 0;
    std::optional<int> diameter;  // nullopt when disconnected
    bool triangle_free = true;
};

GraphMetrics metrics(const Graph& g);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
std::optional<int> diameter_of(const Graph& g);

// True iff adding any non-edge creates a triangle.  For connected graphs this
// is equivalent to diameter <= 2 (tested, not assumed).  Throws
// NotTriangleFreeError when the input already has a triangle.
bool is_maximal_triangle_free(const Graph& g);

// Standard graph6: header byte n+63 for n <= 62 ('~' + 3 bytes above that),
// upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian
// into 6-bit groups, each + 63.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// Plain text: first line "n m", then m lines "u v", 0-indexed.
std::string encode_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

}  // namespace ppg2
