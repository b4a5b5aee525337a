#include "ppg2/graph.hpp"

#include <algorithm>
#include <sstream>

namespace ppg2 {

Graph::Graph(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
    if (n < 1 || n > kMaxOrder)
        throw OutOfRangeError("graph order must be in 1.." + std::to_string(kMaxOrder) +
                              ", got " + std::to_string(n));
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw OutOfRangeError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(u));
        g.rows_[u] |= std::uint64_t{1} << v;
        g.rows_[v] |= std::uint64_t{1} << u;
    }
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::size() const {
    int total = 0;
    for (auto row : rows_) total += std::popcount(row);
    return total / 2;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph Graph::with_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw OutOfRangeError("with_edge endpoint out of range");
    if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    Graph g = *this;
    g.rows_[u] |= std::uint64_t{1} << v;
    g.rows_[v] |= std::uint64_t{1} << u;
    return g;
}

Graph Graph::induced(std::span<const int> keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) {
                g.rows_[i] |= std::uint64_t{1} << j;
                g.rows_[j] |= std::uint64_t{1} << i;
            }
    return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) {
                g.rows_[perm[u]] |= std::uint64_t{1} << perm[v];
                g.rows_[perm[v]] |= std::uint64_t{1} << perm[u];
            }
    return g;
}

namespace {

// Levelwise BFS over bit rows; returns eccentricity of start, or -1 when some
// vertex is unreachable.
int eccentricity(const Graph& g, int start) {
    const std::uint64_t all = g.vertex_mask();
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    int depth = 0;
    while (seen != all) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(v);
        }
        next &= ~seen;
        if (next == 0) return -1;
        seen |= next;
        frontier = next;
        ++depth;
    }
    return depth;
}

}  // namespace

bool is_connected(const Graph& g) {
    const std::uint64_t all = g.vertex_mask();
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == all;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u + 1 < g.order(); ++u) {
        // Edges uv with v > u; a triangle exists iff their endpoints share a neighbor.
        std::uint64_t nb = g.neighbors(u) >> (u + 1) << (u + 1);
        for (std::uint64_t m = nb; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (g.neighbors(u) & g.neighbors(v)) return false;
        }
    }
    return true;
}

std::optional<int> diameter_of(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        int e = eccentricity(g, v);
        if (e < 0) return std::nullopt;
        best = std::max(best, e);
    }
    return best;
}

GraphMetrics metrics(const Graph& g) {
    GraphMetrics m;
    m.min_degree = g.order();
    m.max_degree = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        m.min_degree = std::min(m.min_degree, d);
        m.max_degree = std::max(m.max_degree, d);
    }
    m.edge_count = g.size();
    m.diameter = diameter_of(g);
    m.triangle_free = is_triangle_free(g);
    return m;
}

bool is_maximal_triangle_free(const Graph& g) {
    if (!is_triangle_free(g)) throw NotTriangleFreeError("is_maximal_triangle_free: input has a triangle");
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v) && (g.neighbors(u) & g.neighbors(v)) == 0) return false;
    return true;
}

namespace {

void append_graph6_order(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // Long form: '~' then 18 bits big-endian in three 6-bit groups.
        out.push_back(126);
        out.push_back(static_cast<char>((n >> 12 & 63) + 63));
        out.push_back(static_cast<char>((n >> 6 & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_graph6_order(out, n);
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph decode_graph6(std::string_view text) {
    // Tolerate a trailing newline from line-oriented streams.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw MalformedGraph6Error("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw MalformedGraph6Error("graph6 byte out of range 63..126");
    size_t pos = 0;
    long n;
    if (text[0] == 126) {
        if (text.size() >= 2 && text[1] == 126)
            throw MalformedGraph6Error("graph6 orders above 258047 are not supported");
        if (text.size() < 4) throw MalformedGraph6Error("truncated graph6 order");
        n = (long{text[1] - 63} << 12) | (long{text[2] - 63} << 6) | long{text[3] - 63};
        pos = 4;
    } else {
        n = text[0] - 63;
        pos = 1;
    }
    if (n < 1 || n > kMaxOrder)
        throw MalformedGraph6Error("graph6 order " + std::to_string(n) + " outside supported 1.." +
                                   std::to_string(kMaxOrder));
    const long nbits = n * (n - 1) / 2;
    const size_t want = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() - pos != want)
        throw MalformedGraph6Error("graph6 bit vector has wrong length");
    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = text[pos + bit / 6] - 63;
            if (byte >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
        }
    // Padding bits must be zero.
    for (long b = nbits; b < static_cast<long>(want) * 6; ++b)
        if ((text[pos + b / 6] - 63) >> (5 - b % 6) & 1)
            throw MalformedGraph6Error("nonzero padding bits in graph6");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n, m;
    if (!(in >> n >> m)) throw MalformedInputError("edge list: expected header \"n m\"");
    if (n < 1 || n > kMaxOrder)
        throw MalformedInputError("edge list: order " + std::to_string(n) + " outside 1.." +
                                  std::to_string(kMaxOrder));
    if (m < 0) throw MalformedInputError("edge list: negative edge count");
    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v)) throw MalformedInputError("edge list: truncated after " + std::to_string(i) + " edges");
        if (u < 0 || v < 0 || u >= n || v >= n) throw OutOfRangeError("edge list: endpoint out of range");
        if (u == v) throw SelfLoopError("edge list: self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

}  // namespace ppg2
