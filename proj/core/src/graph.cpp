#include "qembed/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace qembed {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw Error(errc::out_of_range_vertex,
                    "vertex " + std::to_string(v) + " not in [0," + std::to_string(n) + ")");
}

} // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n <= 0)
        throw Error(errc::invalid_argument, "vertex count must be positive");
    adj_.assign(static_cast<std::size_t>(n) * n, false);
    for (const auto& [u, v] : edges) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v)
            throw Error(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        if (!adj_[index(u, v)]) {
            adj_[index(u, v)] = true;
            adj_[index(v, u)] = true;
            ++edge_count_;
        }
    }
}

std::size_t Graph::index(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
}

int Graph::degree(int v) const {
    check_vertex(v, n_);
    int deg = 0;
    for (int u = 0; u < n_; ++u)
        if (adj_[index(v, u)]) ++deg;
    return deg;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> degs(n_);
    for (int v = 0; v < n_; ++v) degs[v] = degree(v);
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    return degs;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[index(u, v)]) out.emplace_back(u, v);
    return out;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

Graph complete_multipartite_graph(const std::vector<int>& part_sizes) {
    if (part_sizes.empty())
        throw Error(errc::empty_part, "no parts given");
    int n = 0;
    for (int m : part_sizes) {
        if (m < 1) throw Error(errc::empty_part, "part size must be >= 1");
        n += m;
    }
    std::vector<int> block(n);
    int v = 0;
    for (std::size_t i = 0; i < part_sizes.size(); ++i)
        for (int j = 0; j < part_sizes[i]; ++j) block[v++] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (block[x] != block[y]) edges.emplace_back(x, y);
    return Graph(n, edges);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int u = 0; u < n; ++u) {
            if (g.adjacent(v, u) && !seen[u]) {
                seen[u] = true;
                ++reached;
                queue.push(u);
            }
        }
    }
    return reached == n;
}

DistanceMatrix DistanceMatrix::from_entries(int n, const std::vector<int>& entries) {
    if (n <= 0)
        throw Error(errc::invalid_argument, "dimension must be positive");
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw Error(errc::dimension_mismatch, "entry count does not match dimension");
    for (int x = 0; x < n; ++x) {
        if (entries[static_cast<std::size_t>(x) * n + x] != 0)
            throw Error(errc::invalid_argument, "nonzero diagonal entry");
        for (int y = 0; y < n; ++y) {
            int d = entries[static_cast<std::size_t>(x) * n + y];
            if (d != entries[static_cast<std::size_t>(y) * n + x])
                throw Error(errc::invalid_argument, "asymmetric entries");
            if (x != y && d < 1)
                throw Error(errc::invalid_argument, "off-diagonal entry below 1");
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                auto at = [&](int a, int b) { return entries[static_cast<std::size_t>(a) * n + b]; };
                if (at(x, z) > at(x, y) + at(y, z))
                    throw Error(errc::invalid_argument, "triangle inequality violated");
            }
    return DistanceMatrix(n, entries);
}

int DistanceMatrix::max_entry() const {
    return *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix bfs_distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> d(static_cast<std::size_t>(n) * n, -1);
    for (int src = 0; src < n; ++src) {
        auto row = d.begin() + static_cast<std::size_t>(src) * n;
        row[src] = 0;
        std::queue<int> queue;
        queue.push(src);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int u = 0; u < n; ++u) {
                if (g.adjacent(v, u) && row[u] < 0) {
                    row[u] = row[v] + 1;
                    queue.push(u);
                }
            }
        }
        for (int u = 0; u < n; ++u)
            if (row[u] < 0)
                throw Error(errc::disconnected_graph,
                            "vertex " + std::to_string(u) + " unreachable from " + std::to_string(src));
    }
    return DistanceMatrix(n, std::move(d));
}

int diameter(const Graph& g) {
    return bfs_distances(g).max_entry();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.empty())
        throw Error(errc::empty_subset, "empty vertex subset");
    const int n = g.vertex_count();
    std::vector<bool> taken(n, false);
    for (int v : vertices) {
        check_vertex(v, n);
        if (taken[v])
            throw Error(errc::invalid_argument, "duplicate vertex " + std::to_string(v) + " in subset");
        taken[v] = true;
    }
    const int m = static_cast<int>(vertices.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(vertices[i], vertices[j])) edges.emplace_back(i, j);
    return Graph(m, edges);
}

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::invalid_argument: return "InvalidArgument";
        case errc::out_of_range_vertex: return "OutOfRangeVertex";
        case errc::self_loop: return "SelfLoop";
        case errc::empty_part: return "EmptyPart";
        case errc::empty_subset: return "EmptySubset";
        case errc::disconnected_graph: return "DisconnectedGraph";
        case errc::too_large: return "TooLarge";
        case errc::g6_invalid_byte: return "InvalidByte";
        case errc::g6_truncated: return "TruncatedBits";
        case errc::g6_trailing_garbage: return "TrailingGarbage";
        case errc::g6_nonzero_padding: return "NonzeroPadding";
        case errc::g6_unsupported_format: return "UnsupportedFormat";
        case errc::g6_unsupported_size: return "UnsupportedSize";
        case errc::eigen_no_convergence: return "EigenNoConvergence";
        case errc::not_embeddable: return "NotEmbeddable";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::diameter_out_of_range: return "DiameterOutOfRange";
        case errc::pole_hit: return "PoleHit";
        case errc::not_a_stationary_alpha: return "NotAStationaryAlpha";
        case errc::precondition_violated: return "PreconditionViolated";
    }
    return "UnknownError";
}

} // namespace qembed
