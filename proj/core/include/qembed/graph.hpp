#ifndef QEMBED_GRAPH_HPP
#define QEMBED_GRAPH_HPP

#include <utility>
#include <vector>

#include "qembed/error.hpp"

namespace qembed {

/// Simple undirected graph on labeled vertices 0..n-1.
/// Immutable once constructed; safe to share across threads.
class Graph {
public:
    explicit Graph(int n, const std::vector<std::pair<int, int>>& edges = {});

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return edge_count_; }

    bool adjacent(int u, int v) const { return adj_[index(u, v)]; }

    int degree(int v) const;

    /// Degrees sorted non-increasing.
    std::vector<int> degree_sequence() const;

    /// Edge list sorted lexicographically, u < v in each pair.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    std::size_t index(int u, int v) const;

    int n_;
    int edge_count_ = 0;
    std::vector<bool> adj_;
};

/// Builds a graph from an explicit edge list. Duplicate edges collapse;
/// self-loops and out-of-range endpoints are rejected.
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// Complete multipartite graph with consecutive vertex blocks of the given
/// sizes; vertices are adjacent iff they lie in different blocks. A single
/// part yields the edgeless graph on that part.
Graph complete_multipartite_graph(const std::vector<int>& part_sizes);

bool is_connected(const Graph& g);

/// Shortest-path distances of a connected graph.
class DistanceMatrix {
public:
    static DistanceMatrix from_entries(int n, const std::vector<int>& entries);

    int size() const noexcept { return n_; }
    int operator()(int x, int y) const { return d_[static_cast<std::size_t>(x) * n_ + y]; }

    int max_entry() const;

private:
    friend DistanceMatrix bfs_distances(const Graph&);
    DistanceMatrix(int n, std::vector<int> entries)
        : n_(n), d_(std::move(entries)) {}

    int n_;
    std::vector<int> d_;
};

/// BFS from every vertex; throws errc::disconnected_graph when some pair is
/// unreachable.
DistanceMatrix bfs_distances(const Graph& g);

int diameter(const Graph& g);

/// Subgraph induced on `vertices` (distinct, in range), relabeled 0..|S|-1
/// in the given order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

} // namespace qembed

#endif
