#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "biclab/vertex_set.hpp"

namespace biclab {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1, adjacency stored as
/// one bitset row per vertex. Values are immutable once constructed.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    /// Builds from symmetric, irreflexive adjacency rows; throws std::invalid_argument otherwise.
    explicit Graph(std::vector<VertexSet> rows);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return static_cast<int>(rows_.size()); }
    int size() const;
    VertexSet vertices() const { return VertexSet::range(order()); }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
    /// Open neighborhood N(v).
    VertexSet neighbors(Vertex v) const { return rows_[v]; }
    /// Closed neighborhood N[v].
    VertexSet closed_neighbors(Vertex v) const { return rows_[v] | VertexSet::single(v); }
    int degree(Vertex v) const { return rows_[v].size(); }
    int min_degree() const;

    std::vector<Edge> edges() const;

    /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing vertex order.
    Graph induced(VertexSet keep) const;
    /// Graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;
    /// Same graph plus one vertex n adjacent to `neighborhood`.
    Graph with_vertex(VertexSet neighborhood) const;

    /// Throws std::out_of_range unless 0 <= v < order().
    void check_vertex(Vertex v) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> rows_;
};

/// Shortest-path length; nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);
/// BFS distances from every vertex of `sources`; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, VertexSet sources);
/// All-pairs distances, -1 for unreachable.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

/// Vertices reachable from `start` without entering `blocked`.
VertexSet component_of(const Graph& g, Vertex start, VertexSet blocked = {});
bool is_connected(const Graph& g);
bool is_connected(const Graph& g, VertexSet within);

/// A vertex whose removal disconnects g, if any.
std::optional<Vertex> find_cut_vertex(const Graph& g);
/// Connected with no cut vertex. K1 and K2 count as 2-connected.
bool is_biconnected(const Graph& g);

/// Whether `s` induces a complete subgraph.
bool is_clique(const Graph& g, VertexSet s);

/// "n: u-v u-w ...", a debugging rendering.
std::string to_string(const Graph& g);

namespace named {
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
/// K4 minus the edge 2-3.
Graph diamond();
/// Path 0-1-2-3 plus the universal vertex 4.
Graph gem();
/// K_{1,1,k}: adjacent hubs 0 and 1, each joined to the k vertices 2..k+1.
Graph double_fan(int k);
}  // namespace named

}  // namespace biclab
