#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "biclab/graph.hpp"

namespace biclab {

struct Bipartition {
    VertexSet side_a;  // holds the smallest vertex id
    VertexSet side_b;

    bool operator==(const Bipartition&) const = default;
};

/// A maximal induced complete bipartite subgraph. Identity is the vertex
/// set; the bipartition of a connected complete bipartite graph is unique.
struct Biclique {
    VertexSet vertices;
    VertexSet side_a;
    VertexSet side_b;

    bool operator==(const Biclique& other) const { return vertices == other.vertices; }
};

/// All bicliques of a connected host, sorted lexicographically by vertex set.
class BicliqueFamily {
public:
    BicliqueFamily(Graph host, std::vector<Biclique> bicliques);

    const Graph& host() const { return host_; }
    const std::vector<Biclique>& bicliques() const { return bicliques_; }
    const Biclique& operator[](int i) const { return bicliques_.at(i); }
    int size() const { return static_cast<int>(bicliques_.size()); }
    /// Indices of the bicliques containing v, ascending.
    const std::vector<int>& containing(Vertex v) const { return incidence_.at(v); }

private:
    Graph host_;
    std::vector<Biclique> bicliques_;
    std::vector<std::vector<int>> incidence_;
};

/// The unique bipartition of G[s] when G[s] is connected and complete
/// bipartite (side_a gets the smallest id); nullopt otherwise. A single
/// vertex yields ({v}, {}).
std::optional<Bipartition> is_induced_complete_bipartite(const Graph& g, VertexSet s);

/// Whether no vertex outside the biclique can join either side.
bool is_maximal(const Graph& g, const Bipartition& sides);

/// Branch-and-extend enumeration: vertices are assigned in id order to side
/// A, side B, or neither while the partial assignment stays induced complete
/// bipartite, and complete assignments are kept when maximal.
/// Throws DomainError for disconnected hosts or hosts with fewer than 2 vertices.
BicliqueFamily enumerate_bicliques(const Graph& g);

/// As enumerate_bicliques, but gives up (nullopt) as soon as more than
/// `limit` bicliques have been found.
std::optional<BicliqueFamily> enumerate_bicliques_bounded(const Graph& g, int limit);

/// The intersection graph of the bicliques, index-aligned with the family.
std::pair<Graph, BicliqueFamily> biclique_graph(const Graph& g);
Graph intersection_graph(const BicliqueFamily& family);

/// Requires a connected host with at least two vertices.
void require_connected_host(const Graph& g);

}  // namespace biclab
