#include "biclab/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace biclab {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxOrder) {
        throw std::invalid_argument("graph order must be in 0.." + std::to_string(kMaxOrder));
    }
    rows_.resize(n);
}

Graph::Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {
    const int n = order();
    if (n > kMaxOrder) throw std::invalid_argument("graph order exceeds " + std::to_string(kMaxOrder));
    const VertexSet all = VertexSet::range(n);
    for (Vertex v = 0; v < n; ++v) {
        if (!rows_[v].is_subset_of(all)) throw std::invalid_argument("adjacency row names a missing vertex");
        if (rows_[v].contains(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        for (Vertex u : rows_[v]) {
            if (!rows_[u].contains(v)) throw std::invalid_argument("adjacency is not symmetric");
        }
    }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.rows_[u].insert(v);
        g.rows_[v].insert(u);
    }
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (VertexSet row : rows_) twice += row.size();
    return twice / 2;
}

int Graph::min_degree() const {
    int best = order() == 0 ? 0 : kMaxOrder;
    for (VertexSet row : rows_) best = std::min(best, row.size());
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : rows_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::induced(VertexSet keep) const {
    std::vector<Vertex> index(order(), -1);
    int next = 0;
    for (Vertex v : keep) index[v] = next++;
    std::vector<VertexSet> rows(next);
    for (Vertex v : keep) {
        for (Vertex u : rows_[v] & keep) rows[index[v]].insert(index[u]);
    }
    return Graph(std::move(rows));
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    std::vector<VertexSet> rows(order());
    for (Vertex v = 0; v < order(); ++v) {
        for (Vertex u : rows_[v]) rows[perm[v]].insert(perm[u]);
    }
    return Graph(std::move(rows));
}

Graph Graph::with_vertex(VertexSet neighborhood) const {
    if (order() == kMaxOrder) throw std::invalid_argument("graph is full");
    std::vector<VertexSet> rows = rows_;
    const Vertex fresh = order();
    for (Vertex u : neighborhood) rows[u].insert(fresh);
    rows.push_back(neighborhood);
    return Graph(std::move(rows));
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " not in 0.." + std::to_string(order() - 1));
    }
}

std::vector<int> distances_from(const Graph& g, VertexSet sources) {
    std::vector<int> dist(g.order(), -1);
    VertexSet seen = sources;
    VertexSet frontier = sources;
    for (int d = 0; !frontier.empty(); ++d) {
        VertexSet next;
        for (Vertex v : frontier) {
            dist[v] = d;
            next |= g.neighbors(v);
        }
        frontier = next - seen;
        seen |= next;
    }
    return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    const int d = distances_from(g, VertexSet::single(u))[v];
    if (d < 0) return std::nullopt;
    return d;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> out;
    out.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out.push_back(distances_from(g, VertexSet::single(v)));
    return out;
}

VertexSet component_of(const Graph& g, Vertex start, VertexSet blocked) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        next -= blocked;
        frontier = next - seen;
        seen |= next;
    }
    return seen;
}

bool is_connected(const Graph& g, VertexSet within) {
    if (within.empty()) return true;
    const VertexSet outside = g.vertices() - within;
    return component_of(g, within.first(), outside) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

std::optional<Vertex> find_cut_vertex(const Graph& g) {
    if (g.order() <= 2) return std::nullopt;
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet rest = g.vertices();
        rest.erase(v);
        if (!is_connected(g, rest)) return v;
    }
    return std::nullopt;
}

bool is_biconnected(const Graph& g) { return is_connected(g) && !find_cut_vertex(g); }

bool is_clique(const Graph& g, VertexSet s) {
    for (Vertex v : s) {
        if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

std::string to_string(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ":";
    for (auto [u, v] : g.edges()) out << ' ' << u << '-' << v;
    return out.str();
}

namespace named {

Graph complete(int n) {
    std::vector<VertexSet> rows(n);
    for (Vertex v = 0; v < n; ++v) rows[v] = VertexSet::range(n) - VertexSet::single(v);
    return Graph(std::move(rows));
}

Graph path(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph diamond() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph gem() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }

Graph double_fan(int k) {
    std::vector<Edge> edges{{0, 1}};
    for (Vertex v = 2; v < k + 2; ++v) {
        edges.emplace_back(0, v);
        edges.emplace_back(1, v);
    }
    return Graph::from_edges(k + 2, edges);
}

}  // namespace named

}  // namespace biclab
