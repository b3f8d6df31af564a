#include "biclab/biclique.hpp"

#include <algorithm>
#include <limits>

#include "biclab/errors.hpp"

namespace biclab {

BicliqueFamily::BicliqueFamily(Graph host, std::vector<Biclique> bicliques)
    : host_(std::move(host)), bicliques_(std::move(bicliques)), incidence_(host_.order()) {
    for (int i = 0; i < size(); ++i) {
        for (Vertex v : bicliques_[i].vertices) incidence_[v].push_back(i);
    }
}

std::optional<Bipartition> is_induced_complete_bipartite(const Graph& g, VertexSet s) {
    if (s.empty()) return std::nullopt;
    const Vertex root = s.first();
    const VertexSet side_b = g.neighbors(root) & s;
    const VertexSet side_a = s - side_b;
    // Complete bipartite and connected: every A vertex sees exactly B, every
    // B vertex sees exactly A.
    for (Vertex a : side_a) {
        if ((g.neighbors(a) & s) != side_b) return std::nullopt;
    }
    for (Vertex b : side_b) {
        if ((g.neighbors(b) & s) != side_a) return std::nullopt;
    }
    if (side_b.empty() && side_a.size() > 1) return std::nullopt;
    return Bipartition{side_a, side_b};
}

bool is_maximal(const Graph& g, const Bipartition& sides) {
    const VertexSet outside = g.vertices() - sides.side_a - sides.side_b;
    for (Vertex v : outside) {
        const VertexSet nv = g.neighbors(v);
        const bool joins_a = !nv.intersects(sides.side_a) && sides.side_b.is_subset_of(nv);
        const bool joins_b = !nv.intersects(sides.side_b) && sides.side_a.is_subset_of(nv);
        if (joins_a || joins_b) return false;
    }
    return true;
}

void require_connected_host(const Graph& g) {
    if (g.order() < 2) throw DomainError("biclique operations need a host with at least 2 vertices");
    if (!is_connected(g)) throw DomainError("biclique operations need a connected host");
}

namespace {

class Enumerator {
public:
    Enumerator(const Graph& g, int limit) : g_(g), n_(g.order()), limit_(limit) {}

    /// nullopt when more than `limit` bicliques exist.
    std::optional<std::vector<Biclique>> run() {
        extend(0, {}, {});
        if (overflow_) return std::nullopt;
        std::sort(found_.begin(), found_.end(),
                  [](const Biclique& x, const Biclique& y) { return lex_less(x.vertices, y.vertices); });
        return std::move(found_);
    }

private:
    void extend(Vertex v, VertexSet a, VertexSet b) {
        if (overflow_) return;
        if (v == n_) {
            if (!a.empty() && !b.empty() && is_maximal(g_, {a, b})) {
                found_.push_back({a | b, a, b});
                overflow_ = static_cast<int>(found_.size()) > limit_;
            }
            return;
        }
        const VertexSet nv = g_.neighbors(v);
        if (!nv.intersects(a) && b.is_subset_of(nv)) extend(v + 1, a | VertexSet::single(v), b);
        if (!a.empty() && !nv.intersects(b) && a.is_subset_of(nv)) extend(v + 1, a, b | VertexSet::single(v));
        extend(v + 1, a, b);
    }

    const Graph& g_;
    int n_;
    int limit_;
    bool overflow_ = false;
    std::vector<Biclique> found_;
};

}  // namespace

BicliqueFamily enumerate_bicliques(const Graph& g) {
    require_connected_host(g);
    return BicliqueFamily(g, *Enumerator(g, std::numeric_limits<int>::max()).run());
}

std::optional<BicliqueFamily> enumerate_bicliques_bounded(const Graph& g, int limit) {
    require_connected_host(g);
    auto found = Enumerator(g, limit).run();
    if (!found) return std::nullopt;
    return BicliqueFamily(g, std::move(*found));
}

Graph intersection_graph(const BicliqueFamily& family) {
    const int k = family.size();
    if (k > kMaxOrder) {
        throw CapabilityError("biclique graph would have " + std::to_string(k) + " vertices, above " +
                              std::to_string(kMaxOrder));
    }
    std::vector<VertexSet> rows(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (family[i].vertices.intersects(family[j].vertices)) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    return Graph(std::move(rows));
}

std::pair<Graph, BicliqueFamily> biclique_graph(const Graph& g) {
    BicliqueFamily family = enumerate_bicliques(g);
    Graph kb = intersection_graph(family);
    return {std::move(kb), std::move(family)};
}

}  // namespace biclab
