#include "biclab/patterns.hpp"

#include <algorithm>

namespace biclab {

Graph hajos_graph() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
}

Graph rising_sun_graph() {
    return Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {4, 0}, {4, 1}, {5, 0}, {5, 2}, {6, 1}, {6, 3}});
}

Graph x1_graph() {
    return Graph::from_edges(
        7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {5, 0}, {5, 2}, {6, 1}, {6, 3}});
}

namespace {

ForbiddenPattern make_pattern(std::string name, Graph g) {
    VertexSet constrained;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 2) constrained.insert(v);
    }
    return {std::move(name), std::move(g), constrained};
}

/// Pattern vertices in BFS order so each new vertex has a mapped neighbour
/// early; keeps the backtracking tight.
std::vector<Vertex> search_order(const Graph& p) {
    std::vector<Vertex> order;
    VertexSet placed;
    for (Vertex start = 0; start < p.order(); ++start) {
        if (placed.contains(start)) continue;
        const auto dist = distances_from(p, VertexSet::single(start));
        std::vector<Vertex> layer;
        for (Vertex v = 0; v < p.order(); ++v) {
            if (dist[v] >= 0 && !placed.contains(v)) layer.push_back(v);
        }
        std::stable_sort(layer.begin(), layer.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
        for (Vertex v : layer) {
            order.push_back(v);
            placed.insert(v);
        }
    }
    return order;
}

class Matcher {
public:
    Matcher(const Graph& pattern, const Graph& host, bool induced, VertexSet constrained)
        : p_(pattern), h_(host), induced_(induced), constrained_(constrained), order_(search_order(pattern)),
          image_(pattern.order(), -1) {}

    std::optional<Embedding> run() {
        if (p_.order() > h_.order()) return std::nullopt;
        if (place(0)) return image_;
        return std::nullopt;
    }

private:
    bool place(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Vertex pv = order_[depth];
        for (Vertex hv = 0; hv < h_.order(); ++hv) {
            if (used_.contains(hv)) continue;
            if (constrained_.contains(pv) && h_.degree(hv) != 2) continue;
            if (h_.degree(hv) < p_.degree(pv)) continue;
            if (!consistent(pv, hv)) continue;
            image_[pv] = hv;
            used_.insert(hv);
            if (place(depth + 1)) return true;
            used_.erase(hv);
            image_[pv] = -1;
        }
        return false;
    }

    bool consistent(Vertex pv, Vertex hv) const {
        for (Vertex pu = 0; pu < p_.order(); ++pu) {
            const Vertex hu = image_[pu];
            if (hu < 0) continue;
            const bool want = p_.adjacent(pu, pv);
            const bool have = h_.adjacent(hu, hv);
            if (want && !have) return false;
            if (induced_ && have && !want) return false;
        }
        return true;
    }

    const Graph& p_;
    const Graph& h_;
    bool induced_;
    VertexSet constrained_;
    std::vector<Vertex> order_;
    Embedding image_;
    VertexSet used_;
};

}  // namespace

const std::vector<ForbiddenPattern>& forbidden_patterns() {
    static const std::vector<ForbiddenPattern> patterns{
        make_pattern("hajos", hajos_graph()),
        make_pattern("rising_sun", rising_sun_graph()),
        make_pattern("x1", x1_graph()),
    };
    return patterns;
}

std::optional<Embedding> find_constrained_embedding(const Graph& host, const ForbiddenPattern& pattern) {
    return Matcher(pattern.pattern, host, true, pattern.constrained).run();
}

bool is_constrained_embedding(const Graph& host, const ForbiddenPattern& pattern, const Embedding& embedding) {
    const Graph& p = pattern.pattern;
    if (static_cast<int>(embedding.size()) != p.order()) return false;
    VertexSet image;
    for (Vertex hv : embedding) {
        if (hv < 0 || hv >= host.order() || image.contains(hv)) return false;
        image.insert(hv);
    }
    for (Vertex u = 0; u < p.order(); ++u) {
        if (pattern.constrained.contains(u) && host.degree(embedding[u]) != 2) return false;
        for (Vertex v = u + 1; v < p.order(); ++v) {
            if (p.adjacent(u, v) != host.adjacent(embedding[u], embedding[v])) return false;
        }
    }
    return true;
}

bool is_subgraph_embeddable(const Graph& small, const Graph& large) {
    return Matcher(small, large, false, {}).run().has_value();
}

}  // namespace biclab
