#include "biclab/distance.hpp"

#include "biclab/errors.hpp"

namespace biclab {

namespace {

void check_index(const BicliqueFamily& family, int i) {
    if (i < 0 || i >= family.size()) {
        throw std::out_of_range("biclique index " + std::to_string(i) + " not in 0.." +
                                std::to_string(family.size() - 1));
    }
}

}  // namespace

int biclique_distance(const BicliqueFamily& family, int i, int j) {
    check_index(family, i);
    check_index(family, j);
    const Graph& g = family.host();
    const VertexSet target = family[j].vertices;
    VertexSet seen = family[i].vertices;
    VertexSet frontier = seen;
    for (int d = 0; !frontier.empty(); ++d) {
        if (frontier.intersects(target)) return d;
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        frontier = next - seen;
        seen |= next;
    }
    throw DomainError("bicliques lie in different components");
}

std::pair<Vertex, Vertex> closest_pair(const BicliqueFamily& family, int i, int j) {
    const int d = biclique_distance(family, i, j);
    const Graph& g = family.host();
    for (Vertex b : family[i].vertices) {
        const auto dist = distances_from(g, VertexSet::single(b));
        for (Vertex c : family[j].vertices) {
            if (dist[c] == d) return {b, c};
        }
    }
    throw std::logic_error("closest pair not found");
}

std::vector<BicliqueDistanceReport> verify_distance_formula(const BicliqueFamily& family, const Graph& kb) {
    std::vector<BicliqueDistanceReport> out;
    for (int i = 0; i < family.size(); ++i) {
        const auto kb_dist = distances_from(kb, VertexSet::single(i));
        for (int j = i + 1; j < family.size(); ++j) {
            BicliqueDistanceReport r;
            r.b_index = i;
            r.b_prime_index = j;
            r.d_g = biclique_distance(family, i, j);
            r.d_kb = kb_dist[j];
            r.formula_value = kb_distance_formula(r.d_g);
            r.closest_pair = closest_pair(family, i, j);
            out.push_back(r);
        }
    }
    return out;
}

std::vector<BicliqueDistanceReport> verify_distance_formula(const Graph& g) {
    const auto [kb, family] = biclique_graph(g);
    return verify_distance_formula(family, kb);
}

bool WitnessSet::satisfies_bound() const {
    if (static_cast<int>(witnesses.size()) < k + 1) return false;
    for (std::size_t w = 0; w < witnesses.size(); ++w) {
        if (distance_to_b[w] > k - 1 || distance_to_b_prime[w] > k - 1) return false;
    }
    return true;
}

WitnessSet find_witnesses(const BicliqueFamily& family, int i, int j) {
    WitnessSet out;
    out.k = biclique_distance(family, i, j);
    if (out.k == 0) throw DomainError("witness search needs disjoint bicliques at positive distance");
    for (int w = 0; w < family.size(); ++w) {
        if (w == i || w == j) continue;
        const int to_b = biclique_distance(family, w, i);
        const int to_b_prime = biclique_distance(family, w, j);
        if (to_b <= out.k - 1 && to_b_prime <= out.k - 1) {
            out.witnesses.push_back(w);
            out.distance_to_b.push_back(to_b);
            out.distance_to_b_prime.push_back(to_b_prime);
        }
    }
    return out;
}

std::optional<int> find_edge_partner(const BicliqueFamily& family, int i, int j, int through) {
    check_index(family, through);
    const VertexSet b = family[i].vertices;
    const VertexSet b_prime = family[j].vertices;
    const VertexSet b1 = family[through].vertices;
    for (int w = 0; w < family.size(); ++w) {
        if (w == i || w == j || w == through) continue;
        const VertexSet s = family[w].vertices;
        if (s.intersects(b) && s.intersects(b_prime) && s.intersects(b1)) return w;
    }
    return std::nullopt;
}

}  // namespace biclab
