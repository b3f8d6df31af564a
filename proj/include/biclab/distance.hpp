#pragma once

#include <optional>
#include <vector>

#include "biclab/biclique.hpp"

namespace biclab {

/// Minimum graph distance between a vertex of biclique i and one of biclique j
/// (0 when they intersect). Multi-source BFS from biclique i, stopping at the
/// first layer that touches biclique j. Throws std::out_of_range on bad indices.
int biclique_distance(const BicliqueFamily& family, int i, int j);

/// Two vertices, one per biclique, at distance biclique_distance(i, j).
std::pair<Vertex, Vertex> closest_pair(const BicliqueFamily& family, int i, int j);

/// floor((d + 1) / 2) + 1
constexpr int kb_distance_formula(int host_distance) { return (host_distance + 1) / 2 + 1; }

struct BicliqueDistanceReport {
    int b_index = 0;
    int b_prime_index = 0;
    int d_g = 0;            // distance between the bicliques in the host
    int d_kb = 0;           // distance between their vertices in KB(host)
    int formula_value = 0;  // kb_distance_formula(d_g)
    std::pair<Vertex, Vertex> closest_pair;

    bool holds() const { return d_kb == formula_value; }
};

/// One report per unordered pair i < j of distinct bicliques, in index order.
/// KB(g) is built once and searched with BFS from every vertex.
std::vector<BicliqueDistanceReport> verify_distance_formula(const Graph& g);
std::vector<BicliqueDistanceReport> verify_distance_formula(const BicliqueFamily& family, const Graph& kb);

/// Every biclique other than i and j within distance k-1 of both, where
/// k = biclique_distance(i, j) > 0.
struct WitnessSet {
    int k = 0;
    std::vector<int> witnesses;
    std::vector<int> distance_to_b;        // aligned with witnesses
    std::vector<int> distance_to_b_prime;  // aligned with witnesses

    /// At least k+1 witnesses, each within k-1 of both ends.
    bool satisfies_bound() const;
};

/// Exhaustive over the family. Throws DomainError when the pair intersects.
WitnessSet find_witnesses(const BicliqueFamily& family, int i, int j);

/// For disjoint bicliques i, j and a biclique `through` that contains an edge
/// with one end in each, a fourth biclique meeting all three.
std::optional<int> find_edge_partner(const BicliqueFamily& family, int i, int j, int through);

}  // namespace biclab
