#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "biclab/graph.hpp"

namespace biclab {

/// Largest order accepted by canonical_form; the code packs n(n-1)/2 <= 128 bits.
inline constexpr int kMaxCanonicalOrder = 16;

/// Relabelling-invariant encoding: equal iff the graphs are isomorphic.
struct CanonicalForm {
    int order = 0;
    // upper triangle of the canonically ordered adjacency matrix, graph6 pair
    // order, most significant bit of code[0] first
    std::array<std::uint64_t, 2> code{};

    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    std::vector<Vertex> position;  // vertex v lands at position[v] in the canonical graph
};

/// Exact canonical labelling by individualisation-refinement with
/// colour refinement at every node and orbit pruning from automorphisms
/// discovered along the way. Throws CapabilityError above kMaxCanonicalOrder.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// g relabelled into canonical order; isomorphic inputs give identical graphs.
Graph canonical_graph(const Graph& g);
Graph graph_from_canonical(const CanonicalForm& form);

/// Cheap invariants first, then canonical forms. Both graphs must be within
/// kMaxCanonicalOrder unless the invariants already differ.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace biclab
