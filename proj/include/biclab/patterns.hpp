#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biclab/graph.hpp"

namespace biclab {

/// An induced pattern whose degree-two vertices must keep degree two in the host.
struct ForbiddenPattern {
    std::string name;
    Graph pattern;
    VertexSet constrained;  // exactly the degree-two vertices of `pattern`
};

/// Triangle 0-1-2 with ears 3 on {0,1}, 4 on {1,2}, 5 on {2,0}.
Graph hajos_graph();
/// Diamond on 0,1,2,3 (2 and 3 non-adjacent, 0-1 the shared edge) with ears
/// 4 on {0,1}, 5 on {0,2}, 6 on {1,3}.
Graph rising_sun_graph();
/// K4 on 0..3 with ears 4 on {0,1}, 5 on {0,2}, 6 on {1,3}.
Graph x1_graph();

/// Hajós, rising sun and X1, in that order.
const std::vector<ForbiddenPattern>& forbidden_patterns();

/// pattern vertex i -> host vertex embedding[i]
using Embedding = std::vector<Vertex>;

/// An induced embedding of `pattern` into `host` in which every constrained
/// pattern vertex maps to a host vertex of degree exactly two. Deterministic:
/// pattern vertices are placed in BFS order, host candidates ascending.
std::optional<Embedding> find_constrained_embedding(const Graph& host, const ForbiddenPattern& pattern);

/// Re-checks an embedding: injective, induced, degree constraints respected.
bool is_constrained_embedding(const Graph& host, const ForbiddenPattern& pattern, const Embedding& embedding);

/// Whether `small` is isomorphic to a (not necessarily induced) subgraph of
/// `large`, by exhaustive injective edge-preserving search.
bool is_subgraph_embeddable(const Graph& small, const Graph& large);

}  // namespace biclab
