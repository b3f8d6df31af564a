#pragma once

#include <vector>

#include "biclab/graph.hpp"

namespace biclab {

/// Orders up to this bound go through labelled brute force; above it the
/// vertex-augmentation generator is used.
inline constexpr int kBruteForceGenerationLimit = 6;
inline constexpr int kMaxGenerationOrder = 9;

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, sorted by canonical form. Results are computed once per order
/// and cached; the cache is safe to read from several threads.
/// Throws CapabilityError for n outside 1..kMaxGenerationOrder.
const std::vector<Graph>& connected_graphs(int n);

/// Labelled brute force: all 2^(n choose 2) graphs, connected ones kept,
/// deduplicated by canonical form. Sorted like connected_graphs.
std::vector<Graph> connected_graphs_brute_force(int n);

/// Adds one vertex with every nonempty neighbourhood to each connected graph
/// on n-1 vertices and deduplicates. Every connected graph has a non-cut
/// vertex, so this reaches all classes.
std::vector<Graph> connected_graphs_by_augmentation(const std::vector<Graph>& smaller);

}  // namespace biclab
