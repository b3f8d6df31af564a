#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "biclab/vertex_set.hpp"

namespace biclab {

/// Indices into a family of sets.
using Subfamily = std::vector<int>;

bool pairwise_intersecting(std::span<const VertexSet> family, std::span<const int> members);
VertexSet common_intersection(std::span<const VertexSet> family, std::span<const int> members);

/// Three members that pairwise intersect with empty common intersection.
std::optional<std::array<int, 3>> find_non_helly_triple(std::span<const VertexSet> family);

/// Smallest pairwise-intersecting subfamily with empty intersection, by
/// enumerating every subfamily. Exponential in the family size; throws
/// std::length_error above 24 members.
std::optional<Subfamily> find_non_helly_subfamily(std::span<const VertexSet> family);

/// Berge's criterion: a family is Helly iff for every three points the
/// members containing at least two of them share a point.
bool is_helly_by_triangles(std::span<const VertexSet> family);

}  // namespace biclab
