#include "biclab/set_family.hpp"

#include <bit>
#include <stdexcept>

namespace biclab {

bool pairwise_intersecting(std::span<const VertexSet> family, std::span<const int> members) {
    for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
            if (!family[members[x]].intersects(family[members[y]])) return false;
        }
    }
    return true;
}

VertexSet common_intersection(std::span<const VertexSet> family, std::span<const int> members) {
    VertexSet acc = VertexSet::range(kMaxOrder);
    for (int m : members) acc &= family[m];
    return acc;
}

std::optional<std::array<int, 3>> find_non_helly_triple(std::span<const VertexSet> family) {
    const int k = static_cast<int>(family.size());
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (!family[a].intersects(family[b])) continue;
            for (int c = b + 1; c < k; ++c) {
                if (family[a].intersects(family[c]) && family[b].intersects(family[c]) &&
                    (family[a] & family[b] & family[c]).empty()) {
                    return std::array<int, 3>{a, b, c};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Subfamily> find_non_helly_subfamily(std::span<const VertexSet> family) {
    const int k = static_cast<int>(family.size());
    if (k > 24) throw std::length_error("subfamily enumeration limited to 24 sets");
    std::optional<Subfamily> best;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        const int count = std::popcount(mask);
        if (count < 2 || (best && static_cast<int>(best->size()) <= count)) continue;
        Subfamily members;
        for (int i = 0; i < k; ++i) {
            if ((mask >> i) & 1U) members.push_back(i);
        }
        if (pairwise_intersecting(family, members) && common_intersection(family, members).empty()) {
            best = std::move(members);
        }
    }
    return best;
}

bool is_helly_by_triangles(std::span<const VertexSet> family) {
    VertexSet points;
    for (VertexSet s : family) points |= s;
    const auto pts = points.to_vector();
    for (std::size_t x = 0; x < pts.size(); ++x) {
        for (std::size_t y = x + 1; y < pts.size(); ++y) {
            for (std::size_t z = y + 1; z < pts.size(); ++z) {
                VertexSet acc = VertexSet::range(kMaxOrder);
                bool any = false;
                for (VertexSet s : family) {
                    const int hits = s.contains(pts[x]) + s.contains(pts[y]) + s.contains(pts[z]);
                    if (hits >= 2) {
                        acc &= s;
                        any = true;
                    }
                }
                if (any && acc.empty()) return false;
            }
        }
    }
    return true;
}

}  // namespace biclab
