#include "biclab/generation.hpp"

#include <array>
#include <set>
#include <mutex>

#include "biclab/canonical.hpp"
#include "biclab/errors.hpp"

namespace biclab {

namespace {

std::vector<Graph> to_sorted_graphs(const std::set<CanonicalForm>& forms) {
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const CanonicalForm& form : forms) out.push_back(graph_from_canonical(form));
    return out;
}

void check_order(int n) {
    if (n < 1 || n > kMaxGenerationOrder) {
        throw CapabilityError("graph generation supports orders 1.." + std::to_string(kMaxGenerationOrder) +
                              ", got " + std::to_string(n));
    }
}

}  // namespace

std::vector<Graph> connected_graphs_brute_force(int n) {
    check_order(n);
    std::vector<Edge> slots;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) slots.emplace_back(u, v);
    }
    std::set<CanonicalForm> seen;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<VertexSet> rows(n);
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i) & 1U) {
                rows[slots[i].first].insert(slots[i].second);
                rows[slots[i].second].insert(slots[i].first);
            }
        }
        Graph g(std::move(rows));
        if (is_connected(g)) seen.insert(canonical_form(g));
    }
    return to_sorted_graphs(seen);
}

std::vector<Graph> connected_graphs_by_augmentation(const std::vector<Graph>& smaller) {
    if (smaller.empty()) return {};
    const int base = smaller.front().order();
    std::set<CanonicalForm> seen;
    for (const Graph& g : smaller) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << base); ++mask) {
            seen.insert(canonical_form(g.with_vertex(VertexSet(mask))));
        }
    }
    return to_sorted_graphs(seen);
}

const std::vector<Graph>& connected_graphs(int n) {
    check_order(n);
    static std::array<std::once_flag, kMaxGenerationOrder + 1> once;
    static std::array<std::vector<Graph>, kMaxGenerationOrder + 1> cache;
    std::call_once(once[n], [n] {
        if (n <= kBruteForceGenerationLimit) {
            cache[n] = connected_graphs_brute_force(n);
        } else {
            cache[n] = connected_graphs_by_augmentation(connected_graphs(n - 1));
        }
    });
    return cache[n];
}

}  // namespace biclab
