#include "biclab/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "biclab/errors.hpp"

namespace biclab {

namespace {

using Coloring = std::vector<int>;

using Code = std::array<std::uint64_t, 2>;

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j, graph6 order

void set_pair(Code& code, int index) { code[index / 64] |= std::uint64_t{1} << (63 - index % 64); }
bool has_pair(const Code& code, int index) { return (code[index / 64] >> (63 - index % 64)) & 1U; }

void compress(Coloring& colors) {
    Coloring sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : colors) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
}

/// Iterated colour refinement; returns the number of cells. The new colour of
/// v is the rank of (old colour, neighbour counts per cell), which only splits
/// cells and never reorders them, so the result is invariant under relabelling.
int refine(const Graph& g, Coloring& colors) {
    const int n = g.order();
    int cells = n == 0 ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    while (true) {
        std::vector<VertexSet> members(cells);
        for (Vertex v = 0; v < n; ++v) members[colors[v]].insert(v);

        std::vector<std::vector<int>> signature(n);
        for (Vertex v = 0; v < n; ++v) {
            auto& sig = signature[v];
            sig.reserve(cells + 1);
            sig.push_back(colors[v]);
            for (int c = 0; c < cells; ++c) sig.push_back((g.neighbors(v) & members[c]).size());
        }
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });

        Coloring next(n);
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++rank;
            next[order[i]] = rank;
        }
        const int refined = n == 0 ? 0 : rank + 1;
        colors = std::move(next);
        if (refined == cells) return cells;
        cells = refined;
    }
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run() {
        Coloring start(n_, 0);
        std::vector<Vertex> path;
        visit(std::move(start), path);
        if (n_ == 0) return {};
        return {{n_, best_code_}, best_position_};
    }

private:
    void visit(Coloring colors, std::vector<Vertex>& path) {
        const int cells = refine(g_, colors);
        if (cells == n_) {
            leaf(colors);
            return;
        }
        std::vector<int> cell_size(cells, 0);
        for (int c : colors) ++cell_size[c];
        int target = 0;
        while (cell_size[target] == 1) ++target;

        std::vector<Vertex> explored;
        for (Vertex w = 0; w < n_; ++w) {
            if (colors[w] != target) continue;
            if (in_explored_orbit(w, explored, path)) continue;
            explored.push_back(w);

            Coloring child(n_);
            for (Vertex v = 0; v < n_; ++v) child[v] = 2 * colors[v] + (v == w ? 0 : 1);
            compress(child);
            path.push_back(w);
            visit(std::move(child), path);
            path.pop_back();
        }
    }

    void leaf(const Coloring& position) {
        Code code{};
        for (auto [u, v] : g_.edges()) {
            set_pair(code, pair_index(std::min(position[u], position[v]), std::max(position[u], position[v])));
        }
        if (!have_best_ || code < best_code_) {
            have_best_ = true;
            best_code_ = code;
            best_position_ = position;
            return;
        }
        if (code == best_code_) {
            // position^-1 of best composed with this leaf is an automorphism.
            std::vector<Vertex> best_inverse(n_);
            for (Vertex v = 0; v < n_; ++v) best_inverse[best_position_[v]] = v;
            std::vector<Vertex> automorphism(n_);
            for (Vertex v = 0; v < n_; ++v) automorphism[v] = best_inverse[position[v]];
            automorphisms_.push_back(std::move(automorphism));
        }
    }

    /// Whether w shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix the individualised path pointwise.
    bool in_explored_orbit(Vertex w, const std::vector<Vertex>& explored, const std::vector<Vertex>& path) const {
        if (explored.empty() || automorphisms_.empty()) return false;
        std::vector<Vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](Vertex v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& gamma : automorphisms_) {
            const bool fixes_path = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
            if (!fixes_path) continue;
            for (Vertex v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
        }
        const Vertex root = find(w);
        return std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return find(u) == root; });
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    Code best_code_{};
    std::vector<Vertex> best_position_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder) {
        throw CapabilityError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                              " vertices, got " + std::to_string(g.order()));
    }
    return Search(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) {
    const auto labeling = canonical_labeling(g);
    return g.relabeled(labeling.position);
}

Graph graph_from_canonical(const CanonicalForm& form) {
    const int n = form.order;
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (has_pair(form.code, pair_index(i, j))) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da(a.order());
    std::vector<int> db(b.order());
    for (Vertex v = 0; v < a.order(); ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace biclab
