#include "biclab/conjecture.hpp"

#include <algorithm>
#include <map>

#include "biclab/graph6.hpp"

namespace biclab {

std::string_view conjecture_name(Conjecture c) {
    switch (c) {
        case Conjecture::kSimplicialHelly: return "simplicial-helly";
        case Conjecture::kGeneralizedTwins: return "generalized-twins";
        case Conjecture::kHamiltonian: return "hamiltonian";
    }
    return "?";
}

std::string_view finding_verdict_name(FindingVerdict v) {
    switch (v) {
        case FindingVerdict::kConsistent: return "consistent";
        case FindingVerdict::kCounterexample: return "counterexample";
        case FindingVerdict::kNotApplicable: return "not_applicable";
    }
    return "?";
}

std::string_view clique_reading_name(CliqueReading r) {
    switch (r) {
        case CliqueReading::kContainedInClique: return "contained-in-clique";
        case CliqueReading::kContainedInMaximalClique: return "contained-in-maximal-clique";
        case CliqueReading::kInducesClique: return "induces-clique";
    }
    return "?";
}

std::optional<CliqueReading> clique_reading_from_name(std::string_view name) {
    for (auto r : {CliqueReading::kContainedInClique, CliqueReading::kContainedInMaximalClique,
                   CliqueReading::kInducesClique}) {
        if (clique_reading_name(r) == name) return r;
    }
    return std::nullopt;
}

bool is_simplicial(const Graph& g, Vertex v) { return is_clique(g, g.neighbors(v)); }

ConjectureFinding check_simplicial_helly(const Graph& g, bool certified_biclique_graph) {
    ConjectureFinding f{Conjecture::kSimplicialHelly, write_graph6(g), FindingVerdict::kConsistent, {}, {}};
    std::vector<Vertex> simplicial;
    std::vector<VertexSet> family;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (is_simplicial(g, v)) {
            simplicial.push_back(v);
            family.push_back(g.closed_neighbors(v));
        }
    }
    bool helly = true;
    if (family.size() <= 24) {
        if (auto bad = find_non_helly_subfamily(family)) {
            helly = false;
            for (int idx : *bad) f.witness.push_back(simplicial[idx]);
        }
    } else if (!is_helly_by_triangles(family)) {
        helly = false;
        f.note = "non-Helly by Berge's criterion";
    }
    if (!helly) {
        if (certified_biclique_graph) {
            f.verdict = FindingVerdict::kCounterexample;
        } else {
            f.note = "non-Helly, not a certified biclique graph";
        }
    }
    return f;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    const VertexSet px = p | x;
    Vertex pivot = px.first();
    for (Vertex u : px) {
        if ((p & g.neighbors(u)).size() > (p & g.neighbors(pivot)).size()) pivot = u;
    }
    for (Vertex v : p - g.neighbors(pivot)) {
        bron_kerbosch(g, r | VertexSet::single(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p.erase(v);
        x.insert(v);
    }
}

bool group_qualifies(const std::vector<VertexSet>& cliques, const Graph& g, VertexSet n, int i, CliqueReading reading) {
    switch (reading) {
        case CliqueReading::kInducesClique: return n.size() == i && is_clique(g, n);
        case CliqueReading::kContainedInClique:
            if (n.size() > i) return false;
            for (VertexSet q : cliques) {
                if (n.is_subset_of(q) && q.size() >= i) return true;
            }
            return false;
        case CliqueReading::kContainedInMaximalClique:
            for (VertexSet q : cliques) {
                if (n.is_subset_of(q) && q.size() == i) return true;
            }
            return false;
    }
    return false;
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.order() == 0) return out;
    bron_kerbosch(g, {}, g.vertices(), {}, out);
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return lex_less(a, b); });
    return out;
}

std::vector<TwinGroup> find_twin_groups(const Graph& g, int i_max, CliqueReading reading) {
    std::map<std::uint64_t, std::vector<Vertex>> classes;
    for (Vertex v = 0; v < g.order(); ++v) classes[g.neighbors(v).bits()].push_back(v);
    const auto cliques = maximal_cliques(g);

    std::vector<TwinGroup> out;
    for (const auto& [bits, members] : classes) {
        const VertexSet n(bits);
        const int top = std::min<int>(i_max, static_cast<int>(members.size()));
        for (int i = 2; i <= top; ++i) {
            if (group_qualifies(cliques, g, n, i, reading)) {
                out.push_back({std::vector<Vertex>(members.begin(), members.begin() + i), n});
            }
        }
    }
    return out;
}

ConjectureFinding check_generalized_twins(const Graph& g, int i_max, bool certified_biclique_graph,
                                          CliqueReading reading) {
    ConjectureFinding f{Conjecture::kGeneralizedTwins, write_graph6(g), FindingVerdict::kConsistent, {}, {}};
    if (g.order() == 4 && g.size() == 5) {
        f.verdict = FindingVerdict::kNotApplicable;
        f.note = "diamond excluded";
        return f;
    }
    const auto groups = find_twin_groups(g, i_max, reading);
    if (groups.empty()) return f;
    if (!certified_biclique_graph) {
        f.note = "twin structure present but graph is not a certified biclique graph";
        return f;
    }
    f.verdict = FindingVerdict::kCounterexample;
    f.witness = groups.front().members;
    f.note = "common neighbourhood";
    for (Vertex v : groups.front().neighborhood) f.note += " " + std::to_string(v);
    return f;
}

namespace {

class HamiltonSearch {
public:
    explicit HamiltonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::optional<std::vector<Vertex>> run() {
        path_.push_back(0);
        if (extend(VertexSet::range(n_) - VertexSet::single(0))) return path_;
        return std::nullopt;
    }

private:
    bool extend(VertexSet remaining) {
        const Vertex end = path_.back();
        if (remaining.empty()) return g_.adjacent(end, 0);
        // Every unvisited vertex needs two usable neighbours, and the
        // unvisited part plus the path end must stay connected.
        const VertexSet usable = remaining | VertexSet{end, 0};
        for (Vertex u : remaining) {
            if ((g_.neighbors(u) & usable).size() < 2) return false;
        }
        if (!is_connected(g_, remaining | VertexSet::single(end))) return false;
        for (Vertex next : g_.neighbors(end) & remaining) {
            path_.push_back(next);
            if (extend(remaining - VertexSet::single(next))) return true;
            path_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<Vertex> path_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Graph& g) {
    if (g.order() < 3) return std::nullopt;
    return HamiltonSearch(g).run();
}

ConjectureFinding check_hamiltonian(const Graph& g, bool certified_biclique_graph) {
    ConjectureFinding f{Conjecture::kHamiltonian, write_graph6(g), FindingVerdict::kConsistent, {}, {}};
    if (g.order() < 3) {
        f.verdict = FindingVerdict::kNotApplicable;
        f.note = "fewer than 3 vertices";
        return f;
    }
    if (auto cycle = find_hamiltonian_cycle(g)) {
        f.witness = *cycle;
        f.note = "hamiltonian";
        return f;
    }
    if (certified_biclique_graph) {
        f.verdict = FindingVerdict::kCounterexample;
        f.note = "certified biclique graph without a hamiltonian cycle";
    } else {
        f.note = "non-hamiltonian, not a certified biclique graph";
    }
    return f;
}

}  // namespace biclab
