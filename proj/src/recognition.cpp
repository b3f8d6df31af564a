#include "biclab/recognition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "biclab/biclique.hpp"
#include "biclab/errors.hpp"
#include "biclab/generation.hpp"
#include "biclab/graph6.hpp"
#include "biclab/parallel.hpp"

namespace biclab {

namespace {

void check_h_bound(int max_h_order) {
    if (max_h_order < 2 || max_h_order > kMaxPreimageOrder) {
        throw CapabilityError("preimage search supports bounds 2.." + std::to_string(kMaxPreimageOrder) + ", got " +
                              std::to_string(max_h_order));
    }
}

/// Biclique graph of h when it has at most `limit` vertices.
std::optional<Graph> bounded_biclique_graph(const Graph& h, int limit) {
    auto family = enumerate_bicliques_bounded(h, limit);
    if (!family) return std::nullopt;
    return intersection_graph(*family);
}

bool has_false_twins(const Graph& g) {
    std::vector<std::uint64_t> rows;
    for (Vertex v = 0; v < g.order(); ++v) rows.push_back(g.neighbors(v).bits());
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(rows.begin(), rows.end()) != rows.end();
}

/// Order-n hosts grown from t: every vertex of some set D gets a false twin,
/// then a new vertex joins all the twins and any subset of V(t) \ D.
void grow(const Graph& t, int n, int max_bicliques, std::vector<CanonicalForm>& out) {
    const int m = t.order();
    const int doubled = n - 1 - m;
    const VertexSet all = VertexSet::range(m);
    for (std::uint64_t d_bits = 0; d_bits < (std::uint64_t{1} << m); ++d_bits) {
        const VertexSet d(d_bits);
        if (d.size() != doubled) continue;
        std::vector<VertexSet> rows(n);
        for (Vertex x = 0; x < m; ++x) rows[x] = t.neighbors(x);
        const Vertex fresh = n - 1;
        Vertex copy = m;
        for (Vertex x : d) {
            for (Vertex y : t.neighbors(x)) {
                rows[copy].insert(y);
                rows[y].insert(copy);
            }
            rows[copy].insert(fresh);
            rows[fresh].insert(copy);
            ++copy;
        }
        const VertexSet free = all - d;
        for (std::uint64_t s = free.bits();; s = (s - 1) & free.bits()) {
            if (doubled > 0 || s != 0) {
                std::vector<VertexSet> r = rows;
                for (Vertex x : VertexSet(s)) {
                    r[x].insert(fresh);
                    r[fresh].insert(x);
                }
                Graph h(std::move(r));
                if (!has_false_twins(h) && enumerate_bicliques_bounded(h, max_bicliques)) {
                    out.push_back(canonical_form(h));
                }
            }
            if (s == 0) break;
        }
    }
}

CatalogueEntry make_entry(const Graph& g, std::optional<Graph> preimage, int max_h_order) {
    CatalogueEntry e;
    e.graph = g;
    e.max_h_order = max_h_order;
    const ObstructionReport report = classify(g);
    e.firing = report.failing();
    const std::vector<Check> decisive = report.certifying_failures();
    e.preimage = std::move(preimage);
    if (e.preimage && !decisive.empty()) {
        std::ostringstream msg;
        msg << "graph " << write_graph6(g) << " has preimage " << write_graph6(*e.preimage) << " but fails "
            << check_name(decisive.front());
        throw std::logic_error(msg.str());
    }
    if (e.preimage) {
        e.classification = Classification::kBicliqueGraph;
    } else if (!decisive.empty()) {
        e.classification = Classification::kNotBicliqueGraph;
        e.obstruction = report[decisive.front()];
    } else {
        e.classification = Classification::kUnknownWithinBound;
    }
    return e;
}

}  // namespace

std::vector<std::vector<Graph>> twin_free_hosts(int max_order, int max_bicliques, unsigned workers) {
    check_h_bound(max_order);
    std::vector<std::vector<Graph>> levels(max_order + 1);
    if (max_bicliques < 1) return levels;
    levels[2] = {Graph::from_edges(2, {{0, 1}})};
    for (int n = 3; n <= max_order; ++n) {
        std::vector<const Graph*> seeds;
        for (int m = n / 2; m < n; ++m) {
            for (const Graph& t : levels[m]) seeds.push_back(&t);
        }
        std::vector<std::vector<CanonicalForm>> found(seeds.size());
        parallel_for(seeds.size(), workers, [&](std::size_t i) { grow(*seeds[i], n, max_bicliques, found[i]); });
        std::set<CanonicalForm> forms;
        for (const auto& batch : found) forms.insert(batch.begin(), batch.end());
        for (const CanonicalForm& form : forms) levels[n].push_back(graph_from_canonical(form));
    }
    return levels;
}

std::string_view classification_name(Classification c) {
    switch (c) {
        case Classification::kBicliqueGraph: return "biclique-graph";
        case Classification::kNotBicliqueGraph: return "not-biclique-graph";
        case Classification::kUnknownWithinBound: return "unknown-within-bound";
    }
    return "?";
}

std::optional<Classification> classification_from_name(std::string_view name) {
    for (auto c : {Classification::kBicliqueGraph, Classification::kNotBicliqueGraph,
                   Classification::kUnknownWithinBound}) {
        if (classification_name(c) == name) return c;
    }
    return std::nullopt;
}

std::optional<Graph> search_preimage(const Graph& g, int max_h_order) {
    check_h_bound(max_h_order);
    if (g.order() > kMaxCanonicalOrder) {
        throw CapabilityError("preimage search compares canonical forms; graph has " + std::to_string(g.order()) +
                              " vertices");
    }
    if (g.order() == 0) return std::nullopt;
    const CanonicalForm target = canonical_form(g);
    const auto hosts = twin_free_hosts(max_h_order, g.order());
    for (const auto& level : hosts) {
        for (const Graph& h : level) {
            const auto kb = bounded_biclique_graph(h, g.order());
            if (kb && kb->order() == g.order() && canonical_form(*kb) == target) return h;
        }
    }
    return std::nullopt;
}

PreimageIndex::PreimageIndex(int max_kb_order, int max_h_order, unsigned workers)
    : max_kb_order_(max_kb_order), max_h_order_(max_h_order) {
    check_h_bound(max_h_order);
    if (max_kb_order < 1 || max_kb_order > kMaxCanonicalOrder) {
        throw CapabilityError("biclique graph orders above " + std::to_string(kMaxCanonicalOrder) +
                              " cannot be indexed");
    }
    for (const auto& level : twin_free_hosts(max_h_order, max_kb_order, workers)) {
        std::vector<CanonicalForm> forms(level.size());
        parallel_for(level.size(), workers, [&](std::size_t i) {
            forms[i] = canonical_form(*bounded_biclique_graph(level[i], max_kb_order));
        });
        for (std::size_t i = 0; i < level.size(); ++i) first_preimage_.try_emplace(forms[i], level[i]);
    }
}

std::optional<Graph> PreimageIndex::find(const Graph& g) const {
    if (g.order() > max_kb_order_) return std::nullopt;
    const auto it = first_preimage_.find(canonical_form(g));
    if (it == first_preimage_.end()) return std::nullopt;
    return it->second;
}

std::vector<CatalogueEntry> build_catalogue(const PreimageIndex& index, unsigned workers) {
    std::vector<Graph> graphs;
    for (int n = 2; n <= index.max_kb_order(); ++n) {
        const auto& level = connected_graphs(n);
        graphs.insert(graphs.end(), level.begin(), level.end());
    }
    std::vector<CatalogueEntry> entries(graphs.size());
    parallel_for(graphs.size(), workers,
                 [&](std::size_t i) { entries[i] = make_entry(graphs[i], index.find(graphs[i]), index.max_h_order()); });
    return entries;
}

CatalogueEntry recognize(const Graph& g, int max_h_order) {
    check_h_bound(max_h_order);
    require_connected_host(g);
    return make_entry(g, search_preimage(g, max_h_order), max_h_order);
}

std::vector<CatalogueEntry> build_catalogue(int max_g_order, int max_h_order, unsigned workers) {
    return build_catalogue(PreimageIndex(max_g_order, max_h_order, workers), workers);
}

bool verify_entry(const CatalogueEntry& entry) {
    const Graph& g = entry.graph;
    if (g.order() == 0 || !is_connected(g)) return false;
    switch (entry.classification) {
        case Classification::kBicliqueGraph: {
            if (!entry.preimage || entry.obstruction) return false;
            const Graph& h = *entry.preimage;
            if (h.order() < 2 || h.order() > entry.max_h_order || !is_connected(h)) return false;
            const auto family = enumerate_bicliques_bounded(h, kMaxOrder);
            return family && is_isomorphic(intersection_graph(*family), g);
        }
        case Classification::kNotBicliqueGraph: {
            if (!entry.obstruction || entry.preimage || !is_certifying(entry.obstruction->check)) return false;
            const CheckResult rerun = run_check(g, entry.obstruction->check);
            return rerun.verdict == Verdict::kFail && entry.obstruction->verdict == Verdict::kFail &&
                   witness_revalidates(g, *entry.obstruction);
        }
        case Classification::kUnknownWithinBound:
            if (entry.preimage || entry.obstruction) return false;
            return !classify(g).cannot_be_biclique_graph() && !search_preimage(g, entry.max_h_order);
    }
    return false;
}

FixtureComparison compare_with_fixture(const std::vector<CatalogueEntry>& entries, const std::vector<Graph>& fixture) {
    std::map<CanonicalForm, Graph> positive;
    for (const auto& e : entries) {
        if (e.classification == Classification::kBicliqueGraph) positive.emplace(canonical_form(e.graph), e.graph);
    }
    std::map<CanonicalForm, Graph> expected;
    for (const Graph& g : fixture) expected.emplace(canonical_form(g), g);

    FixtureComparison out;
    for (const auto& [form, g] : expected) {
        if (!positive.contains(form)) out.missing.push_back(g);
    }
    for (const auto& [form, g] : positive) {
        if (!expected.contains(form)) out.unexpected.push_back(g);
    }
    return out;
}

}  // namespace biclab
