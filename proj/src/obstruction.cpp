#include "biclab/obstruction.hpp"

#include <algorithm>

#include "biclab/errors.hpp"
#include "biclab/patterns.hpp"
#include "biclab/set_family.hpp"

namespace biclab {

namespace {

constexpr std::array<std::string_view, kAllChecks.size()> kCheckNames{
    "p3_diamond_gem", "biconnectivity_min_degree", "twin_k2", "forbidden_subgraph",
    "degree2_bound",  "helly_degree2",             "prop_b3",
};

bool is_diamond(const Graph& g) { return g.order() == 4 && g.size() == 5; }
bool is_triangle(const Graph& g) { return g.order() == 3 && g.size() == 3; }

VertexSet degree_two_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 2) out.insert(v);
    }
    return out;
}

CheckResult pass(Check check) { return {check, Verdict::kPass, {}, {}}; }

CheckResult fail(Check check, std::vector<Vertex> witness, std::string detail = {}) {
    return {check, Verdict::kFail, std::move(witness), std::move(detail)};
}

bool is_induced_p3(const Graph& g, Vertex u, Vertex v, Vertex w) {
    return u != w && g.adjacent(u, v) && g.adjacent(v, w) && !g.adjacent(u, w);
}

/// Calls fn(u, v, w) for every induced P3 with centre v, ends u < w.
template <typename Fn>
bool any_induced_p3(const Graph& g, Fn&& fn) {
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto ends = g.neighbors(v).to_vector();
        for (std::size_t i = 0; i < ends.size(); ++i) {
            for (std::size_t j = i + 1; j < ends.size(); ++j) {
                if (!g.adjacent(ends[i], ends[j]) && fn(ends[i], v, ends[j])) return true;
            }
        }
    }
    return false;
}

/// The configuration forbidden for biclique graphs, tested on an explicit tuple.
bool is_b3_violation(const Graph& g, const std::vector<Vertex>& t) {
    if (t.size() != 6) return false;
    VertexSet s;
    for (Vertex x : t) {
        if (x < 0 || x >= g.order()) return false;
        s.insert(x);
    }
    if (s.size() != 6) return false;
    const Vertex v1 = t[0], v2 = t[1], v3 = t[2], v4 = t[3], v5 = t[4], v = t[5];
    if (!is_induced_p3(g, v1, v2, v3) || p3_in_diamond(g, v1, v2, v3)) return false;
    const bool gem = g.adjacent(v1, v4) && g.adjacent(v4, v5) && g.adjacent(v5, v3) && g.adjacent(v2, v4) &&
                     g.adjacent(v2, v5) && !g.adjacent(v1, v5) && !g.adjacent(v4, v3);
    if (!gem) return false;
    return !g.adjacent(v, v1) && !share_diamond(g, v, v1) && g.adjacent(v, v4);
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DomainError("obstruction checks need a connected graph");
}

}  // namespace

std::string_view check_name(Check check) { return kCheckNames[static_cast<std::size_t>(check)]; }

std::optional<Check> check_from_name(std::string_view name) {
    for (Check c : kAllChecks) {
        if (check_name(c) == name) return c;
    }
    return std::nullopt;
}

std::string_view verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::kPass: return "pass";
        case Verdict::kFail: return "fail";
        case Verdict::kNotApplicable: return "not_applicable";
    }
    return "?";
}

bool p3_in_diamond(const Graph& g, Vertex u, Vertex v, Vertex w) {
    return (g.neighbors(u) & g.neighbors(v) & g.neighbors(w)).size() > 0;
}

std::optional<std::pair<Vertex, Vertex>> gem_completion(const Graph& g, Vertex u, Vertex v, Vertex w) {
    const VertexSet xs = (g.neighbors(u) & g.neighbors(v)) - g.neighbors(w);
    const VertexSet ys = (g.neighbors(w) & g.neighbors(v)) - g.neighbors(u);
    for (Vertex x : xs) {
        const VertexSet partners = ys & g.neighbors(x);
        if (!partners.empty()) return std::pair{x, partners.first()};
    }
    return std::nullopt;
}

bool share_diamond(const Graph& g, Vertex a, Vertex b) {
    const VertexSet common = g.neighbors(a) & g.neighbors(b);
    for (Vertex x : common) {
        if (g.neighbors(x).intersects(common)) return true;
    }
    return false;
}

CheckResult check_p3_diamond_gem(const Graph& g) {
    require_connected(g);
    std::vector<Vertex> uncovered;
    any_induced_p3(g, [&](Vertex u, Vertex v, Vertex w) {
        if (p3_in_diamond(g, u, v, w) || gem_completion(g, u, v, w)) return false;
        uncovered = {u, v, w};
        return true;
    });
    if (!uncovered.empty()) return fail(Check::kP3DiamondGem, uncovered);
    return pass(Check::kP3DiamondGem);
}

CheckResult check_biconnectivity_min_degree(const Graph& g) {
    require_connected(g);
    if (auto cut = find_cut_vertex(g)) return fail(Check::kBiconnectivityMinDegree, {*cut}, "cut vertex");
    if (g.order() >= 3) {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (g.degree(v) < 2) return fail(Check::kBiconnectivityMinDegree, {v}, "degree below 2");
        }
    }
    return pass(Check::kBiconnectivityMinDegree);
}

CheckResult check_twin_k2(const Graph& g) {
    require_connected(g);
    if (is_diamond(g)) return {Check::kTwinK2, Verdict::kNotApplicable, {}, "graph is the diamond"};
    for (Vertex a = 0; a < g.order(); ++a) {
        const VertexSet na = g.neighbors(a);
        if (na.size() != 2) continue;
        const auto pair = na.to_vector();
        if (!g.adjacent(pair[0], pair[1])) continue;
        for (Vertex b = a + 1; b < g.order(); ++b) {
            if (g.neighbors(b) == na) return fail(Check::kTwinK2, {a, b});
        }
    }
    return pass(Check::kTwinK2);
}

CheckResult check_forbidden_subgraphs(const Graph& g) {
    require_connected(g);
    for (const ForbiddenPattern& pattern : forbidden_patterns()) {
        if (auto embedding = find_constrained_embedding(g, pattern)) {
            return fail(Check::kForbiddenSubgraph, *embedding, pattern.name);
        }
    }
    return pass(Check::kForbiddenSubgraph);
}

CheckResult check_degree2_bound(const Graph& g) {
    require_connected(g);
    const VertexSet two = degree_two_vertices(g);
    std::string counts = std::to_string(two.size()) + " of " + std::to_string(g.order());
    if (is_triangle(g) || is_diamond(g)) {
        return {Check::kDegree2Bound, Verdict::kNotApplicable, {}, counts + "; graph is K3 or the diamond"};
    }
    if (2 * two.size() >= g.order()) return fail(Check::kDegree2Bound, two.to_vector(), counts);
    return {Check::kDegree2Bound, Verdict::kPass, {}, counts};
}

CheckResult check_helly_degree2(const Graph& g) {
    require_connected(g);
    const auto two = degree_two_vertices(g).to_vector();
    std::vector<VertexSet> family;
    for (Vertex v : two) family.push_back(g.closed_neighbors(v));
    if (auto triple = find_non_helly_triple(family)) {
        return fail(Check::kHellyDegree2, {two[(*triple)[0]], two[(*triple)[1]], two[(*triple)[2]]});
    }
    return pass(Check::kHellyDegree2);
}

CheckResult check_prop_b3(const Graph& g) {
    require_connected(g);
    const int n = g.order();
    for (Vertex v2 = 0; v2 < n; ++v2) {
        for (Vertex v1 : g.neighbors(v2)) {
            for (Vertex v3 : g.neighbors(v2)) {
                if (!is_induced_p3(g, v1, v2, v3) || p3_in_diamond(g, v1, v2, v3)) continue;
                const VertexSet fours = (g.neighbors(v1) & g.neighbors(v2)) - g.neighbors(v3);
                const VertexSet fives = (g.neighbors(v3) & g.neighbors(v2)) - g.neighbors(v1);
                for (Vertex v4 : fours) {
                    for (Vertex v5 : fives & g.neighbors(v4)) {
                        const VertexSet gem{v1, v2, v3, v4, v5};
                        const VertexSet candidates = (g.neighbors(v4) - g.neighbors(v1)) - gem;
                        for (Vertex v : candidates) {
                            if (!share_diamond(g, v, v1)) return fail(Check::kPropB3, {v1, v2, v3, v4, v5, v});
                        }
                    }
                }
            }
        }
    }
    return pass(Check::kPropB3);
}

CheckResult run_check(const Graph& g, Check check) {
    switch (check) {
        case Check::kP3DiamondGem: return check_p3_diamond_gem(g);
        case Check::kBiconnectivityMinDegree: return check_biconnectivity_min_degree(g);
        case Check::kTwinK2: return check_twin_k2(g);
        case Check::kForbiddenSubgraph: return check_forbidden_subgraphs(g);
        case Check::kDegree2Bound: return check_degree2_bound(g);
        case Check::kHellyDegree2: return check_helly_degree2(g);
        case Check::kPropB3: return check_prop_b3(g);
    }
    throw std::invalid_argument("unknown check");
}

bool witness_revalidates(const Graph& g, const CheckResult& r) {
    if (r.verdict != Verdict::kFail) return true;
    const auto& w = r.witness;
    for (Vertex v : w) {
        if (v < 0 || v >= g.order()) return false;
    }
    switch (r.check) {
        case Check::kP3DiamondGem:
            return w.size() == 3 && is_induced_p3(g, w[0], w[1], w[2]) && !p3_in_diamond(g, w[0], w[1], w[2]) &&
                   !gem_completion(g, w[0], w[1], w[2]);
        case Check::kBiconnectivityMinDegree: {
            if (w.size() != 1 || g.order() < 3) return false;
            VertexSet rest = g.vertices();
            rest.erase(w[0]);
            return g.degree(w[0]) < 2 || !is_connected(g, rest);
        }
        case Check::kTwinK2: {
            if (w.size() != 2 || w[0] == w[1] || is_diamond(g)) return false;
            const VertexSet common = g.neighbors(w[0]);
            return common == g.neighbors(w[1]) && common.size() == 2 && is_clique(g, common);
        }
        case Check::kForbiddenSubgraph: {
            const auto& patterns = forbidden_patterns();
            const auto it = std::find_if(patterns.begin(), patterns.end(),
                                         [&](const ForbiddenPattern& p) { return p.name == r.detail; });
            return it != patterns.end() && is_constrained_embedding(g, *it, w);
        }
        case Check::kDegree2Bound: {
            if (is_triangle(g) || is_diamond(g)) return false;
            const VertexSet two = degree_two_vertices(g);
            return two.to_vector() == w && 2 * two.size() >= g.order();
        }
        case Check::kHellyDegree2: {
            if (w.size() != 3 || w[0] == w[1] || w[1] == w[2] || w[0] == w[2]) return false;
            for (Vertex v : w) {
                if (g.degree(v) != 2) return false;
            }
            const VertexSet a = g.closed_neighbors(w[0]);
            const VertexSet b = g.closed_neighbors(w[1]);
            const VertexSet c = g.closed_neighbors(w[2]);
            return a.intersects(b) && b.intersects(c) && a.intersects(c) && (a & b & c).empty();
        }
        case Check::kPropB3: return is_b3_violation(g, w);
    }
    return false;
}

const CheckResult& ObstructionReport::operator[](Check check) const {
    return checks.at(static_cast<std::size_t>(check));
}

bool is_certifying(Check check) { return check != Check::kPropB3; }

bool ObstructionReport::cannot_be_biclique_graph() const { return !certifying_failures().empty(); }

std::vector<Check> ObstructionReport::failing() const {
    std::vector<Check> out;
    for (const auto& r : checks) {
        if (r.verdict == Verdict::kFail) out.push_back(r.check);
    }
    return out;
}

std::vector<Check> ObstructionReport::certifying_failures() const {
    std::vector<Check> out;
    for (Check c : failing()) {
        if (is_certifying(c)) out.push_back(c);
    }
    return out;
}

ObstructionReport classify(const Graph& g) {
    require_connected(g);
    ObstructionReport report;
    for (Check c : kAllChecks) report.checks.push_back(run_check(g, c));
    return report;
}

}  // namespace biclab
