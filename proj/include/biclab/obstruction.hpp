#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biclab/graph.hpp"

namespace biclab {

/// Necessary conditions satisfied by every biclique graph.
enum class Check {
    kP3DiamondGem,            // every induced P3 lies in a diamond or a gem
    kBiconnectivityMinDegree, // 2-connected, min degree >= 2 when n >= 3
    kTwinK2,                  // no twins whose neighbourhood is an edge (unless diamond)
    kForbiddenSubgraph,       // no Hajós / rising sun / X1 with degree-two vertices kept
    kDegree2Bound,            // fewer than n/2 degree-two vertices (unless K3 or diamond)
    kHellyDegree2,            // closed neighbourhoods of degree-two vertices are Helly
    kPropB3,                  // the gem-anchored non-adjacency condition
};

inline constexpr std::array kAllChecks{
    Check::kP3DiamondGem, Check::kBiconnectivityMinDegree, Check::kTwinK2, Check::kForbiddenSubgraph,
    Check::kDegree2Bound, Check::kHellyDegree2,            Check::kPropB3,
};

std::string_view check_name(Check check);

/// Whether a failure rules the graph out. False for prop_b3: it fails on
/// KB(H) for the 8-vertex H "GB?H[W", so it is reported but never decisive.
bool is_certifying(Check check);
std::optional<Check> check_from_name(std::string_view name);

enum class Verdict { kPass, kFail, kNotApplicable };
std::string_view verdict_name(Verdict verdict);

/// Outcome of one check. A failure carries a witness tuple whose meaning
/// depends on the check:
///   p3_diamond_gem            (u, v, w): the uncovered induced P3 u-v-w
///   biconnectivity_min_degree (v): a cut vertex, or a vertex of degree < 2
///   twin_k2                   (v1, v2): twins whose common neighbourhood is an edge
///   forbidden_subgraph        host images of the pattern vertices; `detail` names the pattern
///   degree2_bound             all degree-two vertices
///   helly_degree2             (v1, v2, v3): degree-two vertices whose N[.] pairwise meet but share nothing
///   prop_b3                   (v1, ..., v5, v)
struct CheckResult {
    Check check;
    Verdict verdict = Verdict::kPass;
    std::vector<Vertex> witness;
    std::string detail;
};

/// Whether u-v-w (u, w the ends) has a common neighbour of all three.
bool p3_in_diamond(const Graph& g, Vertex u, Vertex v, Vertex w);
/// (x, y) with u-x-y-w an induced P4 and v adjacent to all of it, so that
/// {u, v, w, x, y} is a gem with universal vertex v.
std::optional<std::pair<Vertex, Vertex>> gem_completion(const Graph& g, Vertex u, Vertex v, Vertex w);
/// Whether some induced diamond contains both of the non-adjacent vertices a, b.
bool share_diamond(const Graph& g, Vertex a, Vertex b);

CheckResult check_p3_diamond_gem(const Graph& g);
CheckResult check_biconnectivity_min_degree(const Graph& g);
CheckResult check_twin_k2(const Graph& g);
CheckResult check_forbidden_subgraphs(const Graph& g);
CheckResult check_degree2_bound(const Graph& g);
CheckResult check_helly_degree2(const Graph& g);
CheckResult check_prop_b3(const Graph& g);
CheckResult run_check(const Graph& g, Check check);

/// Re-derives a failing result's witness from scratch; false if it does not
/// demonstrate the violation. Passing results trivially re-validate.
bool witness_revalidates(const Graph& g, const CheckResult& result);

struct ObstructionReport {
    std::vector<CheckResult> checks;  // in kAllChecks order

    const CheckResult& operator[](Check check) const;
    /// True iff any applicable certifying check fails.
    bool cannot_be_biclique_graph() const;
    std::vector<Check> failing() const;
    std::vector<Check> certifying_failures() const;
};

/// Runs every check. Throws DomainError for disconnected input.
ObstructionReport classify(const Graph& g);

}  // namespace biclab
