#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "biclab/canonical.hpp"
#include "biclab/graph.hpp"
#include "biclab/obstruction.hpp"

namespace biclab {

/// Preimage orders are bounded by what canonical forms can encode.
inline constexpr int kMaxPreimageOrder = kMaxCanonicalOrder;
/// Default bound for the six-vertex catalogue.
inline constexpr int kDefaultMaxPreimageOrder = 8;

enum class Classification { kBicliqueGraph, kNotBicliqueGraph, kUnknownWithinBound };
std::string_view classification_name(Classification c);
std::optional<Classification> classification_from_name(std::string_view name);

struct CatalogueEntry {
    Graph graph{0};  // canonical representative
    Classification classification = Classification::kUnknownWithinBound;
    std::optional<Graph> preimage;           // set iff kBicliqueGraph
    std::optional<CheckResult> obstruction;  // set iff kNotBicliqueGraph: first failing certifying check
    int max_h_order = 0;                     // preimage search bound actually used
    std::vector<Check> firing;               // every check that fails, for auditing
};

/// Connected graphs on 2..max_order vertices with at most max_bicliques
/// bicliques and no false twins (distinct vertices with equal open
/// neighbourhoods); element n lists order n sorted by canonical form.
///
/// Deleting a false twin leaves the biclique graph unchanged, so every
/// biclique graph with a preimage of order <= max_order has one in this list.
/// Deleting any vertex never increases the number of bicliques, which makes
/// the class closed enough to grow: a member of order n arises from the
/// false-twin reduction of H - v (order >= (n-1)/2) for a non-cut vertex v.
std::vector<std::vector<Graph>> twin_free_hosts(int max_order, int max_bicliques, unsigned workers = 1);

/// First host of twin_free_hosts(max_h_order, |V(g)|), by order then
/// canonical form, with KB(H) isomorphic to g. Throws CapabilityError when
/// max_h_order is outside 2..kMaxPreimageOrder or g is too large to
/// canonicalise.
std::optional<Graph> search_preimage(const Graph& g, int max_h_order);

/// canonical form of KB(H) -> first H realising it, over twin_free_hosts(max_h_order, max_kb_order).
class PreimageIndex {
public:
    PreimageIndex(int max_kb_order, int max_h_order, unsigned workers = 1);

    std::optional<Graph> find(const Graph& g) const;
    int max_h_order() const { return max_h_order_; }
    int max_kb_order() const { return max_kb_order_; }
    const std::map<CanonicalForm, Graph>& entries() const { return first_preimage_; }

private:
    int max_kb_order_;
    int max_h_order_;
    std::map<CanonicalForm, Graph> first_preimage_;
};

/// One entry per connected graph on 2..max_g_order vertices, in generation
/// order. Throws std::logic_error if a graph both has a preimage and fails
/// a certifying obstruction check.
std::vector<CatalogueEntry> build_catalogue(int max_g_order, int max_h_order, unsigned workers = 1);
std::vector<CatalogueEntry> build_catalogue(const PreimageIndex& index, unsigned workers = 1);

/// Catalogue entry for a single connected graph: preimage search up to
/// max_h_order plus the full obstruction battery.
CatalogueEntry recognize(const Graph& g, int max_h_order);

/// Re-derives an entry's evidence independently of how it was found.
bool verify_entry(const CatalogueEntry& entry);

struct FixtureComparison {
    std::vector<Graph> missing;     // in the fixture, not classified positive
    std::vector<Graph> unexpected;  // classified positive, not in the fixture

    bool matches() const { return missing.empty() && unexpected.empty(); }
};

/// Set comparison of the positive entries with `fixture` under canonical forms.
FixtureComparison compare_with_fixture(const std::vector<CatalogueEntry>& entries, const std::vector<Graph>& fixture);

}  // namespace biclab
