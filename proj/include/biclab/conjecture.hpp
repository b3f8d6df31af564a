#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biclab/graph.hpp"
#include "biclab/set_family.hpp"

namespace biclab {

enum class Conjecture { kSimplicialHelly, kGeneralizedTwins, kHamiltonian };
std::string_view conjecture_name(Conjecture c);

enum class FindingVerdict { kConsistent, kCounterexample, kNotApplicable };
std::string_view finding_verdict_name(FindingVerdict v);

/// Result of testing one conjecture on one graph. Only "consistent" is ever
/// claimed per graph; a counterexample carries its witness.
struct ConjectureFinding {
    Conjecture conjecture;
    std::string graph6;
    FindingVerdict verdict = FindingVerdict::kConsistent;
    std::vector<Vertex> witness;
    std::string note;
};

/// A vertex whose neighbourhood is a clique.
bool is_simplicial(const Graph& g, Vertex v);

/// Closed neighbourhoods of the simplicial vertices must form a Helly
/// family. Every subfamily is examined (up to 24 simplicial vertices; Berge's
/// criterion above that); the witness lists the simplicial vertices of a
/// smallest violating subfamily. Counterexample iff g is also a certified
/// biclique graph.
ConjectureFinding check_simplicial_helly(const Graph& g, bool certified_biclique_graph);

/// How "the common neighbourhood is contained in a K_i" is read.
enum class CliqueReading {
    kContainedInClique,         // N lies inside some complete subgraph on exactly i vertices
    kContainedInMaximalClique,  // N lies inside some maximal clique of size exactly i
    kInducesClique,             // N itself induces K_i
};
std::string_view clique_reading_name(CliqueReading r);
std::optional<CliqueReading> clique_reading_from_name(std::string_view name);

/// A class of i >= 2 vertices with equal open neighbourhoods whose common
/// neighbourhood meets the reading for K_i.
struct TwinGroup {
    std::vector<Vertex> members;
    VertexSet neighborhood;
};

/// All qualifying groups with 2 <= i <= i_max; for each twin class and each
/// i, the group is the i smallest members of the class.
std::vector<TwinGroup> find_twin_groups(const Graph& g, int i_max, CliqueReading reading);

/// Counterexample iff g is a certified biclique graph other than the diamond
/// and a qualifying twin group exists.
ConjectureFinding check_generalized_twins(const Graph& g, int i_max, bool certified_biclique_graph,
                                          CliqueReading reading = CliqueReading::kContainedInClique);

/// Exact backtracking search (fixed start vertex, degree and connectivity
/// pruning). Returns the cycle as a vertex sequence.
std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const Graph& g);

/// Not applicable below 3 vertices. Counterexample iff g is a certified
/// biclique graph without a Hamiltonian cycle.
ConjectureFinding check_hamiltonian(const Graph& g, bool certified_biclique_graph);

/// Maximal cliques (Bron–Kerbosch with pivoting).
std::vector<VertexSet> maximal_cliques(const Graph& g);

}  // namespace biclab
