#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "biclab/canonical.hpp"
#include "biclab/errors.hpp"
#include "biclab/generation.hpp"
#include "biclab/graph6.hpp"
#include "oracles.hpp"

using namespace biclab;

namespace {

/// Every labelled graph on n vertices.
std::vector<Graph> labelled_graphs(int n) {
    std::vector<Edge> slots;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) slots.emplace_back(u, v);
    }
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i) & 1U) edges.push_back(slots[i]);
        }
        out.push_back(Graph::from_edges(n, edges));
    }
    return out;
}

}  // namespace

TEST_SUITE("canonical") {
    TEST_CASE("canonical forms induce the same partition as the permutation minimum") {
        for (int n = 1; n <= 5; ++n) {
            std::map<CanonicalForm, std::string> by_form;
            std::map<std::string, CanonicalForm> by_code;
            for (const Graph& g : labelled_graphs(n)) {
                const CanonicalForm form = canonical_form(g);
                const std::string code = oracle::permutation_minimum_code(g);
                auto [a, fresh_a] = by_form.emplace(form, code);
                auto [b, fresh_b] = by_code.emplace(code, form);
                REQUIRE(a->second == code);
                REQUIRE(b->second == form);
            }
        }
    }

    TEST_CASE("canonical graph is a relabelling fixed point") {
        std::mt19937 rng(21);
        for (int trial = 0; trial < 300; ++trial) {
            const Graph g = oracle::random_graph(1 + trial % 16, 0.35, rng);
            const Graph c = canonical_graph(g);
            REQUIRE(canonical_graph(c) == c);
            REQUIRE(graph_from_canonical(canonical_form(g)) == c);
            REQUIRE(canonical_form(oracle::random_relabel(g, rng)) == canonical_form(g));
        }
    }

    TEST_CASE("labelling positions map g onto the canonical graph") {
        std::mt19937 rng(22);
        for (int trial = 0; trial < 100; ++trial) {
            const Graph g = oracle::random_graph(2 + trial % 12, 0.5, rng);
            const auto labeling = canonical_labeling(g);
            CHECK(g.relabeled(labeling.position) == graph_from_canonical(labeling.form));
        }
    }

    TEST_CASE("highly symmetric graphs") {
        std::mt19937 rng(23);
        for (const Graph& g : {named::complete(16), Graph(16), named::cycle(16), named::double_fan(14)}) {
            CHECK(canonical_form(oracle::random_relabel(g, rng)) == canonical_form(g));
        }
        // C6 and two disjoint triangles share degree sequence but not form
        const Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        CHECK_FALSE(is_isomorphic(named::cycle(6), two_triangles));
    }

    TEST_CASE("order limit") { CHECK_THROWS_AS(canonical_form(Graph(kMaxCanonicalOrder + 1)), CapabilityError); }
}

TEST_SUITE("generation") {
    TEST_CASE("known class counts") {
        const std::vector<std::size_t> expected{0, 1, 1, 2, 6, 21, 112, 853, 11117};
        for (int n = 1; n <= 8; ++n) CHECK(connected_graphs(n).size() == expected[n]);
    }

    TEST_CASE("brute force and augmentation agree") {
        for (int n = 1; n <= 6; ++n) {
            const auto brute = connected_graphs_brute_force(n);
            REQUIRE(brute.size() == connected_graphs(n).size());
            for (std::size_t i = 0; i < brute.size(); ++i) CHECK(brute[i] == connected_graphs(n)[i]);
        }
        const auto grown = connected_graphs_by_augmentation(connected_graphs(6));
        CHECK(grown == connected_graphs(7));
    }

    TEST_CASE("orbit sizes add up to the labelled connected counts") {
        for (int n = 1; n <= 7; ++n) {
            long factorial = 1;
            for (int i = 2; i <= n; ++i) factorial *= i;
            std::uint64_t total = 0;
            for (const Graph& g : connected_graphs(n)) {
                REQUIRE(is_connected(g));
                total += factorial / oracle::automorphism_count(g);
            }
            CHECK(total == oracle::labelled_connected_count(n));
        }
    }

    TEST_CASE("representatives are canonical, distinct and sorted") {
        for (int n = 1; n <= 7; ++n) {
            const auto& level = connected_graphs(n);
            for (std::size_t i = 0; i < level.size(); ++i) {
                REQUIRE(canonical_graph(level[i]) == level[i]);
                if (i > 0) REQUIRE(canonical_form(level[i - 1]) < canonical_form(level[i]));
            }
        }
    }

    TEST_CASE("unsupported orders") {
        CHECK_THROWS_AS(connected_graphs(0), CapabilityError);
        CHECK_THROWS_AS(connected_graphs(kMaxGenerationOrder + 1), CapabilityError);
    }
}
