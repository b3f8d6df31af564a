#include <doctest.h>

#include <set>

#include "biclab/biclique.hpp"
#include "biclab/canonical.hpp"
#include "biclab/errors.hpp"
#include "biclab/generation.hpp"
#include "biclab/graph6.hpp"
#include "biclab/recognition.hpp"
#include "fixture_io.hpp"
#include "oracles.hpp"

using namespace biclab;

namespace {

const Graph& crown() {
    static const Graph g = read_fixture("crown.g6").at(0);
    return g;
}

bool false_twin_free(const Graph& g) {
    const auto a = oracle::adjacency(g);
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (a[u] == a[v]) return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("recognition") {
    TEST_CASE("preimage search examples") {
        const auto k3 = search_preimage(named::complete(3), 8);
        REQUIRE(k3);
        CHECK(*k3 == named::complete(3));
        CHECK(is_isomorphic(biclique_graph(named::diamond()).first, named::complete(3)));
        CHECK_FALSE(search_preimage(crown(), 8));
        CHECK_FALSE(search_preimage(named::path(3), 8));
        const auto k2 = search_preimage(named::complete(2), 8);
        REQUIRE(k2);
        CHECK(is_isomorphic(*k2, named::path(4)));
    }

    TEST_CASE("bounds outside the supported regime") {
        CHECK_THROWS_AS(search_preimage(named::complete(3), kMaxPreimageOrder + 1), CapabilityError);
        CHECK_THROWS_AS(search_preimage(named::complete(3), 1), CapabilityError);
        CHECK_THROWS_AS(recognize(Graph::from_edges(3, {{0, 1}}), 8), DomainError);
    }

    TEST_CASE("verify_entry examples") {
        CatalogueEntry k3;
        k3.graph = named::complete(3);
        k3.classification = Classification::kBicliqueGraph;
        k3.preimage = named::complete(3);
        k3.max_h_order = 8;
        CHECK(verify_entry(k3));

        CatalogueEntry wrong = k3;
        wrong.preimage = named::path(4);
        CHECK_FALSE(verify_entry(wrong));

        const CatalogueEntry c = recognize(crown(), 8);
        CHECK(c.classification == Classification::kNotBicliqueGraph);
        REQUIRE(c.obstruction);
        CHECK(c.obstruction->check == Check::kTwinK2);
        CHECK(verify_entry(c));

        CatalogueEntry tampered = c;
        tampered.obstruction->check = Check::kP3DiamondGem;
        tampered.obstruction->witness = {0, 1, 2};
        CHECK_FALSE(verify_entry(tampered));
    }

    TEST_CASE("a prop_b3 failure alone never makes an entry negative") {
        const Graph kb = biclique_graph(parse_graph6("GB?H[W")).first;
        const CatalogueEntry with_preimage = recognize(kb, 8);
        CHECK(with_preimage.classification == Classification::kBicliqueGraph);
        CHECK(with_preimage.firing == std::vector<Check>{Check::kPropB3});
        CHECK(verify_entry(with_preimage));

        CatalogueEntry forged;
        forged.graph = kb;
        forged.classification = Classification::kNotBicliqueGraph;
        forged.obstruction = check_prop_b3(kb);
        forged.max_h_order = 8;
        CHECK_FALSE(verify_entry(forged));
    }

    TEST_CASE("small catalogue") {
        const auto entries = build_catalogue(4, 8);
        REQUIRE(entries.size() == 1 + 2 + 6);
        CHECK(entries[0].classification == Classification::kBicliqueGraph);
        int positives = 0;
        for (const auto& e : entries) {
            CHECK(verify_entry(e));
            CHECK(e.max_h_order == 8);
            positives += e.classification == Classification::kBicliqueGraph;
            if (e.graph.order() == 3) {
                const bool triangle = e.graph.size() == 3;
                CHECK(e.classification == (triangle ? Classification::kBicliqueGraph : Classification::kNotBicliqueGraph));
            }
        }
        CHECK(positives == 4);
    }

    TEST_CASE("twin-free hosts cover the same biclique graphs as all connected hosts") {
        constexpr int kBound = 8;
        constexpr int kMaxKb = 6;
        const auto hosts = twin_free_hosts(kBound, kMaxKb);
        std::set<CanonicalForm> via_twin_free;
        for (const auto& level : hosts) {
            for (const Graph& h : level) {
                REQUIRE(false_twin_free(h));
                REQUIRE(oracle::connected(oracle::adjacency(h)));
                const auto family = enumerate_bicliques_bounded(h, kMaxKb);
                REQUIRE(family);
                via_twin_free.insert(canonical_form(intersection_graph(*family)));
            }
        }
        std::set<CanonicalForm> via_all;
        std::set<CanonicalForm> twin_free_all;
        for (int n = 2; n <= kBound; ++n) {
            for (const Graph& h : connected_graphs(n)) {
                const auto family = enumerate_bicliques_bounded(h, kMaxKb);
                if (!family) continue;
                via_all.insert(canonical_form(intersection_graph(*family)));
                if (false_twin_free(h)) twin_free_all.insert(canonical_form(h));
            }
        }
        CHECK(via_twin_free == via_all);
        std::set<CanonicalForm> listed;
        for (const auto& level : hosts) {
            for (const Graph& h : level) listed.insert(canonical_form(h));
        }
        CHECK(listed == twin_free_all);
    }

    TEST_CASE("closure consistency") {
        const PreimageIndex index(5, 7);
        const auto entries = build_catalogue(index);
        std::set<CanonicalForm> positives;
        for (const auto& e : entries) {
            if (e.classification == Classification::kBicliqueGraph) positives.insert(canonical_form(e.graph));
            REQUIRE_FALSE((e.preimage.has_value() && !e.firing.empty()));
        }
        for (int n = 2; n <= 7; ++n) {
            for (const Graph& h : connected_graphs(n)) {
                const Graph kb = biclique_graph(h).first;
                if (kb.order() >= 2 && kb.order() <= 5) REQUIRE(positives.count(canonical_form(kb)) == 1);
            }
        }
    }

    TEST_CASE("fixture preimages realise their graphs") {
        const auto pairs = read_annotated_fixture("biclique_graphs_upto6.g6");
        CHECK(pairs.size() == 23);
        std::set<CanonicalForm> seen;
        for (const auto& [g, h] : pairs) {
            INFO(write_graph6(g));
            CHECK(is_connected(h));
            CHECK(is_isomorphic(biclique_graph(h).first, g));
            CHECK(seen.insert(canonical_form(g)).second);
        }
    }

    TEST_CASE("runs are deterministic and independent of worker count") {
        const auto a = build_catalogue(5, 7, 1);
        const auto b = build_catalogue(5, 7, 4);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].graph == b[i].graph);
            CHECK(a[i].classification == b[i].classification);
            CHECK(a[i].preimage == b[i].preimage);
            CHECK(a[i].firing == b[i].firing);
        }
        CHECK(twin_free_hosts(7, 6, 1) == twin_free_hosts(7, 6, 3));
    }
}
