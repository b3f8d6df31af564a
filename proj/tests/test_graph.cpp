#include <doctest.h>

#include <random>
#include <sstream>

#include "biclab/errors.hpp"
#include "biclab/graph.hpp"
#include "biclab/graph6.hpp"
#include "oracles.hpp"

using namespace biclab;

TEST_SUITE("vertex_set") {
    TEST_CASE("set algebra and ordered iteration") {
        VertexSet s{5, 1, 3};
        CHECK(s.size() == 3);
        CHECK(s.first() == 1);
        CHECK(s.to_vector() == std::vector<Vertex>{1, 3, 5});
        CHECK((s & VertexSet{3, 4}) == VertexSet{3});
        CHECK((s | VertexSet{0}) == VertexSet{0, 1, 3, 5});
        CHECK((s - VertexSet{1}) == VertexSet{3, 5});
        CHECK(VertexSet{1, 3}.is_subset_of(s));
        CHECK_FALSE(VertexSet{2}.intersects(s));
        CHECK(VertexSet::range(64).size() == 64);
    }

    TEST_CASE("lexicographic order compares sorted member lists") {
        CHECK(lex_less(VertexSet{0, 5}, VertexSet{1}));
        CHECK(lex_less(VertexSet{0, 1}, VertexSet{0, 1, 2}));
        CHECK_FALSE(lex_less(VertexSet{2}, VertexSet{2}));
    }
}

TEST_SUITE("graph") {
    TEST_CASE("construction validates rows") {
        CHECK_THROWS_AS(Graph(std::vector<VertexSet>{VertexSet{1}, VertexSet{}}), std::invalid_argument);
        CHECK_THROWS_AS(Graph(std::vector<VertexSet>{VertexSet{0}}), std::invalid_argument);
        CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::out_of_range);
        const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
        CHECK(g.size() == 2);
        CHECK(g.degree(1) == 2);
        CHECK(g.min_degree() == 1);
        CHECK(g.closed_neighbors(0) == VertexSet{0, 1});
    }

    TEST_CASE("named graphs") {
        CHECK(named::diamond().size() == 5);
        CHECK_FALSE(named::diamond().adjacent(2, 3));
        CHECK(named::gem().size() == 7);
        CHECK(named::gem().degree(4) == 4);
        CHECK(named::double_fan(3).order() == 5);
        CHECK(named::double_fan(3).size() == 7);
        CHECK(named::cycle(5).min_degree() == 2);
        CHECK(named::complete(5).size() == 10);
    }

    TEST_CASE("induced subgraphs and relabelling") {
        const Graph p = named::path(5);
        const Graph sub = p.induced(VertexSet{1, 2, 4});
        CHECK(sub == Graph::from_edges(3, {{0, 1}}));
        const std::vector<Vertex> perm{4, 3, 2, 1, 0};
        CHECK(p.relabeled(perm) == p);
        const Graph g = Graph::from_edges(3, {{0, 1}});
        const std::vector<Vertex> swap{2, 1, 0};
        CHECK(g.relabeled(swap) == Graph::from_edges(3, {{1, 2}}));
    }

    TEST_CASE("distances match Floyd-Warshall on random graphs") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const Graph g = oracle::random_graph(2 + trial % 12, 0.25, rng);
            const auto expected = oracle::floyd_warshall(oracle::adjacency(g));
            const auto got = distance_matrix(g);
            for (int u = 0; u < g.order(); ++u) {
                for (int v = 0; v < g.order(); ++v) {
                    const int e = expected[u][v] >= oracle::kInfinity ? -1 : expected[u][v];
                    REQUIRE(got[u][v] == e);
                    const auto d = distance(g, u, v);
                    REQUIRE(d.has_value() == (e >= 0));
                }
            }
            REQUIRE(is_connected(g) == oracle::connected(oracle::adjacency(g)));
        }
    }

    TEST_CASE("cut vertices match vertex-deletion brute force") {
        std::mt19937 rng(12);
        for (int trial = 0; trial < 300; ++trial) {
            const Graph g = oracle::random_graph(3 + trial % 8, 0.4, rng);
            if (!is_connected(g)) continue;
            bool has_cut = false;
            for (Vertex v = 0; v < g.order(); ++v) {
                has_cut = has_cut || !is_connected(g.induced(g.vertices() - VertexSet::single(v)));
            }
            const auto cut = find_cut_vertex(g);
            REQUIRE(cut.has_value() == has_cut);
            if (cut) CHECK_FALSE(is_connected(g.induced(g.vertices() - VertexSet::single(*cut))));
            CHECK(is_biconnected(g) == !has_cut);
        }
    }

    TEST_CASE("K1 and K2 count as 2-connected") {
        CHECK(is_biconnected(Graph(1)));
        CHECK(is_biconnected(named::complete(2)));
        CHECK_FALSE(is_biconnected(named::path(3)));
    }
}

TEST_SUITE("graph6") {
    TEST_CASE("hand-decoded strings") {
        CHECK(parse_graph6("@") == Graph(1));
        CHECK(parse_graph6("A_") == named::complete(2));
        CHECK(parse_graph6("A?") == Graph(2));
        CHECK(parse_graph6("Bw") == named::complete(3));
        // 'D' = 5 vertices; "?{" = 000000 111100: pairs (0,4) (1,4) (2,4) (3,4) set, two padding bits
        CHECK(parse_graph6("D?{") == Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
        CHECK(write_graph6(named::complete(3)) == "Bw");
        CHECK(write_graph6(Graph(1)) == "@");
    }

    TEST_CASE("optional header is accepted") { CHECK(parse_graph6(">>graph6<<A_") == named::complete(2)); }

    TEST_CASE("round trip on random graphs up to 64 vertices") {
        std::mt19937 rng(13);
        for (int n : {0, 1, 2, 5, 7, 12, 31, 62, 63, 64}) {
            for (int trial = 0; trial < 5; ++trial) {
                const Graph g = oracle::random_graph(n, 0.3, rng);
                const std::string text = write_graph6(g);
                REQUIRE(parse_graph6(text) == g);
                if (n >= 63) CHECK(text.substr(0, 1) == "~");
            }
        }
    }

    TEST_CASE("malformed input reports byte offsets") {
        try {
            parse_graph6("Bw!");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 2);
        }
        try {
            parse_graph6("B\x7f");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 1);
        }
        CHECK_THROWS_AS(parse_graph6(""), ParseError);
        CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);  // padding bits set
    }

    TEST_CASE("orders above 64 are a capability error") {
        const std::string big = "~?@@" + std::string(347, '?');  // 65 vertices
        CHECK_THROWS_AS(parse_graph6(big), CapabilityError);
    }

    TEST_CASE("line reader skips blanks and comments and numbers lines") {
        std::istringstream in("# header\n\nA_\r\n  Bw  \n");
        std::vector<Graph6Line> lines;
        for_each_graph6_line(in, [&](const Graph6Line& l) { lines.push_back(l); });
        REQUIRE(lines.size() == 2);
        CHECK(lines[0].line_number == 3);
        CHECK(lines[0].text == "A_");
        CHECK(lines[1].line_number == 4);
        CHECK(lines[1].text == "Bw");
    }
}
