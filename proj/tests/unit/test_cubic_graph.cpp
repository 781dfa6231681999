#include "doctest.h"

#include <functional>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "trichain/cubic_graph.hpp"
#include "trichain/graph6.hpp"
#include "trichain/rng.hpp"
#include "trichain/chains.hpp"

using namespace trichain;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Io;
}

} // namespace

TEST_CASE("from_edge_list validates") {
    SUBCASE("K4 is the unique cubic graph on 4 vertices") {
        const auto g = named_graph(NamedGraph::K4);
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 6);
        CHECK(full_census(g).delta == 4);
    }
    SUBCASE("K33 is valid and triangle-free") {
        const auto g = named_graph(NamedGraph::K33);
        CHECK(full_census(g).delta == 0);
    }
    SUBCASE("degree deficit is NotCubic") {
        const std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
        CHECK(code_of([&] { CubicGraph::from_edge_list(4, edges); }) == ErrorCode::NotCubic);
    }
    SUBCASE("odd or tiny n is OddN") {
        CHECK(code_of([&] { CubicGraph::from_edge_list(5, {}); }) == ErrorCode::OddN);
        CHECK(code_of([&] { CubicGraph::from_edge_list(2, {}); }) == ErrorCode::OddN);
    }
    SUBCASE("self-loop and repeated edge are NotSimple") {
        std::vector<Edge> edges = {{0, 0}};
        CHECK(code_of([&] { CubicGraph::from_edge_list(4, edges); }) == ErrorCode::NotSimple);
        edges = {{0, 1}, {0, 1}};
        CHECK(code_of([&] { CubicGraph::from_edge_list(4, edges); }) == ErrorCode::NotSimple);
    }
}

TEST_CASE("has_edge on the named graphs") {
    CHECK(named_graph(NamedGraph::K4).has_edge(0, 1));
    CHECK_FALSE(named_graph(NamedGraph::K33).has_edge(0, 1));
    CHECK(named_graph(NamedGraph::Prism).has_edge(0, 3));
}

TEST_CASE("triangles_at") {
    const auto k4 = named_graph(NamedGraph::K4);
    const auto prism = named_graph(NamedGraph::Prism);
    const auto k33 = named_graph(NamedGraph::K33);
    for (Vertex v = 0; v < 4; ++v) CHECK(k4.triangles_at(v) == 3);
    for (Vertex v = 0; v < 6; ++v) CHECK(prism.triangles_at(v) == 1);
    for (Vertex v = 0; v < 6; ++v) CHECK(k33.triangles_at(v) == 0);
}

TEST_CASE("full_census on the named graphs") {
    SUBCASE("prism: two isolated triangles") {
        const auto census = full_census(named_graph(NamedGraph::Prism));
        CHECK(census == MotifCensus{2, 2, 0, 0, 0});
    }
    SUBCASE("K4 packing has n triangles") {
        const auto census = full_census(k4_packing(8));
        CHECK(census == MotifCensus{8, 0, 0, 2, 0});
    }
    SUBCASE("hypercube is triangle-free") {
        const auto census = full_census(named_graph(NamedGraph::Q3));
        CHECK(census == MotifCensus{0, 0, 0, 0, 8});
    }
}

TEST_CASE("census agrees with the brute-force oracle") {
    std::vector<CubicGraph> graphs = {
        named_graph(NamedGraph::K4),    named_graph(NamedGraph::K33),
        named_graph(NamedGraph::Prism), named_graph(NamedGraph::Q3),
        k4_packing(12),                 prism_packing(10),
        triangle_rich_start(10),        triangle_free_start(12),
    };
    Rng rng(7);
    for (int i = 0; i < 40; ++i) graphs.push_back(sample_uniform_cubic(12, rng));

    for (const auto& g : graphs) {
        const auto census = full_census(g);
        const auto expected = oracles::brute_census(g);
        CHECK(census == expected);
        CHECK(census.identities_hold(g.vertex_count()));
        // triangles_at summed over vertices counts every triangle three times
        std::int64_t tri_sum = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) tri_sum += g.triangles_at(v);
        CHECK(tri_sum == 3 * census.delta);
    }
}

TEST_CASE("vertex classification splits diamonds as expected") {
    // two K4s joined after removing one edge from each: gives two diamonds
    // bridged by two edges
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                               {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7},
                               {2, 6}, {3, 7}};
    const auto g = CubicGraph::from_edge_list(8, edges);
    std::vector<VertexClass> classes;
    const auto census = full_census(g, classes);
    CHECK(census == MotifCensus{4, 0, 2, 0, 0});
    CHECK(classes[0] == VertexClass::DiamondInternal);
    CHECK(classes[1] == VertexClass::DiamondInternal);
    CHECK(classes[2] == VertexClass::DiamondExternal);
    CHECK(classes[3] == VertexClass::DiamondExternal);
}

TEST_CASE("named graph shapes") {
    const auto prism = named_graph(NamedGraph::Prism);
    CHECK(prism.edge_count() == 9);
    const auto q3 = named_graph(NamedGraph::Q3);
    CHECK(q3.edge_count() == 12);
    CHECK(full_census(q3).delta == 0);
    CHECK(q3.has_edge(0, 1));
    CHECK(q3.has_edge(1, 3));
    CHECK(q3.has_edge(3, 2));
    CHECK(q3.has_edge(2, 0)); // a 4-cycle, so girth is 4
    const auto packing = k4_packing(8);
    for (Vertex v = 0; v < 8; ++v) CHECK(packing.triangles_at(v) == 3);
    CHECK_FALSE(packing.has_edge(0, 4));
    CHECK(code_of([&] { k4_packing(10); }) == ErrorCode::BadN);
}

TEST_CASE("deterministic start graphs") {
    for (Vertex n : {6u, 10u, 14u, 998u}) {
        // n = 2 mod 4: a prism (2 triangles) plus (n-6)/4 tetrahedra
        const auto rich = triangle_rich_start(n);
        CHECK(full_census(rich).delta == static_cast<std::int64_t>(n) - 4);
    }
    CHECK(full_census(triangle_rich_start(8)).delta == 8);
    for (Vertex n : {6u, 8u, 10u, 100u, 1000u}) {
        const auto tf = triangle_free_start(n);
        CHECK(full_census(tf).delta == 0);
    }
    CHECK(code_of([&] { triangle_free_start(4); }) == ErrorCode::BadN);
    for (Vertex n : {4u, 6u, 8u, 10u, 12u}) prism_packing(n).validate();
    CHECK(full_census(prism_packing(12)).delta == 4); // two prisms
}

TEST_CASE("graph6 encoding") {
    SUBCASE("K4 encodes to C~") {
        CHECK(to_graph6(named_graph(NamedGraph::K4)) == "C~");
        const auto decoded = from_graph6("C~");
        decoded.validate(); // all degrees 3
        CHECK(decoded == named_graph(NamedGraph::K4));
    }
    SUBCASE("round trips, including the long form") {
        Rng rng(11);
        std::vector<CubicGraph> graphs = {named_graph(NamedGraph::Prism),
                                          named_graph(NamedGraph::Q3), triangle_free_start(70),
                                          sample_uniform_cubic(64, rng)};
        for (const auto& g : graphs) {
            const auto text = to_graph6(g);
            CHECK(from_graph6(text) == g);
            if (g.vertex_count() > 62) CHECK(text[0] == '~');
        }
    }
    SUBCASE("independent bit-level decode matches") {
        Rng rng(13);
        for (int i = 0; i < 10; ++i) {
            const auto g = sample_uniform_cubic(20, rng);
            const auto text = to_graph6(g);
            // decode by hand: header byte then column-major upper triangle
            const Vertex n = static_cast<Vertex>(text[0] - 63);
            REQUIRE(n == 20);
            std::set<Edge> edges;
            std::size_t bit = 0;
            for (Vertex col = 1; col < n; ++col)
                for (Vertex row = 0; row < col; ++row, ++bit) {
                    const int byte = text.at(1 + bit / 6) - 63;
                    if (byte >> (5 - bit % 6) & 1) edges.insert({row, col});
                }
            std::set<Edge> expected;
            for (auto [u, v] : g.edges()) expected.insert({u, v});
            CHECK(edges == expected);
        }
    }
    SUBCASE("malformed inputs") {
        CHECK(code_of([] { from_graph6(""); }) == ErrorCode::MalformedGraph6);
        CHECK(code_of([] { from_graph6("C"); }) == ErrorCode::MalformedGraph6);
        CHECK(code_of([] { from_graph6("C~~"); }) == ErrorCode::MalformedGraph6);
        CHECK(code_of([] { from_graph6("C\x01"); }) == ErrorCode::MalformedGraph6);
        // structurally fine graph6, but not cubic: path-ish graph on 4 vertices
        CHECK(code_of([] { from_graph6("CU"); }) == ErrorCode::NotCubic);
    }
}

TEST_CASE("edge-list text round trip") {
    Rng rng(21);
    const auto g = sample_uniform_cubic(30, rng);
    std::stringstream buffer;
    write_edge_list(buffer, g);
    CHECK(read_edge_list(buffer) == g);

    std::stringstream bad("0 1\n0 2\n");
    CHECK_THROWS_AS(read_edge_list(bad), Error);
    std::stringstream junk("0 x\n");
    CHECK_THROWS_AS(read_edge_list(junk), Error);
}

TEST_CASE("edge-set keys round trip") {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto g = sample_uniform_cubic(10, rng);
        CHECK(graph_from_key(10, edge_set_key(g)) == g);
    }
    CHECK(code_of([] { edge_set_key(triangle_free_start(12)); }) == ErrorCode::BadN);
}
