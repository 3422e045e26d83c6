#include "oracles.hpp"

#include "rpt/error.hpp"

#include <doctest.h>

using namespace rpt;

TEST_CASE("fractions parse exactly")
{
    CHECK(parse_fraction("1/4") == Fraction(1, 4));
    CHECK(parse_fraction("0.05") == Fraction(1, 20));
    CHECK(parse_fraction("1e-3") == Fraction(1, 1000));
    CHECK(parse_fraction("3") == Fraction(3));
    CHECK(parse_fraction("2/4") == Fraction(1, 2));
    CHECK(to_string(Fraction(1, 18)) == "1/18");
    CHECK(to_string(Fraction(2)) == "2/1");
    CHECK_THROWS_AS(parse_fraction("abc"), ParseError);
    CHECK_THROWS_AS(parse_fraction("1/0"), ParseError);
    CHECK_THROWS_AS(parse_fraction(""), ParseError);
}

TEST_CASE("fraction rounding helpers")
{
    CHECK(ceil_times(Fraction(1, 3), 7) == 3);
    CHECK(floor_times(Fraction(1, 3), 7) == 2);
    CHECK(ceil_of(Fraction(6, 3)) == 2);
    CHECK(floor_of(Fraction(-1, 2)) == -1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("vertex set algebra")
{
    VertexSet a = VertexSet::of(130, {0, 63, 64, 129});
    VertexSet b = VertexSet::of(130, {63, 100});
    CHECK(a.size() == 4);
    CHECK((a & b).size() == 1);
    CHECK((a | b).size() == 5);
    CHECK((a - b).size() == 3);
    CHECK((~a).size() == 126);
    CHECK(a.first() == 0);
    CHECK(a.next(65) == 129);
    CHECK(a.count_common(b) == 1);
    CHECK(VertexSet::full(130).size() == 130);
    CHECK(oracle::members(a) == a.to_vector());
}

TEST_CASE("edge-list parsing")
{
    Graph p3 = parse_edge_list("3\n0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK(! p3.adjacent(0, 2));

    Graph k1 = parse_edge_list("1");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    Graph k4 = parse_edge_list("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
    CHECK(k4 == Graph::complete(4));

    Graph commented = parse_edge_list("# header\n3 # order\n0 2\n");
    CHECK(commented.adjacent(0, 2));
}

TEST_CASE("edge-list errors name the line")
{
    auto message = [](const char * text) {
        try {
            parse_edge_list(text);
        }
        catch (const ParseError & e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("3\n0 1\n0 7\n").find("line 3") != std::string::npos);
    CHECK(message("3\n1 1\n").find("line 2") != std::string::npos);
    CHECK(message("3\n0 1\n1 0\n").find("line 3") != std::string::npos);
    CHECK_FALSE(message("x\n").empty());
}

TEST_CASE("graph6 round trip")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = oracle::random_graph(static_cast<int>(seed * 5), seed);
        CHECK(parse_graph6(to_graph6(g)) == g);
        CHECK(parse_graph(to_graph6(g)) == g);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
    CHECK(parse_graph("Bw") == Graph::complete(3));
}

TEST_CASE("complement")
{
    CHECK(complement(Graph::complete(4)) == Graph::empty(4));

    // C5 is self-complementary under i -> 2i mod 5.
    Graph c5 = oracle::cycle(5);
    Graph cc = complement(c5);
    CHECK(cc.edge_count() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            CHECK(c5.adjacent(i, j) == cc.adjacent((2 * i) % 5, (2 * j) % 5));

    Graph p3c = complement(parse_edge_list("3\n0 1\n1 2"));
    CHECK(p3c.edge_count() == 1);
    CHECK(p3c.adjacent(0, 2));
    CHECK(p3c.degree(1) == 0);
}

TEST_CASE("induced subgraphs")
{
    Graph c5 = oracle::cycle(5);
    for (int i = 0; i < 5; ++i) {
        auto sub = induced_subgraph(c5, VertexSet::of(5, {i, (i + 1) % 5}));
        CHECK(sub.graph == Graph::complete(2));
    }
    auto k3 = induced_subgraph(Graph::complete(4), VertexSet::of(4, {0, 1, 2}));
    CHECK(k3.graph == Graph::complete(3));
    CHECK(k3.to_host == std::vector<Vertex>{0, 1, 2});

    auto outer = induced_subgraph(oracle::petersen(), oracle::range(10, 0, 5));
    CHECK(outer.graph == c5);

    VertexSet local = VertexSet::of(3, {0, 2});
    auto sub = induced_subgraph(Graph::complete(6), VertexSet::of(6, {1, 3, 5}));
    CHECK(sub.lift(local, 6) == VertexSet::of(6, {1, 5}));
    CHECK(sub.lower(VertexSet::of(6, {3, 5})) == VertexSet::of(3, {1, 2}));
}

TEST_CASE("edge density")
{
    Graph c5 = oracle::cycle(5);
    CHECK(edge_density(c5, c5.vertices()) == Fraction(1, 2));
    CHECK(edge_density(c5, VertexSet::of(5, {3})) == 0);
    CHECK(edge_density(Graph::complete(4), Graph::complete(4).vertices()) == 1);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = oracle::random_graph(12, seed);
        Rng rng(seed + 100);
        VertexSet s(12);
        for (int v = 0; v < 12; ++v)
            if (rng.coin())
                s.insert(v);
        CHECK(edge_density(g, s) == oracle::density(g, s));
        CHECK(edges_within(g, s) == static_cast<std::size_t>(oracle::edges_in(g, s)));
        CHECK(max_degree_within(g, s) == oracle::max_deg(g, s, true));
        CHECK(max_non_degree_within(g, s) == oracle::max_deg(g, s, false));
    }
}

TEST_CASE("named patterns")
{
    CHECK(named_pattern("K3").labelled() == Graph::complete(3));
    CHECK(named_pattern("c5").labelled().edge_count() == 5);
    CHECK(named_pattern("P4").labelled().edge_count() == 3);
    CHECK(named_pattern("K1").size() == 1);
    CHECK_THROWS_AS(named_pattern("K9"), ParseError);
    Pattern p3 = named_pattern("P3");
    CHECK(p3.prefix(2).size() == 2);
}

TEST_CASE("induced copy counts")
{
    Graph c5 = oracle::cycle(5);
    CHECK(count_induced_copies(c5, named_pattern("K1")) == 5);
    CHECK(count_induced_copies(Graph::complete(3), named_pattern("K2")) == 6);
    CHECK(count_induced_copies(c5, named_pattern("P3")) == 10);
    CHECK(count_induced_copies(Graph::complete(3), named_pattern("P3")) == 0);
    CHECK(count_induced_copies(Graph::complete(6), named_pattern("K3")) == 120);
}

TEST_CASE("copies across parts")
{
    const int n = 7;
    std::vector<Edge> e;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 7; ++v)
            e.emplace_back(u, v);
    Graph kb(n, e);
    std::vector<VertexSet> parts{oracle::range(n, 0, 3), oracle::range(n, 3, 7)};
    CHECK(count_embeddings_into_parts(kb, named_pattern("K2"), parts) == 12);
    CHECK(count_embeddings_into_parts(Graph::empty(n), named_pattern("K2"), parts) == 0);

    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = oracle::random_graph(12, seed);
        Rng rng(seed);
        for (const char * name : {"K2", "P3", "K3", "C4"}) {
            Pattern h = named_pattern(name);
            std::vector<VertexSet> ps(static_cast<std::size_t>(h.size()), VertexSet(12));
            for (int v = 0; v < 12; ++v)
                ps[rng.below(static_cast<std::uint64_t>(h.size()))].insert(v);
            CHECK(count_embeddings_into_parts(g, h, ps) == oracle::count_into_parts(g, h, ps));
        }
    }
}

TEST_CASE("construction rejects bad edges")
{
    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), PreconditionError);
    std::vector<Edge> out{{0, 3}};
    CHECK_THROWS_AS(Graph(3, out), PreconditionError);
}
