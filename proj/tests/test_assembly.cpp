#include "oracles.hpp"

#include "rpt/adversarial.hpp"
#include "rpt/assembly.hpp"
#include "rpt/error.hpp"

#include <doctest.h>

using namespace rpt;

namespace {

Fraction h_pow(int h, int e)
{
    Fraction x = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i)
        x *= h;
    return e < 0 ? 1 / x : x;
}

/// W_0 = clique on 0..big-1, W_1 = `small` isolated vertices.
PathPartition two_blocks(int big, int small, const Fraction & eps)
{
    const int n = big + small;
    return {{oracle::range(n, 0, big), oracle::range(n, big, n)}, eps};
}

bool removal_ok(const Graph & g, const RemovalResult & r)
{
    if (Fraction(r.removed.size()) > r.d)
        return false;
    std::vector<VertexSet> all{r.removed};
    for (const auto & p : r.partition.parts) {
        if (p.empty() || ! oracle::restricted(g, p, r.partition.eps))
            return false;
        all.push_back(p);
    }
    return oracle::disjoint_cover(all, g.vertices()) && BigInt(r.partition.parts.size()) <= r.partition.bound;
}

/// Unions of cliques with colour 0 left unclustered, flipped with noise/1000.
Graph clique_union(std::uint64_t seed, int n, int c, int noise)
{
    Rng rng(seed);
    std::vector<std::uint64_t> colour(static_cast<std::size_t>(n));
    for (auto & x : colour)
        x = rng.below(static_cast<std::uint64_t>(c));
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool adj = colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)] &&
                       colour[static_cast<std::size_t>(u)] > 0;
            if (rng.below(1000) < static_cast<std::uint64_t>(noise))
                adj = ! adj;
            if (adj)
                e.emplace_back(u, v);
        }
    return Graph(n, e);
}

TheoremOptions coarse()
{
    TheoremOptions o;
    o.lambda = Fraction(1, 3);
    o.delta_prime = Fraction(1, 5);
    o.eta_prime = Fraction(1, 48);
    return o;
}

} // namespace

TEST_CASE("path length and part bounds")
{
    CHECK(path_length(Fraction(1, 4)) == 16);
    CHECK(path_length(Fraction(1, 3)) == 12);
    CHECK(path_length(Fraction(2, 7)) == 14);
    CHECK(base_part_bound(Fraction(1, 4)) == 38400);
    CHECK(base_part_bound(Fraction(1, 7)) == 117600);
    CHECK(lengthening_part_bound(2, Fraction(1, 4), 16, 5) == 38400);
    CHECK(lengthening_part_bound(2, Fraction(1, 4), 15, 5) == 4 * (38400 + 5) - 5);
    CHECK(lengthening_part_bound(3, Fraction(1, 4), 14, 0) == 81 * 38400);
}

TEST_CASE("path-partitions: trivial and broken")
{
    Graph g = oracle::random_graph(15, 2);
    CHECK(verify_path_partition(g, {{g.vertices()}, Fraction(1, 4)}).ok);
    CHECK(verify_path_partition(g, {{}, Fraction(1, 4)}).clause == "partition");

    Graph ok = oracle::cliques({24, 1, 1});
    CHECK(verify_path_partition(ok, two_blocks(24, 2, Fraction(1, 4))).ok);

    // |W_0| = 11 |W_1|.
    Graph small = oracle::cliques({22, 1, 1});
    auto s = verify_path_partition(small, two_blocks(22, 2, Fraction(1, 4)));
    CHECK_FALSE(s.ok);
    CHECK(s.clause == "sizes");

    // Vertex 24 sees half of W_0, so the tail is not tight to it.
    std::vector<Edge> e;
    for (int u = 0; u < 24; ++u)
        for (int v = u + 1; v < 24; ++v)
            e.emplace_back(u, v);
    for (int u = 0; u < 12; ++u)
        e.emplace_back(u, 24);
    Graph loose(26, e);
    auto t = verify_path_partition(loose, two_blocks(24, 2, Fraction(1, 4)));
    CHECK_FALSE(t.ok);
    CHECK(t.clause == "tightness");
    CHECK(t.detail.find("vertex 24") != std::string::npos);

    // W_0 = C5 blown up is neither sparse nor dense.
    Graph c = oracle::cycle(26);
    CHECK(verify_path_partition(c, two_blocks(24, 2, Fraction(1, 100))).clause == "restricted");
}

TEST_CASE("base partitions")
{
    Graph g = oracle::random_graph(30, 9);
    PathPartition trivial{{g.vertices()}, Fraction(1, 4)};
    Graph k = Graph::complete(30);
    auto one = base_partition(k, {{k.vertices()}, Fraction(1, 4)}, Fraction(1, 4));
    CHECK(one.parts.size() == 1);

    // Twelve disjoint K5: the greedy cover and merge give restricted parts.
    std::vector<int> sizes(12, 5);
    Graph cl = oracle::cliques(sizes);
    auto r = base_partition(cl, {{cl.vertices()}, Fraction(1, 3)}, Fraction(1, 3));
    CHECK(verify_restricted_partition(cl, r).ok);
    CHECK(BigInt(r.parts.size()) <= base_part_bound(Fraction(1, 3)));
    for (const auto & p : r.parts)
        CHECK(oracle::restricted(cl, p, Fraction(1, 3)));
    CHECK(oracle::disjoint_cover(r.parts, cl.vertices()));

    auto rg = base_partition(g, trivial, Fraction(1, 4));
    CHECK(oracle::disjoint_cover(rg.parts, g.vertices()));
    for (const auto & p : rg.parts)
        CHECK(oracle::restricted(g, p, Fraction(1, 4)));

    // Small graphs: every part restricted, exhaustively checked.
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph s = oracle::random_graph(8, seed);
        auto b = base_partition(s, {{s.vertices()}, Fraction(1, 5)}, Fraction(1, 5));
        CHECK(oracle::disjoint_cover(b.parts, s.vertices()));
        for (const auto & p : b.parts)
            CHECK(oracle::restricted(s, p, Fraction(1, 5)));
    }

    CHECK_THROWS_AS(base_partition(g, {{}, Fraction(1, 4)}, Fraction(1, 4)), PreconditionError);
}

TEST_CASE("lengthen: at k = K it returns the base partition")
{
    const Fraction eps(1, 4);
    const int K = path_length(eps);
    auto key = lengthening_schedule(2, eps, {});
    // W_0..W_{K-1} cliques of 12·2 vertices, W_K two isolated vertices.
    std::vector<int> sizes(static_cast<std::size_t>(K), 24);
    sizes.push_back(1);
    sizes.push_back(1);
    Graph g = oracle::cliques(sizes);
    PathPartition p{{}, eps};
    for (int i = 0; i < K; ++i)
        p.W.push_back(oracle::range(g.order(), 24 * i, 24 * (i + 1)));
    p.W.push_back(oracle::range(g.order(), 24 * K, 24 * K + 2));
    // The tail is dense to no block, so tightness needs only sparse sides.
    REQUIRE(verify_path_partition(g, p).ok);
    auto r = lengthen(g, named_pattern("K2"), p, eps, key, 100);
    CHECK(r.removed.empty());
    CHECK(r.d == 100 * h_pow(2, -2 * K));
    CHECK(removal_ok(g, r));
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].k == K);
    CHECK(r.trace[0].m == 0);

    PathPartition wrong = p;
    wrong.eps = Fraction(1, 5);
    CHECK_THROWS_AS(lengthen(g, named_pattern("K2"), wrong, eps, key, 100), PreconditionError);
}

TEST_CASE("main theorem: practical defaults")
{
    for (Graph g : {Graph::empty(20), Graph::complete(20), oracle::random_graph(40, 3), oracle::petersen()}) {
        auto r = run_main_theorem(g, named_pattern("K3"), Fraction(1, 4), 5);
        CHECK(verify_removal(g, r).ok);
        CHECK(removal_ok(g, r));
        CHECK(r.d == 5);
        for (const auto & t : r.trace) {
            CHECK(t.budget == 5 * h_pow(3, -2 * t.k));
            CHECK(Fraction(t.removed) <= t.budget);
        }
    }
    // Edgeless graphs need no split.
    auto e = run_main_theorem(Graph::empty(30), named_pattern("K2"), Fraction(1, 4), 0);
    REQUIRE_FALSE(e.trace.empty());
    CHECK(e.trace.back().m == 0);
    CHECK(e.partition.parts.size() == 1);

    auto z = run_main_theorem(Graph::empty(0), named_pattern("K2"), Fraction(1, 4), 1);
    CHECK(z.partition.parts.empty());
}

TEST_CASE("main theorem: d at least |G|")
{
    Graph g = oracle::random_graph(25, 6);
    auto r = run_main_theorem(g, named_pattern("P3"), Fraction(1, 4), 25);
    CHECK(removal_ok(g, r));
    CHECK(Fraction(r.removed.size()) <= 25);
}

TEST_CASE("main theorem: domain")
{
    Graph g = oracle::random_graph(10, 1);
    CHECK_THROWS_AS(run_main_theorem(g, named_pattern("K2"), Fraction(1, 3), 1), PreconditionError);
    CHECK_THROWS_AS(run_main_theorem(g, named_pattern("K2"), Fraction(1, 4), -1), PreconditionError);
    CHECK_THROWS_AS(run_main_theorem(g, named_pattern("K1"), Fraction(1, 4), 1), PreconditionError);
}

TEST_CASE("main theorem: paper mode")
{
    // Complete bipartite K_{6,6} has no triangle.
    std::vector<Edge> e;
    for (int u = 0; u < 6; ++u)
        for (int v = 6; v < 12; ++v)
            e.emplace_back(u, v);
    Graph g(12, e);
    TheoremOptions paper;
    paper.mode = ParamMode::paper;
    auto r = run_main_theorem(g, named_pattern("K3"), Fraction(1, 4), 2, paper);
    CHECK(removal_ok(g, r));

    try {
        run_main_theorem(Graph::complete(12), named_pattern("K3"), Fraction(1, 4), 3, paper);
        CHECK(false);
    }
    catch (const PreconditionError & ex) {
        CHECK(std::string(ex.what()).find("constants infeasible at this scale") != std::string::npos);
    }
}

TEST_CASE("main theorem: hard instance with d = m")
{
    HardInstanceSpec spec;
    spec.pattern = named_pattern("K3");
    spec.n = 40;
    auto hard = generate_hard_graph(spec);
    auto r = run_main_theorem(hard.graph, named_pattern("K3"), Fraction(1, 4), spec.m);
    CHECK(removal_ok(hard.graph, r));
    CHECK(Fraction(r.removed.size()) <= spec.m);
}

TEST_CASE("main theorem: brute-force removal is never larger")
{
    // The least removal for the returned part count is at most what the run removed.
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        Graph g = oracle::random_graph(9, seed);
        auto r = run_main_theorem(g, named_pattern("K3"), Fraction(1, 4), 3);
        REQUIRE(removal_ok(g, r));
        const int parts = std::max<int>(1, static_cast<int>(r.partition.parts.size()));
        auto best = min_removal_oracle(g, parts, Fraction(1, 4));
        CHECK(best.size <= r.removed.size());
    }
}

TEST_CASE("main theorem: split branch on unions of cliques")
{
    int split = 0;
    for (std::uint64_t seed : {1, 4, 6, 7, 15}) {
        const int n = 60 + static_cast<int>(seed % 80);
        Graph g = clique_union(seed, n, 2 + static_cast<int>(seed % 5), seed % 4 == 0 ? 0 : 5);
        auto r = run_main_theorem(g, named_pattern("K2"), Fraction(1, 4), 0, coarse());
        CHECK(removal_ok(g, r));
        CHECK(r.removed.empty());
        int m = 0;
        for (const auto & t : r.trace)
            m = std::max(m, t.m);
        split += m > 0;
    }
    CHECK(split == 5);
}
