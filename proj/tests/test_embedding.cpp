#include "oracles.hpp"

#include "rpt/embedding.hpp"
#include "rpt/error.hpp"

#include <doctest.h>

using namespace rpt;

TEST_CASE("copies or witness: complete bipartite counts")
{
    std::vector<Edge> e;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 8; ++v)
            e.emplace_back(u, v);
    Graph g(8, e);
    std::vector<VertexSet> parts{oracle::range(8, 0, 3), oracle::range(8, 3, 8)};
    auto p = EmbeddingParams::uniform(2, Fraction(1, 2), Fraction(1, 2));
    auto out = witness_or_count(g, named_pattern("K2"), parts, p);
    REQUIRE(std::holds_alternative<CopyCount>(out));
    const auto & c = std::get<CopyCount>(out);
    CHECK(c.count == 15);
    CHECK(c.bound == Fraction(15, 4));
}

TEST_CASE("copies or witness: empty bipartite gives a sparse witness")
{
    std::vector<VertexSet> parts{oracle::range(8, 0, 3), oracle::range(8, 3, 8)};
    auto p = EmbeddingParams::uniform(2, Fraction(1, 2), Fraction(1, 2));
    auto out = witness_or_count(Graph::empty(8), named_pattern("K2"), parts, p);
    REQUIRE(std::holds_alternative<TightPairWitness>(out));
    const auto & w = std::get<TightPairWitness>(out);
    CHECK(w.i == 1);
    CHECK(w.j == 2);
    CHECK(w.a == parts[0]);
    CHECK(w.b == parts[1]);
    CHECK(w.mode == TightnessMode::sparse);
}

TEST_CASE("copies or witness: randomized differential check")
{
    int witnesses = 0, counts = 0;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        Rng rng(seed);
        const int hs = 2 + static_cast<int>(rng.below(2));
        Pattern h = hs == 2 ? (rng.coin() ? named_pattern("K2") : complement(named_pattern("K2")))
                            : (rng.coin() ? named_pattern("K3") : named_pattern("P3"));
        int n = 0;
        auto parts = oracle::random_parts(rng, h.size(), 12, n);
        Graph g = oracle::random_graph(n, seed, 1 + rng.below(7), 8);
        const Fraction eps(1 + static_cast<long>(rng.below(3)), 8);
        const Fraction delta(1 + static_cast<long>(rng.below(3)), 4);
        auto p = EmbeddingParams::uniform(h.size(), eps, delta);
        auto out = witness_or_count(g, h, parts, p);
        if (const auto * w = std::get_if<TightPairWitness>(&out)) {
            ++witnesses;
            CHECK(oracle::witness_ok(g, h, parts, p, *w));
        }
        else {
            ++counts;
            const auto & c = std::get<CopyCount>(out);
            CHECK(c.count == oracle::count_into_parts(g, h, parts));
            CHECK(c.bound == oracle::embedding_bound(p, parts));
            CHECK(Fraction(c.count) >= c.bound);
        }
    }
    CHECK(witnesses > 0);
    CHECK(counts > 0);
}

TEST_CASE("tight pairs in whole graphs")
{
    auto sparse = find_tight_pair(Graph::empty(10), named_pattern("K2"), Fraction(1, 2));
    REQUIRE(std::holds_alternative<TightPair>(sparse));
    CHECK(std::get<TightPair>(sparse).witness.mode == TightnessMode::sparse);
    CHECK(std::get<TightPair>(sparse).witness.b.size() >= 1);

    auto dense = find_tight_pair(Graph::complete(10), complement(named_pattern("K2")), Fraction(1, 2));
    REQUIRE(std::holds_alternative<TightPair>(dense));
    CHECK(std::get<TightPair>(dense).witness.mode == TightnessMode::dense);

    CHECK(kappa_tight_pair(2, Fraction(1, 2)) == Fraction(1, 128));
    CHECK(kappa_tight_pair(3, Fraction(1, 2)) == Fraction(1, 1728 * 8));

    auto many = find_tight_pair(Graph::complete(10), named_pattern("K2"), Fraction(1, 2));
    REQUIRE(std::holds_alternative<ManyCopies>(many));
    CHECK(std::get<ManyCopies>(many).count == 90);
    CHECK(std::get<ManyCopies>(many).threshold == Fraction(100, 128));
}

TEST_CASE("tight pairs: shuffled order still yields valid witnesses")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = oracle::random_graph(24, seed, 1, 12);
        Pattern h = named_pattern("K3");
        auto out = find_tight_pair(g, h, Fraction(1, 4), seed);
        if (const auto * tp = std::get_if<TightPair>(&out)) {
            auto p = EmbeddingParams::uniform(3, Fraction(1, 4), Fraction(1, 2));
            CHECK(oracle::witness_ok(g, h, tp->parts, p, tp->witness));
        }
        else
            CHECK(Fraction(std::get<ManyCopies>(out).count) >= std::get<ManyCopies>(out).threshold);
    }
}

TEST_CASE("blowup copy bound: examples")
{
    std::vector<Edge> e;
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 9; ++v)
            e.emplace_back(u, v);
    Graph g(9, e);
    std::vector<VertexSet> parts{oracle::range(9, 0, 4), oracle::range(9, 4, 9)};
    auto r = blowup_copy_bound_check(g, {parts, Fraction(1, 16), Fraction(1, 4), named_pattern("K2")});
    CHECK(r.holds);
    CHECK(r.count == 20);
    CHECK(r.bound == Fraction(3, 16) * 20);

    auto one = blowup_copy_bound_check(g, {{parts[0]}, Fraction(1, 4), Fraction(1, 4), named_pattern("K1")});
    CHECK(one.holds);
    CHECK(one.count == 4);
    CHECK(one.bound == 4);
}

TEST_CASE("blowup copy bound: randomized verified blowups")
{
    int verified = 0;
    for (std::uint64_t seed = 1; verified < 200 && seed < 2000; ++seed) {
        Rng rng(seed);
        const int hs = 2 + static_cast<int>(rng.below(2));
        Pattern h = hs == 2 ? (rng.coin() ? named_pattern("K2") : complement(named_pattern("K2")))
                            : (rng.coin() ? named_pattern("K3") : complement(named_pattern("P3")));
        int n = 0;
        auto parts = oracle::random_parts(rng, hs, 10, n);
        const Fraction eps = rng.coin() ? Fraction(1, 4) : Fraction(1, 8);
        Graph g = oracle::planted_blowup(rng, h, parts, n);
        Fraction c = 1;
        for (int i = 0; i < hs; ++i)
            c *= eps;
        BlowupCertificate cert{parts, c, eps, h};
        if (! verify_blowup(g, cert).ok) {
            CHECK_THROWS_AS(blowup_copy_bound_check(g, cert), PreconditionError);
            continue;
        }
        ++verified;
        auto r = blowup_copy_bound_check(g, cert);
        CHECK(r.holds);
        CHECK(r.count == oracle::count_into_parts(g, h, parts));
        Fraction bound = 1;
        for (int k = 0; k < hs - 1; ++k)
            bound *= 1 - eps;
        for (int k = 0; k < hs * (hs - 1) / 2; ++k)
            bound *= eps;
        for (const auto & d : parts)
            bound *= d.size();
        CHECK(r.bound == bound);
        CHECK(Fraction(r.count) >= bound);
    }
    CHECK(verified == 200);
}
