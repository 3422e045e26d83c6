#include "oracles.hpp"

#include "rpt/error.hpp"
#include "rpt/extraction.hpp"

#include <doctest.h>

using namespace rpt;

TEST_CASE("phi values")
{
    CHECK(phi(Fraction(1, 2), Fraction(1, 4)) == 2);
    CHECK(phi(Fraction(1, 2), Fraction(1, 2)) == 1);
    CHECK(phi(Fraction(1, 10), Fraction(1, 2)) == 7);
    for (int a = 1; a < 8; ++a)
        for (int b = 1; b < 8; ++b)
            CHECK(phi(Fraction(a, 8), Fraction(b, 8)) == oracle::phi(Fraction(a, 8), Fraction(b, 8)));
    CHECK_THROWS_AS(phi(Fraction(0), Fraction(1, 2)), PreconditionError);
    CHECK_THROWS_AS(phi(Fraction(1, 1000000), Fraction(1, 1000000), 1000), RangeError);
}

TEST_CASE("density recursion constants")
{
    CHECK(density_recursion_depth(Fraction(1, 4)) == 7);
    CHECK(density_step_eta(2, Fraction(1, 4)) == Fraction(1, 512));
}

TEST_CASE("density subsets: trivial inputs")
{
    auto b = ExtractionBudget::practical(3, Fraction(1, 4), Fraction(1, 4), 4);
    auto e = find_low_or_high_density_subset(Graph::empty(12), named_pattern("K3"), b);
    CHECK(e.set == Graph::empty(12).vertices());
    CHECK(e.low);
    auto k = find_low_or_high_density_subset(Graph::complete(12), named_pattern("K3"), b);
    CHECK(k.set == Graph::complete(12).vertices());
    CHECK_FALSE(k.low);
}

TEST_CASE("density subsets: random G(60, 1/2) postconditions")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = oracle::random_graph(60, seed);
        for (auto budget : {ExtractionBudget::practical(3, Fraction(1, 4), Fraction(1, 4), 6),
                            ExtractionBudget::paper(3, Fraction(1, 4), Fraction(1, 4))}) {
            auto s = find_low_or_high_density_subset(g, named_pattern("K3"), budget);
            REQUIRE_FALSE(s.set.empty());
            const Fraction d = oracle::density(g, s.set);
            CHECK((s.low ? d <= budget.eps1 : d >= 1 - budget.eps2));
            if (s.guarantee) {
                Fraction floor = 60;
                for (int i = 0; i < budget.depth; ++i)
                    floor *= budget.eta;
                CHECK(Fraction(s.set.size()) >= floor);
            }
        }
    }
}

TEST_CASE("trimming: examples")
{
    Graph g = oracle::random_graph(10, 4);
    CHECK(trim_to_size(g, g.vertices(), 10, TrimSide::low) == g.vertices());

    // K4 on 0..3 plus isolated 4.
    Graph k4 = oracle::cliques({4, 1});
    VertexSet out = trim_to_size(k4, k4.vertices(), 4, TrimSide::low);
    CHECK(out.size() == 4);
    CHECK(oracle::density(k4, out) <= oracle::density(k4, k4.vertices()));
    CHECK(out.contains(4));
}

TEST_CASE("trimming: random monotonicity")
{
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        Rng rng(seed);
        const int n = 3 + static_cast<int>(rng.below(14));
        Graph g = oracle::random_graph(n, seed, 1 + rng.below(3), 4);
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng.below(4) != 0)
                s.insert(v);
        if (s.size() < 2)
            continue;
        const int k = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(s.size() - 1)));
        const auto side = rng.coin() ? TrimSide::low : TrimSide::high;
        VertexSet out = trim_to_size(g, s, k, side);
        CHECK(out.size() == k);
        CHECK(out.is_subset_of(s));
        if (side == TrimSide::low)
            CHECK(oracle::density(g, out) <= oracle::density(g, s));
        else
            CHECK(oracle::density(g, out) >= oracle::density(g, s));
    }
}

TEST_CASE("exact-size restricted sets: trivial inputs")
{
    auto b = ExtractionBudget::practical(2, Fraction(1, 32), Fraction(1, 32), 4);
    auto one = extract_restricted_exact(Graph::empty(1), named_pattern("K2"), Fraction(1, 4), Fraction(1, 8), b);
    CHECK(one.set.size() == 1);
    auto e = extract_restricted_exact(Graph::empty(20), named_pattern("K2"), Fraction(1, 4), Fraction(1, 8), b);
    CHECK(e.set.size() == 3);
}

TEST_CASE("exact-size restricted sets: corpus postconditions")
{
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Rng rng(seed);
        const int n = 10 + static_cast<int>(rng.below(50));
        Graph g = oracle::random_graph(n, seed, 1 + rng.below(3), 4);
        const Fraction eps(1, 4), delta(1, 16);
        auto b = ExtractionBudget::practical(3, eps / 8, eps / 8, 4);
        auto r = extract_restricted_exact(g, named_pattern("K3"), eps, delta, b);
        CHECK(r.set.size() == ceil_times(delta, n));
        CHECK(oracle::restricted(g, r.set, eps));
        CHECK(2 * (n - r.set.size()) >= n);
    }
}

TEST_CASE("greedy and bounded search")
{
    Graph g = oracle::cliques({5, 5});
    VertexSet gr = greedy_restricted_subset(g, g.vertices(), 0);
    CHECK(oracle::restricted(g, gr, 0));
    CHECK(gr.size() >= 5);
    auto s = search_restricted_of_size(g, g.vertices(), 5, 0, 100000);
    REQUIRE(s);
    CHECK(s->size() == 5);
    CHECK(oracle::restricted(g, *s, 0));
    CHECK_FALSE(search_restricted_of_size(oracle::cycle(5), oracle::cycle(5).vertices(), 5, 0, 100000));
}

TEST_CASE("peel chains: examples")
{
    auto b = ExtractionBudget::practical(2, Fraction(1, 16), Fraction(1, 16), 4);
    auto none = peel_chain(Graph::empty(0), named_pattern("K2"), Fraction(1, 4), Fraction(9, 10), Fraction(1, 8), b);
    CHECK(none.peels.empty());
    CHECK(none.leftover.empty());
    // One peel already brings C5 under 9/10 of its size.
    auto tiny = peel_chain(oracle::cycle(5), named_pattern("K2"), Fraction(1, 4), Fraction(9, 10), Fraction(1, 8), b);
    CHECK(tiny.peels.size() == 1);
    CHECK(tiny.leftover.size() <= 4);

    Graph k = Graph::complete(20);
    auto chain = peel_chain(k, named_pattern("K2"), Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), b);
    CHECK(chain.peels.size() == 1);
    CHECK(chain.leftover.empty());
    CHECK(verify_peel_chain(k, chain, Fraction(1, 2), Fraction(1, 4)));

    CHECK_THROWS_AS(peel_chain(k, named_pattern("K2"), Fraction(1, 2), Fraction(1), Fraction(1, 4), b),
                    PreconditionError);
}

TEST_CASE("peel chains: invariants on random graphs")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Rng rng(seed);
        const int n = 10 + static_cast<int>(rng.below(40));
        Graph g = oracle::random_graph(n, seed, 1 + rng.below(3), 4);
        const Fraction eps(1, 4), eta(1, 4), delta(1, 16);
        auto chain = peel_chain(g, named_pattern("K3"), eps, eta, delta, ExtractionBudget::practical(3, eps / 8, eps / 8, 4));
        std::vector<VertexSet> parts = chain.peels;
        parts.push_back(chain.leftover);
        CHECK(oracle::disjoint_cover(parts, g.vertices()));
        for (const auto & p : chain.peels) {
            CHECK_FALSE(p.empty());
            CHECK(oracle::restricted(g, p, eps));
        }
        CHECK(Fraction(chain.leftover.size()) <= eta * n);
        CHECK(chain.phi_bound == oracle::phi(delta, eta));
        if (chain.within_phi)
            CHECK(static_cast<long>(chain.peels.size()) <= chain.phi_bound);
        CHECK(verify_peel_chain(g, chain, eps, eta));
    }
}

TEST_CASE("peel chains: the checker rejects broken chains")
{
    Graph g = oracle::random_graph(30, 2);
    const Fraction eps(1, 4), eta(1, 4);
    auto chain = peel_chain(g, named_pattern("K2"), eps, eta, Fraction(1, 16),
                            ExtractionBudget::practical(2, eps / 8, eps / 8, 4));
    REQUIRE(chain.peels.size() >= 2);
    auto overlap = chain;
    overlap.peels[1].insert(overlap.peels[0].first());
    CHECK_FALSE(verify_peel_chain(g, overlap, eps, eta));
    auto fat = chain;
    fat.leftover |= fat.peels.back();
    fat.peels.pop_back();
    if (Fraction(fat.leftover.size()) > eta * 30)
        CHECK_FALSE(verify_peel_chain(g, fat, eps, eta));
    auto mixed = chain;
    mixed.peels[0] |= mixed.peels[1];
    mixed.peels.erase(mixed.peels.begin() + 1);
    CHECK(verify_peel_chain(g, mixed, eps, eta) == oracle::restricted(g, mixed.peels[0], eps));
}
