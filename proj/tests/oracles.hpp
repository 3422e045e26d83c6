#pragma once

// Independent reference implementations for the tests. Each one works from
// the definitions with plain loops over Graph::adjacent and never calls the
// library routine it is compared against.

#include "rpt/embedding.hpp"
#include "rpt/graph.hpp"
#include "rpt/key_lemma.hpp"
#include "rpt/predicates.hpp"
#include "rpt/random.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

using namespace rpt;

inline Graph random_graph(int n, std::uint64_t seed, std::uint64_t num = 1, std::uint64_t den = 2)
{
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(num, den))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph from_pairs(int n, std::initializer_list<Edge> edges)
{
    std::vector<Edge> e(edges);
    return Graph(n, e);
}

inline Graph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return Graph(n, e);
}

/// Outer cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + std::min(i, (i + 2) % 5), 5 + std::max(i, (i + 2) % 5));
    }
    return Graph(10, e);
}

/// Each vertex gets one of c colours; same-colour pairs are adjacent, and
/// each pair flips with probability noise/1000.
inline Graph clustered(std::uint64_t seed, int n, int c, int noise)
{
    Rng rng(seed);
    std::vector<std::uint64_t> colour(static_cast<std::size_t>(n));
    for (auto & x : colour)
        x = rng.below(static_cast<std::uint64_t>(c));
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool adj = colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)];
            if (rng.below(1000) < static_cast<std::uint64_t>(noise))
                adj = ! adj;
            if (adj)
                e.emplace_back(u, v);
        }
    return Graph(n, e);
}

/// Disjoint cliques on consecutive blocks of the given sizes.
inline Graph cliques(const std::vector<int> & sizes)
{
    std::vector<Edge> e;
    int start = 0;
    for (int s : sizes) {
        for (int u = start; u < start + s; ++u)
            for (int v = u + 1; v < start + s; ++v)
                e.emplace_back(u, v);
        start += s;
    }
    return Graph(start, e);
}

inline VertexSet range(int universe, int from, int to)
{
    VertexSet s(universe);
    for (int v = from; v < to; ++v)
        s.insert(v);
    return s;
}

inline std::vector<Vertex> members(const VertexSet & s)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < s.universe(); ++v)
        if (s.contains(v))
            out.push_back(v);
    return out;
}

inline long edges_in(const Graph & g, const VertexSet & s)
{
    const auto m = members(s);
    long c = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            c += g.adjacent(m[i], m[j]);
    return c;
}

inline Fraction density(const Graph & g, const VertexSet & s)
{
    const long k = static_cast<long>(members(s).size());
    if (k <= 1)
        return 0;
    return Fraction(edges_in(g, s), k * (k - 1) / 2);
}

/// Largest number of neighbours (adjacent = true) or non-neighbours inside s.
inline int max_deg(const Graph & g, const VertexSet & s, bool adjacent)
{
    const auto m = members(s);
    int best = 0;
    for (Vertex u : m) {
        int d = 0;
        for (Vertex v : m)
            if (u != v && g.adjacent(u, v) == adjacent)
                ++d;
        best = std::max(best, d);
    }
    return best;
}

inline bool restricted(const Graph & g, const VertexSet & s, const Fraction & eps)
{
    const Fraction lim = eps * static_cast<long>(members(s).size());
    return max_deg(g, s, true) <= lim || max_deg(g, s, false) <= lim;
}

inline bool weakly_restricted(const Graph & g, const VertexSet & s, const Fraction & eps)
{
    const Fraction d = density(g, s);
    return d <= eps || d >= 1 - eps;
}

/// Every vertex of b has fewer than eps|a| neighbours (adjacent = true) or
/// non-neighbours in a.
inline bool tight_side(const Graph & g, const VertexSet & a, const VertexSet & b, const Fraction & eps, bool adjacent)
{
    const auto am = members(a);
    const Fraction lim = eps * static_cast<long>(am.size());
    for (Vertex v : members(b)) {
        int d = 0;
        for (Vertex u : am)
            d += g.adjacent(u, v) == adjacent;
        if (! (d < lim))
            return false;
    }
    return true;
}

/// Injective maps of every subset combination, checked pair by pair.
inline BigInt count_into_parts(const Graph & g, const Pattern & h, const std::vector<VertexSet> & parts)
{
    const int k = h.size();
    std::vector<std::vector<Vertex>> m;
    for (const auto & p : parts)
        m.push_back(members(p));
    std::vector<Vertex> pick(static_cast<std::size_t>(k));
    BigInt count = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == k) {
            ++count;
            return;
        }
        for (Vertex v : m[static_cast<std::size_t>(i)]) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = pick[static_cast<std::size_t>(j)] != v && g.adjacent(pick[static_cast<std::size_t>(j)], v) == h.adjacent(j, i);
            if (ok) {
                pick[static_cast<std::size_t>(i)] = v;
                rec(i + 1);
            }
        }
    };
    rec(0);
    return count;
}

/// Calls f on every subset of `items` with exactly k elements.
inline void for_each_subset(const std::vector<Vertex> & items, int k, int universe,
                            const std::function<void(const VertexSet &)> & f)
{
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            VertexSet s(universe);
            for (int i : idx)
                s.insert(items[static_cast<std::size_t>(i)]);
            f(s);
            return;
        }
        for (int i = start; i < static_cast<int>(items.size()); ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

/// All subpairs of every size at least ceil(c|a|), ceil(c|b|), with no
/// reduction to the minimum sizes.
inline bool full_pair(const Graph & g, const VertexSet & a, const VertexSet & b, const Fraction & c,
                      const Fraction & eps, bool adjacent)
{
    const auto am = members(a), bm = members(b);
    const int ka = static_cast<int>(ceil_of(c * static_cast<long>(am.size())));
    const int kb = static_cast<int>(ceil_of(c * static_cast<long>(bm.size())));
    bool ok = true;
    for (int sa = std::max(ka, 1); sa <= static_cast<int>(am.size()) && ok; ++sa)
        for_each_subset(am, sa, g.order(), [&](const VertexSet & a1) {
            if (! ok)
                return;
            for (int sb = std::max(kb, 1); sb <= static_cast<int>(bm.size()) && ok; ++sb)
                for_each_subset(bm, sb, g.order(), [&](const VertexSet & b1) {
                    if (! ok)
                        return;
                    long e = 0;
                    for (Vertex u : members(a1))
                        for (Vertex v : members(b1))
                            e += g.adjacent(u, v) == adjacent;
                    if (Fraction(e) < eps * sa * sb)
                        ok = false;
                });
        });
    return ok;
}

/// Least p with (1-δ)^p <= η by repeated multiplication.
inline long phi(const Fraction & delta, const Fraction & eta)
{
    Fraction x = 1;
    long p = 0;
    do {
        x *= 1 - delta;
        ++p;
    } while (x > eta);
    return p;
}

inline bool disjoint_cover(const std::vector<VertexSet> & parts, const VertexSet & within)
{
    VertexSet seen(within.universe());
    for (const auto & p : parts) {
        if (p.intersects(seen))
            return false;
        seen |= p;
    }
    return seen == within;
}

/// h consecutive blocks of random sizes in [1, max_size]; n receives the total.
inline std::vector<VertexSet> random_parts(Rng & rng, int h, int max_size, int & n)
{
    std::vector<int> sizes;
    n = 0;
    for (int i = 0; i < h; ++i) {
        sizes.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size))));
        n += sizes.back();
    }
    std::vector<VertexSet> parts;
    int start = 0;
    for (int s : sizes) {
        parts.push_back(range(n, start, start + s));
        start += s;
    }
    return parts;
}

/// Witness invariants from the definitions: b ⊆ D_j is sparse (edge) or
/// dense (non-edge) to a ⊆ D_i at ε_{j-1}, |a| >= ∏_{t>=j} ε_t |D_i| and
/// |b| >= δ_{j-1}/(j-1) ∏_{t>=j} ε_t |D_j|.
inline bool witness_ok(const Graph & g, const Pattern & h, const std::vector<VertexSet> & parts, const EmbeddingParams & p,
                const TightPairWitness & w)
{
    if (w.i < 1 || w.i >= w.j || w.j > h.size())
        return false;
    const VertexSet & di = parts[static_cast<std::size_t>(w.i - 1)];
    const VertexSet & dj = parts[static_cast<std::size_t>(w.j - 1)];
    if (w.a.empty() || w.b.empty() || ! w.a.is_subset_of(di) || ! w.b.is_subset_of(dj))
        return false;
    const bool edge = h.adjacent(w.i - 1, w.j - 1);
    const Fraction eps = p.eps[static_cast<std::size_t>(w.j - 2)];
    if (! tight_side(g, w.a, w.b, eps, edge))
        return false;
    Fraction prod = 1;
    for (int t = w.j; t < h.size(); ++t)
        prod *= p.eps[static_cast<std::size_t>(t - 1)];
    return Fraction(w.a.size()) >= prod * di.size() &&
           Fraction(w.b.size()) * (w.j - 1) >= p.delta[static_cast<std::size_t>(w.j - 2)] * prod * dj.size();
}

/// ∏(1-δ_t)ε_t^t ∏|D_i|.
inline Fraction embedding_bound(const EmbeddingParams & p, const std::vector<VertexSet> & parts)
{
    Fraction b = 1;
    for (std::size_t t = 1; t <= p.eps.size(); ++t) {
        Fraction e = 1;
        for (std::size_t k = 0; k < t; ++k)
            e *= p.eps[t - 1];
        b *= (1 - p.delta[t - 1]) * e;
    }
    for (const auto & d : parts)
        b *= d.size();
    return b;
}


/// Pairs across parts follow H, flipped with probability 1/20; pairs inside
/// a part are fair coins.
inline Graph planted_blowup(Rng & rng, const Pattern & h, const std::vector<VertexSet> & parts, int n)
{
    std::vector<int> owner(static_cast<std::size_t>(n));
    for (int i = 0; i < h.size(); ++i)
        parts[static_cast<std::size_t>(i)].for_each([&](Vertex v) { owner[static_cast<std::size_t>(v)] = i; });
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
            bool adj = a == b ? rng.coin() : h.adjacent(a, b);
            if (a != b && rng.below(20) == 0)
                adj = ! adj;
            if (adj)
                e.emplace_back(u, v);
        }
    return Graph(n, e);
}

/// Final-output clauses recomputed from the definitions.
inline bool key_output_ok(const Graph & g, const Pattern & h, const ParamSchedule & s, const KeyLemmaOutput & o,
               const Fraction & d)
{
    if (Fraction(o.S.size()) > d || o.A.size() != o.B.size())
        return false;
    std::vector<VertexSet> all{o.S};
    for (std::size_t i = 0; i < o.A.size(); ++i) {
        all.push_back(o.A[i]);
        all.push_back(o.B[i]);
    }
    for (const auto & c : o.C)
        all.push_back(c);
    if (! disjoint_cover(all, g.vertices()))
        return false;
    for (std::size_t i = 0; i < o.A.size(); ++i) {
        if (o.A[i].empty() || ! restricted(g, o.A[i], s.eps))
            return false;
        if (Fraction(o.B[i].size()) > s.eta * o.A[i].size())
            return false;
        if (! tight_side(g, o.A[i], o.B[i], s.theta, true) &&
            ! tight_side(g, o.A[i], o.B[i], s.theta, false))
            return false;
    }
    for (const auto & c : o.C)
        if (c.empty() || ! restricted(g, c, s.eps))
            return false;
    const int h2 = h.size() * (h.size() - 1) / 2;
    return static_cast<int>(o.A.size()) <= h2 && BigInt(static_cast<long>(o.C.size())) <= s.N;
}

} // namespace oracle
