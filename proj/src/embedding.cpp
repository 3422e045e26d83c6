#include "rpt/embedding.hpp"
#include "rpt/error.hpp"
#include "rpt/random.hpp"

#include <numeric>

namespace rpt {

EmbeddingParams EmbeddingParams::uniform(int h, const Fraction & eps, const Fraction & delta)
{
    EmbeddingParams p;
    p.eps.assign(static_cast<std::size_t>(std::max(h - 1, 0)), eps);
    p.delta.assign(static_cast<std::size_t>(std::max(h - 1, 0)), delta);
    return p;
}

namespace {

void check_inputs(const Graph & g, const Pattern & h, std::span<const VertexSet> parts, const EmbeddingParams & p)
{
    const int hs = h.size();
    if (hs == 0)
        throw PreconditionError("pattern must have at least one vertex");
    if (static_cast<int>(parts.size()) != hs)
        throw PreconditionError("need exactly one part per pattern vertex");
    if (static_cast<int>(p.eps.size()) != hs - 1 || static_cast<int>(p.delta.size()) != hs - 1)
        throw PreconditionError("embedding parameters must have length h-1");
    for (std::size_t t = 0; t < p.eps.size(); ++t)
        if (! in_open_unit(p.eps[t]) || ! in_open_unit(p.delta[t]))
            throw PreconditionError("embedding parameters must lie in (0,1)");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty())
            throw PreconditionError("parts must be nonempty");
        if (parts[i].universe() != g.order())
            throw PreconditionError("part universe does not match the graph");
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].intersects(parts[j]))
                throw PreconditionError("parts must be disjoint");
    }
}

// ∏_{t=from}^{h-1} ε_t, with 1-based t.
Fraction eps_product(const EmbeddingParams & p, int from)
{
    Fraction r = 1;
    for (int t = from; t <= static_cast<int>(p.eps.size()); ++t)
        r *= p.eps[static_cast<std::size_t>(t - 1)];
    return r;
}

struct Embedder
{
    const Graph & g;
    const Pattern & h;
    const EmbeddingParams & p;

    // Recursion on the first k parts. Returns a witness in terms of the
    // current (shrunken) parts, or adds to `partial`.
    std::optional<TightPairWitness> run(std::vector<VertexSet> & cur, int k, BigInt & partial)
    {
        if (k == 1) {
            partial += cur[0].size();
            return std::nullopt;
        }
        const Fraction & e = p.eps[static_cast<std::size_t>(k - 2)];
        const Fraction & d = p.delta[static_cast<std::size_t>(k - 2)];
        const VertexSet & last = cur[static_cast<std::size_t>(k - 1)];

        VertexSet good = last;
        for (int i = 0; i < k - 1; ++i) {
            const VertexSet & di = cur[static_cast<std::size_t>(i)];
            const bool edge = h.adjacent(i, k - 1);
            const std::int64_t limit = ceil_times(e, di.size()) - 1;
            VertexSet bad(g.order());
            last.for_each([&](Vertex v) {
                int deg = edge ? g.degree_in(v, di) : g.non_degree_in(v, di);
                if (deg <= limit)
                    bad.insert(v);
            });
            // |P_i| > δ/(k-1) |D_k|
            if (Fraction(bad.size()) * (k - 1) > d * last.size())
                return TightPairWitness{i + 1, k, di, bad, edge ? TightnessMode::sparse : TightnessMode::dense, e};
            good -= bad;
        }

        std::optional<TightPairWitness> found;
        good.for_each([&](Vertex u) {
            if (found)
                return;
            std::vector<VertexSet> sub(static_cast<std::size_t>(k - 1), VertexSet(g.order()));
            for (int i = 0; i < k - 1; ++i) {
                const VertexSet & row = h.adjacent(i, k - 1) ? g.neighbors(u) : g.non_neighbors(u);
                sub[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i)] & row;
            }
            found = run(sub, k - 1, partial);
        });
        return found;
    }
};

} // namespace

bool verify_tight_witness(const Graph & g, const Pattern & h, std::span<const VertexSet> parts,
                          const EmbeddingParams & p, const TightPairWitness & w)
{
    const int hs = h.size();
    if (w.i < 1 || w.j <= w.i || w.j > hs)
        return false;
    const VertexSet & di = parts[static_cast<std::size_t>(w.i - 1)];
    const VertexSet & dj = parts[static_cast<std::size_t>(w.j - 1)];
    if (w.a.empty() || w.b.empty() || ! w.a.is_subset_of(di) || ! w.b.is_subset_of(dj))
        return false;
    const bool edge = h.adjacent(w.i - 1, w.j - 1);
    if (w.mode != (edge ? TightnessMode::sparse : TightnessMode::dense))
        return false;
    // Sparseness is measured at ε_{j-1}, the threshold used at level j.
    if (w.eps != p.eps[static_cast<std::size_t>(w.j - 2)])
        return false;
    if (! is_tight_to(g, w.a, w.b, w.eps, w.mode))
        return false;
    const Fraction prod = eps_product(p, w.j);
    if (Fraction(w.a.size()) < prod * di.size())
        return false;
    const Fraction bfloor = p.delta[static_cast<std::size_t>(w.j - 2)] / (w.j - 1) * prod * dj.size();
    return Fraction(w.b.size()) >= bfloor;
}

EmbeddingOutcome witness_or_count(const Graph & g, const Pattern & h, std::span<const VertexSet> parts,
                                  const EmbeddingParams & p)
{
    check_inputs(g, h, parts, p);
    const int hs = h.size();

    Embedder engine{g, h, p};
    std::vector<VertexSet> cur(parts.begin(), parts.end());
    BigInt partial = 0;
    if (auto w = engine.run(cur, hs, partial)) {
        if (! verify_tight_witness(g, h, parts, p, *w))
            throw VerificationFailure("tight-pair witness failed its size or tightness recheck");
        return *w;
    }

    CopyCount c;
    c.partial = partial;
    c.count = count_embeddings_into_parts(g, h, parts);
    c.bound = 1;
    for (int t = 1; t < hs; ++t)
        c.bound *= (1 - p.delta[static_cast<std::size_t>(t - 1)]) * pow(p.eps[static_cast<std::size_t>(t - 1)], static_cast<unsigned>(t));
    for (const VertexSet & d : parts)
        c.bound *= d.size();
    if (Fraction(c.partial) < c.bound || c.partial > c.count)
        throw VerificationFailure("copy count falls below the embedding bound");
    return c;
}

Fraction kappa_tight_pair(int h, const Fraction & eps)
{
    if (h < 1)
        throw PreconditionError("pattern must have at least one vertex");
    return pow(Fraction(1, 4 * h), static_cast<unsigned>(h)) * pow(eps, static_cast<unsigned>(h * (h - 1) / 2));
}

TightPairOutcome find_tight_pair(const Graph & g, const Pattern & h, const Fraction & eps,
                                 std::optional<std::uint64_t> shuffle_seed)
{
    const int hs = h.size(), n = g.order();
    if (hs < 1)
        throw PreconditionError("pattern must have at least one vertex");
    if (n < hs)
        throw PreconditionError("graph has fewer vertices than the pattern");
    if (! in_open_unit(eps))
        throw PreconditionError("eps must lie in (0,1)");

    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    if (shuffle_seed) {
        Rng rng(*shuffle_seed);
        rng.shuffle(order);
    }
    const int q = n / hs;
    std::vector<VertexSet> parts(static_cast<std::size_t>(hs), VertexSet(n));
    for (int t = 0; t < hs; ++t)
        for (int x = t * q; x < (t + 1) * q; ++x)
            parts[static_cast<std::size_t>(t)].insert(order[static_cast<std::size_t>(x)]);

    if (hs == 1) {
        // No pairs exist; every vertex is a copy.
        return ManyCopies{BigInt(n), kappa_tight_pair(1, eps) * n};
    }

    EmbeddingParams p = EmbeddingParams::uniform(hs, eps, Fraction(1, 2));
    EmbeddingOutcome out = witness_or_count(g, h, parts, p);
    if (auto * w = std::get_if<TightPairWitness>(&out)) {
        TightPair r;
        r.witness = *w;
        r.parts = parts;
        r.size_floor = pow(Fraction(1, 2 * hs), 2) * pow(eps, static_cast<unsigned>(hs - 1)) * n;
        r.size_guarantee = n >= 2 * hs;
        if (r.size_guarantee && (Fraction(w->a.size()) < r.size_floor || Fraction(w->b.size()) < r.size_floor))
            throw VerificationFailure("tight pair is smaller than its guaranteed size");
        return r;
    }

    ManyCopies m;
    m.count = count_induced_copies(g, h);
    m.threshold = kappa_tight_pair(hs, eps) * pow(Fraction(n), static_cast<unsigned>(hs));
    if (Fraction(m.count) < m.threshold)
        throw VerificationFailure("copy count is below the tight-pair threshold");
    return m;
}

BlowupCountCheck blowup_copy_bound_check(const Graph & g, const BlowupCertificate & cert, std::optional<int> exponent)
{
    const int hs = cert.pattern.size();
    if (hs < 1 || static_cast<int>(cert.parts.size()) != hs)
        throw PreconditionError("blowup needs one part per pattern vertex");
    if (! (cert.eps > 0 && cert.eps < Fraction(1, 2)))
        throw PreconditionError("blowup eps must lie in (0,1/2)");
    if (cert.c > pow(cert.eps, static_cast<unsigned>(hs)))
        throw PreconditionError("blowup c must be at most eps^h");
    if (! verify_blowup(g, cert))
        throw PreconditionError("blowup certificate does not verify");

    BlowupCountCheck r;
    r.count = count_embeddings_into_parts(g, cert.pattern, cert.parts);
    const int e = exponent.value_or(hs - 1);
    r.bound = pow(1 - cert.eps, static_cast<unsigned>(e)) * pow(cert.eps, static_cast<unsigned>(hs * (hs - 1) / 2));
    for (const VertexSet & d : cert.parts)
        r.bound *= d.size();
    r.holds = Fraction(r.count) >= r.bound;
    return r;
}

} // namespace rpt
