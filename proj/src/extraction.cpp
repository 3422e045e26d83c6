#include "rpt/extraction.hpp"
#include "rpt/error.hpp"

#include <algorithm>
#include <numeric>

namespace rpt {

std::int64_t phi(const Fraction & delta, const Fraction & eta, std::int64_t max_p)
{
    if (! in_open_unit(delta) || ! in_open_unit(eta))
        throw PreconditionError("phi needs delta and eta in (0,1)");
    const Fraction base = 1 - delta;
    // Doubling then bisection keeps the exact powers to O(log p) of them.
    std::int64_t hi = 1;
    while (pow(base, static_cast<unsigned>(hi)) > eta) {
        if (hi > max_p)
            throw RangeError("phi exceeds " + std::to_string(max_p));
        hi *= 2;
    }
    std::int64_t lo = hi / 2; // (1-δ)^lo > η, or lo = 0
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (pow(base, static_cast<unsigned>(mid)) <= eta)
            hi = mid;
        else
            lo = mid;
    }
    if (hi > max_p)
        throw RangeError("phi exceeds " + std::to_string(max_p));
    return hi;
}

int density_recursion_depth(const Fraction & eps)
{
    if (eps <= 0)
        throw PreconditionError("eps must be positive");
    const Fraction target = 1 / (eps * eps);
    int s = 0;
    Fraction p = 1;
    while (p < target) {
        p *= Fraction(3, 2);
        ++s;
    }
    return std::max(s, 1);
}

Fraction density_step_eta(int h, const Fraction & eps)
{
    return Fraction(1, 2) * pow(Fraction(1, 2 * h), 2) * pow(eps / 4, static_cast<unsigned>(std::max(h - 1, 0)));
}

ExtractionBudget ExtractionBudget::paper(int h, const Fraction & eps1, const Fraction & eps2)
{
    const Fraction e = std::min(eps1, eps2);
    return {eps1, eps2, density_recursion_depth(e), density_step_eta(h, e)};
}

ExtractionBudget ExtractionBudget::practical(int h, const Fraction & eps1, const Fraction & eps2, int depth)
{
    if (depth < 1)
        throw PreconditionError("recursion depth must be at least 1");
    return {eps1, eps2, depth, density_step_eta(h, std::min(eps1, eps2))};
}

// --- Trimming ----------------------------------------------------------------

namespace {

// Removes vertices from s one at a time, always the one maximizing score(v, cur)
// (lowest id on ties), until |s| = k.
template <typename Score>
VertexSet greedy_delete(VertexSet s, int k, Score score)
{
    while (s.size() > k) {
        Vertex best = -1;
        long best_score = 0;
        s.for_each([&](Vertex v) {
            long sc = score(v, s);
            if (best < 0 || sc > best_score) {
                best = v;
                best_score = sc;
            }
        });
        s.erase(best);
    }
    return s;
}

} // namespace

VertexSet trim_to_size(const Graph & g, const VertexSet & s, int k, TrimSide side)
{
    if (k < 0 || k > s.size())
        throw PreconditionError("trim target exceeds the set size");
    if (side == TrimSide::low)
        return greedy_delete(s, k, [&](Vertex v, const VertexSet & cur) { return long{g.degree_in(v, cur)}; });
    return greedy_delete(s, k, [&](Vertex v, const VertexSet & cur) { return -long{g.degree_in(v, cur)}; });
}

// --- Low or high density ------------------------------------------------------

namespace {

struct Polar
{
    const Graph * g;
    const Graph * gc;
    const Pattern * h;
    const Pattern * hc;

    Polar flipped() const { return {gc, g, hc, h}; }
};

struct DensityRecursion
{
    int host_n;
    int h;

    // Largest subset reachable by greedy deletion on either side.
    DensitySubset best_effort(const Polar & x, const VertexSet & s, const Fraction & e1, const Fraction & e2) const
    {
        VertexSet low = s;
        while (low.size() > 1 && edge_density(*x.g, low) > e1)
            low = trim_to_size(*x.g, low, low.size() - 1, TrimSide::low);
        VertexSet high = s;
        while (high.size() > 1 && edge_density(*x.g, high) < 1 - e2)
            high = trim_to_size(*x.g, high, high.size() - 1, TrimSide::high);
        const bool high_ok = high.size() >= 2 && edge_density(*x.g, high) >= 1 - e2;
        if (high_ok && high.size() > low.size())
            return {high, false, false, 0};
        return {low, true, false, 0};
    }

    DensitySubset run(const Polar & x, const VertexSet & s, const Fraction & e1, const Fraction & e2, int depth) const
    {
        const Fraction d = edge_density(*x.g, s);
        if (d <= e1)
            return {s, true, true, 0};
        if (d >= 1 - e2)
            return {s, false, true, 0};
        if (depth <= 0 || s.size() < 2 * h)
            return best_effort(x, s, e1, e2);

        const Fraction e = std::min(e1, e2);
        InducedSubgraph sub = induced_subgraph(*x.g, s);
        TightPairOutcome tp = find_tight_pair(sub.graph, *x.h, e / 4);
        auto * pair = std::get_if<TightPair>(&tp);
        if (! pair)
            return best_effort(x, s, e1, e2);

        VertexSet a = sub.lift(pair->witness.a, host_n);
        VertexSet b = sub.lift(pair->witness.b, host_n);
        const bool sizes_ok = Fraction(std::min(a.size(), b.size())) >= 2 * density_step_eta(h, e) * s.size();

        DensitySubset r;
        if (pair->witness.mode == TightnessMode::sparse)
            r = sparse_step(x, a, b, e1, e2, depth);
        else {
            r = sparse_step(x.flipped(), a, b, e2, e1, depth);
            r.low = ! r.low;
        }
        r.guarantee = r.guarantee && sizes_ok;
        return r;
    }

    // b is (e/4)-sparse to a in x.g, with e = min(e1, e2).
    DensitySubset sparse_step(const Polar & x, const VertexSet & a, const VertexSet & b, const Fraction & e1,
                              const Fraction & e2, int depth) const
    {
        const Fraction e = std::min(e1, e2);
        const Graph & g = *x.g;
        const Fraction up = e1 * Fraction(3, 2);

        DensitySubset rb = run(x, b, up, e2, depth - 1);
        if (! rb.low)
            return rb;
        const VertexSet & b1 = rb.set;

        VertexSet a0(host_n);
        const Fraction cap = e / 2 * b1.size();
        a.for_each([&](Vertex v) {
            if (Fraction(g.degree_in(v, b1)) <= cap)
                a0.insert(v);
        });
        if (2 * a0.size() < a.size())
            throw VerificationFailure("fewer than half of A have few neighbours in B1");

        DensitySubset ra = run(x, a0, up, e2, depth - 1);
        if (! ra.low)
            return ra;

        const int k = std::min(ra.set.size(), b1.size());
        VertexSet a1 = trim_to_size(g, ra.set, k, TrimSide::low);
        VertexSet b1k = greedy_delete(b1, k, [&](Vertex v, const VertexSet & cur) {
            return long{g.degree_in(v, cur)} + long{g.degree_in(v, a1)};
        });

        const bool hyp = edge_density(g, a1) <= up && edge_density(g, b1k) <= up &&
                         Fraction(edges_between(g, a1, b1k)) <= e / 2 * k * k;
        VertexSet un = a1 | b1k;
        const bool union_ok = edge_density(g, un) <= e1;
        DensitySubset r;
        r.merges_checked = ra.merges_checked + rb.merges_checked;
        if (hyp) {
            if (! union_ok)
                throw VerificationFailure("merged set exceeds the density bound despite its hypotheses");
            ++r.merges_checked;
            r.set = un;
            r.low = true;
            r.guarantee = ra.guarantee && rb.guarantee;
            return r;
        }
        if (union_ok)
            return {un, true, false, r.merges_checked};
        DensitySubset fallback = best_effort(x, un, e1, e2);
        fallback.merges_checked = r.merges_checked;
        return fallback;
    }
};

} // namespace

DensitySubset find_low_or_high_density_subset(const Graph & g, const Pattern & h, const ExtractionBudget & budget)
{
    if (g.order() == 0)
        throw PreconditionError("graph must be nonempty");
    if (h.size() < 1)
        throw PreconditionError("pattern must have at least one vertex");
    if (budget.eps1 <= 0 || budget.eps2 <= 0)
        throw PreconditionError("density targets must be positive");

    Graph gc = complement(g);
    Pattern hc = complement(h);
    Polar x{&g, &gc, &h, &hc};
    DensityRecursion rec{g.order(), h.size()};
    DensitySubset r = rec.run(x, g.vertices(), budget.eps1, budget.eps2, budget.depth);

    const Fraction d = edge_density(g, r.set);
    if (r.set.empty() || (r.low ? d > budget.eps1 : d < 1 - budget.eps2))
        throw VerificationFailure("density subset fails its recheck");
    if (r.guarantee && Fraction(r.set.size()) < pow(budget.eta, static_cast<unsigned>(budget.depth)) * g.order())
        throw VerificationFailure("density subset is smaller than its guaranteed size");
    return r;
}

// --- Exact-size restricted sets -----------------------------------------------

VertexSet greedy_restricted_subset(const Graph & g, const VertexSet & s, const Fraction & eps)
{
    auto grow = [&](bool sparse) {
        std::vector<Vertex> order = s.to_vector();
        std::vector<int> key(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : order)
            key[static_cast<std::size_t>(v)] = sparse ? g.degree_in(v, s) : g.non_degree_in(v, s);
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex p, Vertex q) { return key[static_cast<std::size_t>(p)] < key[static_cast<std::size_t>(q)]; });

        VertexSet cur(g.order());
        std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
        int max_deg = 0;
        for (Vertex v : order) {
            const VertexSet & row = sparse ? g.neighbors(v) : g.non_neighbors(v);
            const int dv = row.count_common(cur);
            int new_max = std::max(max_deg, dv);
            cur.for_each([&](Vertex u) {
                if (row.contains(u))
                    new_max = std::max(new_max, deg[static_cast<std::size_t>(u)] + 1);
            });
            if (new_max > floor_times(eps, cur.size() + 1))
                continue;
            cur.for_each([&](Vertex u) {
                if (row.contains(u))
                    ++deg[static_cast<std::size_t>(u)];
            });
            deg[static_cast<std::size_t>(v)] = dv;
            max_deg = new_max;
            cur.insert(v);
        }
        return cur;
    };
    VertexSet sp = grow(true), de = grow(false);
    return de.size() > sp.size() ? de : sp;
}

namespace {

struct SizeSearch
{
    const Graph & g;
    bool sparse;
    int k;
    int limit;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<Vertex> cand;
    std::vector<int> deg;
    VertexSet cur;

    const VertexSet & row(Vertex v) const { return sparse ? g.neighbors(v) : g.non_neighbors(v); }

    bool run(std::size_t from)
    {
        if (cur.size() == k)
            return true;
        if (++nodes > budget)
            return false;
        for (std::size_t i = from; i < cand.size(); ++i) {
            if (static_cast<int>(cand.size() - i) < k - cur.size())
                return false;
            Vertex v = cand[i];
            const VertexSet & r = row(v);
            const int dv = r.count_common(cur);
            if (dv > limit)
                continue;
            bool ok = true;
            cur.for_each([&](Vertex u) {
                if (ok && r.contains(u) && deg[static_cast<std::size_t>(u)] + 1 > limit)
                    ok = false;
            });
            if (! ok)
                continue;
            cur.for_each([&](Vertex u) {
                if (r.contains(u))
                    ++deg[static_cast<std::size_t>(u)];
            });
            deg[static_cast<std::size_t>(v)] = dv;
            cur.insert(v);
            if (run(i + 1))
                return true;
            cur.erase(v);
            cur.for_each([&](Vertex u) {
                if (r.contains(u))
                    --deg[static_cast<std::size_t>(u)];
            });
            if (nodes > budget)
                return false;
        }
        return false;
    }
};

} // namespace

std::optional<VertexSet> search_restricted_of_size(const Graph & g, const VertexSet & s, int k,
                                                   const Fraction & eps, std::uint64_t budget)
{
    if (k < 0 || k > s.size())
        return std::nullopt;
    const int limit = static_cast<int>(floor_times(eps, k));
    for (bool sparse : {true, false}) {
        SizeSearch search{g, sparse, k, limit, budget, 0, s.to_vector(),
                          std::vector<int>(static_cast<std::size_t>(g.order()), 0), VertexSet(g.order())};
        std::vector<int> key(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : search.cand)
            key[static_cast<std::size_t>(v)] = sparse ? g.degree_in(v, s) : g.non_degree_in(v, s);
        std::stable_sort(search.cand.begin(), search.cand.end(),
                         [&](Vertex p, Vertex q) { return key[static_cast<std::size_t>(p)] < key[static_cast<std::size_t>(q)]; });
        if (search.run(0))
            return search.cur;
    }
    return std::nullopt;
}

ExactRestricted extract_restricted_exact(const Graph & g, const Pattern & h, const Fraction & eps,
                                         const Fraction & delta, const ExtractionBudget & budget,
                                         std::uint64_t search_budget)
{
    const int n = g.order();
    if (n < 1)
        throw PreconditionError("graph must be nonempty");
    if (! (delta > 0 && delta < Fraction(1, 4)))
        throw PreconditionError("delta must lie in (0,1/4)");
    if (! in_open_unit(eps))
        throw PreconditionError("eps must lie in (0,1)");
    const int k = static_cast<int>(ceil_times(delta, n));

    auto accept = [&](const VertexSet & t) {
        return t.size() == k && is_restricted(g, t, eps) && (n < 2 || 2 * (n - t.size()) >= n);
    };

    ExactRestricted out;
    {
        ExtractionBudget b = budget;
        b.eps1 = b.eps2 = eps / 8;
        DensitySubset s = find_low_or_high_density_subset(g, h, b);
        const int two_k = static_cast<int>(ceil_times(2 * delta, n));
        if (s.set.size() >= two_k) {
            VertexSet trimmed = trim_to_size(g, s.set, two_k, s.low ? TrimSide::low : TrimSide::high);
            if (is_weakly_restricted(g, trimmed, eps / 4)) {
                VertexSet t = extract_restricted_from_weak(g, trimmed, eps);
                if (accept(t))
                    return {t, ExtractMethod::pipeline, s.guarantee};
            }
        }
    }

    VertexSet greedy = greedy_restricted_subset(g, g.vertices(), eps);
    if (greedy.size() >= k) {
        // A restricted set's max-degree bound survives trimming only if it
        // scales; recheck after trimming to k.
        for (TrimSide side : {TrimSide::low, TrimSide::high}) {
            VertexSet t = trim_to_size(side == TrimSide::low ? g : complement(g), greedy, k, TrimSide::low);
            if (accept(t))
                return {t, ExtractMethod::greedy, false};
        }
    }

    if (auto t = search_restricted_of_size(g, g.vertices(), k, eps, search_budget); t && accept(*t))
        return {*t, ExtractMethod::search, false};

    throw SearchFailure("no " + to_string(eps) + "-restricted set of size " + std::to_string(k) + " found");
}

// --- Peeling ---------------------------------------------------------------

PeelChain peel_chain(const Graph & g, const Pattern & h, const Fraction & eps, const Fraction & eta,
                     const Fraction & delta, const ExtractionBudget & budget,
                     std::optional<std::int64_t> phi_bound)
{
    if (! in_open_unit(eps) || ! in_open_unit(eta) || ! in_open_unit(delta))
        throw PreconditionError("peel parameters must lie in (0,1)");
    const int n = g.order();
    PeelChain chain;
    chain.phi_bound = phi_bound ? *phi_bound : phi(delta, eta);
    VertexSet u = g.vertices();

    while (Fraction(u.size()) > eta * n) {
        const int need = static_cast<int>(ceil_times(delta, u.size()));
        VertexSet peel = greedy_restricted_subset(g, u, eps);
        if (peel.size() < need) {
            InducedSubgraph sub = induced_subgraph(g, u);
            std::optional<VertexSet> local;
            try {
                if (delta < Fraction(1, 4))
                    local = extract_restricted_exact(sub.graph, h, eps, delta, budget).set;
                else
                    local = search_restricted_of_size(sub.graph, sub.graph.vertices(), need, eps, 2'000'000);
            }
            catch (const SearchFailure &) {
            }
            if (local)
                peel = sub.lift(*local, n);
            else {
                peel = VertexSet(n);
                peel.insert(u.first());
                ++chain.single_vertex_peels;
            }
        }
        if (peel.size() < need)
            chain.within_phi = false;
        u -= peel;
        chain.peels.push_back(std::move(peel));
    }
    chain.leftover = u;
    if (static_cast<std::int64_t>(chain.peels.size()) > chain.phi_bound)
        chain.within_phi = false;
    if (! verify_peel_chain(g, chain, eps, eta))
        throw VerificationFailure("peel chain fails its recheck");
    return chain;
}

bool verify_peel_chain(const Graph & g, const PeelChain & chain, const Fraction & eps, const Fraction & eta)
{
    VertexSet seen = chain.leftover;
    for (const VertexSet & p : chain.peels) {
        if (p.empty() || p.intersects(seen) || ! is_restricted(g, p, eps))
            return false;
        seen |= p;
    }
    return seen.size() == g.order() && Fraction(chain.leftover.size()) <= eta * g.order();
}

} // namespace rpt
