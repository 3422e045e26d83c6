#include "rpt/predicates.hpp"
#include "rpt/error.hpp"
#include "rpt/random.hpp"

#include <algorithm>
#include <numeric>

namespace rpt {

namespace {

// deg < eps*size  <=>  deg <= ceil(eps*size) - 1 for integer deg.
std::int64_t strict_limit(const Fraction & eps, std::int64_t size)
{
    return ceil_times(eps, size) - 1;
}

} // namespace

TightnessResult is_tight_to(const Graph & g, const VertexSet & a, const VertexSet & b,
                            const Fraction & eps, TightnessMode mode)
{
    if (a.empty())
        throw PreconditionError("tightness to an empty set is undefined");
    if (a.intersects(b))
        throw PreconditionError("tightness requires disjoint sets");

    const std::int64_t limit = strict_limit(eps, a.size());
    TightnessResult r;
    const bool want_sparse = mode != TightnessMode::dense;
    const bool want_dense = mode != TightnessMode::sparse;

    b.for_each([&](Vertex v) {
        if (want_sparse && ! r.sparse_violator && g.degree_in(v, a) > limit)
            r.sparse_violator = v;
        if (want_dense && ! r.dense_violator && g.non_degree_in(v, a) > limit)
            r.dense_violator = v;
    });

    const bool sparse_ok = want_sparse && ! r.sparse_violator;
    const bool dense_ok = want_dense && ! r.dense_violator;
    r.holds = sparse_ok || dense_ok;
    if (r.holds) {
        r.sparse_violator.reset();
        r.dense_violator.reset();
    }
    return r;
}

RestrictedSide restricted_side(const Graph & g, const VertexSet & s, const Fraction & eps)
{
    const std::int64_t size = s.size();
    if (size <= 1)
        return RestrictedSide::sparse;
    const std::int64_t bound = floor_times(eps, size);
    if (max_degree_within(g, s) <= bound)
        return RestrictedSide::sparse;
    if (max_non_degree_within(g, s) <= bound)
        return RestrictedSide::dense;
    return RestrictedSide::none;
}

bool is_restricted(const Graph & g, const VertexSet & s, const Fraction & eps)
{
    return restricted_side(g, s, eps) != RestrictedSide::none;
}

bool is_weakly_restricted(const Graph & g, const VertexSet & s, const Fraction & eps)
{
    Fraction d = edge_density(g, s);
    return d <= eps || d >= 1 - eps;
}

VertexSet extract_restricted_from_weak(const Graph & g, const VertexSet & s, const Fraction & eps)
{
    const Fraction quarter = eps / 4;
    const Fraction d = edge_density(g, s);
    bool sparse_side;
    if (d <= quarter)
        sparse_side = true;
    else if (d >= 1 - quarter)
        sparse_side = false;
    else
        throw PreconditionError("set is not weakly eps/4-restricted");

    std::vector<Vertex> members = s.to_vector();
    const std::size_t keep = (members.size() + 1) / 2;
    std::vector<int> deg(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        deg[i] = sparse_side ? g.degree_in(members[i], s) : g.non_degree_in(members[i], s);

    std::vector<std::size_t> idx(members.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return deg[x] < deg[y]; });

    VertexSet out(g.order());
    for (std::size_t i = 0; i < keep; ++i)
        out.insert(members[idx[i]]);

    if (! is_restricted(g, out, eps))
        throw VerificationFailure("weak-to-strong extraction produced a non-restricted set");
    return out;
}

std::vector<VertexSet> merge_restricted(const Graph & g, std::vector<VertexSet> sets, const Fraction & eps)
{
    std::vector<VertexSet> out;
    for (VertexSet & c : sets) {
        bool placed = false;
        for (VertexSet & o : out)
            if (is_restricted(g, o | c, eps)) {
                o |= c;
                placed = true;
                break;
            }
        if (! placed)
            out.push_back(std::move(c));
    }
    return out;
}

// --- Fullness --------------------------------------------------------------

std::size_t polar_edges_between(const Graph & g, const VertexSet & a, const VertexSet & b, Polarity polarity)
{
    std::size_t e = edges_between(g, a, b);
    if (polarity == Polarity::full)
        return e;
    return static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(b.size()) - e;
}

BigInt exact_fullness_cost(int size_a, int size_b, const Fraction & c)
{
    const std::int64_t ka = ceil_times(c, size_a), kb = ceil_times(c, size_b);
    return std::min(binomial(size_a, ka), binomial(size_b, kb));
}

namespace {

// Enumerates every k-subset of `xs` and, for each, checks that the cheapest
// kb-subset of `ys` still spans at least `need` polar edges.
struct FullnessSearch
{
    std::vector<std::vector<int>> x_to_y; // polar neighbours, as indices into ys
    int ny = 0;
    int k = 0;
    int kb = 0;
    std::int64_t need = 0;

    std::vector<int> counts;
    std::vector<int> chosen;
    std::vector<int> hist;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> violation;

    std::int64_t cheapest_sum()
    {
        std::fill(hist.begin(), hist.end(), 0);
        for (int y = 0; y < ny; ++y)
            ++hist[static_cast<std::size_t>(counts[static_cast<std::size_t>(y)])];
        std::int64_t sum = 0;
        int remaining = kb;
        for (int d = 0; d <= k && remaining > 0; ++d) {
            int take = std::min(remaining, hist[static_cast<std::size_t>(d)]);
            sum += static_cast<std::int64_t>(take) * d;
            remaining -= take;
        }
        return sum;
    }

    void record()
    {
        std::vector<int> ys(static_cast<std::size_t>(ny));
        std::iota(ys.begin(), ys.end(), 0);
        std::stable_sort(ys.begin(), ys.end(), [&](int p, int q) { return counts[static_cast<std::size_t>(p)] < counts[static_cast<std::size_t>(q)]; });
        ys.resize(static_cast<std::size_t>(kb));
        violation.emplace(chosen, ys);
    }

    void apply(int x, int delta)
    {
        for (int y : x_to_y[static_cast<std::size_t>(x)])
            counts[static_cast<std::size_t>(y)] += delta;
    }

    bool run(int next, int nx)
    {
        if (static_cast<int>(chosen.size()) == k) {
            if (cheapest_sum() < need) {
                record();
                return false;
            }
            return true;
        }
        for (int x = next; x <= nx - (k - static_cast<int>(chosen.size())); ++x) {
            chosen.push_back(x);
            apply(x, +1);
            bool ok = run(x + 1, nx);
            apply(x, -1);
            chosen.pop_back();
            if (! ok)
                return false;
        }
        return true;
    }
};

} // namespace

FullnessResult is_full_pair(const Graph & g, const FullPairCertificate & cert, const FullnessOptions & options)
{
    if (cert.a.empty() || cert.b.empty())
        throw PreconditionError("full pair sides must be nonempty");
    if (cert.a.intersects(cert.b))
        throw PreconditionError("full pair sides must be disjoint");
    if (cert.c <= 0 || cert.c > 1)
        throw PreconditionError("fullness threshold c must lie in (0,1]");

    std::vector<Vertex> av = cert.a.to_vector(), bv = cert.b.to_vector();
    const std::int64_t ka = ceil_times(cert.c, static_cast<std::int64_t>(av.size()));
    const std::int64_t kb = ceil_times(cert.c, static_cast<std::int64_t>(bv.size()));
    const std::int64_t need = ceil_times(cert.eps, ka * kb);

    // Enumerate on whichever side has fewer minimum-size subsets.
    const bool swap_sides = binomial(static_cast<std::int64_t>(bv.size()), kb) < binomial(static_cast<std::int64_t>(av.size()), ka);
    const std::vector<Vertex> & xs = swap_sides ? bv : av;
    const std::vector<Vertex> & ys = swap_sides ? av : bv;
    const int kx = static_cast<int>(swap_sides ? kb : ka);
    const int ky = static_cast<int>(swap_sides ? ka : kb);

    FullnessSearch search;
    search.ny = static_cast<int>(ys.size());
    search.k = kx;
    search.kb = ky;
    search.need = need;
    search.counts.assign(ys.size(), 0);
    search.hist.assign(static_cast<std::size_t>(kx) + 1, 0);
    search.x_to_y.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const VertexSet & row = cert.polarity == Polarity::full ? g.neighbors(xs[i]) : g.non_neighbors(xs[i]);
        for (std::size_t j = 0; j < ys.size(); ++j)
            if (row.contains(ys[j]))
                search.x_to_y[i].push_back(static_cast<int>(j));
    }

    FullnessResult result;
    const BigInt cost = binomial(static_cast<std::int64_t>(xs.size()), kx);
    if (options.method == FullnessMethod::exact) {
        if (cost > options.budget)
            throw BudgetExceeded("exact fullness check needs " + cost.str() + " subsets, budget " +
                                 std::to_string(options.budget));
        search.run(0, static_cast<int>(xs.size()));
        result.certified = true;
    }
    else {
        Rng rng(options.seed);
        std::vector<int> order(xs.size());
        for (int s = 0; s < options.samples && ! search.violation; ++s) {
            std::iota(order.begin(), order.end(), 0);
            rng.shuffle(order);
            std::fill(search.counts.begin(), search.counts.end(), 0);
            search.chosen.assign(order.begin(), order.begin() + kx);
            std::sort(search.chosen.begin(), search.chosen.end());
            for (int x : search.chosen)
                search.apply(x, +1);
            if (search.cheapest_sum() < need)
                search.record();
        }
        result.certified = false;
    }

    result.full = ! search.violation.has_value();
    if (search.violation) {
        VertexSet xset(g.order()), yset(g.order());
        for (int x : search.violation->first)
            xset.insert(xs[static_cast<std::size_t>(x)]);
        for (int y : search.violation->second)
            yset.insert(ys[static_cast<std::size_t>(y)]);
        result.violation = swap_sides ? std::make_pair(yset, xset) : std::make_pair(xset, yset);
        // A violation is always an exact refutation.
        result.certified = true;
    }
    return result;
}

BlowupResult verify_blowup(const Graph & g, const BlowupCertificate & cert, const FullnessOptions & options)
{
    const int t = static_cast<int>(cert.parts.size());
    if (cert.pattern.size() != t)
        throw PreconditionError("blowup pattern size does not match the number of parts");
    for (int i = 0; i < t; ++i) {
        if (cert.parts[static_cast<std::size_t>(i)].empty())
            throw PreconditionError("blowup parts must be nonempty");
        for (int j = i + 1; j < t; ++j)
            if (cert.parts[static_cast<std::size_t>(i)].intersects(cert.parts[static_cast<std::size_t>(j)]))
                throw PreconditionError("blowup parts must be disjoint");
    }

    BlowupResult r;
    r.ok = true;
    r.detail.full = true;
    r.detail.certified = options.method == FullnessMethod::exact;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            FullPairCertificate pair{cert.parts[static_cast<std::size_t>(i)], cert.parts[static_cast<std::size_t>(j)],
                                     cert.c, cert.eps,
                                     cert.pattern.adjacent(i, j) ? Polarity::full : Polarity::empty};
            FullnessResult fr = is_full_pair(g, pair, options);
            if (! fr.full) {
                r.ok = false;
                r.failing_pair = std::make_pair(i, j);
                r.detail = std::move(fr);
                return r;
            }
            r.detail.certified = r.detail.certified && fr.certified;
        }
    return r;
}

} // namespace rpt
