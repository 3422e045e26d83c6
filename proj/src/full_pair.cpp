#include "rpt/full_pair.hpp"
#include "rpt/error.hpp"

#include <algorithm>

namespace rpt {

namespace {

constexpr int kMaxExactExponent = 4096;
constexpr std::uint64_t kExhaustivePairs = 20'000;

} // namespace

TowerReal gamma_log2(const TowerReal & log2_c, const TowerReal & log2_eps)
{
    // log2 γ = -1 + (12/c) log2(2ε)
    const TowerReal twelve_over_c = exp2(log2(TowerReal(12)) - log2_c);
    return TowerReal(-1) + twelve_over_c * (TowerReal(1) + log2_eps);
}

Gamma gamma(const Fraction & c, const Fraction & eps)
{
    if (! in_open_unit(c))
        throw PreconditionError("gamma needs c in (0,1)");
    if (! (eps > 0 && eps < Fraction(1, 4)))
        throw PreconditionError("gamma needs eps in (0,1/4)");
    Gamma g;
    const Fraction m = 12 / c;
    if (boost::multiprecision::denominator(m) == 1 && m <= kMaxExactExponent) {
        g.exact = Fraction(1, 2) * pow(2 * eps, m.convert_to<unsigned>());
        g.log2_value = log2(TowerReal::from_fraction(*g.exact));
    }
    else
        g.log2_value = TowerReal(-1) + TowerReal::from_fraction(m) * log2(TowerReal::from_fraction(2 * eps));
    return g;
}

namespace {

int size_floor(const std::optional<Fraction> & exact, const TowerReal & log2_gamma, int side)
{
    if (exact)
        return static_cast<int>(std::max<std::int64_t>(1, ceil_times(*exact, side)));
    const TowerReal scaled = log2_gamma + log2(TowerReal(side));
    if (scaled < TowerReal(0))
        return 1;
    return std::max(1, static_cast<int>(boost::multiprecision::ceil(exp2(scaled).value())));
}

Fraction pair_density(const Graph & g, const VertexSet & a, const VertexSet & b)
{
    return Fraction(edges_between(g, a, b), static_cast<long>(a.size()) * b.size());
}

// Visits the k-subsets of v in lexicographic order until f returns true.
template <typename F>
bool for_each_subset(const std::vector<Vertex> & v, int k, int universe, F f)
{
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    const int n = static_cast<int>(v.size());
    while (true) {
        VertexSet s(universe);
        for (int i : idx)
            s.insert(v[static_cast<std::size_t>(i)]);
        if (f(s))
            return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

FullPairSearch find_full_pair(const Graph & host, const VertexSet & a, const VertexSet & b, const FullPairParams & p,
                              const FullnessOptions & options)
{
    if (a.empty() || b.empty())
        throw PreconditionError("full pair search needs nonempty sides");
    if (a.intersects(b))
        throw PreconditionError("full pair search needs disjoint sides");
    if (! (p.c > 0 && p.c <= 1) || ! in_open_unit(p.eps))
        throw PreconditionError("full pair parameters out of range");

    const Graph flipped = p.polarity == Polarity::empty ? complement(host) : Graph();
    const Graph & g = p.polarity == Polarity::empty ? flipped : host;
    if (Fraction(edges_between(g, a, b)) < 2 * p.eps * a.size() * b.size())
        throw PreconditionError("pair is not 2eps-dense");

    std::optional<Fraction> gexact = p.gamma;
    TowerReal glog;
    if (gexact)
        glog = log2(TowerReal::from_fraction(*gexact));
    else if (p.c < 1 && p.eps < Fraction(1, 4)) {
        Gamma gm = gamma(p.c, p.eps);
        gexact = gm.exact;
        glog = gm.log2_value;
    }
    else
        gexact = Fraction(0);

    FullPairSearch out;
    out.floor_a = size_floor(gexact, glog, a.size());
    out.floor_b = size_floor(gexact, glog, b.size());

    FullnessOptions exact = options;
    exact.method = FullnessMethod::exact;
    auto certify = [&](const VertexSet & x, const VertexSet & y) {
        FullPairCertificate cert{x, y, p.c, p.eps, Polarity::full};
        return is_full_pair(g, cert, exact);
    };
    auto finish = [&](const VertexSet & x, const VertexSet & y, const char * strategy) {
        out.cert = FullPairCertificate{x, y, p.c, p.eps, p.polarity};
        out.meets_floor = x.size() >= out.floor_a && y.size() >= out.floor_b;
        out.strategy = strategy;
        if (! is_full_pair(host, out.cert, exact))
            throw VerificationFailure("full pair failed its exact recheck");
        return out;
    };

    // Iterative densification.
    VertexSet x = a, y = b;
    while (x.size() >= out.floor_a && y.size() >= out.floor_b) {
        if (exact_fullness_cost(x.size(), y.size(), p.c) > options.budget) {
            // Drop the sparsest vertex from whichever side has more slack.
            VertexSet & side = (x.size() - out.floor_a >= y.size() - out.floor_b) ? x : y;
            const VertexSet & other = (&side == &x) ? y : x;
            if (side.size() <= (&side == &x ? out.floor_a : out.floor_b))
                break;
            Vertex worst = -1;
            int worst_deg = 0;
            side.for_each([&](Vertex v) {
                int d = g.degree_in(v, other);
                if (worst < 0 || d < worst_deg) {
                    worst = v;
                    worst_deg = d;
                }
            });
            side.erase(worst);
            continue;
        }
        FullnessResult r = certify(x, y);
        if (r.full)
            return finish(x, y, "iterative");
        const auto & [x1, y1] = *r.violation;
        VertexSet rx = x - x1, ry = y - y1;
        const bool x_ok = rx.size() >= out.floor_a && ! rx.empty();
        const bool y_ok = ry.size() >= out.floor_b && ! ry.empty();
        if (! x_ok && ! y_ok)
            break;
        if (x_ok && (! y_ok || pair_density(g, rx, y) >= pair_density(g, x, ry)))
            x = rx;
        else
            y = ry;
    }

    // Exhaustive descending-size enumeration, capped.
    std::vector<Vertex> av = a.to_vector(), bv = b.to_vector();
    std::uint64_t visited = 0;
    for (int total = a.size() + b.size(); total >= out.floor_a + out.floor_b; --total) {
        for (int sa = std::min(a.size(), total - out.floor_b); sa >= out.floor_a; --sa) {
            const int sb = total - sa;
            if (sb > b.size())
                break;
            const BigInt pairs = binomial(a.size(), sa) * binomial(b.size(), sb);
            if (pairs > kExhaustivePairs - visited || exact_fullness_cost(sa, sb, p.c) > options.budget)
                continue;
            std::optional<std::pair<VertexSet, VertexSet>> hit;
            for_each_subset(av, sa, g.order(), [&](const VertexSet & xs) {
                return for_each_subset(bv, sb, g.order(), [&](const VertexSet & ys) {
                    ++visited;
                    if (certify(xs, ys).full) {
                        hit.emplace(xs, ys);
                        return true;
                    }
                    return false;
                });
            });
            if (hit)
                return finish(hit->first, hit->second, "exhaustive");
        }
    }

    if (out.floor_a == 1 && out.floor_b == 1) {
        // One edge is (c, eps)-full for any c and eps <= 1.
        Vertex u = -1, v = -1;
        a.for_each([&](Vertex s) {
            if (u >= 0)
                return;
            VertexSet common = g.neighbors(s) & b;
            if (! common.empty()) {
                u = s;
                v = common.first();
            }
        });
        if (u >= 0)
            return finish(VertexSet::of(g.order(), {u}), VertexSet::of(g.order(), {v}), "single_edge");
    }

    throw SearchFailure("no (" + to_string(p.c) + ", " + to_string(p.eps) + ")-full pair with sides >= " +
                        std::to_string(out.floor_a) + ", " + std::to_string(out.floor_b) + " found within budget");
}

} // namespace rpt
