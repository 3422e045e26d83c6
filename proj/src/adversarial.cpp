#include "rpt/adversarial.hpp"
#include "rpt/error.hpp"
#include "rpt/predicates.hpp"
#include "rpt/random.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace rpt {

void validate(const HardInstanceSpec & spec)
{
    if (spec.N < 1)
        throw PreconditionError("N must be at least 1");
    if (spec.m > 24)
        throw PreconditionError("m above 24 cannot be checked exhaustively");
    if (spec.relaxed ? spec.m < 2 : spec.m < 20 * spec.N * spec.N)
        throw PreconditionError("m must be at least 20N^2");
    if (spec.n < spec.m)
        throw PreconditionError("n must be at least m");
    if (! (spec.eps > 0 && spec.eps < Fraction(1, 18)))
        throw PreconditionError("eps must lie in (0,1/18)");
    if (spec.pattern.size() < 2)
        throw PreconditionError("pattern must have at least two vertices");
}

// --- Subset enumeration --------------------------------------------------------

namespace {

struct LocalGraph
{
    std::vector<Vertex> to_host;
    std::vector<std::uint32_t> adj;
};

LocalGraph local_of(const Graph & g, const VertexSet & s)
{
    if (s.size() > 24)
        throw BudgetExceeded("subset enumeration is limited to 24 vertices");
    LocalGraph l;
    l.to_host = s.to_vector();
    const int k = static_cast<int>(l.to_host.size());
    l.adj.assign(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.adjacent(l.to_host[i], l.to_host[j]))
                l.adj[i] |= std::uint32_t{1} << j;
    return l;
}

VertexSet lift(const LocalGraph & l, std::uint32_t mask, int universe)
{
    VertexSet out(universe);
    for (std::size_t i = 0; i < l.to_host.size(); ++i)
        if ((mask >> i) & 1u)
            out.insert(l.to_host[i]);
    return out;
}

// Visits every subset in Gray-code order; visit(mask, size) returns true to stop.
template <typename Toggle, typename Visit>
std::optional<std::uint32_t> gray_walk(int k, Toggle toggle, Visit visit)
{
    std::uint32_t mask = 0;
    int size = 0;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int v = std::countr_zero(i);
        const bool adding = ! ((mask >> v) & 1u);
        toggle(v, adding, mask);
        mask ^= std::uint32_t{1} << v;
        size += adding ? 1 : -1;
        if (visit(mask, size))
            return mask;
    }
    return std::nullopt;
}

} // namespace

std::optional<VertexSet> find_weakly_restricted_subset(const Graph & g, const VertexSet & s, int min_size,
                                                       const Fraction & eps)
{
    const LocalGraph l = local_of(g, s);
    const int k = static_cast<int>(l.to_host.size());
    // Per size: largest edge count <= ε C(s,2) and least edge count >= (1-ε) C(s,2).
    std::vector<std::int64_t> low(k + 1), high(k + 1);
    for (int z = 0; z <= k; ++z) {
        const std::int64_t pairs = std::int64_t{z} * (z - 1) / 2;
        low[z] = floor_times(eps, pairs);
        high[z] = ceil_times(1 - eps, pairs);
    }
    std::int64_t edges = 0;
    auto toggle = [&](int v, bool adding, std::uint32_t mask) {
        const int c = std::popcount(l.adj[v] & mask);
        edges += adding ? c : -c;
    };
    auto visit = [&](std::uint32_t, int size) {
        return size >= min_size && (edges <= low[size] || edges >= high[size]);
    };
    if (min_size <= 0)
        return VertexSet(g.order());
    if (auto m = gray_walk(k, toggle, visit))
        return lift(l, *m, g.order());
    return std::nullopt;
}

std::optional<VertexSet> find_restricted_subset(const Graph & g, const VertexSet & s, int min_size,
                                                const Fraction & eps)
{
    const LocalGraph l = local_of(g, s);
    const int k = static_cast<int>(l.to_host.size());
    std::vector<int> limit(k + 1);
    for (int z = 0; z <= k; ++z)
        limit[z] = static_cast<int>(floor_times(eps, z));
    std::vector<int> deg(k, 0);
    auto toggle = [&](int v, bool adding, std::uint32_t mask) {
        for (std::uint32_t a = l.adj[v]; a; a &= a - 1)
            deg[std::countr_zero(a)] += adding ? 1 : -1;
        (void)mask;
    };
    auto visit = [&](std::uint32_t mask, int size) {
        if (size < min_size)
            return false;
        int hi = 0, lo = size;
        for (std::uint32_t a = mask; a; a &= a - 1) {
            const int d = deg[std::countr_zero(a)];
            hi = std::max(hi, d);
            lo = std::min(lo, d);
        }
        return hi <= limit[size] || size - 1 - lo <= limit[size];
    };
    if (min_size <= 0)
        return VertexSet(g.order());
    if (auto m = gray_walk(k, toggle, visit))
        return lift(l, *m, g.order());
    return std::nullopt;
}

// --- Hard instances --------------------------------------------------------------

HardInstance generate_hard_graph(const HardInstanceSpec & spec)
{
    validate(spec);
    Rng rng(spec.seed);
    const int m = spec.m;
    const int min_size = (m + spec.N - 1) / spec.N;
    for (int attempt = 1; attempt <= spec.max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (rng.coin())
                    edges.emplace_back(u, v);
        const Graph core_graph(m, edges);
        if (find_weakly_restricted_subset(core_graph, core_graph.vertices(), min_size, 6 * spec.eps))
            continue;
        for (int x = m; x < spec.n; ++x)
            for (int u = 0; u < m; ++u)
                edges.emplace_back(u, x);
        HardInstance out{Graph(spec.n, edges), VertexSet(spec.n), attempt};
        for (int u = 0; u < m; ++u)
            out.core.insert(u);
        return out;
    }
    throw SearchFailure("no core without a large weakly restricted subset in " + std::to_string(spec.max_attempts) +
                        " attempts; raise m or lower N");
}

HardGraphCheck verify_hard_graph(const Graph & g, const VertexSet & core, const HardInstanceSpec & spec)
{
    HardGraphCheck r;
    const int h = spec.pattern.size();
    const int m = core.size();
    const int n = g.order();
    auto failed = [&](std::string clause) {
        r.ok = false;
        r.failed_clause = std::move(clause);
        return r;
    };

    r.ind = count_induced_copies(g, spec.pattern);
    r.ind_bound = BigInt(h) * m * boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(h - 1));
    if (r.ind > r.ind_bound)
        return failed("ind_bound");
    r.verified_clauses.push_back("ind_bound");

    const int min_size = (m + spec.N - 1) / spec.N;
    if (find_restricted_subset(g, core, min_size, 3 * spec.eps))
        return failed("core_not_restricted");
    r.verified_clauses.push_back("core_not_restricted");

    if (n <= 12) {
        if (exact_n_restricted(g, spec.N, spec.eps))
            return failed("exact_not_restricted");
        r.verified_clauses.push_back("exact_not_restricted");
    }
    if (spec.N == 1) {
        const VertexSet all = g.vertices();
        const std::int64_t lim = floor_times(spec.eps, n);
        if (max_degree_within(g, all) <= lim || max_non_degree_within(g, all) <= lim)
            return failed("degree_not_restricted");
        r.verified_clauses.push_back("degree_not_restricted");
    }
    return r;
}

// --- Exact partition oracle --------------------------------------------------------

std::optional<std::vector<VertexSet>> exact_n_restricted(const Graph & g, int N, const Fraction & eps,
                                                         std::optional<VertexSet> s, int max_vertices)
{
    const VertexSet within = s ? *s : g.vertices();
    const std::vector<Vertex> verts = within.to_vector();
    const int k = static_cast<int>(verts.size());
    if (k > max_vertices)
        throw BudgetExceeded("exact partition search is limited to " + std::to_string(max_vertices) + " vertices");
    if (k == 0)
        return std::vector<VertexSet>{};
    if (N < 1)
        return std::nullopt;

    std::vector<int> limit(k + 1);
    for (int z = 0; z <= k; ++z)
        limit[z] = static_cast<int>(floor_times(eps, z));

    std::vector<VertexSet> blocks;
    // A block can still end up restricted if its current degrees fit the
    // largest size it may reach.
    auto viable = [&](const VertexSet & b, int remaining) {
        const int cap = limit[b.size() + remaining];
        return max_degree_within(g, b) <= cap || max_non_degree_within(g, b) <= cap;
    };
    std::function<bool(int)> place = [&](int idx) -> bool {
        if (idx == k) {
            for (const VertexSet & b : blocks)
                if (! is_restricted(g, b, eps))
                    return false;
            return true;
        }
        const Vertex v = verts[idx];
        const int remaining = k - idx - 1;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            blocks[i].insert(v);
            if (viable(blocks[i], remaining) && place(idx + 1))
                return true;
            blocks[i].erase(v);
        }
        if (static_cast<int>(blocks.size()) < N) {
            blocks.push_back(VertexSet::of(g.order(), {v}));
            if (place(idx + 1))
                return true;
            blocks.pop_back();
        }
        return false;
    };
    if (place(0))
        return blocks;
    return std::nullopt;
}

MinRemoval min_removal_oracle(const Graph & g, int N, const Fraction & eps, int max_vertices)
{
    const int n = g.order();
    if (n > max_vertices)
        throw BudgetExceeded("removal oracle is limited to " + std::to_string(max_vertices) + " vertices");
    for (int size = 0; size <= n; ++size) {
        // Subsets of the given size in increasing colex order.
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            VertexSet removed(n);
            for (int i : idx)
                removed.insert(i);
            if (auto parts = exact_n_restricted(g, N, eps, g.vertices() - removed, max_vertices))
                return {size, removed, *parts};
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    throw VerificationFailure("removing every vertex must leave a restricted graph");
}

BigInt naive_count(const Graph & g, const Pattern & h, std::uint64_t budget)
{
    const int n = g.order();
    const int k = h.size();
    long double work = 1;
    for (int i = 0; i < k; ++i)
        work *= n;
    if (work > static_cast<long double>(budget))
        throw BudgetExceeded("naive count exceeds its budget");
    if (k > n)
        return 0;
    std::vector<Vertex> map(k, 0);
    BigInt count = 0;
    std::function<void(int)> go = [&](int i) {
        if (i == k) {
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    if (map[a] == map[b])
                        return;
                    if (g.adjacent(map[a], map[b]) != h.adjacent(a, b))
                        return;
                }
            ++count;
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            map[i] = v;
            go(i + 1);
        }
    };
    go(0);
    return count;
}

} // namespace rpt
