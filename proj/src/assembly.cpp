#include "rpt/assembly.hpp"
#include "rpt/adversarial.hpp"
#include "rpt/error.hpp"

#include <algorithm>

namespace rpt {

namespace {

ClauseCheck fail(std::string clause, std::string detail)
{
    return {false, std::move(clause), std::move(detail)};
}

std::string block(int i)
{
    return "W[" + std::to_string(i) + "]";
}

VertexSet union_of(int n, const std::vector<VertexSet> & sets)
{
    VertexSet u(n);
    for (const VertexSet & s : sets)
        u |= s;
    return u;
}

// Nonempty, disjoint, union exactly `within`.
std::string cover_defect(const std::vector<VertexSet> & sets, const VertexSet & within)
{
    VertexSet seen(within.universe());
    for (const VertexSet & s : sets) {
        if (s.universe() != within.universe())
            return "set over the wrong vertex universe";
        if (s.empty())
            return "empty set";
        if (s.intersects(seen))
            return "sets overlap";
        seen |= s;
    }
    if (! (seen == within))
        return "sets do not cover the vertex set";
    return {};
}

Fraction h_power(int h, int e)
{
    return e >= 0 ? Fraction(pow(Fraction(h), static_cast<unsigned>(e))) : pow(Fraction(1, h), static_cast<unsigned>(-e));
}

// Vertex number r of s (in id order) goes to part r mod m.
std::vector<VertexSet> round_robin(const VertexSet & s, int m)
{
    std::vector<VertexSet> parts(m, VertexSet(s.universe()));
    int r = 0;
    s.for_each([&](Vertex v) { parts[r++ % m].insert(v); });
    return parts;
}

std::vector<VertexSet> lift_all(const InducedSubgraph & sub, const std::vector<VertexSet> & sets, int n)
{
    std::vector<VertexSet> out;
    out.reserve(sets.size());
    for (const VertexSet & s : sets)
        out.push_back(sub.lift(s, n));
    return out;
}

} // namespace

// --- Path-partitions -----------------------------------------------------------

ClauseCheck verify_path_partition(const Graph & g, const PathPartition & p, std::optional<VertexSet> within)
{
    if (p.W.empty())
        return fail("partition", "no blocks");
    const VertexSet target = within ? *within : g.vertices();
    if (std::string why = cover_defect(p.W, target); ! why.empty())
        return fail("partition", why);
    const int k = p.k();
    const VertexSet & last = p.W[k];
    VertexSet tail = last;
    for (int i = k - 1; i >= 0; --i) {
        const VertexSet & w = p.W[i];
        if (! is_restricted(g, w, p.eps))
            return fail("restricted", block(i) + " is not eps-restricted");
        if (w.size() < 12 * last.size())
            return fail("sizes", block(i) + " is smaller than 12|W_k|");
        const TightnessResult t = is_tight_to(g, w, tail, p.eps / 12, TightnessMode::tight);
        if (! t) {
            const Vertex v = t.sparse_violator ? *t.sparse_violator : *t.dense_violator;
            return fail("tightness", "the tail after " + block(i) + " is not (eps/12)-tight to it (vertex " +
                                         std::to_string(v) + ")");
        }
        tail |= w;
    }
    return {};
}

ClauseCheck verify_restricted_partition(const Graph & g, const RestrictedPartition & p,
                                        std::optional<VertexSet> within)
{
    const VertexSet target = within ? *within : g.vertices();
    if (target.empty() && p.parts.empty())
        return {};
    if (std::string why = cover_defect(p.parts, target); ! why.empty())
        return fail("partition", why);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        if (! is_restricted(g, p.parts[i], p.eps))
            return fail("restricted", "part " + std::to_string(i + 1) + " is not eps-restricted");
    if (BigInt(p.parts.size()) > p.bound)
        return fail("counts", "more parts than the bound");
    return {};
}

int path_length(const Fraction & eps)
{
    return ceil_of(4 / eps).convert_to<int>();
}

BigInt base_part_bound(const Fraction & eps)
{
    return floor_of(2400 / (eps * eps));
}

RestrictedPartition base_partition(const Graph & g, const PathPartition & p, const Fraction & eps)
{
    const VertexSet all = union_of(g.order(), p.W);
    if (ClauseCheck c = verify_path_partition(g, p, all); ! c)
        throw PreconditionError("base case needs a path-partition: " + c.clause + ": " + c.detail);
    RestrictedPartition out{{}, eps, base_part_bound(eps)};

    std::vector<VertexSet> parts;
    for (const VertexSet & w : p.W) {
        if (is_restricted(g, w, eps)) {
            parts.push_back(w);
            continue;
        }
        VertexSet rest = w;
        while (! rest.empty()) {
            VertexSet t = greedy_restricted_subset(g, rest, eps);
            if (t.empty())
                t = VertexSet::of(g.order(), {rest.first()});
            rest -= t;
            parts.push_back(std::move(t));
        }
    }
    out.parts = merge_restricted(g, std::move(parts), eps);

    if (BigInt(out.parts.size()) > out.bound) {
        if (all.size() > 12)
            throw SearchFailure("base case: greedy cover exceeds the part bound and the graph is too large to search");
        const int cap = static_cast<int>(std::min<BigInt>(out.bound, BigInt(all.size())).convert_to<long>());
        auto exact = exact_n_restricted(g, cap, eps, all);
        if (! exact)
            throw SearchFailure("base case: no partition within the part bound exists");
        out.parts = std::move(*exact);
    }
    if (ClauseCheck c = verify_restricted_partition(g, out, all); ! c)
        throw VerificationFailure("base case output fails " + c.clause + ": " + c.detail);
    return out;
}

// --- Lengthening ---------------------------------------------------------------

ParamSchedule lengthening_schedule(int h, const Fraction & eps, const TheoremOptions & options)
{
    if (h < 2)
        throw PreconditionError("pattern must have at least two vertices");
    if (! (eps > 0 && eps < Fraction(1, 3)))
        throw PreconditionError("eps must lie in (0,1/3)");
    const int K = path_length(eps);
    const Fraction eps_key = h_power(h, -2 * K) * eps;
    const Fraction eta_key = Fraction(1, h * h);
    const Fraction theta_key = eps_key / 12;
    ParamSchedule s = options.mode == ParamMode::paper
                          ? ParamSchedule::paper(h, eps_key, eta_key, theta_key)
                          : ParamSchedule::practical(h, eps_key, eta_key, theta_key, options.lambda,
                                                     options.delta_prime, options.eta_prime);
    s.fullness = options.fullness;
    return s;
}

BigInt lengthening_part_bound(int h, const Fraction & eps, int k, const BigInt & N)
{
    const int K = path_length(eps);
    return floor_of(h_power(h, 2 * (K - k)) * (2400 / (eps * eps) + Fraction(N)) - Fraction(N));
}

ClauseCheck verify_removal(const Graph & g, const RemovalResult & r)
{
    if (Fraction(r.removed.size()) > r.d)
        return fail("sizes", "more vertices removed than the budget");
    return verify_restricted_partition(g, r.partition, g.vertices() - r.removed);
}

RemovalResult lengthen(const Graph & g, const Pattern & h, const PathPartition & p, const Fraction & eps,
                       const ParamSchedule & key, const Fraction & d)
{
    const int n = g.order();
    const int hs = h.size();
    const int K = path_length(eps);
    const int k = p.k();
    if (k < 0 || k > K)
        throw PreconditionError("path-partition length must lie in [0, K]");
    if (p.eps != h_power(hs, 2 * (k - K)) * eps)
        throw PreconditionError("path-partition is not at the stepped eps for its length");
    const VertexSet all = union_of(n, p.W);
    const Fraction budget = h_power(hs, -2 * k) * d;
    const BigInt bound = lengthening_part_bound(hs, eps, k, key.N);

    RemovalResult out;
    out.d = budget;
    out.removed = VertexSet(n);
    out.partition = {{}, eps, bound};

    if (k == K) {
        RestrictedPartition base = base_partition(g, p, eps);
        out.partition.parts = std::move(base.parts);
        out.trace.push_back({k, 0, 0, budget, static_cast<int>(out.partition.parts.size()), bound});
        return out;
    }

    const std::string stage = "lengthening at k=" + std::to_string(k);
    const VertexSet & Wk = p.W[k];
    const InducedSubgraph sub = induced_subgraph(g, Wk);
    const Fraction key_d = budget / (hs * hs);
    KeyLemmaRun run = run_key_lemma(sub.graph, h, key, key_d);
    if (std::holds_alternative<BlowupFound>(run.result))
        throw SearchFailure(stage + ": the key lemma found a blowup of H instead of a removal set");
    const KeyLemmaOutput & rows = std::get<KeyLemmaOutput>(run.result);
    const VertexSet T = sub.lift(rows.S, n);
    const std::vector<VertexSet> A = lift_all(sub, rows.A, n);
    const std::vector<VertexSet> B = lift_all(sub, rows.B, n);
    const std::vector<VertexSet> C = lift_all(sub, rows.C, n);
    const int m = static_cast<int>(A.size());
    out.removed = T;

    if (m == 0) {
        for (int i = 0; i < k; ++i)
            out.partition.parts.push_back(p.W[i]);
        out.partition.parts.insert(out.partition.parts.end(), C.begin(), C.end());
    }
    else {
        if (Wk.size() < 2 * m)
            throw VerificationFailure(stage + ": |W_k| is below 2m");
        std::vector<std::vector<VertexSet>> split(k);
        for (int i = 0; i < k; ++i) {
            if (p.W[i].size() < 24 * m)
                throw VerificationFailure(stage + ": a block is below 24m");
            split[i] = round_robin(p.W[i], m);
        }
        const Fraction next_eps = h_power(hs, 2 * (k + 1 - K)) * eps;
        for (int j = 0; j < m; ++j) {
            PathPartition child{{}, next_eps};
            for (int i = 0; i < k; ++i)
                child.W.push_back(split[i][j]);
            child.W.push_back(A[j]);
            child.W.push_back(B[j]);
            if (ClauseCheck c = verify_path_partition(g, child, union_of(n, child.W)); ! c)
                throw VerificationFailure(stage + ": piece " + std::to_string(j + 1) +
                                          " is not a path-partition one step longer: " + c.clause + ": " +
                                          c.detail);
            RemovalResult r = lengthen(g, h, child, eps, key, d);
            out.removed |= r.removed;
            out.partition.parts.insert(out.partition.parts.end(), r.partition.parts.begin(),
                                       r.partition.parts.end());
            out.trace.insert(out.trace.end(), r.trace.begin(), r.trace.end());
        }
        out.partition.parts.insert(out.partition.parts.end(), C.begin(), C.end());
    }

    out.trace.push_back({k, m, out.removed.size(), budget, static_cast<int>(out.partition.parts.size()), bound});
    if (ClauseCheck c = verify_restricted_partition(g, out.partition, all - out.removed); ! c)
        throw VerificationFailure(stage + ": combined partition fails " + c.clause + ": " + c.detail);
    if (Fraction(out.removed.size()) > budget)
        throw VerificationFailure(stage + ": removed more than h^{-2k} d vertices");
    return out;
}

RemovalResult run_main_theorem(const Graph & g, const Pattern & h, const Fraction & eps, const Fraction & d,
                               const TheoremOptions & options)
{
    if (d < 0)
        throw PreconditionError("d must be nonnegative");
    const int hs = h.size();
    const ParamSchedule key = lengthening_schedule(hs, eps, options);
    const int K = path_length(eps);

    if (options.mode == ParamMode::paper) {
        const BigInt ind = count_induced_copies(g, h);
        bool within = ind == 0;
        if (! within && d > 0) {
            const TowerReal log2_kappa =
                key.ledger->log2("kappa") - TowerReal(Float(2 * K * hs)) * log2(TowerReal(Float(hs)));
            const TowerReal rhs = log2_kappa + TowerReal(Float(hs)) * log2(TowerReal::from_fraction(d));
            within = log2(TowerReal::from_fraction(Fraction(ind))) <= rhs;
        }
        if (! within)
            throw PreconditionError("constants infeasible at this scale: ind(G) exceeds kappa d^h");
    }

    RemovalResult out;
    if (g.order() == 0) {
        out.removed = VertexSet(0);
        out.partition = {{}, eps, lengthening_part_bound(hs, eps, 0, key.N)};
        out.d = d;
    }
    else {
        const PathPartition trivial{{g.vertices()}, h_power(hs, -2 * K) * eps};
        out = lengthen(g, h, trivial, eps, key, d);
    }
    if (ClauseCheck c = verify_removal(g, out); ! c)
        throw VerificationFailure("removal result fails " + c.clause + ": " + c.detail);
    return out;
}

} // namespace rpt
