#include "rpt/key_lemma.hpp"
#include "rpt/error.hpp"

#include <algorithm>
#include <cmath>

namespace rpt {

namespace {

const Fraction kClamp = pow(Fraction(1, 2), 64);
constexpr std::int64_t kPhiCap = std::int64_t{1} << 62;

// 2^l, or 2^-64 when smaller, rounded down to a multiple of 2^-62 otherwise.
Fraction clamp_log2(const TowerReal & l)
{
    if (l < TowerReal(-64))
        return kClamp;
    const long double x = exp2(l).value().convert_to<long double>();
    const auto num = static_cast<std::int64_t>(std::floor(std::ldexp(x, 62)));
    return std::max(Fraction(num) * pow(Fraction(1, 2), 62), kClamp);
}

TowerReal lg(const Fraction & f)
{
    return log2(TowerReal::from_fraction(f));
}

BigInt pairs(int t)
{
    return binomial(t, 2);
}

void check_unit_params(const Fraction & eps, const Fraction & eta, const Fraction & theta)
{
    const Fraction half(1, 2);
    for (const Fraction * f : {&eps, &eta, &theta})
        if (! (*f > 0 && *f < half))
            throw PreconditionError("eps, eta and theta must lie in (0,1/2)");
}

// Fills Gamma, eps_t, eps', Lambda from lambda; eps_t[h], xi already set.
void derive_products(ParamSchedule & s)
{
    const int h = s.h;
    s.Gamma.assign(h, {});
    for (int t = h - 1; t >= 0; --t) {
        s.Gamma[t].assign(t + 1, 1);
        for (int i = t - 1; i >= 0; --i)
            s.Gamma[t][i] = s.Gamma[t][i + 1] * s.lambda[t][i + 1];
        s.eps_t[t] = s.eps_t[t + 1] * s.lambda[t][0];
    }
    s.eps_prime = s.eps_t[1] * s.Gamma[0][0];
    for (int t = 1; t < h; ++t)
        s.eps_prime = std::min(s.eps_prime, Fraction(s.eps_t[t + 1] * s.Gamma[t][0]));
}

void derive_lambda_rows(ParamSchedule & s)
{
    const int h = s.h;
    s.Lambda.assign(h + 1, std::vector<Fraction>(h + 1, 0));
    for (int i = 1; i <= h; ++i) {
        s.Lambda[i][i] = s.delta_prime * s.Gamma[i - 1][0];
        for (int t = i; t <= h - 1; ++t)
            s.Lambda[t + 1][i] = s.lambda[t][i] * s.Lambda[t][i];
    }
}

Fraction min_gamma(const ParamSchedule & s)
{
    Fraction m = s.Gamma[0][0];
    for (int t = 1; t < s.h; ++t)
        m = std::min(m, s.Gamma[t][0]);
    return m;
}

void derive_n(ParamSchedule & s)
{
    s.N = pairs(s.h) + BigInt(s.h - 1) * BigInt(s.phi);
}

template <typename F>
auto in_stage(const std::string & stage, F && f) -> decltype(f())
{
    try {
        return f();
    }
    catch (const SearchFailure & e) {
        throw SearchFailure(stage + ": " + e.what());
    }
    catch (const BudgetExceeded & e) {
        throw BudgetExceeded(stage + ": " + e.what());
    }
    catch (const PreconditionError & e) {
        throw PreconditionError(stage + ": " + e.what());
    }
}

ClauseCheck fail(std::string clause, std::string detail)
{
    return {false, std::move(clause), std::move(detail)};
}

// Pairwise disjoint with union exactly `target`.
std::string partition_defect(const std::vector<const VertexSet *> & sets, const VertexSet & target)
{
    VertexSet seen(target.universe());
    for (const VertexSet * s : sets) {
        if (s->universe() != target.universe())
            return "set over the wrong vertex universe";
        if (s->intersects(seen))
            return "sets overlap";
        seen |= *s;
    }
    if (! (seen == target))
        return "sets do not cover the vertex set";
    return {};
}

ParamSchedule base_schedule(int h, const Fraction & eps, const Fraction & eta, const Fraction & theta)
{
    if (h < 1)
        throw PreconditionError("pattern must have at least one vertex");
    check_unit_params(eps, eta, theta);
    ParamSchedule s;
    s.h = h;
    s.eps = eps;
    s.eta = eta;
    s.theta = theta;
    s.xi = theta / 4;
    s.eps_t.assign(h + 1, 0);
    s.eps_t[h] = std::min(eps, pow(s.xi, static_cast<unsigned>(h)));
    s.lambda.assign(h, {});
    return s;
}

} // namespace

// --- Schedules ---------------------------------------------------------------

ParamSchedule ParamSchedule::practical(int h, const Fraction & eps, const Fraction & eta, const Fraction & theta,
                                       const Fraction & lambda, const Fraction & delta_prime,
                                       std::optional<Fraction> eta_prime)
{
    ParamSchedule s = base_schedule(h, eps, eta, theta);
    if (! (lambda > 0 && lambda <= Fraction(1, 3)))
        throw PreconditionError("lambda must lie in (0,1/3]");
    if (! (delta_prime > 0 && delta_prime < Fraction(1, 4)))
        throw PreconditionError("delta' must lie in (0,1/4)");
    for (int t = 0; t < h; ++t)
        s.lambda[t].assign(t + 1, lambda);
    derive_products(s);
    s.delta_prime = delta_prime;
    s.eta_prime = eta_prime ? *eta_prime : Fraction(1, 2) * eta * delta_prime * min_gamma(s);
    if (! in_open_unit(s.eta_prime))
        throw PreconditionError("eta' must lie in (0,1)");
    derive_lambda_rows(s);
    s.phi = rpt::phi(s.delta_prime, s.eta_prime);
    derive_n(s);
    return s;
}

ParamSchedule ParamSchedule::paper(int h, const Fraction & eps, const Fraction & eta, const Fraction & theta)
{
    ParamSchedule s = base_schedule(h, eps, eta, theta);
    s.mode = ParamMode::paper;
    s.ledger = build_key_ledger(h, eps, eta, theta);
    const TowerReal lxi = lg(s.xi);
    const TowerReal third = lg(Fraction(1, 3));

    // λ_{t,i} = γ(⅓ ε_{t+1} Γ_{t,i}, ξ) for i = t..0, with Γ_{t,t} = 1 and
    // Γ_{t,i} = λ_{t,i+1} Γ_{t,i+1}.
    for (int t = h - 1; t >= 0; --t) {
        s.lambda[t].assign(t + 1, 0);
        TowerReal lgamma = 0;
        const Fraction & next_eps = s.eps_t[t + 1];
        for (int i = t; i >= 0; --i) {
            s.lambda[t][i] = clamp_log2(gamma_log2(third + lg(next_eps) + lgamma, lxi));
            lgamma = lgamma + lg(s.lambda[t][i]);
        }
        s.eps_t[t] = next_eps * s.lambda[t][0];
    }
    derive_products(s);
    s.delta_prime = clamp_log2(log2_delta_exact(h, lg(s.eps_prime)));
    if (s.delta_prime >= Fraction(1, 4))
        s.delta_prime = Fraction(1, 8);
    s.eta_prime = Fraction(1, 2) * eta * s.delta_prime * min_gamma(s);
    derive_lambda_rows(s);

    const TowerReal lphi = log2_phi(lg(s.delta_prime), lg(s.eta_prime));
    if (lphi >= TowerReal(62))
        s.phi = kPhiCap;
    else if (lphi < TowerReal(16))
        s.phi = rpt::phi(s.delta_prime, s.eta_prime);
    else
        s.phi = static_cast<std::int64_t>(std::ceil(exp2(lphi).value().convert_to<long double>()));
    derive_n(s);
    return s;
}

Fraction ParamSchedule::chain_c(int t, int i) const
{
    return eps_t[t + 1] * Gamma[t][i] / 3;
}

// --- Partitions --------------------------------------------------------------

MNTPartition MNTPartition::trivial(const Graph & g)
{
    MNTPartition p;
    p.L = g.vertices();
    return p;
}

ClauseCheck verify_mnt_partition(const Graph & g, const Pattern & h, const ParamSchedule & s, const MNTPartition & p,
                                 const Fraction & d)
{
    const int t = p.t();
    if (p.A.size() != p.B.size())
        return fail("partition", "A and B rows differ in length");
    {
        std::vector<const VertexSet *> all;
        for (const auto * row : {&p.A, &p.B, &p.C, &p.D})
            for (const VertexSet & x : *row)
                all.push_back(&x);
        all.push_back(&p.L);
        if (std::string why = partition_defect(all, g.vertices()); ! why.empty())
            return fail("partition", why);
    }
    if (t > h.size() || t > s.h)
        return fail("counts", "t exceeds h");
    if (BigInt(p.m()) > pairs(t))
        return fail("counts", "m exceeds C(t,2)");
    if (BigInt(p.n()) > BigInt(t) * BigInt(s.phi))
        return fail("counts", "n exceeds t*phi");

    for (int i = 0; i < p.m(); ++i)
        if (p.A[i].empty() || ! is_restricted(g, p.A[i], s.eps))
            return fail("restricted", "A[" + std::to_string(i + 1) + "] is empty or not eps-restricted");
    for (int j = 0; j < p.n(); ++j)
        if (p.C[j].empty() || ! is_restricted(g, p.C[j], s.eps))
            return fail("restricted", "C[" + std::to_string(j + 1) + "] is empty or not eps-restricted");

    for (int i = 0; i < p.m(); ++i) {
        const std::string at = "B[" + std::to_string(i + 1) + "]";
        if (Fraction(p.B[i].size()) > s.eta * p.A[i].size())
            return fail("tight_pairs", at + " is larger than eta|A|");
        if (! is_tight_to(g, p.A[i], p.B[i], s.theta, TightnessMode::tight))
            return fail("tight_pairs", at + " is not theta-tight to its A");
    }

    ClauseCheck ok;
    if (t >= 2) {
        BlowupCertificate cert{p.D, s.eps_t[t], s.xi, h.prefix(t)};
        BlowupResult r;
        try {
            r = verify_blowup(g, cert, s.fullness);
        }
        catch (const BudgetExceeded &) {
            FullnessOptions sampled = s.fullness;
            sampled.method = FullnessMethod::sampled;
            r = verify_blowup(g, cert, sampled);
            ok.sampled = true;
        }
        if (! r) {
            const auto [i, j] = *r.failing_pair;
            ClauseCheck f = fail("blowup", "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                               ") is not full in the required polarity");
            f.sampled = ok.sampled;
            return f;
        }
    }

    if (t > 0) {
        for (int i = 1; i <= t; ++i) {
            const VertexSet & D = p.D[i - 1];
            const std::string at = "D[" + std::to_string(i) + "]";
            if (Fraction(D.size()) <= s.Lambda[t][i] * d)
                return fail("sizes", at + " is not larger than Lambda*d");
            if (s.eta * D.size() <= 2 * p.L.size())
                return fail("sizes", at + " is not larger than 2|L|/eta");
            if (! is_restricted(g, D, s.eps_t[t]))
                return fail("sizes", at + " is not eps_t-restricted");
        }
    }
    return ok;
}

// --- One iteration -----------------------------------------------------------

namespace {

KeyLemmaOutput rearrange(const Graph & g, const ParamSchedule & s, const MNTPartition & p, const VertexSet & S,
                         const std::vector<VertexSet> & L_parts)
{
    KeyLemmaOutput out;
    out.S = S;
    std::vector<VertexSet> rest;
    for (int i = 0; i < p.m(); ++i) {
        if (! p.B[i].empty()) {
            out.A.push_back(p.A[i]);
            out.B.push_back(p.B[i]);
        }
        else
            rest.push_back(p.A[i]);
    }
    for (int i = 0; i < p.t(); ++i) {
        if (! L_parts[i].empty()) {
            out.A.push_back(p.D[i]);
            out.B.push_back(L_parts[i]);
        }
        else
            rest.push_back(p.D[i]);
    }
    rest.insert(rest.end(), p.C.begin(), p.C.end());
    out.unmerged_n = static_cast<int>(rest.size());
    out.C = merge_restricted(g, std::move(rest), s.eps);
    return out;
}

// The lowest-id k vertices of s.
VertexSet lowest(const VertexSet & s, int k)
{
    VertexSet out(s.universe());
    for (Vertex v = s.first(); v < s.universe() && k > 0; v = s.next(v + 1), --k)
        out.insert(v);
    return out;
}

} // namespace

StepOutcome advance_or_finish(const Graph & g, const Pattern & h, const ParamSchedule & s, const MNTPartition & p,
                              const Fraction & d, StepRecord & record)
{
    const int t = p.t();
    const int n = g.order();
    if (t >= h.size())
        throw PreconditionError("partition already has t = h");
    const std::string stage = "step t=" + std::to_string(t);

    // Correct adjacencies towards every D_i; the rest goes to the least failing i.
    VertexSet S(n);
    std::vector<VertexSet> L_parts(t, VertexSet(n));
    std::vector<std::int64_t> need(t);
    for (int i = 0; i < t; ++i)
        need[i] = ceil_times(2 * s.xi, p.D[i].size());
    p.L.for_each([&](Vertex u) {
        for (int i = 0; i < t; ++i) {
            const bool edge = h.adjacent(t, i);
            const int cnt = edge ? g.degree_in(u, p.D[i]) : g.non_degree_in(u, p.D[i]);
            if (cnt < need[i]) {
                L_parts[i].insert(u);
                return;
            }
        }
        S.insert(u);
    });
    record = StepRecord{};
    record.t = t;
    record.S = S;
    record.L_parts = L_parts;

    if (Fraction(S.size()) <= d) {
        record.finished = true;
        return rearrange(g, s, p, S, L_parts);
    }

    const ExtractionBudget budget = ExtractionBudget::practical(h.size(), s.eps / 8, s.eps / 8, s.extraction_depth);

    VertexSet S0 = S;
    if (S.size() >= 2) {
        const InducedSubgraph sub = induced_subgraph(g, S);
        S0 = in_stage(stage + " restricted seed", [&] {
            return sub.lift(extract_restricted_exact(sub.graph, h, s.eps_prime, s.delta_prime, budget).set, n);
        });
    }
    record.S_chain.push_back(S0);

    VertexSet cur = S0;
    for (int i = 1; i <= t; ++i) {
        const VertexSet & D = p.D[i - 1];
        FullPairParams fp{s.chain_c(t, i), s.xi, s.lambda[t][i],
                          h.adjacent(i - 1, t) ? Polarity::full : Polarity::empty};
        const FullPairSearch found = in_stage(stage + " chain " + std::to_string(i),
                                              [&] { return find_full_pair(g, cur, D, fp, s.fullness); });
        cur = found.cert.a;
        const VertexSet & Dp = found.cert.b;
        record.S_chain.push_back(cur);
        record.P.push_back(lowest(Dp, std::min(Dp.size(), D.size() / 2)));
    }
    const VertexSet & St = cur;
    record.P.push_back(St);

    VertexSet L_prime(n);
    std::vector<VertexSet> Q;
    const VertexSet U = S - St;
    if (S.size() >= 2 && ! U.empty()) {
        const InducedSubgraph sub = induced_subgraph(g, U);
        const PeelChain chain = in_stage(stage + " peeling", [&] {
            return peel_chain(sub.graph, h, s.eps, s.eta_prime, s.delta_prime, budget, s.phi);
        });
        for (const VertexSet & q : chain.peels)
            Q.push_back(sub.lift(q, n));
        L_prime = sub.lift(chain.leftover, n);
    }
    record.Q = Q;
    record.L_prime = L_prime;

    MNTPartition next;
    next.A = p.A;
    next.B = p.B;
    for (int i = 0; i < t; ++i) {
        next.A.push_back(p.D[i] - record.P[i]);
        next.B.push_back(L_parts[i]);
    }
    next.C = p.C;
    next.C.insert(next.C.end(), Q.begin(), Q.end());
    next.D = record.P;
    next.L = L_prime;

    if (ClauseCheck c = verify_mnt_partition(g, h, s, next, d); ! c)
        throw VerificationFailure(stage + ": assembled partition fails clause " + c.clause + ": " + c.detail);
    return next;
}

// --- Final output --------------------------------------------------------------

ClauseCheck verify_key_output(const Graph & g, const Pattern & h, const ParamSchedule & s, const KeyLemmaOutput & out,
                              const Fraction & d)
{
    if (Fraction(out.S.size()) > d)
        return fail("sizes", "|S| exceeds d");
    if (out.A.size() != out.B.size())
        return fail("partition", "A and B rows differ in length");
    std::vector<const VertexSet *> all{&out.S};
    for (const auto * row : {&out.A, &out.B, &out.C})
        for (const VertexSet & x : *row)
            all.push_back(&x);
    if (std::string why = partition_defect(all, g.vertices()); ! why.empty())
        return fail("partition", why);
    for (std::size_t i = 0; i < out.A.size(); ++i)
        if (out.A[i].empty() || ! is_restricted(g, out.A[i], s.eps))
            return fail("restricted", "A[" + std::to_string(i + 1) + "] is empty or not eps-restricted");
    for (std::size_t j = 0; j < out.C.size(); ++j)
        if (out.C[j].empty() || ! is_restricted(g, out.C[j], s.eps))
            return fail("restricted", "C[" + std::to_string(j + 1) + "] is empty or not eps-restricted");
    for (std::size_t i = 0; i < out.A.size(); ++i) {
        const std::string at = "B[" + std::to_string(i + 1) + "]";
        if (Fraction(out.B[i].size()) > s.eta * out.A[i].size())
            return fail("tight_pairs", at + " is larger than eta|A|");
        if (! is_tight_to(g, out.A[i], out.B[i], s.theta, TightnessMode::tight))
            return fail("tight_pairs", at + " is not theta-tight to its A");
    }
    if (BigInt(out.A.size()) > pairs(h.size()))
        return fail("counts", "m exceeds C(h,2)");
    if (BigInt(out.C.size()) > s.N)
        return fail("counts", "n exceeds N");
    return {};
}

KeyLemmaRun run_key_lemma(const Graph & g, const Pattern & h, const ParamSchedule & s, const Fraction & d)
{
    if (h.size() != s.h)
        throw PreconditionError("schedule was built for a different pattern size");
    if (d < 0)
        throw PreconditionError("d must be nonnegative");
    if (s.mode == ParamMode::paper) {
        const BigInt ind = count_induced_copies(g, h);
        bool within = ind == 0;
        if (! within && d > 0) {
            const TowerReal lhs = log2(TowerReal::from_fraction(Fraction(ind)));
            const TowerReal rhs = s.ledger->log2("kappa") + TowerReal(Float(h.size())) * lg(d);
            within = lhs <= rhs;
        }
        if (! within)
            throw PreconditionError("constants infeasible at this scale: ind(G) exceeds kappa d^h");
    }

    KeyLemmaRun run;
    MNTPartition p = MNTPartition::trivial(g);
    run.partitions.push_back(p);
    while (true) {
        if (p.t() == h.size()) {
            BlowupCertificate cert{p.D, s.eps_t[h.size()], s.xi, h};
            BlowupFound found{cert, blowup_copy_bound_check(g, cert, h.size())};
            if (! found.count.holds)
                throw VerificationFailure("blowup copy count is below its lower bound");
            if (s.mode == ParamMode::paper)
                throw VerificationFailure("blowup reached under ledger constants although ind(G) <= kappa d^h");
            run.result = std::move(found);
            return run;
        }
        StepRecord record;
        StepOutcome next = advance_or_finish(g, h, s, p, d, record);
        run.steps.push_back(std::move(record));
        if (auto * out = std::get_if<KeyLemmaOutput>(&next)) {
            if (ClauseCheck c = verify_key_output(g, h, s, *out, d); ! c)
                throw VerificationFailure("final output fails clause " + c.clause + ": " + c.detail);
            run.result = std::move(*out);
            return run;
        }
        p = std::move(std::get<MNTPartition>(next));
        run.partitions.push_back(p);
    }
}

} // namespace rpt
