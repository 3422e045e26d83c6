#include "rpt/constants.hpp"
#include "rpt/error.hpp"
#include "rpt/extraction.hpp"
#include "rpt/full_pair.hpp"

#include <algorithm>

namespace rpt {

void ConstantsLedger::put(std::string symbol, TowerReal log2_value, std::optional<Fraction> exact)
{
    auto it = index_.find(symbol);
    if (it != index_.end()) {
        entries_[it->second] = {std::move(symbol), std::move(log2_value), std::move(exact)};
        return;
    }
    index_.emplace(symbol, entries_.size());
    entries_.push_back({std::move(symbol), std::move(log2_value), std::move(exact)});
}

void ConstantsLedger::put_exact(std::string symbol, const Fraction & exact)
{
    put(std::move(symbol), rpt::log2(TowerReal::from_fraction(exact)), exact);
}

const LedgerValue & ConstantsLedger::at(const std::string & symbol) const
{
    auto it = index_.find(symbol);
    if (it == index_.end())
        throw PreconditionError("unknown ledger symbol " + symbol);
    return entries_[it->second];
}

void ConstantsLedger::merge(const ConstantsLedger & other, const std::string & prefix)
{
    for (const LedgerValue & v : other.entries())
        put(prefix + "." + v.symbol, v.log2, v.exact);
}

std::string sym(const std::string & base, int t)
{
    return base + "[" + std::to_string(t) + "]";
}

std::string sym(const std::string & base, int t, int i)
{
    return base + "[" + std::to_string(t) + "," + std::to_string(i) + "]";
}

// --- Building blocks ----------------------------------------------------------

namespace {

TowerReal lg(int x)
{
    return log2(TowerReal(x));
}

TowerReal times(std::int64_t k, const TowerReal & x)
{
    return TowerReal(Float(k)) * x;
}

} // namespace

TowerReal log2_kappa_tight_pair(int h, const TowerReal & log2_eps)
{
    return times(-h, lg(4 * h)) + times(std::int64_t{h} * (h - 1) / 2, log2_eps);
}

TowerReal log2_density_eta(int h, const TowerReal & log2_eps)
{
    return TowerReal(-1) - times(2, lg(2 * h)) + times(h - 1, log2_eps - TowerReal(2));
}

TowerReal density_depth(const TowerReal & log2_eps)
{
    static const Float log2_three_halves = boost::multiprecision::log(Float(1.5)) / boost::multiprecision::log(Float(2));
    const TowerReal raw = times(-2, log2_eps) / TowerReal(log2_three_halves);
    if (raw.level() == 0)
        return TowerReal(std::max(Float(1), Float(boost::multiprecision::ceil(raw.value()))));
    return raw;
}

TowerReal log2_delta_weak(int h, const TowerReal & log2_eps)
{
    return density_depth(log2_eps) * log2_density_eta(h, log2_eps);
}

TowerReal log2_kappa_weak(int h, const TowerReal & log2_eps)
{
    return times(h, density_depth(log2_eps)) * log2_density_eta(h, log2_eps) +
           log2_kappa_tight_pair(h, log2_eps - TowerReal(2));
}

TowerReal log2_delta_restricted(int h, const TowerReal & log2_eps)
{
    return TowerReal(-1) + log2_delta_weak(h, log2_eps - TowerReal(2));
}

TowerReal log2_kappa_restricted(int h, const TowerReal & log2_eps)
{
    return log2_kappa_weak(h, log2_eps - TowerReal(2));
}

TowerReal log2_delta_exact(int h, const TowerReal & log2_eps)
{
    return TowerReal(-2) + log2_delta_weak(h, log2_eps - TowerReal(3));
}

TowerReal log2_kappa_exact(int h, const TowerReal & log2_eps)
{
    return log2_kappa_weak(h, log2_eps - TowerReal(3));
}

TowerReal log2_kappa_peel(int h, const TowerReal & log2_eps, const TowerReal & log2_eta)
{
    return times(h, log2_eta) + log2_kappa_restricted(h, log2_eps);
}

TowerReal log2_phi(const TowerReal & log2_delta, const TowerReal & log2_eta, const std::optional<Fraction> & delta,
                   const std::optional<Fraction> & eta)
{
    if (delta && eta) {
        try {
            return log2(TowerReal(Float(phi(*delta, *eta, std::int64_t{1} << 20))));
        }
        catch (const RangeError &) {
        }
    }
    static const Float ln2 = boost::multiprecision::log(Float(2));
    if (log2_delta.level() == 0 && log2_eta.level() == 0 && log2_delta.value() > -60) {
        const Float d = boost::multiprecision::pow(Float(2), log2_delta.value());
        const Float p = boost::multiprecision::ceil(log2_eta.value() * ln2 / boost::multiprecision::log1p(-d));
        return log2(TowerReal(std::max(Float(1), p)));
    }
    // φ ≈ ln(1/η) / δ once δ is negligible.
    return log2(-log2_eta * TowerReal(ln2)) - log2_delta;
}

// --- Ledgers ------------------------------------------------------------------

ConstantsLedger build_key_ledger(int h, const Fraction & eps, const Fraction & eta, const Fraction & theta)
{
    if (h < 1)
        throw PreconditionError("pattern must have at least one vertex");
    const Fraction half(1, 2);
    for (const Fraction * f : {&eps, &eta, &theta})
        if (! (*f > 0 && *f < half))
            throw PreconditionError("eps, eta and theta must lie in (0,1/2)");

    ConstantsLedger L;
    const Fraction xi = theta / 4;
    L.put_exact("xi", xi);
    const TowerReal lxi = L.log2("xi");
    L.put_exact(sym("eps", h), std::min(eps, pow(xi, static_cast<unsigned>(h))));

    for (int t = h - 1; t >= 0; --t) {
        L.put_exact(sym("Gamma", t, t), 1);
        L.put_exact(sym("lambda", t, t), 1);
        const TowerReal le = L.log2(sym("eps", t + 1));
        for (int i = t - 1; i >= 0; --i) {
            L.put(sym("Gamma", t, i), L.log2(sym("lambda", t, i + 1)) + L.log2(sym("Gamma", t, i + 1)));
            const TowerReal lc = le + L.log2(sym("Gamma", t, i + 1)) - lg(3);
            L.put(sym("lambda", t, i), gamma_log2(lc, lxi));
        }
        const LedgerValue & next = L.at(sym("eps", t + 1));
        const LedgerValue & lam = L.at(sym("lambda", t, 0));
        std::optional<Fraction> ex;
        if (next.exact && lam.exact)
            ex = *next.exact * *lam.exact;
        L.put(sym("eps", t), next.log2 + lam.log2, ex);
    }

    TowerReal eps_prime, min_gamma;
    for (int t = 0; t < h; ++t) {
        TowerReal v = L.log2(sym("eps", t + 1)) + L.log2(sym("Gamma", t, 0));
        if (t == 0 || v < eps_prime)
            eps_prime = v;
        const TowerReal g = L.log2(sym("Gamma", t, 0));
        if (t == 0 || g < min_gamma)
            min_gamma = g;
    }
    L.put("eps'", eps_prime);
    L.put("delta'", log2_delta_exact(h, eps_prime));
    L.put("eta'", TowerReal(-1) + log2(TowerReal::from_fraction(eta)) + L.log2("delta'") + min_gamma);
    L.put("phi", log2_phi(L.log2("delta'"), L.log2("eta'")));
    const std::int64_t pairs = std::int64_t{h} * (h - 1) / 2;
    {
        const TowerReal n = TowerReal(Float(pairs)) + times(h - 1, exp2(L.log2("phi")));
        L.put("N", log2(n));
    }

    for (int i = 1; i <= h; ++i) {
        L.put(sym("Lambda", i, i), L.log2("delta'") + L.log2(sym("Gamma", i - 1, 0)));
        for (int t = i; t <= h - 1; ++t)
            L.put(sym("Lambda", t + 1, i), L.log2(sym("lambda", t, i)) + L.log2(sym("Lambda", t, i)));
    }

    TowerReal blow = times(h - 1, log2(TowerReal::from_fraction(1 - xi))) + times(pairs, lxi);
    for (int i = 1; i <= h; ++i)
        blow = blow + L.log2(sym("Lambda", h, i));
    L.put("kappa_blowup", blow);
    L.put("kappa_exact", log2_kappa_exact(h, eps_prime));
    L.put("kappa_peel", TowerReal(-h) + log2_kappa_peel(h, log2(TowerReal::from_fraction(eps)), L.log2("eta'")));
    L.put("kappa", std::min({L.log2("kappa_blowup"), L.log2("kappa_exact"), L.log2("kappa_peel")}));
    return L;
}

ConstantsLedger build_ledger(int h, const Fraction & eps, const Fraction & eta, const Fraction & theta)
{
    ConstantsLedger L = build_key_ledger(h, eps, eta, theta);
    const TowerReal le = log2(TowerReal::from_fraction(eps));

    L.put_exact("kappa_tight_pair", kappa_tight_pair(h, eps));
    L.put_exact("density_eta", density_step_eta(h, eps));
    L.put_exact("density_depth", density_recursion_depth(eps));
    L.put("delta_weak", log2_delta_weak(h, le));
    L.put("kappa_weak", log2_kappa_weak(h, le));

    if (eps < Fraction(1, 3) && h >= 2) {
        const BigInt K = ceil_of(4 / eps);
        const unsigned k = K.convert_to<unsigned>();
        L.put_exact("K", Fraction(K));
        const Fraction shrink = pow(Fraction(1, h * h), k); // h^{-2K}
        const Fraction eps_path = shrink * eps;
        const Fraction eta_path = Fraction(1, h * h);
        const Fraction theta_path = eps_path / 12;
        L.put_exact("eps_path", eps_path);
        L.put_exact("eta_path", eta_path);
        L.put_exact("theta_path", theta_path);

        ConstantsLedger inner = build_key_ledger(h, eps_path, eta_path, theta_path);
        L.merge(inner, "path");
        L.put("kappa_lengthen", times(std::int64_t{h}, log2(TowerReal::from_fraction(shrink))) + inner.log2("kappa"));
        L.put("N_lengthen", inner.log2("N"));
        // h^{2K} (2400 ε^{-2} + N)
        const TowerReal base = TowerReal::from_fraction(2400 / (eps * eps)) + exp2(inner.log2("N"));
        L.put("N_theorem", log2(base) - log2(TowerReal::from_fraction(shrink)));
    }
    return L;
}

std::string check_key_ledger(const ConstantsLedger & L, int h)
{
    const TowerReal third = log2(TowerReal::from_fraction(Fraction(1, 3)));
    for (int t = h - 1; t >= 0; --t) {
        if (L.log2(sym("eps", t)) > L.log2(sym("eps", t + 1)))
            return "eps[t] must not exceed eps[t+1]";
        for (int i = 0; i < t; ++i)
            if (L.log2(sym("lambda", t, i)) > third)
                return "lambda[t,i] must be at most 1/3";
    }
    for (int i = 1; i <= h; ++i)
        for (int t = i; t < h; ++t)
            if (L.log2(sym("Lambda", t + 1, i)) > L.log2(sym("Lambda", t, i)))
                return "Lambda must be non-increasing in t";
    for (const LedgerValue & v : L.entries())
        if (v.exact && *v.exact <= 0)
            return v.symbol + " must be positive";
    return {};
}

} // namespace rpt
