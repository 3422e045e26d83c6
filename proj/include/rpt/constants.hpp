#pragma once

// Every constant of the counting argument, evaluated in log2 scale.
// Most of them are towers of twos; exact rationals are kept alongside
// whenever they are cheap to represent.

#include "rpt/tower.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rpt {

struct LedgerValue
{
    std::string symbol;
    TowerReal log2;
    std::optional<Fraction> exact;
};

class ConstantsLedger
{
public:
    void put(std::string symbol, TowerReal log2_value, std::optional<Fraction> exact = std::nullopt);
    void put_exact(std::string symbol, const Fraction & exact);

    bool has(const std::string & symbol) const { return index_.count(symbol) != 0; }
    /// Throws PreconditionError for unknown symbols.
    const LedgerValue & at(const std::string & symbol) const;
    const TowerReal & log2(const std::string & symbol) const { return at(symbol).log2; }

    /// Insertion (evaluation) order.
    const std::vector<LedgerValue> & entries() const { return entries_; }

    /// Copies every entry of `other` under "prefix.symbol".
    void merge(const ConstantsLedger & other, const std::string & prefix);

private:
    std::vector<LedgerValue> entries_;
    std::map<std::string, std::size_t> index_;
};

// --- Building blocks (all return log2 of the constant) ------------------------

/// (4h)^{-h} ε^{C(h,2)}.
TowerReal log2_kappa_tight_pair(int h, const TowerReal & log2_eps);
/// ½ (2h)^{-2} (ε/4)^{h-1}.
TowerReal log2_density_eta(int h, const TowerReal & log2_eps);
/// ⌈log_{3/2} ε^{-2}⌉ (the value itself, not its log).
TowerReal density_depth(const TowerReal & log2_eps);
/// Weakly-restricted set size and copy threshold: η^s and η^{sh} κ_tight_pair(ε/4).
TowerReal log2_delta_weak(int h, const TowerReal & log2_eps);
TowerReal log2_kappa_weak(int h, const TowerReal & log2_eps);
/// Restricted sets of fractional size: ½ δ_weak(ε/4), κ_weak(ε/4).
TowerReal log2_delta_restricted(int h, const TowerReal & log2_eps);
TowerReal log2_kappa_restricted(int h, const TowerReal & log2_eps);
/// Exact-size restricted sets: ¼ δ_weak(ε/8), κ_weak(ε/8).
TowerReal log2_delta_exact(int h, const TowerReal & log2_eps);
TowerReal log2_kappa_exact(int h, const TowerReal & log2_eps);
/// Peeling: η^h κ_restricted(ε).
TowerReal log2_kappa_peel(int h, const TowerReal & log2_eps, const TowerReal & log2_eta);
/// φ(δ, η): exact when small enough, otherwise ln(1/η)/δ in log scale.
TowerReal log2_phi(const TowerReal & log2_delta, const TowerReal & log2_eta,
                   const std::optional<Fraction> & delta = std::nullopt,
                   const std::optional<Fraction> & eta = std::nullopt);

/// The key-lemma constants for (h, ε, η, θ), each of ε, η, θ in (0,1/2).
/// Symbols: xi, eps[t], Gamma[t,i], lambda[t,i], eps', delta', eta', phi, N,
/// Lambda[t,i], kappa_blowup, kappa_exact, kappa_peel, kappa.
ConstantsLedger build_key_ledger(int h, const Fraction & eps, const Fraction & eta, const Fraction & theta);

/// The key-lemma ledger plus the tight-pair and density constants at ε and,
/// when ε < 1/3, the path-partition constants (K, eps_path, eta_path,
/// theta_path, kappa_lengthen, N_lengthen, N_theorem) with their own nested
/// key-lemma ledger under "path.".
ConstantsLedger build_ledger(int h, const Fraction & eps, const Fraction & eta, const Fraction & theta);

/// Symbol naming helpers.
std::string sym(const std::string & base, int t);
std::string sym(const std::string & base, int t, int i);

/// Monotonicity and range checks of a key ledger; returns the first failed
/// check or an empty string.
std::string check_key_ledger(const ConstantsLedger & ledger, int h);

} // namespace rpt
