#pragma once

// The iterative (m,n,t)-partition procedure: remove at most d vertices and
// split the rest into restricted sets and tight pairs, or find a blowup of H.

#include "rpt/constants.hpp"
#include "rpt/embedding.hpp"
#include "rpt/extraction.hpp"
#include "rpt/full_pair.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rpt {

enum class ParamMode { practical, paper };

/// Every threshold the procedure and its verifier use, as exact rationals.
struct ParamSchedule
{
    ParamMode mode = ParamMode::practical;
    int h = 0;
    Fraction eps, eta, theta, xi;
    /// eps_t[t] for t = 0..h.
    std::vector<Fraction> eps_t;
    /// lambda[t][i], Gamma[t][i] for 0 <= i <= t < h.
    std::vector<std::vector<Fraction>> lambda, Gamma;
    /// Lambda[t][i] for 1 <= i <= t <= h (row and column 0 unused).
    std::vector<std::vector<Fraction>> Lambda;
    Fraction eps_prime, delta_prime, eta_prime;
    std::int64_t phi = 0;
    BigInt N;
    /// Present in paper mode: the unclamped values.
    std::optional<ConstantsLedger> ledger;
    FullnessOptions fullness;
    int extraction_depth = 8;

    /// Defaults: ε = η = θ = 1/4, λ = 1/1024, δ' = 1/16, η' from its formula.
    static ParamSchedule practical(int h, const Fraction & eps = Fraction(1, 4), const Fraction & eta = Fraction(1, 4),
                                   const Fraction & theta = Fraction(1, 4), const Fraction & lambda = Fraction(1, 1024),
                                   const Fraction & delta_prime = Fraction(1, 16),
                                   std::optional<Fraction> eta_prime = std::nullopt);

    /// Ledger constants; anything below 2^-64 is replaced by 2^-64 and φ is
    /// capped at 2^62. Both substitutions leave every threshold unchanged
    /// on graphs with fewer than 2^62 vertices and d < 2^62.
    static ParamSchedule paper(int h, const Fraction & eps, const Fraction & eta, const Fraction & theta);

    /// ⅓ ε_{t+1} Γ_{t,i}: the fullness level of the i-th chain step at stage t.
    Fraction chain_c(int t, int i) const;
};

/// Rows A/B, C, D and the leftover L.
struct MNTPartition
{
    std::vector<VertexSet> A, B, C, D;
    VertexSet L;
    int t() const { return static_cast<int>(D.size()); }
    int m() const { return static_cast<int>(A.size()); }
    int n() const { return static_cast<int>(C.size()); }

    static MNTPartition trivial(const Graph & g);
};

struct ClauseCheck
{
    bool ok = true;
    /// counts, restricted, tight_pairs, blowup, sizes, partition.
    std::string clause;
    std::string detail;
    /// Some fullness check exceeded the exact budget and was sampled.
    bool sampled = false;

    explicit operator bool() const { return ok; }
};

ClauseCheck verify_mnt_partition(const Graph & g, const Pattern & h, const ParamSchedule & s, const MNTPartition & p,
                                 const Fraction & d);

/// Objects built by one iteration.
struct StepRecord
{
    int t = 0;
    VertexSet S;
    std::vector<VertexSet> L_parts;
    bool finished = false;
    /// S_0 ⊃ S_1 ⊃ ... ⊃ S_t (empty when finished).
    std::vector<VertexSet> S_chain;
    /// P_1..P_{t+1}.
    std::vector<VertexSet> P;
    std::vector<VertexSet> Q;
    VertexSet L_prime;
};

struct KeyLemmaOutput
{
    VertexSet S;
    std::vector<VertexSet> A, B, C;
    /// C rows before merging adjacent restricted unions.
    int unmerged_n = 0;
};

struct BlowupFound
{
    BlowupCertificate cert;
    BlowupCountCheck count;
};

using StepOutcome = std::variant<KeyLemmaOutput, MNTPartition>;

/// One iteration from a verified partition with t < h.
StepOutcome advance_or_finish(const Graph & g, const Pattern & h, const ParamSchedule & s, const MNTPartition & p,
                              const Fraction & d, StepRecord & record);

/// Final-output clauses: |S| <= d, rows partition V \ S, A and C nonempty and
/// ε-restricted, |B| <= η|A|, B θ-tight to A, m <= C(h,2), n <= N.
ClauseCheck verify_key_output(const Graph & g, const Pattern & h, const ParamSchedule & s, const KeyLemmaOutput & out,
                              const Fraction & d);

struct KeyLemmaRun
{
    std::variant<KeyLemmaOutput, BlowupFound> result;
    std::vector<StepRecord> steps;
    /// Every partition the run passed through, starting from the trivial one.
    std::vector<MNTPartition> partitions;
};

/// Paper mode first checks ind(g) <= κ d^h and throws PreconditionError otherwise.
KeyLemmaRun run_key_lemma(const Graph & g, const Pattern & h, const ParamSchedule & s, const Fraction & d);

} // namespace rpt
