#pragma once

// Many labelled copies of H across given parts, or a tight pair.

#include "rpt/predicates.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace rpt {

/// eps[t-1] = ε_t and delta[t-1] = δ_t for t = 1..h-1.
struct EmbeddingParams
{
    std::vector<Fraction> eps;
    std::vector<Fraction> delta;

    static EmbeddingParams uniform(int h, const Fraction & eps, const Fraction & delta);
};

/// b ⊆ D_j is sparse (edge v_i v_j) or dense (non-edge) to a ⊆ D_i.
/// i and j are 1-based part indices with i < j.
struct TightPairWitness
{
    int i = 0;
    int j = 0;
    VertexSet a;
    VertexSet b;
    TightnessMode mode = TightnessMode::sparse;
    /// Threshold the tightness was checked at.
    Fraction eps;
};

struct CopyCount
{
    /// Exact count_embeddings_into_parts.
    BigInt count;
    /// Copies found by the recursion itself; never exceeds count.
    BigInt partial;
    /// ∏(1-δ_t)ε_t^t ∏|D_i|.
    Fraction bound;
};

using EmbeddingOutcome = std::variant<TightPairWitness, CopyCount>;

/// The witness arm is rechecked with is_tight_to and against the size
/// thresholds on the original parts; the count arm asserts count >= bound.
EmbeddingOutcome witness_or_count(const Graph & g, const Pattern & h, std::span<const VertexSet> parts,
                                  const EmbeddingParams & p);

/// Checks a witness against the original parts: containment, tightness at
/// the recorded threshold and both size floors.
bool verify_tight_witness(const Graph & g, const Pattern & h, std::span<const VertexSet> parts,
                          const EmbeddingParams & p, const TightPairWitness & w);

/// (4h)^{-h} ε^{C(h,2)}.
Fraction kappa_tight_pair(int h, const Fraction & eps);

struct TightPair
{
    TightPairWitness witness;
    /// The partition used to find it, in host ids.
    std::vector<VertexSet> parts;
    /// (2h)^{-2} ε^{h-1} |g|.
    Fraction size_floor;
    /// Only promised once |g| >= 2h.
    bool size_guarantee = false;
};

struct ManyCopies
{
    BigInt count;
    /// κ |g|^h for the κ of kappa_tight_pair.
    Fraction threshold;
};

using TightPairOutcome = std::variant<TightPair, ManyCopies>;

/// Splits V(g) into h blocks of ⌊n/h⌋ consecutive ids (or, with a seed, of
/// a shuffled order) and runs witness_or_count with ε_t = ε, δ_t = 1/2.
TightPairOutcome find_tight_pair(const Graph & g, const Pattern & h, const Fraction & eps,
                                 std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct BlowupCountCheck
{
    bool holds = false;
    BigInt count;
    Fraction bound;
};

/// Count of copies across the parts of a verified (ε^h, ε)-blowup against
/// (1-ε)^{e} ε^{C(h,2)} ∏|D_i|, with e = h-1 by default.
/// Throws PreconditionError if the certificate does not verify.
BlowupCountCheck blowup_copy_bound_check(const Graph & g, const BlowupCertificate & cert,
                                         std::optional<int> exponent = std::nullopt);

} // namespace rpt
