#pragma once

// Low- or high-density subsets, exact-size restricted sets and peeling.

#include "rpt/embedding.hpp"

#include <cstdint>
#include <vector>

namespace rpt {

/// Least p >= 1 with (1-δ)^p <= η, by exact rational arithmetic.
/// Throws PreconditionError outside (0,1) and RangeError past max_p.
std::int64_t phi(const Fraction & delta, const Fraction & eta, std::int64_t max_p = std::int64_t{1} << 24);

/// Least s with (3/2)^s >= ε^{-2}.
int density_recursion_depth(const Fraction & eps);

/// ½ (2h)^{-2} (ε/4)^{h-1}.
Fraction density_step_eta(int h, const Fraction & eps);

struct ExtractionBudget
{
    Fraction eps1;
    Fraction eps2;
    int depth = 1;
    Fraction eta;

    /// depth and eta from ε = min(ε1, ε2).
    static ExtractionBudget paper(int h, const Fraction & eps1, const Fraction & eps2);
    static ExtractionBudget practical(int h, const Fraction & eps1, const Fraction & eps2, int depth);
};

struct DensitySubset
{
    VertexSet set;
    /// density <= ε1 when true, otherwise density >= 1-ε2.
    bool low = true;
    /// The recursion never hit the copy-count arm or a size precondition,
    /// so |set| >= η^depth |g| is promised (and was checked).
    bool guarantee = false;
    /// Merges whose hypotheses held and whose arithmetic was asserted.
    int merges_checked = 0;
};

/// A subset with edge density <= ε1 or >= 1-ε2.
DensitySubset find_low_or_high_density_subset(const Graph & g, const Pattern & h, const ExtractionBudget & budget);

enum class TrimSide { low, high };

/// Exactly k vertices of s. low deletes a max-degree vertex at a time and
/// never raises the density; high deletes a min-degree vertex and never
/// lowers it while k >= 2. Ties go to the lowest id.
VertexSet trim_to_size(const Graph & g, const VertexSet & s, int k, TrimSide side);

enum class ExtractMethod { pipeline, greedy, search };

struct ExactRestricted
{
    VertexSet set;
    ExtractMethod method = ExtractMethod::pipeline;
    /// Set only when the pipeline ran with its guarantee intact.
    bool guarantee = false;
};

/// An ε-restricted set of size exactly ⌈δ|g|⌉, δ in (0,1/4). Runs the
/// density pipeline at ε/8, then greedy construction, then a bounded search.
/// Throws SearchFailure if none succeeds.
ExactRestricted extract_restricted_exact(const Graph & g, const Pattern & h, const Fraction & eps,
                                         const Fraction & delta, const ExtractionBudget & budget,
                                         std::uint64_t search_budget = 2'000'000);

/// Greedy maximal ε-restricted subset of s on the better side.
VertexSet greedy_restricted_subset(const Graph & g, const VertexSet & s, const Fraction & eps);

/// A k-subset of s whose max degree in G or in the complement is at most
/// ⌊εk⌋, by backtracking over at most `budget` nodes.
std::optional<VertexSet> search_restricted_of_size(const Graph & g, const VertexSet & s, int k,
                                                   const Fraction & eps, std::uint64_t budget);

struct PeelChain
{
    /// U_{i-1} \ U_i for i = 1..p.
    std::vector<VertexSet> peels;
    VertexSet leftover;
    std::int64_t phi_bound = 0;
    /// Peels that fell back to a single vertex.
    int single_vertex_peels = 0;
    /// Every peel had size >= δ|U_{i-1}|, hence p <= φ(δ,η).
    bool within_phi = true;
};

/// Peels ε-restricted sets off V(g) until at most η|g| vertices remain.
/// phi_bound replaces φ(δ,η) when that is too large to evaluate exactly.
PeelChain peel_chain(const Graph & g, const Pattern & h, const Fraction & eps, const Fraction & eta,
                     const Fraction & delta, const ExtractionBudget & budget,
                     std::optional<std::int64_t> phi_bound = std::nullopt);

/// Partition checks: disjoint peels covering V \ leftover, each ε-restricted,
/// |leftover| <= η|g|.
bool verify_peel_chain(const Graph & g, const PeelChain & chain, const Fraction & eps, const Fraction & eta);

} // namespace rpt
