#pragma once

// Decidable checkers for restrictedness, tightness, fullness and blowups.

#include "rpt/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rpt {

enum class TightnessMode { sparse, dense, tight };

struct TightnessResult
{
    bool holds = false;
    /// First vertex of b with >= eps|a| neighbours in a (when sparse was tested).
    std::optional<Vertex> sparse_violator;
    /// First vertex of b with >= eps|a| non-neighbours in a (when dense was tested).
    std::optional<Vertex> dense_violator;

    explicit operator bool() const { return holds; }
};

/// sparse: every vertex of b has fewer than eps|a| neighbours in a.
/// dense: the same in the complement. tight: either.
/// Throws PreconditionError if a is empty or a, b overlap.
TightnessResult is_tight_to(const Graph & g, const VertexSet & a, const VertexSet & b,
                            const Fraction & eps, TightnessMode mode);

/// Which side witnesses restrictedness, if any.
enum class RestrictedSide { none, sparse, dense };

/// Δ(G[s]) <= eps|s| -> sparse, else Δ(Ḡ[s]) <= eps|s| -> dense, else none.
RestrictedSide restricted_side(const Graph & g, const VertexSet & s, const Fraction & eps);
bool is_restricted(const Graph & g, const VertexSet & s, const Fraction & eps);
bool is_weakly_restricted(const Graph & g, const VertexSet & s, const Fraction & eps);

/// From a weakly (eps/4)-restricted s, an eps-restricted subset of size
/// ceil(|s|/2). Keeps the ceil(|s|/2) vertices of least degree on the sparse
/// side, which is enough by a counting argument; the result is rechecked.
VertexSet extract_restricted_from_weak(const Graph & g, const VertexSet & s, const Fraction & eps);

/// Moves each set into the first earlier one whose union stays
/// eps-restricted. Order of first appearance is kept.
std::vector<VertexSet> merge_restricted(const Graph & g, std::vector<VertexSet> sets, const Fraction & eps);

// --- Fullness --------------------------------------------------------------

enum class Polarity { full, empty };

struct FullPairCertificate
{
    VertexSet a;
    VertexSet b;
    Fraction c;
    Fraction eps;
    Polarity polarity = Polarity::full;
};

enum class FullnessMethod { exact, sampled };

struct FullnessOptions
{
    FullnessMethod method = FullnessMethod::exact;
    /// Cap on the number of subsets enumerated on the cheaper side.
    std::uint64_t budget = 10'000'000;
    std::uint64_t seed = 1;
    int samples = 4000;
};

struct FullnessResult
{
    bool full = false;
    /// True only for exact checks. A sampled "full" is not a certificate.
    bool certified = false;
    /// Violating (A1, B1) with A1 ⊆ a, B1 ⊆ b, |A1| = ceil(c|a|), |B1| = ceil(c|b|).
    std::optional<std::pair<VertexSet, VertexSet>> violation;

    explicit operator bool() const { return full; }
};

/// Cost of the exact check (subsets enumerated on the cheaper side).
BigInt exact_fullness_cost(int size_a, int size_b, const Fraction & c);

/// Exact mode checks every subpair at the minimum sizes ceil(c|a|),
/// ceil(c|b|); larger subpairs follow by averaging. Throws BudgetExceeded in
/// exact mode when the enumeration is larger than options.budget.
FullnessResult is_full_pair(const Graph & g, const FullPairCertificate & cert, const FullnessOptions & options = {});

/// Edges between a and b in the given polarity (non-edges for empty).
std::size_t polar_edges_between(const Graph & g, const VertexSet & a, const VertexSet & b, Polarity polarity);

struct BlowupCertificate
{
    std::vector<VertexSet> parts;
    Fraction c;
    Fraction eps;
    /// H[{v_1..v_t}] with t = parts.size().
    Pattern pattern;
};

struct BlowupResult
{
    bool ok = false;
    std::optional<std::pair<int, int>> failing_pair;
    FullnessResult detail;

    explicit operator bool() const { return ok; }
};

/// Every pair i<j must be (c,eps)-full if v_i v_j is an edge of the pattern
/// and (c,eps)-empty otherwise.
BlowupResult verify_blowup(const Graph & g, const BlowupCertificate & cert, const FullnessOptions & options = {});

} // namespace rpt
