#pragma once

// Path-partitions, their lengthening by the key lemma, and the removal
// theorem built on top of them.

#include "rpt/key_lemma.hpp"

#include <optional>
#include <vector>

namespace rpt {

/// Blocks W_0..W_k.
struct PathPartition
{
    std::vector<VertexSet> W;
    Fraction eps;

    int k() const { return static_cast<int>(W.size()) - 1; }
};

/// Blocks nonempty, disjoint, union `within` (default V(g)); for i < k:
/// W_i eps-restricted, |W_i| >= 12|W_k|, W_{i+1} ∪ ... ∪ W_k (eps/12)-tight
/// to W_i. Clause ids: partition, restricted, sizes, tightness.
ClauseCheck verify_path_partition(const Graph & g, const PathPartition & p,
                                  std::optional<VertexSet> within = std::nullopt);

struct RestrictedPartition
{
    std::vector<VertexSet> parts;
    Fraction eps;
    BigInt bound;
};

/// Parts nonempty, disjoint, union `within` (default V(g)), each
/// eps-restricted, at most `bound` of them.
ClauseCheck verify_restricted_partition(const Graph & g, const RestrictedPartition & p,
                                        std::optional<VertexSet> within = std::nullopt);

/// ⌈4/ε⌉.
int path_length(const Fraction & eps);

/// 2400 ε^{-2}, rounded down.
BigInt base_part_bound(const Fraction & eps);

/// An eps-restricted partition of the union of a verified path-partition
/// with at most 2400 eps^{-2} parts: the restricted blocks, a greedy cover
/// of the rest, a merge pass, then exhaustive search on at most 12 vertices.
RestrictedPartition base_partition(const Graph & g, const PathPartition & p, const Fraction & eps);

struct TheoremOptions
{
    ParamMode mode = ParamMode::practical;
    Fraction lambda{1, 1024};
    Fraction delta_prime{1, 16};
    std::optional<Fraction> eta_prime;
    FullnessOptions fullness;
};

/// The key-lemma schedule at (h^{-2K} ε, h^{-2}, h^{-2K} ε / 12).
ParamSchedule lengthening_schedule(int h, const Fraction & eps, const TheoremOptions & options);

/// h^{2(K-k)} (2400 ε^{-2} + N) - N, rounded down.
BigInt lengthening_part_bound(int h, const Fraction & eps, int k, const BigInt & N);

struct LevelRecord
{
    int k = 0;
    /// Rows returned by the key lemma (0 at the base level).
    int m = 0;
    int removed = 0;
    Fraction budget;
    int parts = 0;
    BigInt bound;
};

struct RemovalResult
{
    VertexSet removed;
    RestrictedPartition partition;
    Fraction d;
    /// One entry per recursion node, children before parents.
    std::vector<LevelRecord> trace;
};

/// |S| <= d and the partition covers exactly V(g) \ S.
ClauseCheck verify_removal(const Graph & g, const RemovalResult & r);

/// From a verified (k, h^{2(k-K)} ε)-path-partition of the union of its
/// blocks, removes at most h^{-2k} d vertices and partitions the rest into at
/// most lengthening_part_bound ε-restricted sets. `key` must come from
/// lengthening_schedule.
RemovalResult lengthen(const Graph & g, const Pattern & h, const PathPartition & p, const Fraction & eps,
                       const ParamSchedule & key, const Fraction & d);

/// Removes at most d vertices so that the rest is (N, ε)-restricted with
/// N = h^{2K}(2400 ε^{-2} + N_key). ε in (0,1/3), h >= 2. Paper mode first
/// checks ind(g) <= h^{-2Kh} κ_key d^h.
RemovalResult run_main_theorem(const Graph & g, const Pattern & h, const Fraction & eps, const Fraction & d,
                               const TheoremOptions & options = {});

} // namespace rpt
