#pragma once

// Full subpairs of dense pairs, found by verified search.

#include "rpt/predicates.hpp"
#include "rpt/tower.hpp"

#include <optional>
#include <string>

namespace rpt {

struct Gamma
{
    /// log2 of ½(2ε)^{12/c}.
    TowerReal log2_value;
    /// Set when 12/c is an integer small enough to expand.
    std::optional<Fraction> exact;
};

/// ½(2ε)^{12/c} for c in (0,1), ε in (0,1/4).
Gamma gamma(const Fraction & c, const Fraction & eps);

/// log2 γ from log2 c and log2 ε, for arguments far below plain range.
TowerReal gamma_log2(const TowerReal & log2_c, const TowerReal & log2_eps);

struct FullPairParams
{
    Fraction c;
    Fraction eps;
    /// Size target; defaults to the exact γ(c, ε) when representable.
    std::optional<Fraction> gamma;
    /// empty looks for a full pair of non-edges.
    Polarity polarity = Polarity::full;
};

struct FullPairSearch
{
    FullPairCertificate cert;
    /// max(1, ⌈γ|a|⌉) and max(1, ⌈γ|b|⌉).
    int floor_a = 1;
    int floor_b = 1;
    /// Both sides reached their floors.
    bool meets_floor = false;
    /// iterative, single_edge or exhaustive.
    std::string strategy;
};

/// Given at least 2ε|a||b| edges between disjoint a and b, a (c,ε)-full
/// subpair that passes the exact check. Throws PreconditionError when the
/// density is unmet and SearchFailure when nothing certifies within budget.
FullPairSearch find_full_pair(const Graph & g, const VertexSet & a, const VertexSet & b, const FullPairParams & p,
                              const FullnessOptions & options = {});

} // namespace rpt
