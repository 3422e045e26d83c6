#pragma once

// JSON forms of every certificate and result. Fractions are "p/q" strings,
// vertex sets are sorted id arrays.

#include "rpt/assembly.hpp"
#include "rpt/adversarial.hpp"
#include "rpt/constants.hpp"

#include <json.hpp>

namespace rpt {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet & s);
Json to_json(const std::vector<VertexSet> & sets);
Json fraction_json(const Fraction & f);
/// A plain number when it fits in 64 bits, a decimal string otherwise.
Json integer_json(const BigInt & z);
Json pattern_json(const Pattern & p);

Json to_json(const FullPairCertificate & c);
Json to_json(const BlowupCertificate & c);
Json to_json(const TightPairWitness & w);
Json to_json(const CopyCount & c);
Json to_json(const PeelChain & c);
Json to_json(const MNTPartition & p);
Json to_json(const StepRecord & r);
Json to_json(const KeyLemmaOutput & o);
Json to_json(const BlowupFound & b);
Json to_json(const PathPartition & p);
Json to_json(const RestrictedPartition & p);
/// `verified` records whether verify_removal passed.
Json to_json(const RemovalResult & r, bool verified);
Json to_json(const ConstantsLedger & ledger);
Json sidecar_json(const HardInstance & inst, const HardInstanceSpec & spec, const HardGraphCheck & check);

// Readers throw ParseError on malformed input; vertex ids are checked
// against the universe n.
VertexSet vertex_set_from_json(const Json & j, int n);
std::vector<VertexSet> vertex_sets_from_json(const Json & j, int n);
Fraction fraction_from_json(const Json & j);
Pattern pattern_from_json(const Json & j);
FullPairCertificate full_pair_from_json(const Json & j, int n);
BlowupCertificate blowup_from_json(const Json & j, int n);
PeelChain peel_chain_from_json(const Json & j, int n);
KeyLemmaOutput key_output_from_json(const Json & j, int n);
MNTPartition mnt_partition_from_json(const Json & j, int n);
PathPartition path_partition_from_json(const Json & j, int n);
RestrictedPartition restricted_partition_from_json(const Json & j, int n);
RemovalResult removal_from_json(const Json & j, int n);

} // namespace rpt
