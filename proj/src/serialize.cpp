#include "rpt/serialize.hpp"
#include "rpt/error.hpp"

#include <limits>

namespace rpt {

// --- Writers -------------------------------------------------------------------

Json to_json(const VertexSet & s)
{
    Json a = Json::array();
    s.for_each([&](Vertex v) { a.push_back(v); });
    return a;
}

Json to_json(const std::vector<VertexSet> & sets)
{
    Json a = Json::array();
    for (const VertexSet & s : sets)
        a.push_back(to_json(s));
    return a;
}

Json fraction_json(const Fraction & f)
{
    return to_string(f);
}

Json integer_json(const BigInt & z)
{
    if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
        return z.convert_to<std::int64_t>();
    return to_string(z);
}

Json pattern_json(const Pattern & p)
{
    Json edges = Json::array();
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (p.adjacent(i, j))
                edges.push_back({i, j});
    Json j{{"order", p.size()}, {"edges", edges}};
    if (! p.name().empty())
        j["name"] = p.name();
    return j;
}

namespace {

const char * polarity_name(Polarity p)
{
    return p == Polarity::full ? "full" : "empty";
}

const char * mode_name(TightnessMode m)
{
    switch (m) {
    case TightnessMode::sparse:
        return "sparse";
    case TightnessMode::dense:
        return "dense";
    case TightnessMode::tight:
        return "tight";
    }
    return "tight";
}

} // namespace

Json to_json(const FullPairCertificate & c)
{
    return {{"kind", "full_pair"},   {"a", to_json(c.a)},          {"b", to_json(c.b)},
            {"c", fraction_json(c.c)}, {"eps", fraction_json(c.eps)}, {"polarity", polarity_name(c.polarity)}};
}

Json to_json(const BlowupCertificate & c)
{
    return {{"kind", "blowup"},
            {"parts", to_json(c.parts)},
            {"c", fraction_json(c.c)},
            {"eps", fraction_json(c.eps)},
            {"pattern", pattern_json(c.pattern)}};
}

Json to_json(const TightPairWitness & w)
{
    return {{"kind", "tight_witness"}, {"i", w.i},          {"j", w.j},
            {"a", to_json(w.a)},       {"b", to_json(w.b)}, {"mode", mode_name(w.mode)},
            {"eps", fraction_json(w.eps)}};
}

Json to_json(const CopyCount & c)
{
    return {{"kind", "copy_count"},
            {"count", to_string(c.count)},
            {"partial", to_string(c.partial)},
            {"bound", fraction_json(c.bound)}};
}

Json to_json(const PeelChain & c)
{
    return {{"kind", "peel_chain"},
            {"peels", to_json(c.peels)},
            {"leftover", to_json(c.leftover)},
            {"phi_bound", c.phi_bound},
            {"single_vertex_peels", c.single_vertex_peels},
            {"within_phi", c.within_phi}};
}

Json to_json(const MNTPartition & p)
{
    return {{"kind", "mnt_partition"}, {"m", p.m()},           {"n", p.n()},
            {"t", p.t()},              {"A", to_json(p.A)},    {"B", to_json(p.B)},
            {"C", to_json(p.C)},       {"D", to_json(p.D)},    {"L", to_json(p.L)}};
}

Json to_json(const StepRecord & r)
{
    return {{"kind", "step"},
            {"t", r.t},
            {"S", to_json(r.S)},
            {"L_parts", to_json(r.L_parts)},
            {"finished", r.finished},
            {"S_chain", to_json(r.S_chain)},
            {"P", to_json(r.P)},
            {"Q", to_json(r.Q)},
            {"L_prime", to_json(r.L_prime)}};
}

Json to_json(const KeyLemmaOutput & o)
{
    return {{"kind", "key_lemma_result"},
            {"S", to_json(o.S)},
            {"A", to_json(o.A)},
            {"B", to_json(o.B)},
            {"C", to_json(o.C)},
            {"unmerged_n", o.unmerged_n}};
}

Json to_json(const BlowupFound & b)
{
    return {{"kind", "blowup_found"},
            {"certificate", to_json(b.cert)},
            {"count", to_string(b.count.count)},
            {"bound", fraction_json(b.count.bound)},
            {"holds", b.count.holds}};
}

Json to_json(const PathPartition & p)
{
    return {{"kind", "path_partition"}, {"blocks", to_json(p.W)}, {"eps", fraction_json(p.eps)}};
}

Json to_json(const RestrictedPartition & p)
{
    return {{"kind", "restricted_partition"},
            {"parts", to_json(p.parts)},
            {"eps", fraction_json(p.eps)},
            {"N", integer_json(p.bound)}};
}

Json to_json(const RemovalResult & r, bool verified)
{
    Json d = r.d == Fraction(floor_of(r.d)) ? integer_json(floor_of(r.d)) : fraction_json(r.d);
    return {{"kind", "removal_result"},
            {"removed", to_json(r.removed)},
            {"parts", to_json(r.partition.parts)},
            {"eps", fraction_json(r.partition.eps)},
            {"N", integer_json(r.partition.bound)},
            {"d", d},
            {"verified", verified}};
}

Json to_json(const ConstantsLedger & ledger)
{
    Json entries = Json::array();
    for (const LedgerValue & v : ledger.entries()) {
        Json e{{"symbol", v.symbol}, {"log2", v.log2.str(15)}};
        e["exact"] = v.exact ? Json(to_string(*v.exact)) : Json(nullptr);
        entries.push_back(std::move(e));
    }
    return {{"kind", "constants"}, {"entries", entries}};
}

Json sidecar_json(const HardInstance & inst, const HardInstanceSpec & spec, const HardGraphCheck & check)
{
    Json s{{"N", spec.N},
           {"m", spec.m},
           {"n", spec.n},
           {"eps", fraction_json(spec.eps)},
           {"pattern", pattern_json(spec.pattern)},
           {"seed", spec.seed},
           {"relaxed", spec.relaxed}};
    return {{"core", to_json(inst.core)},
            {"spec", s},
            {"attempts", inst.attempts},
            {"ind", to_string(check.ind)},
            {"ind_bound", to_string(check.ind_bound)},
            {"verified_clauses", check.verified_clauses},
            {"verified", check.ok}};
}

// --- Readers -------------------------------------------------------------------

namespace {

const Json & field(const Json & j, const char * key)
{
    if (! j.is_object() || ! j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

void expect_kind(const Json & j, const char * kind)
{
    const Json & k = field(j, "kind");
    if (! k.is_string() || k.get<std::string>() != kind)
        throw ParseError(std::string("expected kind \"") + kind + "\"");
}

} // namespace

VertexSet vertex_set_from_json(const Json & j, int n)
{
    if (! j.is_array())
        throw ParseError("vertex set must be an array of ids");
    VertexSet s(n);
    for (const Json & v : j) {
        if (! v.is_number_integer())
            throw ParseError("vertex ids must be integers");
        const auto id = v.get<std::int64_t>();
        if (id < 0 || id >= n)
            throw ParseError("vertex id " + std::to_string(id) + " out of range for n=" + std::to_string(n));
        if (s.contains(static_cast<Vertex>(id)))
            throw ParseError("vertex id " + std::to_string(id) + " repeated");
        s.insert(static_cast<Vertex>(id));
    }
    return s;
}

std::vector<VertexSet> vertex_sets_from_json(const Json & j, int n)
{
    if (! j.is_array())
        throw ParseError("expected an array of vertex sets");
    std::vector<VertexSet> out;
    for (const Json & s : j)
        out.push_back(vertex_set_from_json(s, n));
    return out;
}

Fraction fraction_from_json(const Json & j)
{
    if (j.is_string())
        return parse_fraction(j.get<std::string>());
    if (j.is_number_integer())
        return Fraction(j.get<std::int64_t>());
    throw ParseError("fractions must be \"p/q\" strings or integers");
}

Pattern pattern_from_json(const Json & j)
{
    const int order = field(j, "order").get<int>();
    if (order < 1)
        throw ParseError("pattern order must be positive");
    std::vector<Edge> edges;
    for (const Json & e : field(j, "edges")) {
        if (! e.is_array() || e.size() != 2)
            throw ParseError("pattern edges must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        Pattern p(Graph(order, edges));
        if (j.contains("name"))
            p.set_name(j.at("name").get<std::string>());
        return p;
    }
    catch (const PreconditionError & e) {
        throw ParseError(std::string("bad pattern: ") + e.what());
    }
}

FullPairCertificate full_pair_from_json(const Json & j, int n)
{
    expect_kind(j, "full_pair");
    const std::string pol = field(j, "polarity").get<std::string>();
    if (pol != "full" && pol != "empty")
        throw ParseError("polarity must be \"full\" or \"empty\"");
    return {vertex_set_from_json(field(j, "a"), n), vertex_set_from_json(field(j, "b"), n),
            fraction_from_json(field(j, "c")), fraction_from_json(field(j, "eps")),
            pol == "full" ? Polarity::full : Polarity::empty};
}

BlowupCertificate blowup_from_json(const Json & j, int n)
{
    expect_kind(j, "blowup");
    return {vertex_sets_from_json(field(j, "parts"), n), fraction_from_json(field(j, "c")),
            fraction_from_json(field(j, "eps")), pattern_from_json(field(j, "pattern"))};
}

PeelChain peel_chain_from_json(const Json & j, int n)
{
    expect_kind(j, "peel_chain");
    PeelChain c;
    c.peels = vertex_sets_from_json(field(j, "peels"), n);
    c.leftover = vertex_set_from_json(field(j, "leftover"), n);
    c.phi_bound = field(j, "phi_bound").get<std::int64_t>();
    return c;
}

KeyLemmaOutput key_output_from_json(const Json & j, int n)
{
    expect_kind(j, "key_lemma_result");
    KeyLemmaOutput o;
    o.S = vertex_set_from_json(field(j, "S"), n);
    o.A = vertex_sets_from_json(field(j, "A"), n);
    o.B = vertex_sets_from_json(field(j, "B"), n);
    o.C = vertex_sets_from_json(field(j, "C"), n);
    return o;
}

MNTPartition mnt_partition_from_json(const Json & j, int n)
{
    expect_kind(j, "mnt_partition");
    MNTPartition p;
    p.A = vertex_sets_from_json(field(j, "A"), n);
    p.B = vertex_sets_from_json(field(j, "B"), n);
    p.C = vertex_sets_from_json(field(j, "C"), n);
    p.D = vertex_sets_from_json(field(j, "D"), n);
    p.L = vertex_set_from_json(field(j, "L"), n);
    return p;
}

PathPartition path_partition_from_json(const Json & j, int n)
{
    expect_kind(j, "path_partition");
    return {vertex_sets_from_json(field(j, "blocks"), n), fraction_from_json(field(j, "eps"))};
}

namespace {

BigInt bound_from_json(const Json & j)
{
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const Fraction f = parse_fraction(j.get<std::string>());
        return floor_of(f);
    }
    throw ParseError("N must be an integer");
}

} // namespace

RestrictedPartition restricted_partition_from_json(const Json & j, int n)
{
    expect_kind(j, "restricted_partition");
    return {vertex_sets_from_json(field(j, "parts"), n), fraction_from_json(field(j, "eps")),
            bound_from_json(field(j, "N"))};
}

RemovalResult removal_from_json(const Json & j, int n)
{
    expect_kind(j, "removal_result");
    RemovalResult r;
    r.removed = vertex_set_from_json(field(j, "removed"), n);
    r.partition = {vertex_sets_from_json(field(j, "parts"), n), fraction_from_json(field(j, "eps")),
                   bound_from_json(field(j, "N"))};
    r.d = fraction_from_json(field(j, "d"));
    return r;
}

} // namespace rpt
