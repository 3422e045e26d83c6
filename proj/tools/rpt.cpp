// Command-line front end. Every pipeline subcommand re-verifies its own
// output before exiting 0; exit 2 means a check ran and found the object
// invalid, exit 1 means an error.

#include "rpt/assembly.hpp"
#include "rpt/adversarial.hpp"
#include "rpt/constants.hpp"
#include "rpt/error.hpp"
#include "rpt/extraction.hpp"
#include "rpt/random.hpp"
#include "rpt/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace rpt;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInvalid = 2;

struct Common
{
    bool json = false;
    unsigned threads = 0;
    std::uint64_t seed = 1;
};

std::string read_text(const std::string & path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (! in)
        throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string & path)
{
    return parse_graph(read_text(path));
}

Pattern load_pattern(const std::string & spec)
{
    try {
        return named_pattern(spec);
    }
    catch (const ParseError &) {
    }
    Pattern p(parse_edge_list(read_text(spec)));
    p.set_name(spec);
    return p;
}

Fraction flag_fraction(const std::string & flag, const std::string & text)
{
    try {
        return parse_fraction(text);
    }
    catch (const ParseError & e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

std::optional<Fraction> flag_fraction(const std::string & flag, const std::optional<std::string> & text)
{
    if (! text)
        return std::nullopt;
    return flag_fraction(flag, *text);
}

void emit(const Common & c, const Json & j, const std::string & human)
{
    if (c.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << human << '\n';
}

std::string describe(const ClauseCheck & c)
{
    return c ? "valid" : "invalid: " + c.clause + ": " + c.detail;
}

// --- Parameter bundles shared by several subcommands ----------------------------

struct ScheduleFlags
{
    std::string mode = "practical";
    std::string eps = "1/4", eta = "1/4", theta = "1/4";
    std::optional<std::string> lambda, delta_prime, eta_prime;
    std::uint64_t fullness_budget = 10'000'000;

    void add(CLI::App * app, bool with_eta_theta)
    {
        app->add_option("--mode", mode, "paper or practical")->check(CLI::IsMember({"paper", "practical"}));
        app->add_option("--eps", eps, "restriction level");
        if (with_eta_theta) {
            app->add_option("--eta", eta, "size ratio of tight pairs");
            app->add_option("--theta", theta, "tightness level");
        }
        app->add_option("--lambda", lambda, "practical size factor of each chain step");
        app->add_option("--delta-prime", delta_prime, "practical seed-set fraction");
        app->add_option("--eta-prime", eta_prime, "practical leftover fraction");
        app->add_option("--fullness-budget", fullness_budget, "cap on exact fullness enumeration");
    }

    ParamMode param_mode() const
    {
        if (mode == "paper" && (lambda || delta_prime || eta_prime))
            throw CLI::ValidationError("--mode", "paper mode takes every constant from the ledger; drop the overrides");
        return mode == "paper" ? ParamMode::paper : ParamMode::practical;
    }

    FullnessOptions fullness(std::uint64_t seed) const
    {
        FullnessOptions f;
        f.budget = fullness_budget;
        f.seed = seed;
        return f;
    }

    ParamSchedule schedule(int h, std::uint64_t seed) const
    {
        const Fraction e = flag_fraction("--eps", eps);
        const Fraction n = flag_fraction("--eta", eta);
        const Fraction t = flag_fraction("--theta", theta);
        ParamSchedule s =
            param_mode() == ParamMode::paper
                ? ParamSchedule::paper(h, e, n, t)
                : ParamSchedule::practical(h, e, n, t, flag_fraction("--lambda", lambda).value_or(Fraction(1, 1024)),
                                           flag_fraction("--delta-prime", delta_prime).value_or(Fraction(1, 16)),
                                           flag_fraction("--eta-prime", eta_prime));
        s.fullness = fullness(seed);
        return s;
    }

    TheoremOptions theorem(std::uint64_t seed) const
    {
        TheoremOptions o;
        o.mode = param_mode();
        if (lambda)
            o.lambda = flag_fraction("--lambda", *lambda);
        if (delta_prime)
            o.delta_prime = flag_fraction("--delta-prime", *delta_prime);
        o.eta_prime = flag_fraction("--eta-prime", eta_prime);
        o.fullness = fullness(seed);
        return o;
    }
};

// --- count ------------------------------------------------------------------------

struct CountCmd
{
    std::string graph, pattern;

    int run(const Common & c) const
    {
        const Graph g = load_graph(graph);
        const Pattern h = load_pattern(pattern);
        const BigInt n = count_induced_copies(g, h);
        emit(c, {{"kind", "count"}, {"pattern", pattern_json(h)}, {"n", g.order()}, {"count", to_string(n)}},
             "ind = " + to_string(n));
        return kOk;
    }
};

// --- check ------------------------------------------------------------------------

struct CheckCmd
{
    std::string graph, cert;
    std::optional<std::string> pattern, d;
    std::optional<std::string> eta_peel;
    ScheduleFlags params;
    bool sampled = false;

    int run(const Common & c) const
    {
        const Graph g = load_graph(graph);
        const int n = g.order();
        Json j;
        try {
            j = Json::parse(read_text(cert));
        }
        catch (const Json::parse_error & e) {
            throw ParseError(std::string("certificate is not JSON: ") + e.what());
        }
        if (! j.is_object() || ! j.contains("kind"))
            throw ParseError("certificate has no \"kind\"");
        const std::string kind = j.at("kind").get<std::string>();
        FullnessOptions fo = params.fullness(c.seed);
        if (sampled)
            fo.method = FullnessMethod::sampled;

        ClauseCheck result;
        if (kind == "full_pair") {
            const FullnessResult r = is_full_pair(g, full_pair_from_json(j, n), fo);
            if (! r)
                result = {false, "fullness", "a violating subpair exists"};
            else if (! r.certified)
                result.detail = "sampled only";
        }
        else if (kind == "blowup") {
            const BlowupResult r = verify_blowup(g, blowup_from_json(j, n), fo);
            if (! r)
                result = {false, "blowup",
                          "pair (" + std::to_string(r.failing_pair->first + 1) + "," +
                              std::to_string(r.failing_pair->second + 1) + ") fails"};
        }
        else if (kind == "restricted_set") {
            const VertexSet s = vertex_set_from_json(j.at("set"), n);
            if (! is_restricted(g, s, fraction_from_json(j.at("eps"))))
                result = {false, "restricted", "set is not eps-restricted"};
        }
        else if (kind == "density_subset") {
            const VertexSet s = vertex_set_from_json(j.at("set"), n);
            const Fraction dens = edge_density(g, s);
            const bool low = j.at("low").get<bool>();
            if (s.empty() || (low ? dens > fraction_from_json(j.at("eps1")) : dens < 1 - fraction_from_json(j.at("eps2"))))
                result = {false, "density", "density claim fails"};
        }
        else if (kind == "peel_chain") {
            const Fraction e = flag_fraction("--eps", params.eps);
            const Fraction eta = flag_fraction("--eta", eta_peel.value_or(params.eta));
            if (! verify_peel_chain(g, peel_chain_from_json(j, n), e, eta))
                result = {false, "peel_chain", "partition, restrictedness or leftover size fails"};
        }
        else if (kind == "restricted_partition")
            result = verify_restricted_partition(g, restricted_partition_from_json(j, n));
        else if (kind == "removal_result")
            result = verify_removal(g, removal_from_json(j, n));
        else if (kind == "path_partition")
            result = verify_path_partition(g, path_partition_from_json(j, n));
        else if (kind == "key_lemma_result" || kind == "mnt_partition") {
            if (! pattern || ! d)
                throw CLI::ValidationError("--pattern", kind + " certificates need --pattern and --d");
            const Pattern h = load_pattern(*pattern);
            const ParamSchedule s = params.schedule(h.size(), c.seed);
            const Fraction budget = flag_fraction("--d", *d);
            result = kind == "mnt_partition" ? verify_mnt_partition(g, h, s, mnt_partition_from_json(j, n), budget)
                                             : verify_key_output(g, h, s, key_output_from_json(j, n), budget);
        }
        else
            throw ParseError("unsupported certificate kind \"" + kind + "\"");

        emit(c,
             {{"kind", "check"},
              {"certificate", kind},
              {"valid", result.ok},
              {"clause", result.clause},
              {"detail", result.detail}},
             kind + ": " + describe(result));
        return result ? kOk : kInvalid;
    }
};

// --- extract ----------------------------------------------------------------------

struct ExtractCmd
{
    std::string graph, pattern = "K3", what = "restricted";
    std::string eps = "1/4", eta = "1/4", delta = "1/8";
    std::optional<std::string> eps2;
    int depth = 0;

    int run(const Common & c) const
    {
        const Graph g = load_graph(graph);
        const Pattern h = load_pattern(pattern);
        const Fraction e = flag_fraction("--eps", eps);
        const int hs = h.size();
        auto budget_for = [&](const Fraction & e1, const Fraction & e2) {
            return depth > 0 ? ExtractionBudget::practical(hs, e1, e2, depth) : ExtractionBudget::paper(hs, e1, e2);
        };

        if (what == "density") {
            const Fraction e2 = flag_fraction("--eps2", eps2.value_or(eps));
            const DensitySubset s = find_low_or_high_density_subset(g, h, budget_for(e, e2));
            const Fraction dens = edge_density(g, s.set);
            emit(c,
                 {{"kind", "density_subset"},
                  {"set", to_json(s.set)},
                  {"low", s.low},
                  {"density", fraction_json(dens)},
                  {"eps1", fraction_json(e)},
                  {"eps2", fraction_json(e2)},
                  {"guarantee", s.guarantee},
                  {"merges_checked", s.merges_checked}},
                 std::string(s.low ? "low" : "high") + "-density subset of size " + std::to_string(s.set.size()) +
                     ", density " + to_string(dens));
            return kOk;
        }
        if (what == "restricted") {
            const Fraction dl = flag_fraction("--delta", delta);
            const ExactRestricted r = extract_restricted_exact(g, h, e, dl, budget_for(e / 8, e / 8));
            static const char * methods[] = {"pipeline", "greedy", "search"};
            emit(c,
                 {{"kind", "restricted_set"},
                  {"set", to_json(r.set)},
                  {"eps", fraction_json(e)},
                  {"method", methods[static_cast<int>(r.method)]},
                  {"guarantee", r.guarantee}},
                 "restricted set of size " + std::to_string(r.set.size()) + " via " +
                     methods[static_cast<int>(r.method)]);
            return kOk;
        }
        if (what == "peel") {
            const Fraction dl = flag_fraction("--delta", delta);
            const Fraction et = flag_fraction("--eta", eta);
            const PeelChain chain = peel_chain(g, h, e, et, dl, budget_for(e / 8, e / 8));
            emit(c, to_json(chain),
                 std::to_string(chain.peels.size()) + " peels, leftover " + std::to_string(chain.leftover.size()) +
                     ", phi bound " + std::to_string(chain.phi_bound));
            return kOk;
        }
        if (what == "tight-pair") {
            const TightPairOutcome r = find_tight_pair(g, h, e, c.seed);
            if (const auto * tp = std::get_if<TightPair>(&r)) {
                emit(c,
                     {{"kind", "tight_pair"},
                      {"witness", to_json(tp->witness)},
                      {"parts", to_json(tp->parts)},
                      {"size_floor", fraction_json(tp->size_floor)},
                      {"size_guarantee", tp->size_guarantee}},
                     "tight pair between parts " + std::to_string(tp->witness.i) + " and " +
                         std::to_string(tp->witness.j));
            }
            else {
                const auto & mc = std::get<ManyCopies>(r);
                emit(c,
                     {{"kind", "many_copies"},
                      {"count", to_string(mc.count)},
                      {"threshold", fraction_json(mc.threshold)}},
                     "copies " + to_string(mc.count) + " >= " + to_string(mc.threshold));
            }
            return kOk;
        }
        throw CLI::ValidationError("--what", "unknown extraction " + what);
    }
};

// --- keylemma ----------------------------------------------------------------------

struct KeyLemmaCmd
{
    std::string graph, pattern, d = "0";
    std::optional<std::string> transcript;
    ScheduleFlags params;

    int run(const Common & c) const
    {
        const Graph g = load_graph(graph);
        const Pattern h = load_pattern(pattern);
        const Fraction budget = flag_fraction("--d", d);
        const ParamSchedule s = params.schedule(h.size(), c.seed);
        const KeyLemmaRun run = run_key_lemma(g, h, s, budget);
        if (transcript) {
            std::ofstream out(*transcript);
            if (! out)
                throw Error("cannot write " + *transcript);
            for (const StepRecord & r : run.steps)
                out << Json(to_json(r)).dump() << '\n';
        }
        if (const auto * o = std::get_if<KeyLemmaOutput>(&run.result)) {
            const ClauseCheck v = verify_key_output(g, h, s, *o, budget);
            Json j = to_json(*o);
            j["steps"] = run.steps.size();
            j["verified"] = v.ok;
            emit(c, j,
                 "removed " + std::to_string(o->S.size()) + ", m = " + std::to_string(o->A.size()) +
                     ", n = " + std::to_string(o->C.size()) + ", " + describe(v));
            return v ? kOk : kError;
        }
        const auto & b = std::get<BlowupFound>(run.result);
        const bool ok = verify_blowup(g, b.cert, s.fullness).ok && b.count.holds;
        Json j = to_json(b);
        j["steps"] = run.steps.size();
        j["verified"] = ok;
        emit(c, j, "blowup of H found, " + to_string(b.count.count) + " copies across its parts");
        return ok ? kOk : kError;
    }
};

// --- theorem ------------------------------------------------------------------------

struct TheoremCmd
{
    std::string graph, pattern, d = "0";
    ScheduleFlags params;

    int run(const Common & c) const
    {
        const Graph g = load_graph(graph);
        const Pattern h = load_pattern(pattern);
        const Fraction e = flag_fraction("--eps", params.eps);
        const Fraction budget = flag_fraction("--d", d);
        const RemovalResult r = run_main_theorem(g, h, e, budget, params.theorem(c.seed));
        const ClauseCheck v = verify_removal(g, r);
        emit(c, to_json(r, v.ok),
             "removed " + std::to_string(r.removed.size()) + ", " + std::to_string(r.partition.parts.size()) +
                 " restricted parts (bound " + to_string(r.partition.bound) + "), " + describe(v));
        return v ? kOk : kError;
    }
};

// --- counterexample -------------------------------------------------------------------

struct CounterexampleCmd
{
    int N = 1, m = 20, n = 20;
    std::string eps = "1/20", pattern = "K2";
    bool relaxed = false;
    std::optional<std::string> out;

    int run(const Common & c) const
    {
        HardInstanceSpec spec;
        spec.N = N;
        spec.m = m;
        spec.n = n;
        spec.eps = flag_fraction("--eps", eps);
        spec.pattern = load_pattern(pattern);
        spec.seed = c.seed;
        spec.relaxed = relaxed;
        const HardInstance inst = generate_hard_graph(spec);
        const HardGraphCheck check = verify_hard_graph(inst.graph, inst.core, spec);
        if (out) {
            std::ofstream f(*out);
            if (! f)
                throw Error("cannot write " + *out);
            f << to_edge_list(inst.graph);
        }
        std::string human = "generated n = " + std::to_string(n) + " after " + std::to_string(inst.attempts) +
                            " attempts; ind = " + to_string(check.ind) + " <= " + to_string(check.ind_bound);
        if (! check.ok)
            human += "; failed " + check.failed_clause;
        emit(c, sidecar_json(inst, spec, check), human);
        return check.ok ? kOk : kInvalid;
    }
};

// --- constants ------------------------------------------------------------------------

struct ConstantsCmd
{
    int h = 2;
    std::string eps = "1/4", eta = "1/4", theta = "1/4";
    bool key_only = false;

    int run(const Common & c) const
    {
        const Fraction e = flag_fraction("--eps", eps);
        const Fraction n = flag_fraction("--eta", eta);
        const Fraction t = flag_fraction("--theta", theta);
        const ConstantsLedger L = key_only ? build_key_ledger(h, e, n, t) : build_ledger(h, e, n, t);
        const std::string problem = check_key_ledger(L, h);
        Json j = to_json(L);
        j["h"] = h;
        j["eps"] = fraction_json(e);
        j["eta"] = fraction_json(n);
        j["theta"] = fraction_json(t);
        j["checks"] = problem.empty() ? "passed" : problem;
        std::ostringstream human;
        for (const LedgerValue & v : L.entries())
            human << v.symbol << "\tlog2 = " << v.log2.str(15) << (v.exact ? "\t= " + to_string(*v.exact) : "")
                  << '\n';
        human << "checks: " << (problem.empty() ? "passed" : problem);
        emit(c, j, human.str());
        return problem.empty() ? kOk : kError;
    }
};

// --- oracle ---------------------------------------------------------------------------

struct OracleCmd
{
    std::optional<std::string> graph;
    int N = 2;
    std::string eps = "0";
    bool removal = false;
    bool sweep = false;
    int min_n = 3, max_n = 8, samples = 5;
    std::string p = "1/2";

    int run(const Common & c) const
    {
        const Fraction e = flag_fraction("--eps", eps);
        if (sweep)
            return run_sweep(e);
        if (! graph)
            throw CLI::ValidationError("--graph", "required unless --sweep is given");
        const Graph g = load_graph(*graph);
        if (removal) {
            const MinRemoval r = min_removal_oracle(g, N, e);
            emit(c,
                 {{"kind", "min_removal"},
                  {"N", N},
                  {"eps", fraction_json(e)},
                  {"size", r.size},
                  {"removed", to_json(r.removed)},
                  {"parts", to_json(r.parts)}},
                 "least removal: " + std::to_string(r.size));
            return kOk;
        }
        const auto parts = exact_n_restricted(g, N, e);
        Json j{{"kind", "n_restricted"}, {"N", N}, {"eps", fraction_json(e)}, {"restricted", parts.has_value()}};
        if (parts)
            j["parts"] = to_json(*parts);
        emit(c, j, std::string("(N, eps)-restricted: ") + (parts ? "yes" : "no"));
        return parts ? kOk : kInvalid;
    }

    // CSV of the least part count and least removal (at N) on seeded G(n, p).
    int run_sweep(const Fraction & e) const
    {
        const Fraction prob = flag_fraction("--p", p);
        const auto num = numerator(prob).convert_to<std::uint64_t>();
        const auto den = denominator(prob).convert_to<std::uint64_t>();
        std::cout << "n,sample,edges,least_parts,least_removal\n";
        for (int n = min_n; n <= max_n; ++n)
            for (int s = 0; s < samples; ++s) {
                Rng rng(seed_base + static_cast<std::uint64_t>(n) * 1000 + s);
                std::vector<Edge> edges;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (rng.chance(num, den))
                            edges.emplace_back(u, v);
                const Graph g(n, edges);
                int least = 1;
                while (! exact_n_restricted(g, least, e))
                    ++least;
                const MinRemoval r = min_removal_oracle(g, N, e);
                std::cout << n << ',' << s << ',' << g.edge_count() << ',' << least << ',' << r.size << '\n';
            }
        return kOk;
    }

    std::uint64_t seed_base = 1;
};

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Restricted partitions of graphs with few induced copies of a pattern"};
    app.require_subcommand(1);
    // -h is taken by the pattern order of `constants`; global flags may follow the subcommand.
    app.set_help_flag("--help", "print this help and exit");
    app.fallthrough();
    Common common;
    app.add_flag("--json", common.json, "machine-readable output");
    app.add_option("--threads", common.threads, "worker cap (0 = RPT_THREADS or all cores)");
    app.add_option("--seed", common.seed, "seed for every randomized step");

    CountCmd count;
    auto * c_count = app.add_subcommand("count", "count induced copies of a pattern");
    c_count->add_option("--graph", count.graph, "edge list or graph6 file")->required();
    c_count->add_option("--pattern", count.pattern, "named pattern or edge-list file")->required();

    CheckCmd check;
    auto * c_check = app.add_subcommand("check", "verify a certificate against a graph");
    c_check->add_option("--graph", check.graph)->required();
    c_check->add_option("--cert", check.cert, "certificate JSON")->required();
    c_check->add_option("--pattern", check.pattern);
    c_check->add_option("--d", check.d);
    c_check->add_option("--peel-eta", check.eta_peel, "leftover fraction for peel chains");
    c_check->add_flag("--sampled", check.sampled, "sample fullness instead of enumerating");
    check.params.add(c_check, true);

    ExtractCmd extract;
    auto * c_extract = app.add_subcommand("extract", "density subsets, exact-size restricted sets, peels, tight pairs");
    c_extract->add_option("--graph", extract.graph)->required();
    c_extract->add_option("--pattern", extract.pattern);
    c_extract->add_option("--what", extract.what)
        ->check(CLI::IsMember({"density", "restricted", "peel", "tight-pair"}));
    c_extract->add_option("--eps", extract.eps);
    c_extract->add_option("--eps2", extract.eps2);
    c_extract->add_option("--eta", extract.eta);
    c_extract->add_option("--delta", extract.delta);
    c_extract->add_option("--depth", extract.depth, "density recursion depth (0 = from eps)");

    KeyLemmaCmd key;
    auto * c_key = app.add_subcommand("keylemma", "restricted sets and tight pairs after removing d vertices");
    c_key->add_option("--graph", key.graph)->required();
    c_key->add_option("--pattern", key.pattern)->required();
    c_key->add_option("--d", key.d);
    c_key->add_option("--transcript", key.transcript, "write one JSON line per iteration");
    key.params.add(c_key, true);

    TheoremCmd theorem;
    auto * c_thm = app.add_subcommand("theorem", "remove at most d vertices, partition the rest");
    c_thm->add_option("--graph", theorem.graph)->required();
    c_thm->add_option("--pattern", theorem.pattern)->required();
    c_thm->add_option("--d", theorem.d);
    theorem.params.add(c_thm, false);

    CounterexampleCmd cex;
    auto * c_cex = app.add_subcommand("counterexample", "few copies of H yet far from restricted");
    c_cex->add_option("--N", cex.N);
    c_cex->add_option("--m", cex.m);
    c_cex->add_option("--n", cex.n);
    c_cex->add_option("--eps", cex.eps);
    c_cex->add_option("--pattern", cex.pattern);
    c_cex->add_flag("--relaxed", cex.relaxed, "allow m below 20N^2");
    c_cex->add_option("--out", cex.out, "write the graph as an edge list");

    ConstantsCmd consts;
    auto * c_consts = app.add_subcommand("constants", "evaluate every constant in log2 scale");
    c_consts->add_option("--h", consts.h);
    c_consts->add_option("--eps", consts.eps);
    c_consts->add_option("--eta", consts.eta);
    c_consts->add_option("--theta", consts.theta);
    c_consts->add_flag("--key-only", consts.key_only);

    OracleCmd oracle;
    auto * c_oracle = app.add_subcommand("oracle", "exhaustive baselines on small graphs");
    c_oracle->add_option("--graph", oracle.graph);
    c_oracle->add_option("--N", oracle.N);
    c_oracle->add_option("--eps", oracle.eps);
    c_oracle->add_flag("--removal", oracle.removal, "least removal instead of a yes/no answer");
    c_oracle->add_flag("--sweep", oracle.sweep, "CSV over seeded random graphs");
    c_oracle->add_option("--min-n", oracle.min_n);
    c_oracle->add_option("--max-n", oracle.max_n);
    c_oracle->add_option("--samples", oracle.samples);
    c_oracle->add_option("--p", oracle.p, "edge probability for --sweep");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return kError;
    }

    try {
        if (common.threads)
            set_max_threads(common.threads);
        oracle.seed_base = common.seed;
        if (*c_count)
            return count.run(common);
        if (*c_check)
            return check.run(common);
        if (*c_extract)
            return extract.run(common);
        if (*c_key)
            return key.run(common);
        if (*c_thm)
            return theorem.run(common);
        if (*c_cex)
            return cex.run(common);
        if (*c_consts)
            return consts.run(common);
        if (*c_oracle)
            return oracle.run(common);
    }
    catch (const CLI::Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
