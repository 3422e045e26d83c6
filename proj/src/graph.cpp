#include "rpt/graph.hpp"
#include "rpt/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace rpt {

Graph::Graph(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw PreconditionError("negative vertex count");
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (adj_[u].contains(v))
            throw PreconditionError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++edges_;
    }
    non_adj_.reserve(adj_.size());
    for (Vertex v = 0; v < n; ++v) {
        VertexSet na = ~adj_[v];
        na.erase(v);
        non_adj_.push_back(std::move(na));
    }
}

Graph Graph::complete(int n)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, e);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < n_; ++u)
        adj_[u].for_each([&](Vertex v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

Graph complement(const Graph & g)
{
    Graph c;
    c.n_ = g.n_;
    c.adj_ = g.non_adj_;
    c.non_adj_ = g.adj_;
    std::size_t total = static_cast<std::size_t>(g.n_) * static_cast<std::size_t>(std::max(g.n_ - 1, 0)) / 2;
    c.edges_ = total - g.edges_;
    return c;
}

// --- Pattern ---------------------------------------------------------------

Pattern::Pattern(const Graph & graph, std::vector<Vertex> order) : order_(std::move(order))
{
    int h = graph.order();
    if (h < 1)
        throw PreconditionError("pattern must have at least one vertex");
    if (order_.empty()) {
        order_.resize(static_cast<std::size_t>(h));
        std::iota(order_.begin(), order_.end(), 0);
    }
    std::vector<Vertex> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < h; ++i)
        if (static_cast<int>(sorted.size()) != h || sorted[i] != i)
            throw PreconditionError("pattern order is not a permutation of 0..h-1");

    std::vector<Edge> e;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            if (graph.adjacent(order_[i], order_[j]))
                e.emplace_back(i, j);
    labelled_ = Graph(h, e);
}

Pattern Pattern::prefix(int t) const
{
    std::vector<Edge> e;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (adjacent(i, j))
                e.emplace_back(i, j);
    return Pattern(Graph(t, e));
}

Pattern complement(const Pattern & p)
{
    Pattern c(complement(p.labelled()));
    if (! p.name().empty())
        c.set_name("co-" + p.name());
    return c;
}

Pattern named_pattern(std::string_view name)
{
    std::string upper;
    for (char ch : name)
        upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (upper.size() != 2)
        throw ParseError("unknown pattern '" + std::string(name) + "'");
    char kind = upper[0];
    int k = upper[1] - '0';
    std::vector<Edge> e;
    if (kind == 'K' && k >= 1 && k <= 5) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                e.emplace_back(i, j);
    }
    else if (kind == 'P' && k >= 2 && k <= 5) {
        for (int i = 0; i + 1 < k; ++i)
            e.emplace_back(i, i + 1);
    }
    else if (kind == 'C' && (k == 4 || k == 5)) {
        for (int i = 0; i < k; ++i)
            e.emplace_back(std::min(i, (i + 1) % k), std::max(i, (i + 1) % k));
    }
    else
        throw ParseError("unknown pattern '" + std::string(name) + "'");
    Pattern p(Graph(k, e));
    p.set_name(upper);
    return p;
}

// --- I/O -------------------------------------------------------------------

namespace {

std::string_view strip(std::string_view s)
{
    if (auto hash = s.find('#'); hash != std::string_view::npos)
        s = s.substr(0, hash);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && ! std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view tok, long long & out)
{
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text)
{
    std::vector<std::pair<int, std::string_view>> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        if (auto s = strip(line); ! s.empty())
            out.emplace_back(line_no, s);
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError("edge list: missing vertex count");
    auto fail = [](int line, const std::string & what) {
        return ParseError("edge list line " + std::to_string(line) + ": " + what);
    };

    auto head = tokens(lines[0].second);
    long long n = 0;
    if (head.size() != 1 || ! parse_int(head[0], n) || n < 0)
        throw fail(lines[0].first, "expected a single non-negative vertex count");

    std::vector<Edge> edges;
    std::vector<VertexSet> seen(static_cast<std::size_t>(n), VertexSet(static_cast<int>(n)));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto [line_no, line] = lines[k];
        auto t = tokens(line);
        long long u = 0, v = 0;
        if (t.size() != 2 || ! parse_int(t[0], u) || ! parse_int(t[1], v))
            throw fail(line_no, "expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw fail(line_no, "vertex out of range");
        if (u == v)
            throw fail(line_no, "self-loop");
        if (u > v)
            std::swap(u, v);
        if (seen[u].contains(static_cast<Vertex>(v)))
            throw fail(line_no, "duplicate edge");
        seen[u].insert(static_cast<Vertex>(v));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph6(std::string_view text)
{
    auto s = strip(text);
    if (s.starts_with(">>graph6<<"))
        s.remove_prefix(10);
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size())
            throw ParseError("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: invalid character");
        return c - 63;
    };
    long long n = next();
    if (n == 63) {
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
            throw ParseError("graph6: graphs with more than 258047 vertices are not supported");
        n = 0;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | next();
    }
    std::vector<Edge> edges;
    int bits_left = 0, word = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            if (bits_left == 0) {
                word = next();
                bits_left = 6;
            }
            --bits_left;
            if ((word >> bits_left) & 1)
                edges.emplace_back(i, j);
        }
    if (pos != s.size())
        throw ParseError("graph6: trailing characters");
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text)
{
    auto lines = content_lines(text);
    if (lines.size() == 1) {
        auto t = tokens(lines[0].second);
        long long dummy = 0;
        if (t.size() == 1 && ! parse_int(t[0], dummy))
            return parse_graph6(t[0]);
    }
    return parse_edge_list(text);
}

std::string to_edge_list(const Graph & g)
{
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_graph6(const Graph & g)
{
    std::string out;
    int n = g.order();
    if (n > 258047)
        throw RangeError("graph6: too many vertices");
    if (n <= 62)
        out.push_back(static_cast<char>(n + 63));
    else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int word = 0, bits = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = bits = 0;
            }
        }
    if (bits)
        out.push_back(static_cast<char>((word << (6 - bits)) + 63));
    return out;
}

// --- Structure -------------------------------------------------------------

VertexSet InducedSubgraph::lift(const VertexSet & local, int host_universe) const
{
    VertexSet out(host_universe);
    local.for_each([&](Vertex v) { out.insert(to_host[static_cast<std::size_t>(v)]); });
    return out;
}

VertexSet InducedSubgraph::lower(const VertexSet & host) const
{
    VertexSet out(graph.order());
    for (std::size_t i = 0; i < to_host.size(); ++i)
        if (host.contains(to_host[i]))
            out.insert(static_cast<Vertex>(i));
    return out;
}

InducedSubgraph induced_subgraph(const Graph & g, const VertexSet & s)
{
    if (s.universe() != g.order())
        throw PreconditionError("vertex set universe does not match graph order");
    InducedSubgraph r;
    r.to_host = s.to_vector();
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < r.to_host.size(); ++i)
        local[static_cast<std::size_t>(r.to_host[i])] = static_cast<int>(i);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < r.to_host.size(); ++i) {
        Vertex u = r.to_host[i];
        (g.neighbors(u) & s).for_each([&](Vertex v) {
            if (v > u)
                e.emplace_back(static_cast<Vertex>(i), local[static_cast<std::size_t>(v)]);
        });
    }
    r.graph = Graph(static_cast<int>(r.to_host.size()), e);
    return r;
}

std::size_t edges_within(const Graph & g, const VertexSet & s)
{
    std::size_t twice = 0;
    s.for_each([&](Vertex v) { twice += static_cast<std::size_t>(g.degree_in(v, s)); });
    return twice / 2;
}

std::size_t edges_between(const Graph & g, const VertexSet & a, const VertexSet & b)
{
    std::size_t e = 0;
    a.for_each([&](Vertex v) { e += static_cast<std::size_t>(g.degree_in(v, b)); });
    return e;
}

Fraction edge_density(const Graph & g, const VertexSet & s)
{
    long long k = s.size();
    if (k <= 1)
        return 0;
    return Fraction(static_cast<long long>(edges_within(g, s)), k * (k - 1) / 2);
}

int max_degree_within(const Graph & g, const VertexSet & s)
{
    int best = 0;
    s.for_each([&](Vertex v) { best = std::max(best, g.degree_in(v, s)); });
    return best;
}

int max_non_degree_within(const Graph & g, const VertexSet & s)
{
    int best = 0;
    s.for_each([&](Vertex v) { best = std::max(best, g.non_degree_in(v, s)); });
    return best;
}

// --- Counting --------------------------------------------------------------

namespace {

std::atomic<unsigned> g_threads{0};
std::once_flag g_threads_env;

struct Counter
{
    const Graph & g;
    const Pattern & h;
    std::span<const VertexSet> parts; // may be empty: unrestricted
    std::vector<Vertex> image;
    BigInt total = 0;
    std::uint64_t pending = 0;

    void add(std::uint64_t x)
    {
        pending += x;
        if (pending > (std::uint64_t{1} << 62)) {
            total += pending;
            pending = 0;
        }
    }

    VertexSet candidates(int depth) const
    {
        VertexSet c = parts.empty() ? g.vertices() : parts[static_cast<std::size_t>(depth)];
        for (int j = 0; j < depth; ++j) {
            Vertex u = image[static_cast<std::size_t>(j)];
            c &= h.adjacent(j, depth) ? g.neighbors(u) : g.non_neighbors(u);
        }
        return c;
    }

    void search(int depth)
    {
        VertexSet c = candidates(depth);
        if (depth + 1 == h.size()) {
            add(static_cast<std::uint64_t>(c.size()));
            return;
        }
        c.for_each([&](Vertex v) {
            image[static_cast<std::size_t>(depth)] = v;
            search(depth + 1);
        });
    }

    BigInt finish()
    {
        total += pending;
        pending = 0;
        return total;
    }
};

BigInt count_impl(const Graph & g, const Pattern & h, std::span<const VertexSet> parts)
{
    const int hs = h.size();
    if (hs == 1) {
        return parts.empty() ? BigInt(g.order()) : BigInt(parts[0].size());
    }
    VertexSet top = parts.empty() ? g.vertices() : parts[0];
    std::vector<Vertex> roots = top.to_vector();

    unsigned workers = std::min<unsigned>(max_threads(), static_cast<unsigned>(roots.size()));
    if (workers <= 1 || roots.size() < 16) {
        Counter c{g, h, parts, std::vector<Vertex>(static_cast<std::size_t>(hs))};
        for (Vertex r : roots) {
            c.image[0] = r;
            c.search(1);
        }
        return c.finish();
    }

    // Static interleaved split; totals are summed in worker order so the
    // result is independent of scheduling.
    std::vector<BigInt> partial(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            Counter c{g, h, parts, std::vector<Vertex>(static_cast<std::size_t>(hs))};
            for (std::size_t i = w; i < roots.size(); i += workers) {
                c.image[0] = roots[i];
                c.search(1);
            }
            partial[w] = c.finish();
        });
    for (auto & t : pool)
        t.join();
    BigInt total = 0;
    for (auto & p : partial)
        total += p;
    return total;
}

} // namespace

BigInt count_induced_copies(const Graph & g, const Pattern & h)
{
    return count_impl(g, h, {});
}

BigInt count_embeddings_into_parts(const Graph & g, const Pattern & h, std::span<const VertexSet> parts)
{
    if (static_cast<int>(parts.size()) != h.size())
        throw PreconditionError("need exactly one part per pattern vertex");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].universe() != g.order())
            throw PreconditionError("part universe does not match graph order");
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].intersects(parts[j]))
                throw PreconditionError("parts " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
    }
    return count_impl(g, h, parts);
}

void set_max_threads(unsigned threads)
{
    std::call_once(g_threads_env, [] {});
    g_threads = threads;
}

unsigned max_threads()
{
    std::call_once(g_threads_env, [] {
        if (const char * env = std::getenv("RPT_THREADS")) {
            long long v = 0;
            std::string_view s(env);
            if (parse_int(s, v) && v >= 0)
                g_threads = static_cast<unsigned>(v);
        }
    });
    unsigned t = g_threads;
    if (t == 0)
        t = std::max(1u, std::thread::hardware_concurrency());
    return t;
}

} // namespace rpt
