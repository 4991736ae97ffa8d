#include "cartdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace cartdom {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);

    nbrs_.assign(n_, {});
    adj_.assign(static_cast<size_t>(n_) * n_, 0);
    for (const auto& [u, v] : edges_) {
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
        adj_[static_cast<size_t>(u) * n_ + v] = 1;
        adj_[static_cast<size_t>(v) * n_ + u] = 1;
    }
    for (auto& lst : nbrs_) std::sort(lst.begin(), lst.end());
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires order >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("partite sizes must be non-negative");
    std::vector<Edge> e;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) e.push_back({a, m + b});
    return Graph(m + n, std::move(e));
}

// ---- edge-list format -------------------------------------------------------
//
//   line 1: "n m"
//   then m lines "u v" with 0 <= u < v < n
//   '#' starts a comment, blank lines are ignored

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

static Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    long long n = -1, m = -1;
    std::vector<Edge> edges;
    long long seen = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(strip_comment(line));
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                parse_fail(line_no, "malformed header, expected \"n m\"");
            long long trailing;
            if (ls >> trailing) parse_fail(line_no, "malformed header, expected \"n m\"");
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) parse_fail(line_no, "malformed edge, expected \"u v\"");
        long long trailing;
        if (ls >> trailing) parse_fail(line_no, "malformed edge, expected \"u v\"");
        if (u == v) parse_fail(line_no, "loop edge at vertex " + std::to_string(u));
        if (u > v) parse_fail(line_no, "edge endpoints must satisfy u < v");
        if (u < 0 || v >= n)
            parse_fail(line_no, "vertex index out of range for n=" + std::to_string(n));
        ++seen;
        if (seen > m) parse_fail(line_no, "more edges than the declared m=" + std::to_string(m));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (n < 0) throw ParseError("line 1: missing \"n m\" header");
    if (seen < m)
        throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(seen));

    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        auto dup = *std::adjacent_find(sorted.begin(), sorted.end());
        // find the second occurrence's line for the message
        int count = 0, at_line = 0, ln = 0;
        std::istringstream in2{std::string(text)};
        bool header_done = false;
        while (std::getline(in2, line)) {
            ++ln;
            if (is_blank_or_comment(line)) continue;
            if (!header_done) { header_done = true; continue; }
            std::istringstream ls(strip_comment(line));
            long long u, v;
            ls >> u >> v;
            if (static_cast<int>(u) == dup.first && static_cast<int>(v) == dup.second && ++count == 2) {
                at_line = ln;
                break;
            }
        }
        parse_fail(at_line, "duplicate edge (" + std::to_string(dup.first) + "," +
                                std::to_string(dup.second) + ")");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

// ---- graph6 (short form, n <= 62) -------------------------------------------

static Graph parse_graph6(std::string_view text) {
    // trim whitespace
    size_t b = 0, e = text.size();
    while (b < e && isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view s = text.substr(b, e - b);
    if (s.rfind(">>graph6<<", 0) == 0) s.remove_prefix(10);
    if (s.empty()) throw ParseError("graph6: empty input");
    if (s[0] == '~') throw ParseError("graph6 byte 1: long form (n > 62) not supported");
    int c0 = static_cast<unsigned char>(s[0]);
    if (c0 < 63 || c0 > 125) throw ParseError("graph6 byte 1: invalid order character");
    int n = c0 - 63;

    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    size_t expected = 1 + static_cast<size_t>((bits + 5) / 6);
    if (s.size() != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for n=" +
                         std::to_string(n) + ", found " + std::to_string(s.size()));

    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(s[1 + bit / 6]);
            if (byte < 63 || byte > 126)
                throw ParseError("graph6 byte " + std::to_string(2 + bit / 6) +
                                 ": invalid data character");
            int val = byte - 63;
            if ((val >> (5 - bit % 6)) & 1) edges.push_back({i, j});
        }
    }
    // remaining padding bits must be zero
    for (; bit < static_cast<long long>((bits + 5) / 6) * 6; ++bit) {
        int byte = static_cast<unsigned char>(s[1 + bit / 6]);
        if (((byte - 63) >> (5 - bit % 6)) & 1)
            throw ParseError("graph6 byte " + std::to_string(2 + bit / 6) +
                             ": nonzero padding bit");
    }
    return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 short form supports order <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::string data(static_cast<size_t>((bits + 5) / 6), 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j)) data[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
    for (char& c : data) c = static_cast<char>(c + 63);
    return out + data;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list: return parse_edge_list(text);
        case GraphFormat::graph6: return parse_graph6(text);
    }
    throw std::invalid_argument("unknown graph format");
}

Graph parse_graph_auto(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(strip_comment(line));
        long long a, b;
        std::string rest;
        if (ls >> a >> b && !(ls >> rest)) return parse_edge_list(text);
        break;
    }
    return parse_graph6(text);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

// ---- products -----------------------------------------------------------------

std::pair<Graph, ProductDims> cartesian_product(const Graph& g, const Graph& h) {
    ProductDims dims{g.order(), h.order()};
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(g.size()) * h.order() +
                  static_cast<size_t>(g.order()) * h.size());
    for (const auto& [u, v] : g.edges())
        for (int x = 0; x < h.order(); ++x) edges.push_back({dims.index(u, x), dims.index(v, x)});
    for (int x = 0; x < g.order(); ++x)
        for (const auto& [u, v] : h.edges()) edges.push_back({dims.index(x, u), dims.index(x, v)});
    return {Graph(dims.order(), std::move(edges)), dims};
}

std::variant<int, Edge> project_edge(const ProductDims& dims, const Edge& e) {
    int g1 = dims.first(e.first), h1 = dims.second(e.first);
    int g2 = dims.first(e.second), h2 = dims.second(e.second);
    if (g1 != g2 && h1 != h2)
        throw std::invalid_argument("not a product edge: endpoints differ in both coordinates");
    if (g1 == g2 && h1 == h2)
        throw std::invalid_argument("not a product edge: endpoints coincide");
    if (g1 != g2) return Edge{std::min(g1, g2), std::max(g1, g2)};
    return g1;
}

// ---- distances ------------------------------------------------------------------

std::vector<int> distances_from(const Graph& g, int source) {
    std::vector<int> dist(g.order(), kInfDist);
    std::deque<int> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] == kInfDist) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int distance(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::invalid_argument("distance: vertex out of range");
    if (u == v) return 0;
    return distances_from(g, u)[v];
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = distances_from(g, v);
    return d;
}

static void check_edge_exists(const Graph& g, const Edge& e, const char* ctx) {
    if (!g.has_vertex(e.first) || !g.has_vertex(e.second) || !g.adjacent(e.first, e.second))
        throw std::invalid_argument(std::string(ctx) + ": (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") is not an edge of the graph");
}

int edge_distance(const Graph& g, const Edge& e1, const Edge& e2) {
    check_edge_exists(g, e1, "edge_distance");
    check_edge_exists(g, e2, "edge_distance");
    auto d1 = distances_from(g, e1.first);
    auto d2 = distances_from(g, e1.second);
    return std::min({d1[e2.first], d1[e2.second], d2[e2.first], d2[e2.second]});
}

int edge_vertex_distance(const Graph& g, const Edge& e, int v) {
    check_edge_exists(g, e, "edge_vertex_distance");
    if (!g.has_vertex(v)) throw std::invalid_argument("edge_vertex_distance: vertex out of range");
    auto d = distances_from(g, v);
    return std::min(d[e.first], d[e.second]);
}

int set_distance(const Graph& g, const VertexSet& p, const VertexSet& q) {
    if (p.empty() || q.empty())
        throw std::invalid_argument("set_distance requires non-empty sets");
    int best = kInfDist;
    for (int u : p) {
        if (!g.has_vertex(u)) throw std::invalid_argument("set_distance: vertex out of range");
        auto d = distances_from(g, u);
        for (int v : q) {
            if (!g.has_vertex(v)) throw std::invalid_argument("set_distance: vertex out of range");
            best = std::min(best, d[v]);
        }
    }
    return best;
}

int diameter(const Graph& g) {
    if (g.order() <= 1) return 0;
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        auto d = distances_from(g, v);
        for (int w = 0; w < g.order(); ++w) best = std::max(best, d[w]);
    }
    return best >= kInfDist ? kInfDist : best;
}

// ---- induced-subgraph predicates ---------------------------------------------

bool is_induced_one_regular(const Graph& g, const VertexSet& s) {
    for (int v : s) {
        if (!g.has_vertex(v)) throw std::invalid_argument("vertex out of range");
        int inside = 0;
        for (int w : g.neighbors(v))
            if (vertex_set_contains(s, w)) ++inside;
        if (inside != 1) return false;
    }
    return true;
}

std::vector<Edge> induced_edges(const Graph& g, const VertexSet& s) {
    std::vector<Edge> out;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) out.push_back({s[i], s[j]});
    std::sort(out.begin(), out.end());
    return out;
}

// ---- vertex-set helpers --------------------------------------------------------

VertexSet as_vertex_set(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

bool vertex_set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

std::string format_vertex_set(const VertexSet& s) {
    if (s.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

}  // namespace cartdom
