#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cartdom/errors.hpp"

namespace cartdom {

using Edge = std::pair<int, int>;

// A set of vertices, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

// Distances use this sentinel for "no path"; it compares larger than any
// real distance and survives +1 without overflow.
inline constexpr int kInfDist = 1 << 29;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Validates: endpoints in range, no loops, no duplicate edges.
    // Edges are normalized to (min,max) and stored sorted.
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<unsigned char> adj_;
};

// Vertex indexing for a Cartesian product G box H: (g,h) <-> g*h_size + h.
struct ProductDims {
    int g_size = 0;
    int h_size = 0;

    int order() const { return g_size * h_size; }
    int index(int g, int h) const { return g * h_size + h; }
    int first(int v) const { return v / h_size; }
    int second(int v) const { return v % h_size; }

    bool operator==(const ProductDims&) const = default;
};

// ---- construction helpers ------------------------------------------------

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);

// ---- parsing / serialization ----------------------------------------------

enum class GraphFormat { edge_list, graph6 };

// Throws ParseError naming the offending line/byte on malformed input.
Graph parse_graph(std::string_view text, GraphFormat format);

// Detects the format: a leading "n m" header means edge-list, else graph6.
Graph parse_graph_auto(std::string_view text);

std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);  // short form, order <= 62

// ---- products, layers, projections -----------------------------------------

std::pair<Graph, ProductDims> cartesian_product(const Graph& g, const Graph& h);

// p_G-image of a product edge: an edge of G when the endpoints differ in the
// first coordinate, else the single G-vertex shared by both endpoints.
// Throws std::invalid_argument when the pair differs in both coordinates.
std::variant<int, Edge> project_edge(const ProductDims& dims, const Edge& e);

// ---- distances --------------------------------------------------------------

int distance(const Graph& g, int u, int v);
std::vector<int> distances_from(const Graph& g, int source);
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

int edge_distance(const Graph& g, const Edge& e1, const Edge& e2);
int edge_vertex_distance(const Graph& g, const Edge& e, int v);

// Throws std::invalid_argument when either set is empty.
int set_distance(const Graph& g, const VertexSet& p, const VertexSet& q);

int diameter(const Graph& g);

// ---- induced-subgraph predicates -------------------------------------------

// True iff every vertex of s has exactly one neighbor inside s
// (i.e. <s> is a perfect matching on s and nothing else).
bool is_induced_one_regular(const Graph& g, const VertexSet& s);

// Edges of the subgraph induced by s, sorted.
std::vector<Edge> induced_edges(const Graph& g, const VertexSet& s);

// ---- vertex-set helpers ------------------------------------------------------

VertexSet as_vertex_set(std::vector<int> members);       // sort + dedup
bool vertex_set_contains(const VertexSet& s, int v);      // binary search
std::string format_vertex_set(const VertexSet& s);        // "1,4,5" ("-" when empty)

}  // namespace cartdom
