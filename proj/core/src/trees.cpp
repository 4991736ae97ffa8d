#include "cartdom/trees.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cartdom {

bool is_tree(const Graph& g) {
    if (g.order() == 0) return false;
    if (g.size() != g.order() - 1) return false;
    std::vector<char> visited(g.order(), 0);
    std::deque<int> queue{0};
    visited[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v))
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    return reached == g.order();
}

// ---- canonical codes (AHU) -----------------------------------------------------

namespace {

using AdjList = std::vector<std::vector<int>>;

AdjList adjacency_of(const Graph& g) {
    AdjList adj(g.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
    return adj;
}

// One or two central vertices found by peeling leaf layers.
std::vector<int> tree_centers(int n, const AdjList& adj) {
    if (n == 1) return {0};
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : adj[v])
                if (--degree[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_code(int v, int parent, const AdjList& adj) {
    std::vector<std::string> children;
    for (int w : adj[v])
        if (w != parent) children.push_back(rooted_code(w, v, adj));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ")";
    return out;
}

std::string code_from_adj(int n, const AdjList& adj) {
    auto centers = tree_centers(n, adj);
    std::string best = rooted_code(centers[0], -1, adj);
    if (centers.size() == 2) best = std::min(best, rooted_code(centers[1], -1, adj));
    return best;
}

// Rooted code with a class label attached to every node; used to deduplicate
// (tree, partition) pairs up to isomorphism and class permutation.
std::string rooted_labeled_code(int v, int parent, const AdjList& adj,
                                const std::vector<int>& label) {
    std::vector<std::string> children;
    for (int w : adj[v])
        if (w != parent) children.push_back(rooted_labeled_code(w, v, adj, label));
    std::sort(children.begin(), children.end());
    std::string out = "(" + std::to_string(label[v]);
    for (const auto& c : children) out += c;
    out += ")";
    return out;
}

std::string labeled_pair_key(const PartitionedTree& pt) {
    const Graph& g = pt.tree;
    auto adj = adjacency_of(g);
    auto centers = tree_centers(g.order(), adj);
    const int r = pt.partition.r;

    std::string best;
    // minimize over all permutations of the interchangeable classes 1..r
    std::vector<int> classes(r);
    std::iota(classes.begin(), classes.end(), 1);
    do {
        std::vector<int> relabeled(g.order());
        for (int v = 0; v < g.order(); ++v) {
            int a = pt.partition.labels[v].a;
            relabeled[v] = a == 0 ? 0 : classes[a - 1];
        }
        for (int c : centers) {
            std::string code = rooted_labeled_code(c, -1, adj, relabeled);
            if (best.empty() || code < best) best = code;
        }
    } while (std::next_permutation(classes.begin(), classes.end()));
    return best;
}

}  // namespace

std::string canonical_code(const Graph& tree) {
    if (!is_tree(tree)) throw std::invalid_argument("canonical_code: input is not a tree");
    return code_from_adj(tree.order(), adjacency_of(tree));
}

// ---- exhaustive tree enumeration ---------------------------------------------------

namespace {

// Decode a Pruefer sequence over 0..n-1 into the labeled tree's edges.
std::vector<Edge> decode_pruefer(int n, const std::vector<int>& seq) {
    std::vector<int> degree(n, 1);
    for (int a : seq) ++degree[a];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    std::vector<char> used(n, 0);
    for (int a : seq) {
        for (int v = 0; v < n; ++v) {
            if (degree[v] == 1 && !used[v]) {
                edges.push_back({std::min(v, a), std::max(v, a)});
                used[v] = 1;
                --degree[a];
                break;
            }
        }
    }
    int first = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1 && !used[v]) {
            if (first < 0) first = v;
            else edges.push_back({first, v});
        }
    }
    return edges;
}

std::vector<Graph> build_trees_of_order(int order, const std::vector<Graph>& one_smaller) {
    std::map<std::string, Graph> reps;
    if (order == 1) {
        reps.emplace("()", empty_graph(1));
    } else if (order == 2) {
        reps.emplace(canonical_code(path_graph(2)), path_graph(2));
    } else if (order <= 9) {
        // exhaustive Pruefer sweep, deduplicated by canonical code
        const int len = order - 2;
        std::vector<int> seq(len, 0);
        AdjList adj(order);
        while (true) {
            auto edges = decode_pruefer(order, seq);
            for (auto& lst : adj) lst.clear();
            for (const auto& [u, v] : edges) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
            std::string code = code_from_adj(order, adj);
            if (!reps.count(code)) reps.emplace(std::move(code), Graph(order, edges));
            int pos = len - 1;
            while (pos >= 0 && seq[pos] == order - 1) seq[pos--] = 0;
            if (pos < 0) break;
            ++seq[pos];
        }
    } else {
        // every tree of order k arises from one of order k-1 by adding a leaf
        for (const Graph& t : one_smaller) {
            for (int v = 0; v < t.order(); ++v) {
                auto edges = t.edges();
                edges.push_back({v, t.order()});
                Graph bigger(order, std::move(edges));
                std::string code = canonical_code(bigger);
                if (!reps.count(code)) reps.emplace(std::move(code), std::move(bigger));
            }
        }
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [code, g] : reps) out.push_back(std::move(g));
    return out;
}

}  // namespace

std::vector<Graph> enumerate_trees(int order) {
    if (order < 1) throw std::invalid_argument("enumerate_trees: order must be >= 1");
    static std::mutex mutex;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    for (int k = 1; k <= order; ++k) {
        if (cache.count(k)) continue;
        static const std::vector<Graph> none;
        const std::vector<Graph>& smaller = k > 1 ? cache.at(k - 1) : none;
        cache.emplace(k, build_trees_of_order(k, smaller));
    }
    return cache.at(order);
}

// ---- the recursive family -------------------------------------------------------------

PartitionedTree k1r_plus(int r) {
    if (r < 2) throw std::invalid_argument("k1r_plus: r must be >= 2");
    std::vector<Edge> edges;
    std::vector<Label> labels(2 * r + 1, Label{0, 0});
    for (int i = 1; i <= r; ++i) {
        edges.push_back({0, 2 * i - 1});
        edges.push_back({2 * i - 1, 2 * i});
        labels[2 * i - 1] = {i, 0};
        labels[2 * i] = {i, 0};
    }
    return {Graph(2 * r + 1, std::move(edges)), make_kr_partition(r, std::move(labels))};
}

namespace {

void require_kr_tree(const PartitionedTree& pt, const char* what) {
    if (pt.partition.flavor != PartitionFlavor::kr)
        throw std::invalid_argument(std::string(what) + ": partition must have the K_r flavor");
    if (!is_tree(pt.tree)) throw std::invalid_argument(std::string(what) + ": not a tree");
    auto check = check_kr_amenable(pt.tree, pt.partition);
    if (!check.ok) {
        std::string msg = std::string(what) + ": input partition fails its checker";
        for (const auto& v : check.violations) msg += "; " + v.to_string();
        throw PreconditionError(msg);
    }
}

Edge normalized(Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

void require_class_edge(const PartitionedTree& pt, int cls, const Edge& e, const char* what) {
    if (!pt.tree.has_vertex(e.first) || !pt.tree.has_vertex(e.second) ||
        !pt.tree.adjacent(e.first, e.second))
        throw std::invalid_argument(std::string(what) + ": not an edge of the tree");
    if (pt.partition.labels[e.first] != Label{cls, 0} ||
        pt.partition.labels[e.second] != Label{cls, 0})
        throw std::invalid_argument(std::string(what) + ": edge (" + std::to_string(e.first) +
                                    "," + std::to_string(e.second) +
                                    ") does not lie inside class V_" + std::to_string(cls));
}

}  // namespace

namespace {

struct TypeAResult {
    PartitionedTree tree;
    std::vector<int> map_right;  // right-operand vertex -> result vertex
};

TypeAResult type_a_with_map(const PartitionedTree& left, const PartitionedTree& right, int cls,
                            Edge left_edge, Edge right_edge, TypeAOrientation orientation) {
    require_kr_tree(left, "type_a");
    require_kr_tree(right, "type_a");
    const int r = left.partition.r;
    if (right.partition.r != r)
        throw std::invalid_argument("type_a: operands disagree on the number of classes");
    if (cls < 1 || cls > r) throw std::invalid_argument("type_a: class index out of range");
    left_edge = normalized(left_edge);
    right_edge = normalized(right_edge);
    require_class_edge(left, cls, left_edge, "type_a");
    require_class_edge(right, cls, right_edge, "type_a");

    const int nl = left.tree.order();
    const int nr = right.tree.order();
    // map right vertices: the identified pair lands on left_edge, everything
    // else gets fresh ids after the left block
    std::vector<int> map_right(nr, -1);
    if (orientation == TypeAOrientation::straight) {
        map_right[right_edge.first] = left_edge.first;
        map_right[right_edge.second] = left_edge.second;
    } else {
        map_right[right_edge.first] = left_edge.second;
        map_right[right_edge.second] = left_edge.first;
    }
    int next = nl;
    for (int v = 0; v < nr; ++v)
        if (map_right[v] < 0) map_right[v] = next++;

    std::vector<Edge> edges = left.tree.edges();
    for (const auto& [u, v] : right.tree.edges()) {
        if (normalized({u, v}) == right_edge) continue;  // merges onto left_edge
        edges.push_back(normalized({map_right[u], map_right[v]}));
    }
    std::vector<Label> labels(nl + nr - 2);
    for (int v = 0; v < nl; ++v) labels[v] = left.partition.labels[v];
    for (int v = 0; v < nr; ++v)
        if (map_right[v] >= nl) labels[map_right[v]] = right.partition.labels[v];

    PartitionedTree out{Graph(nl + nr - 2, std::move(edges)),
                        make_kr_partition(r, std::move(labels))};
    if (!is_tree(out.tree) || !check_kr_amenable(out.tree, out.partition).ok)
        throw std::logic_error("type_a produced an invalid partitioned tree");
    return {std::move(out), std::move(map_right)};
}

}  // namespace

PartitionedTree type_a(const PartitionedTree& left, const PartitionedTree& right, int cls,
                       Edge left_edge, Edge right_edge, TypeAOrientation orientation) {
    return type_a_with_map(left, right, cls, left_edge, right_edge, orientation).tree;
}

PartitionedTree type_b(const PartitionedTree& left, const PartitionedTree& right, int left_vertex,
                       int right_vertex) {
    require_kr_tree(left, "type_b");
    require_kr_tree(right, "type_b");
    const int r = left.partition.r;
    if (right.partition.r != r)
        throw std::invalid_argument("type_b: operands disagree on the number of classes");
    if (!left.tree.has_vertex(left_vertex) || !left.partition.labels[left_vertex].is_zero())
        throw std::invalid_argument("type_b: left vertex must lie in V_0");
    if (!right.tree.has_vertex(right_vertex) || !right.partition.labels[right_vertex].is_zero())
        throw std::invalid_argument("type_b: right vertex must lie in V_0");

    const int nl = left.tree.order();
    std::vector<Edge> edges = left.tree.edges();
    for (const auto& [u, v] : right.tree.edges()) edges.push_back({u + nl, v + nl});
    edges.push_back(normalized({left_vertex, right_vertex + nl}));

    std::vector<Label> labels = left.partition.labels;
    labels.insert(labels.end(), right.partition.labels.begin(), right.partition.labels.end());

    PartitionedTree out{Graph(nl + right.tree.order(), std::move(edges)),
                        make_kr_partition(r, std::move(labels))};
    if (!is_tree(out.tree) || !check_kr_amenable(out.tree, out.partition).ok)
        throw std::logic_error("type_b produced an invalid partitioned tree");
    return out;
}

// ---- recognition --------------------------------------------------------------------

namespace {

struct SplitPart {
    Graph tree;
    std::vector<Label> labels;
    std::vector<int> local;  // original vertex -> local id (-1 outside)
};

// The component of tree - cut containing seed, compactly relabeled in
// ascending original order.
SplitPart component_after_cut(const Graph& tree, const std::vector<Label>& labels,
                              const Edge& cut, int seed) {
    std::vector<char> in_part(tree.order(), 0);
    std::deque<int> queue{seed};
    in_part[seed] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : tree.neighbors(v)) {
            if ((v == cut.first && w == cut.second) || (v == cut.second && w == cut.first))
                continue;
            if (!in_part[w]) {
                in_part[w] = 1;
                queue.push_back(w);
            }
        }
    }
    SplitPart part;
    part.local.assign(tree.order(), -1);
    int next = 0;
    for (int v = 0; v < tree.order(); ++v)
        if (in_part[v]) part.local[v] = next++;
    std::vector<Edge> edges;
    for (const auto& [u, v] : tree.edges()) {
        if (normalized({u, v}) == normalized(cut)) continue;
        if (in_part[u] && in_part[v]) edges.push_back({part.local[u], part.local[v]});
    }
    part.labels.assign(next, Label{0, 0});
    for (int v = 0; v < tree.order(); ++v)
        if (in_part[v]) part.labels[part.local[v]] = labels[v];
    part.tree = Graph(next, std::move(edges));
    return part;
}

// A decomposition step returns the trace, the tree its replay constructs,
// and the isomorphism from the decomposed component onto that replayed tree
// (class indices preserved), so that parent nodes can express their edge and
// vertex arguments in the replayed labeling.
struct DecomposeResult {
    std::unique_ptr<TreeTrace> trace;
    PartitionedTree rebuilt;
    std::vector<int> map;  // component vertex -> rebuilt vertex
};

void verify_component_iso(const Graph& tree, const std::vector<Label>& labels,
                          const DecomposeResult& result) {
    const Graph& rebuilt = result.rebuilt.tree;
    if (tree.order() != rebuilt.order())
        throw std::logic_error("decompose: rebuilt tree has the wrong order");
    for (int v = 0; v < tree.order(); ++v) {
        if (result.map[v] < 0 || result.map[v] >= rebuilt.order())
            throw std::logic_error("decompose: rebuilt mapping is not a bijection");
        if (labels[v] != result.rebuilt.partition.labels[result.map[v]])
            throw std::logic_error("decompose: rebuilt labeling disagrees");
    }
    for (const auto& [u, v] : tree.edges())
        if (!rebuilt.adjacent(result.map[u], result.map[v]))
            throw std::logic_error("decompose: rebuilt tree misses an edge");
}

DecomposeResult decompose(const Graph& tree, const std::vector<Label>& labels, int r) {
    WeakPartition part = make_kr_partition(r, labels);
    if (!check_kr_amenable(tree, part).ok)
        throw std::logic_error("decompose: induced partition fails its checker");

    VertexSet zero = part.zero_members();
    if (zero.empty()) throw std::logic_error("decompose: a tree of order >= 3 needs V_0");

    if (zero.size() == 1) {
        // the component is the subdivided star; map it class by class onto
        // the canonical one (legs are interchangeable, so classes carry over)
        const int center = zero[0];
        if (tree.order() != 2 * r + 1 || tree.degree(center) != r)
            throw std::logic_error("decompose: singleton V_0 but not a subdivided star");
        DecomposeResult result;
        result.rebuilt = k1r_plus(r);
        result.map.assign(tree.order(), -1);
        result.map[center] = 0;
        for (int u : tree.neighbors(center)) {
            int cls = labels[u].a;
            int partner = -1;
            for (int x : tree.neighbors(u))
                if (x != center && labels[x] == Label{cls, 0}) partner = x;
            if (cls < 1 || partner < 0)
                throw std::logic_error("decompose: malformed subdivided star");
            result.map[u] = 2 * cls - 1;
            result.map[partner] = 2 * cls;
        }
        TreeTrace leaf;
        leaf.kind = TreeTrace::Kind::leaf;
        leaf.r = r;
        result.trace = std::make_unique<TreeTrace>(std::move(leaf));
        verify_component_iso(tree, labels, result);
        return result;
    }

    // a V_0-V_0 edge splits as a type-b construction
    for (const auto& [u, v] : tree.edges()) {
        if (!labels[u].is_zero() || !labels[v].is_zero()) continue;
        auto lp = component_after_cut(tree, labels, {u, v}, u);
        auto rp = component_after_cut(tree, labels, {u, v}, v);
        auto left = decompose(lp.tree, lp.labels, r);
        auto right = decompose(rp.tree, rp.labels, r);

        TreeTrace node;
        node.kind = TreeTrace::Kind::type_b;
        node.r = r;
        node.left_vertex = left.map[lp.local[u]];
        node.right_vertex = right.map[rp.local[v]];

        DecomposeResult result;
        result.rebuilt =
            type_b(left.rebuilt, right.rebuilt, node.left_vertex, node.right_vertex);
        const int nl = left.rebuilt.tree.order();
        result.map.assign(tree.order(), -1);
        for (int x = 0; x < tree.order(); ++x) {
            if (lp.local[x] >= 0) result.map[x] = left.map[lp.local[x]];
            else result.map[x] = nl + right.map[rp.local[x]];
        }
        node.left = std::move(left.trace);
        node.right = std::move(right.trace);
        result.trace = std::make_unique<TreeTrace>(std::move(node));
        verify_component_iso(tree, labels, result);
        return result;
    }

    // otherwise undo a type-a construction at the closest V_0 pair
    auto dist = all_pairs_distances(tree);
    int best_u = -1, best_v = -1, best_d = kInfDist;
    for (size_t a = 0; a < zero.size(); ++a) {
        for (size_t b = a + 1; b < zero.size(); ++b) {
            int d = dist[zero[a]][zero[b]];
            if (d < best_d) {
                best_d = d;
                best_u = zero[a];
                best_v = zero[b];
            }
        }
    }
    if (best_d < 2 || best_d > 3)
        throw std::logic_error("decompose: closest V_0 pair is not at distance 2 or 3");

    int w = -1;
    for (int x : tree.neighbors(best_u))
        if (dist[x][best_v] == best_d - 1) { w = x; break; }
    int cls = labels[w].a;
    if (cls < 1) throw std::logic_error("decompose: path neighbor should lie in a class");
    int w_match = -1;
    for (int x : tree.neighbors(w))
        if (labels[x] == Label{cls, 0}) { w_match = x; break; }
    if (w_match < 0) throw std::logic_error("decompose: class vertex lacks its matching partner");

    // T' = the u-side component plus a fresh pendant pair in the class of w
    auto up = component_after_cut(tree, labels, {best_u, w}, best_u);
    auto rp = component_after_cut(tree, labels, {best_u, w}, w);
    const int t_new = up.tree.order();
    const int t_prime = t_new + 1;
    auto edges = up.tree.edges();
    edges.push_back({up.local[best_u], t_new});
    edges.push_back({t_new, t_prime});
    auto left_labels = up.labels;
    left_labels.push_back({cls, 0});
    left_labels.push_back({cls, 0});
    Graph left_tree(t_prime + 1, std::move(edges));

    auto left = decompose(left_tree, left_labels, r);
    auto right = decompose(rp.tree, rp.labels, r);

    TreeTrace node;
    node.kind = TreeTrace::Kind::type_a;
    node.r = r;
    node.cls = cls;
    node.left_edge = normalized({left.map[t_new], left.map[t_prime]});
    node.right_edge = normalized({right.map[rp.local[w]], right.map[rp.local[w_match]]});
    // identification sends the fresh pendant pair onto (w, w's partner)
    bool t_is_min = left.map[t_new] == node.left_edge.first;
    bool w_is_min = right.map[rp.local[w]] == node.right_edge.first;
    node.orientation =
        (t_is_min == w_is_min) ? TypeAOrientation::straight : TypeAOrientation::flipped;

    DecomposeResult result;
    auto built = type_a_with_map(left.rebuilt, right.rebuilt, cls, node.left_edge,
                                 node.right_edge, node.orientation);
    result.rebuilt = std::move(built.tree);
    result.map.assign(tree.order(), -1);
    for (int x = 0; x < tree.order(); ++x) {
        if (up.local[x] >= 0) result.map[x] = left.map[up.local[x]];
        else result.map[x] = built.map_right[right.map[rp.local[x]]];
    }
    node.left = std::move(left.trace);
    node.right = std::move(right.trace);
    result.trace = std::make_unique<TreeTrace>(std::move(node));
    verify_component_iso(tree, labels, result);
    return result;
}

}  // namespace

std::optional<TreeTrace> recognize_tree(const Graph& tree, int r) {
    if (!is_tree(tree)) throw std::invalid_argument("recognize_tree: input is not a tree");
    if (r < 2) throw std::invalid_argument("recognize_tree: r must be >= 2");
    if (tree.order() == 1) return std::nullopt;
    if (tree.order() == 2) {
        TreeTrace t;
        t.kind = TreeTrace::Kind::p2;
        t.r = r;
        return t;
    }
    auto partition = find_kr_amenable(tree, r);
    if (!partition) return std::nullopt;
    return std::move(*decompose(tree, partition->labels, r).trace);
}

PartitionedTree replay_trace(const TreeTrace& trace) {
    switch (trace.kind) {
        case TreeTrace::Kind::leaf: return k1r_plus(trace.r);
        case TreeTrace::Kind::p2: {
            std::vector<Label> labels(2, Label{1, 0});
            return {path_graph(2), make_kr_partition(trace.r, std::move(labels))};
        }
        case TreeTrace::Kind::type_a:
            return type_a(replay_trace(*trace.left), replay_trace(*trace.right), trace.cls,
                          trace.left_edge, trace.right_edge, trace.orientation);
        case TreeTrace::Kind::type_b:
            return type_b(replay_trace(*trace.left), replay_trace(*trace.right),
                          trace.left_vertex, trace.right_vertex);
    }
    throw std::invalid_argument("replay_trace: unknown node kind");
}

// ---- bounded family generation ------------------------------------------------------

std::vector<std::string> generate_family(int r, int max_order) {
    if (r < 2) throw std::invalid_argument("generate_family: r must be >= 2");
    if (max_order < 2 * r + 1)
        throw std::invalid_argument("generate_family: max_order must be at least 2r+1");

    std::vector<PartitionedTree> family;
    std::set<std::string> seen_pairs;
    auto push = [&](PartitionedTree pt) {
        if (pt.tree.order() > max_order) return;
        std::string key = labeled_pair_key(pt);
        if (seen_pairs.insert(std::move(key)).second) family.push_back(std::move(pt));
    };

    push(k1r_plus(r));

    auto combine = [&](const PartitionedTree& x, const PartitionedTree& y) {
        if (x.tree.order() + y.tree.order() - 2 <= max_order) {
            for (int cls = 1; cls <= r; ++cls) {
                auto ex = induced_edges(x.tree, x.partition.class_members(cls));
                auto ey = induced_edges(y.tree, y.partition.class_members(cls));
                for (const Edge& a : ex)
                    for (const Edge& b : ey)
                        for (auto orient :
                             {TypeAOrientation::straight, TypeAOrientation::flipped})
                            push(type_a(x, y, cls, a, b, orient));
            }
        }
        if (x.tree.order() + y.tree.order() <= max_order) {
            for (int xv : x.partition.zero_members())
                for (int yv : y.partition.zero_members()) push(type_b(x, y, xv, yv));
        }
    };

    // operate on copies: push may reallocate the family vector mid-combine
    for (size_t i = 0; i < family.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            PartitionedTree x = family[i];
            PartitionedTree y = family[j];
            combine(x, y);
        }
    }

    std::set<std::string> codes;
    for (const auto& pt : family) codes.insert(canonical_code(pt.tree));
    return {codes.begin(), codes.end()};
}

// ---- trace serialization ---------------------------------------------------------------

namespace {

void format_trace_rec(const TreeTrace& t, std::ostream& out) {
    switch (t.kind) {
        case TreeTrace::Kind::leaf:
            out << "(leaf " << t.r << ")";
            return;
        case TreeTrace::Kind::p2:
            out << "(p2 " << t.r << ")";
            return;
        case TreeTrace::Kind::type_a:
            out << "(type-a " << t.cls << " (" << t.left_edge.first << " " << t.left_edge.second
                << ") (" << t.right_edge.first << " " << t.right_edge.second << ") "
                << (t.orientation == TypeAOrientation::straight ? "straight" : "flipped") << " ";
            format_trace_rec(*t.left, out);
            out << " ";
            format_trace_rec(*t.right, out);
            out << ")";
            return;
        case TreeTrace::Kind::type_b:
            out << "(type-b " << t.left_vertex << " " << t.right_vertex << " ";
            format_trace_rec(*t.left, out);
            out << " ";
            format_trace_rec(*t.right, out);
            out << ")";
            return;
    }
}

struct TraceParser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError("trace: expected '" + std::string(1, c) + "' at offset " +
                             std::to_string(pos));
        ++pos;
    }

    std::string atom() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && !isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (start == pos) throw ParseError("trace: expected atom at offset " + std::to_string(pos));
        return std::string(text.substr(start, pos - start));
    }

    int number() {
        std::string a = atom();
        try {
            return std::stoi(a);
        } catch (const std::logic_error&) {
            throw ParseError("trace: expected number, got \"" + a + "\"");
        }
    }

    Edge edge() {
        expect('(');
        int u = number();
        int v = number();
        expect(')');
        return {u, v};
    }

    TreeTrace node() {
        expect('(');
        std::string head = atom();
        TreeTrace t;
        if (head == "leaf") {
            t.kind = TreeTrace::Kind::leaf;
            t.r = number();
        } else if (head == "p2") {
            t.kind = TreeTrace::Kind::p2;
            t.r = number();
        } else if (head == "type-a") {
            t.kind = TreeTrace::Kind::type_a;
            t.cls = number();
            t.left_edge = edge();
            t.right_edge = edge();
            std::string orient = atom();
            if (orient == "straight") t.orientation = TypeAOrientation::straight;
            else if (orient == "flipped") t.orientation = TypeAOrientation::flipped;
            else throw ParseError("trace: bad orientation \"" + orient + "\"");
            t.left = std::make_unique<TreeTrace>(node());
            t.right = std::make_unique<TreeTrace>(node());
            t.r = t.left->r;
        } else if (head == "type-b") {
            t.kind = TreeTrace::Kind::type_b;
            t.left_vertex = number();
            t.right_vertex = number();
            t.left = std::make_unique<TreeTrace>(node());
            t.right = std::make_unique<TreeTrace>(node());
            t.r = t.left->r;
        } else {
            throw ParseError("trace: unknown node kind \"" + head + "\"");
        }
        expect(')');
        return t;
    }
};

}  // namespace

std::string format_trace(const TreeTrace& trace) {
    std::ostringstream out;
    format_trace_rec(trace, out);
    return out.str();
}

TreeTrace parse_trace(std::string_view text) {
    TraceParser parser{text};
    TreeTrace t = parser.node();
    parser.skip_ws();
    if (parser.pos != text.size())
        throw ParseError("trace: trailing characters at offset " + std::to_string(parser.pos));
    return t;
}

}  // namespace cartdom
