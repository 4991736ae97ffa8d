#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartdom/amenable.hpp"
#include "cartdom/graph.hpp"

namespace cartdom {

bool is_tree(const Graph& g);

// Center-rooted canonical string; equal codes iff isomorphic trees. For
// bicentral trees the code is the smaller of the two center-rooted encodings.
std::string canonical_code(const Graph& tree);

// One representative per isomorphism class, sorted by canonical code.
std::vector<Graph> enumerate_trees(int order);

// A tree together with a K_r weak partition of its vertex set.
struct PartitionedTree {
    Graph tree;
    WeakPartition partition;  // kr flavor
};

// The star K_{1,r} with every edge subdivided once: center 0 in V_0, the
// i-th leg {2i-1, 2i} forms V_i (2i-1 adjacent to the center).
PartitionedTree k1r_plus(int r);

enum class TypeAOrientation { straight, flipped };

// Glue two partitioned trees by identifying one class-i matching edge of
// each; straight maps min endpoint onto min endpoint. Order |L|+|R|-2.
PartitionedTree type_a(const PartitionedTree& left, const PartitionedTree& right, int cls,
                       Edge left_edge, Edge right_edge, TypeAOrientation orientation);

// Join two partitioned trees with a new edge between V_0 vertices.
// Order |L|+|R|.
PartitionedTree type_b(const PartitionedTree& left, const PartitionedTree& right, int left_vertex,
                       int right_vertex);

// Derivation tree recording how a tree is assembled from K_{1,r}^+ leaves
// (plus the distinguished order-2 path, which stands alone).
struct TreeTrace {
    enum class Kind { leaf, p2, type_a, type_b };

    Kind kind = Kind::leaf;
    int r = 0;
    int cls = 0;                       // type_a
    Edge left_edge{}, right_edge{};    // type_a, in each side's own labeling
    TypeAOrientation orientation = TypeAOrientation::straight;
    int left_vertex = -1, right_vertex = -1;  // type_b
    std::unique_ptr<TreeTrace> left, right;
};

// Rebuild the partitioned tree a trace describes.
PartitionedTree replay_trace(const TreeTrace& trace);

// Searches for a K_r-amenable partition and, when one exists, decomposes the
// tree along it into a derivation trace. Returns nullopt when the tree is
// not K_r-amenable (and not the order-2 path).
std::optional<TreeTrace> recognize_tree(const Graph& tree, int r);

// Canonical codes of every family member with order <= max_order: the
// closure of {K_{1,r}^+} under type_a/type_b over all argument choices.
std::vector<std::string> generate_family(int r, int max_order);

// s-expressions: (leaf r), (p2 r),
// (type-a i (u v) (u v) straight|flipped L R), (type-b x y L R)
std::string format_trace(const TreeTrace& trace);
TreeTrace parse_trace(std::string_view text);

}  // namespace cartdom
