#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartdom/graph.hpp"

namespace cartdom {

// Flavors of weak partitions of V(G). Class indices are 1-based as rendered
// in all human-facing output; vertex 0..n-1 of the second product factor
// corresponds to class index i via i-1.
enum class PartitionFlavor { kr, kmn, c4, c5 };

// Per-vertex label: a==0 is the zero class V_0; b==0 a plain class V_a;
// otherwise the pair class V_[a,b] (kmn flavor only, a <= m < b).
struct Label {
    int a = 0;
    int b = 0;

    bool is_zero() const { return a == 0; }
    bool is_pair() const { return b != 0; }
    bool operator==(const Label&) const = default;
    bool operator<(const Label& o) const { return std::pair{a, b} < std::pair{o.a, o.b}; }
};

struct WeakPartition {
    PartitionFlavor flavor = PartitionFlavor::kr;
    int r = 0;            // kr: number of classes; c4 -> 4, c5 -> 5
    int m = 0, n = 0;     // kmn partite sizes, m <= n
    std::vector<Label> labels;  // one per vertex, total assignment

    int class_count() const;               // r or m+n
    VertexSet class_members(int cls) const;  // plain class V_cls
    VertexSet pair_members(int a, int b) const;
    VertexSet zero_members() const;
    VertexSet nonzero_members() const;      // everything outside V_0
};

WeakPartition make_kr_partition(int r, std::vector<Label> labels);
WeakPartition make_kmn_partition(int m, int n, std::vector<Label> labels);
WeakPartition make_cycle_partition(int k, std::vector<Label> labels);  // k in {4,5}

struct ViolationReport {
    std::string condition;          // A, B, C, C', D, D', I..V, i..iv
    std::vector<int> vertices;      // witness vertices
    std::vector<Edge> edges;        // witness edges
    std::string detail;

    std::string to_string() const;  // "VIOLATION <cond> at <witness>"
};

struct CheckResult {
    bool ok = false;
    std::vector<ViolationReport> violations;  // first violation per condition
};

// ---- checkers ------------------------------------------------------------
// Each validates the labeling against its flavor (throws std::invalid_argument
// on a flavor/label mismatch) and evaluates the defining conditions.

CheckResult check_kr_amenable(const Graph& g, const WeakPartition& p);
CheckResult check_kmn_amenable(const Graph& g, const WeakPartition& p);
CheckResult check_cycle_parallel_amenable(const Graph& g, const WeakPartition& p);

// Dispatches on p.flavor.
CheckResult check_partition(const Graph& g, const WeakPartition& p);

// ---- exhaustive searchers ---------------------------------------------------
// Deterministic backtracking over label assignments in vertex order; the
// first partition found under the canonical label introduction order is
// returned, or nullopt once the space is exhausted.

std::optional<WeakPartition> find_kr_amenable(const Graph& g, int r);
std::optional<WeakPartition> find_kmn_amenable(const Graph& g, int m, int n);
std::optional<WeakPartition> find_cycle_parallel_amenable(const Graph& g, int k);

// ---- certificate converters ---------------------------------------------------
// Partition -> EOD-set of the corresponding product, and back. The vertex
// indexing of the product follows ProductDims with h_size = r, m+n or k.

VertexSet kr_partition_to_eod(const Graph& g, const WeakPartition& p);
WeakPartition eod_to_kr_partition(const ProductDims& dims, int r, const VertexSet& d);

VertexSet kmn_partition_to_eod(const Graph& g, const WeakPartition& p);
WeakPartition eod_to_kmn_partition(const ProductDims& dims, int m, int n, const VertexSet& d);

VertexSet cycle_partition_to_parallel_eod(const Graph& g, const WeakPartition& p);
WeakPartition parallel_eod_to_cycle_partition(const ProductDims& dims, int k, const VertexSet& d);

// ---- zig-zag sets ---------------------------------------------------------------

struct ZigzagSet {
    std::vector<Edge> edges;  // normalized (min,max), sorted
};

ZigzagSet make_zigzag_set(std::vector<Edge> edges);

// Conditions on the edge set: no common endpoints' neighbor, pairwise edge
// distance >= 2, every outside vertex sees exactly two of the edges at
// distance 1, and no odd cyclic 2-step sequence (checked as bipartiteness of
// the distance-2 auxiliary graph). Requires |V(G)| >= 3 and a non-empty set.
CheckResult is_zigzag_set(const Graph& g, const ZigzagSet& z);

// Exhaustive search over edge subsets, deterministic; nullopt when none.
std::optional<ZigzagSet> find_zigzag_set(const Graph& g);

// Parity 2-coloring of the 2-step components; the lexicographically smallest
// edge of each component seeds class 1.
WeakPartition zigzag_to_k2_partition(const Graph& g, const ZigzagSet& z);

// E' = edges induced by V_1 union V_2.
ZigzagSet k2_partition_to_zigzag(const Graph& g, const WeakPartition& p);

// ---- partition file format ---------------------------------------------------
//
//   one line per nonempty class:  "0: v1 v2 ..."   "3: v ..."   "[2,5]: v ..."
//   unlisted vertices default to V_0; '#' comments and blank lines ignored

struct FlavorSpec {
    PartitionFlavor flavor = PartitionFlavor::kr;
    int r = 0, m = 0, n = 0;
};

WeakPartition parse_partition(std::string_view text, const FlavorSpec& spec, int order);
std::string format_partition(const WeakPartition& p);
std::string format_label(const Label& l);

}  // namespace cartdom
