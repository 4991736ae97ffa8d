#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartdom/graph.hpp"

namespace cartdom {

// Every vertex has at least one neighbor in d.
bool is_total_dominating_set(const Graph& g, const VertexSet& d);

// Every vertex has exactly one neighbor in d, i.e. the open neighborhoods of
// d partition V(G).
bool is_eod_set(const Graph& g, const VertexSet& d);

enum class Factor { first, second };

struct ParallelFilter {
    ProductDims dims;
    Factor factor = Factor::first;
};

struct SearchOptions {
    enum class Mode { first, enumerate_all };
    enum class Require { none, parallel_only };

    Mode mode = Mode::first;
    std::optional<ParallelFilter> parallel_filter;
    Require require = Require::none;
};

struct EodCertificate {
    std::optional<VertexSet> set;  // engaged iff an EOD-set was found
    long long nodes_explored = 0;
    std::optional<bool> is_parallel_wrt_first;  // set when dims were supplied

    bool found() const { return set.has_value(); }
};

// Exhaustive deterministic search. Returns the first solution in the fixed
// branching order, or a not-found certificate after the space is exhausted.
// With require=parallel_only only solutions parallel w.r.t. the selected
// factor are accepted (applied as a post-filter on full solutions).
EodCertificate find_eod_set(const Graph& g, const SearchOptions& opts = {});

// All EOD-sets, each once, in lexicographic order of their sorted members.
std::vector<VertexSet> enumerate_eod_sets(const Graph& g);

// True iff every edge induced by d projects onto an edge of the selected
// factor (never a single vertex). Requires d to be an EOD-set of p.
bool is_parallel_eod(const ProductDims& dims, Factor factor, const VertexSet& d, const Graph& p);

struct LayerCount {
    int g = 0;          // first-factor vertex
    int count = 0;      // |D  intersect  that H-layer|
    bool adjacent_pair = false;  // meaningful when count == 2
};

// Per H-layer occupancy of d inside the product p.
std::vector<LayerCount> layer_occupancy(const Graph& p, const ProductDims& dims,
                                        const VertexSet& d);

// "EOD n=<n> D=<v1,v2,...>"  or  "NO-EOD nodes=<count>"
std::string format_certificate(const Graph& g, const EodCertificate& cert);
EodCertificate parse_certificate(std::string_view text);

}  // namespace cartdom
