#include "cartdom/eod.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cartdom {

bool is_total_dominating_set(const Graph& g, const VertexSet& d) {
    for (int v : d)
        if (!g.has_vertex(v)) throw std::invalid_argument("set member out of range");
    for (int v = 0; v < g.order(); ++v) {
        bool covered = false;
        for (int w : g.neighbors(v))
            if (vertex_set_contains(d, w)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

bool is_eod_set(const Graph& g, const VertexSet& d) {
    for (int v : d)
        if (!g.has_vertex(v)) throw std::invalid_argument("set member out of range");
    for (int v = 0; v < g.order(); ++v) {
        int covered = 0;
        for (int w : g.neighbors(v))
            if (vertex_set_contains(d, w) && ++covered > 1) return false;
        if (covered != 1) return false;
    }
    return true;
}

bool is_parallel_eod(const ProductDims& dims, Factor factor, const VertexSet& d, const Graph& p) {
    if (dims.order() != p.order())
        throw std::invalid_argument("dims inconsistent with the product order");
    if (!is_eod_set(p, d))
        throw PreconditionError("is_parallel_eod: the set is not an EOD-set of the product");
    for (size_t i = 0; i < d.size(); ++i) {
        for (size_t j = i + 1; j < d.size(); ++j) {
            if (!p.adjacent(d[i], d[j])) continue;
            bool same = (factor == Factor::first)
                            ? dims.first(d[i]) == dims.first(d[j])
                            : dims.second(d[i]) == dims.second(d[j]);
            if (same) return false;  // this induced edge projects to a single vertex
        }
    }
    return true;
}

std::vector<LayerCount> layer_occupancy(const Graph& p, const ProductDims& dims,
                                        const VertexSet& d) {
    if (dims.order() != p.order())
        throw std::invalid_argument("dims inconsistent with the product order");
    std::vector<std::vector<int>> per_layer(dims.g_size);
    for (int v : d) {
        if (!p.has_vertex(v)) throw std::invalid_argument("set member out of range");
        per_layer[dims.first(v)].push_back(v);
    }
    std::vector<LayerCount> out(dims.g_size);
    for (int g = 0; g < dims.g_size; ++g) {
        out[g].g = g;
        out[g].count = static_cast<int>(per_layer[g].size());
        if (out[g].count == 2)
            out[g].adjacent_pair = p.adjacent(per_layer[g][0], per_layer[g][1]);
    }
    return out;
}

// ---- exact search -----------------------------------------------------------
//
// The instance is A*x = 1 over the integers (A the adjacency matrix): every
// vertex must see exactly one chosen neighbor. Propagation:
//   * coverage hits 1        -> all still-undecided neighbors become excluded
//   * coverage 0, one option -> that option is forced in
//   * coverage > 1, or coverage 0 with no options -> dead branch
// Branching picks the uncovered vertex with fewest options (lowest index on
// ties) and tries its lowest-index undecided neighbor, exclude before include.

namespace {

enum : signed char { kUndecided = 0, kIn = 1, kOut = 2 };

class EodSearch {
public:
    EodSearch(const Graph& g, const SearchOptions& opts) : g_(g), opts_(opts) {
        state_.assign(g.order(), kUndecided);
        covered_.assign(g.order(), 0);
        options_.assign(g.order(), 0);
        for (int v = 0; v < g.order(); ++v) options_[v] = g.degree(v);
    }

    EodCertificate run() {
        EodCertificate cert;
        // every vertex needs a dominator, so an isolated vertex kills the instance
        bool feasible = true;
        for (int v = 0; v < g_.order() && feasible; ++v)
            if (g_.degree(v) == 0) feasible = false;
        if (feasible) search(cert);
        else cert.nodes_explored = 1;

        if (opts_.mode == SearchOptions::Mode::enumerate_all) {
            if (opts_.require == SearchOptions::Require::parallel_only) {
                const auto& filt = *opts_.parallel_filter;
                std::erase_if(solutions_, [&](const VertexSet& d) {
                    return !is_parallel_eod(filt.dims, filt.factor, d, g_);
                });
            }
            std::sort(solutions_.begin(), solutions_.end());
            all_solutions = std::move(solutions_);
            if (!all_solutions.empty()) cert.set = all_solutions.front();
        } else if (!solutions_.empty()) {
            cert.set = solutions_.front();
        }
        if (opts_.parallel_filter && cert.set)
            cert.is_parallel_wrt_first = is_parallel_eod(opts_.parallel_filter->dims,
                                                         Factor::first, *cert.set, g_);
        return cert;
    }

    std::vector<VertexSet> all_solutions;

private:
    struct QueuedAssign {
        int vertex;
        signed char value;
    };

    // Applies pending assignments with full propagation. Appends every vertex
    // it decides onto trail_. Returns false on conflict. Counter updates for
    // an assignment always complete before any early return so that undo_to
    // can reverse them uniformly.
    bool propagate(std::vector<QueuedAssign>& queue) {
        while (!queue.empty()) {
            auto [v, val] = queue.back();
            queue.pop_back();
            if (state_[v] == val) continue;
            if (state_[v] != kUndecided) return false;
            state_[v] = val;
            trail_.push_back(v);
            for (int w : g_.neighbors(v)) {
                --options_[w];
                if (val == kIn) ++covered_[w];
            }
            for (int w : g_.neighbors(v)) {
                if (covered_[w] > 1) return false;
                if (covered_[w] == 1 && val == kIn) {
                    for (int x : g_.neighbors(w))
                        if (state_[x] == kUndecided) queue.push_back({x, kOut});
                } else if (covered_[w] == 0) {
                    if (options_[w] == 0) return false;
                    if (options_[w] == 1) {
                        for (int x : g_.neighbors(w))
                            if (state_[x] == kUndecided) queue.push_back({x, kIn});
                    }
                }
            }
        }
        return true;
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            signed char val = state_[v];
            state_[v] = kUndecided;
            for (int w : g_.neighbors(v)) {
                ++options_[w];
                if (val == kIn) --covered_[w];
            }
        }
    }

    // Lowest-index undecided neighbor of the most-constrained uncovered vertex.
    int pick_branch_variable() const {
        int best_row = -1, best_options = kInfDist;
        for (int v = 0; v < g_.order(); ++v) {
            if (covered_[v] == 0 && options_[v] < best_options) {
                best_options = options_[v];
                best_row = v;
            }
        }
        if (best_row < 0) return -1;  // all rows covered == all vertices decided
        for (int x : g_.neighbors(best_row))
            if (state_[x] == kUndecided) return x;
        throw std::logic_error("uncovered row without options survived propagation");
    }

    // Returns true to stop the whole search (first acceptable solution found).
    bool search(EodCertificate& cert) {
        ++cert.nodes_explored;
        int x = pick_branch_variable();
        if (x < 0) {
            record_solution();
            return opts_.mode == SearchOptions::Mode::first && accepted_last();
        }
        for (signed char val : {kOut, kIn}) {
            size_t mark = trail_.size();
            std::vector<QueuedAssign> queue{{x, val}};
            if (propagate(queue) && search(cert)) return true;
            undo_to(mark);
        }
        return false;
    }

    void record_solution() {
        VertexSet d;
        for (int v = 0; v < g_.order(); ++v)
            if (state_[v] == kIn) d.push_back(v);
        solutions_.push_back(std::move(d));
    }

    // Post-filter: with require=parallel_only, a solution failing the filter
    // is dropped and the search continues.
    bool accepted_last() {
        if (opts_.require != SearchOptions::Require::parallel_only) return true;
        const auto& filt = *opts_.parallel_filter;
        if (is_parallel_eod(filt.dims, filt.factor, solutions_.back(), g_)) return true;
        solutions_.pop_back();
        return false;
    }

    const Graph& g_;
    const SearchOptions& opts_;
    std::vector<signed char> state_;
    std::vector<int> covered_;
    std::vector<int> options_;
    std::vector<int> trail_;
    std::vector<VertexSet> solutions_;
};

}  // namespace

EodCertificate find_eod_set(const Graph& g, const SearchOptions& opts) {
    if (opts.require == SearchOptions::Require::parallel_only && !opts.parallel_filter)
        throw std::invalid_argument("parallel_only requires a parallel filter");
    if (opts.parallel_filter && opts.parallel_filter->dims.order() != g.order())
        throw std::invalid_argument("parallel filter dims inconsistent with the graph order");
    EodSearch search(g, opts);
    return search.run();
}

std::vector<VertexSet> enumerate_eod_sets(const Graph& g) {
    SearchOptions opts;
    opts.mode = SearchOptions::Mode::enumerate_all;
    EodSearch search(g, opts);
    search.run();
    return std::move(search.all_solutions);
}

std::string format_certificate(const Graph& g, const EodCertificate& cert) {
    std::ostringstream out;
    if (cert.set)
        out << "EOD n=" << g.order() << " D=" << format_vertex_set(*cert.set);
    else
        out << "NO-EOD nodes=" << cert.nodes_explored;
    return out.str();
}

EodCertificate parse_certificate(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    if (!(in >> tag)) throw ParseError("certificate: empty input");
    EodCertificate cert;
    if (tag == "EOD") {
        std::string field;
        VertexSet d;
        bool have_d = false;
        while (in >> field) {
            if (field.rfind("D=", 0) == 0) {
                have_d = true;
                std::string list = field.substr(2);
                if (list != "-" && !list.empty()) {
                    std::istringstream ls(list);
                    std::string item;
                    while (std::getline(ls, item, ',')) {
                        try {
                            d.push_back(std::stoi(item));
                        } catch (const std::logic_error&) {
                            throw ParseError("certificate: bad vertex \"" + item + "\"");
                        }
                    }
                }
            }
        }
        if (!have_d) throw ParseError("certificate: missing D= field");
        cert.set = as_vertex_set(std::move(d));
        return cert;
    }
    if (tag == "NO-EOD") {
        std::string field;
        while (in >> field) {
            if (field.rfind("nodes=", 0) == 0) {
                try {
                    cert.nodes_explored = std::stoll(field.substr(6));
                } catch (const std::logic_error&) {
                    throw ParseError("certificate: bad node count \"" + field + "\"");
                }
            }
        }
        return cert;
    }
    throw ParseError("certificate: expected EOD or NO-EOD, got \"" + tag + "\"");
}

}  // namespace cartdom
