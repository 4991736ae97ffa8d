#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartdom/amenable.hpp"
#include "cartdom/eod.hpp"
#include "cartdom/graph.hpp"

namespace cartdom {

// ---- labeled-graph enumeration -------------------------------------------------

// All 2^(n(n-1)/2) labeled graphs on n vertices in ascending edge-mask order;
// bit k of the mask is the k-th pair in lexicographic order (0,1),(0,2),...
// Guarded at n <= 6 unless force is set.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn,
                            bool force = false);
std::vector<Graph> enumerate_labeled_graphs(int n, bool force = false);

// ---- fixtures ----------------------------------------------------------------------

// A registered example graph, optionally with an amenable partition (fig1)
// or a cyclic pair-label map (fig2) whose implied set should efficiently
// openly dominate the corresponding product.
struct Fixture {
    std::string name;
    Graph graph;
    std::vector<std::string> vertex_names;
    std::optional<WeakPartition> partition;           // fig1: K_{2,3} partition
    int cycle_len = 0;                                // fig2: 6
    std::vector<std::vector<int>> cycle_labels;       // fig2: 1-based labels per vertex
    std::string citation;
};

Fixture load_fixture(const std::string& name);  // throws std::invalid_argument when unknown
std::vector<std::string> fixture_names();

struct ImpliedEod {
    Graph product;
    ProductDims dims;
    VertexSet d;
};

// The product EOD-set a fixture's labeling implies.
ImpliedEod implied_product_eod(const Fixture& fixture);

// ---- verification suites --------------------------------------------------------------

struct SuiteFailure {
    std::string instance;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    std::string suite;
    int instances = 0;
    int passed = 0;
    std::vector<SuiteFailure> failures;
    double wall_seconds = 0;
    std::vector<std::string> notes;  // informational lines (e.g. conjecture evidence)

    bool all_passed() const { return failures.empty(); }
};

class SuiteParams {
public:
    SuiteParams() = default;
    explicit SuiteParams(const std::vector<std::string>& key_values);  // "n=5" tokens

    int get_int(const std::string& key, int fallback) const;
    void set_int(const std::string& key, int value);

private:
    std::map<std::string, int> values_;
};

// Registered suite ids:
//   KR_EQUIV, ZZ_EQUIV, KMN_EQUIV, CYC_EQUIV, TREE_EQUIV,
//   DIAM2_TREES, LAYER_LEMMA, ORACLE_XCHECK, TORUS_EVIDENCE
std::vector<std::string> known_suites();

// Runs one suite; throws std::invalid_argument for an unknown id. Reports
// are deterministic given params and byte-identical across worker counts
// (the workers param shards instances).
SuiteReport run_suite(const std::string& id, const SuiteParams& params = {});

std::string format_report(const SuiteReport& report, bool key_value_dump = false);

}  // namespace cartdom
