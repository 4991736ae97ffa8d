// Acceptance suite: runs every gate criterion end to end and prints one
// pass/fail line per criterion. Exit status 0 iff all criteria pass.
//
// Set CARTDOM_STRETCH=1 to also run the documented large equivalence sweep
// (all 32768 labeled graphs on 6 vertices) as part of criterion 2.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cartdom/amenable.hpp"
#include "cartdom/eod.hpp"
#include "cartdom/graph.hpp"
#include "cartdom/oracles.hpp"
#include "cartdom/suites.hpp"
#include "cartdom/trees.hpp"

using namespace cartdom;

namespace {

// Every EOD-set produced under a diameter-2 second factor, kept for the
// layer-occupancy criterion.
struct ProducedSet {
    Graph product;
    ProductDims dims;
    VertexSet d;
};
std::vector<ProducedSet> g_layer_registry;

void register_sets(const Graph& h, const Graph& product, const ProductDims& dims,
                   const std::vector<VertexSet>& sets) {
    if (diameter(h) != 2) return;
    for (const auto& d : sets) g_layer_registry.push_back({product, dims, d});
}

struct Outcome {
    bool ok = true;
    int instances = 0;
    std::string detail;

    void expect(bool pass, const std::string& what) {
        ++instances;
        if (!pass) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

// 1. Path and cycle ground truth.
Outcome criterion_path_cycle() {
    Outcome out;
    for (int n = 1; n <= 16; ++n)
        out.expect(find_eod_set(path_graph(n)).found() == path_eod(n).value,
                   "P_" + std::to_string(n));
    for (int n = 3; n <= 16; ++n)
        out.expect(find_eod_set(cycle_graph(n)).found() == cycle_eod(n).value,
                   "C_" + std::to_string(n));
    return out;
}

// 2. Complete-factor equivalence over all labeled graphs on <= 5 vertices.
Outcome criterion_kr_equiv() {
    Outcome out;
    SuiteParams params;
    params.set_int("n", 5);
    params.set_int("r", 3);
    auto report = run_suite("KR_EQUIV", params);
    out.instances = report.instances;
    out.ok = report.all_passed();
    if (!out.ok && !report.failures.empty())
        out.detail = report.failures.front().instance + ": expected " +
                     report.failures.front().expected + ", got " + report.failures.front().got;
    if (const char* stretch = std::getenv("CARTDOM_STRETCH"); stretch && stretch[0] == '1') {
        auto t0 = std::chrono::steady_clock::now();
        SuiteParams big;
        big.set_int("n", 6);
        big.set_int("r", 3);
        auto big_report = run_suite("KR_EQUIV", big);
        double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.instances += big_report.instances;
        out.expect(big_report.all_passed() && wall < 900,
                   "stretch n=6 failed or exceeded 15 min");
        std::printf("      stretch n=6: %d instances, %d passed, %.1f s\n",
                    big_report.instances, big_report.passed, wall);
    }
    return out;
}

// 3. Zig-zag / K_2 equivalence with converter round-trips.
Outcome criterion_zz_equiv() {
    Outcome out;
    SuiteParams params;
    params.set_int("n", 5);
    auto report = run_suite("ZZ_EQUIV", params);
    out.instances = report.instances;
    out.ok = report.all_passed();
    if (!out.ok && !report.failures.empty()) out.detail = report.failures.front().instance;
    return out;
}

// 4. Grid theorem versus brute force.
Outcome criterion_grids() {
    Outcome out;
    for (int r : {3, 4}) {
        for (int t = r; t <= 10; ++t) {
            auto [product, dims] = cartesian_product(path_graph(r), path_graph(t));
            bool got = find_eod_set(product).found();
            out.expect(got == grid_eod(r, t).value,
                       "P_" + std::to_string(r) + " box P_" + std::to_string(t));
        }
    }
    return out;
}

// 5. Torus results: the C_4 box C_t characterization, parallel existence on
// the five reference pairs, and the no-EOD list.
Outcome criterion_torus() {
    Outcome out;
    for (int t = 4; t <= 12; ++t) {
        auto [product, dims] = cartesian_product(cycle_graph(4), cycle_graph(t));
        auto cert = find_eod_set(product);
        out.expect(cert.found() == c4_torus_eod(t).value, "C_4 box C_" + std::to_string(t));
        if (cert.found())
            register_sets(cycle_graph(t), product, dims, {*cert.set});
    }
    const std::vector<std::pair<int, int>> pairs = {{4, 4}, {4, 8}, {4, 6}, {5, 5}, {3, 6}};
    for (auto [r, t] : pairs) {
        auto [product, dims] = cartesian_product(cycle_graph(r), cycle_graph(t));
        auto sets = enumerate_eod_sets(product);
        bool any_parallel = false;
        for (const auto& d : sets)
            any_parallel = any_parallel || is_parallel_eod(dims, Factor::first, d, product) ||
                           is_parallel_eod(dims, Factor::second, d, product);
        out.expect(any_parallel == torus_parallel_eod(r, t).value,
                   "parallel C_" + std::to_string(r) + " box C_" + std::to_string(t));
        register_sets(cycle_graph(t), product, dims, sets);
    }
    for (auto [r, t] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {3, 5}, {5, 5}, {6, 6}}) {
        auto [product, dims] = cartesian_product(cycle_graph(r), cycle_graph(t));
        out.expect(!find_eod_set(product).found(),
                   "C_" + std::to_string(r) + " box C_" + std::to_string(t) + " must have none");
    }
    return out;
}

// 6. The complete-bipartite figure fixture.
Outcome criterion_fig1() {
    Outcome out;
    Fixture f = load_fixture("fig1");
    out.expect(check_kmn_amenable(f.graph, *f.partition).ok, "fixture checker");
    auto implied = implied_product_eod(f);
    out.expect(implied.d.size() == 12, "|D| == 12");
    out.expect(implied.product.order() == 60, "60-vertex product");
    out.expect(is_eod_set(implied.product, implied.d), "is an EOD-set");
    return out;
}

// 7. The 6-cycle figure fixture.
Outcome criterion_fig2() {
    Outcome out;
    Fixture f = load_fixture("fig2");
    auto implied = implied_product_eod(f);
    out.expect(implied.product.order() == 48, "48-vertex product");
    out.expect(implied.d.size() == 12, "two product vertices per pair-labeled vertex");
    out.expect(is_eod_set(implied.product, implied.d), "is an EOD-set");
    return out;
}

// 8. Tree suite: recognition, amenability and the product search agree on
// every tree of order 3..10; traces replay; the bounded family generator
// matches brute force up to order 12.
Outcome criterion_trees() {
    Outcome out;
    const std::vector<size_t> counts = {1, 2, 3, 6, 11, 23, 47, 106};
    for (int order = 3; order <= 10; ++order) {
        auto trees = enumerate_trees(order);
        out.expect(trees.size() == counts[order - 3],
                   "tree count at order " + std::to_string(order));
        for (const Graph& tree : trees) {
            auto trace = recognize_tree(tree, 3);
            auto partition = find_kr_amenable(tree, 3);
            auto [product, dims] = cartesian_product(tree, complete_graph(3));
            bool eod = find_eod_set(product).found();
            bool agree =
                trace.has_value() == partition.has_value() && partition.has_value() == eod;
            out.expect(agree, "agreement at order " + std::to_string(order));
            if (trace) {
                out.expect(canonical_code(replay_trace(*trace).tree) == canonical_code(tree),
                           "trace replay at order " + std::to_string(order));
            }
        }
    }
    auto family = generate_family(3, 12);
    std::set<std::string> brute;
    for (int order = 3; order <= 12; ++order)
        for (const Graph& tree : enumerate_trees(order))
            if (find_kr_amenable(tree, 3)) brute.insert(canonical_code(tree));
    out.expect(std::set<std::string>(family.begin(), family.end()) == brute,
               "generated family == brute-force amenable trees (<= 12)");
    return out;
}

// 9. No tree product with a diameter-2 factor has an EOD-set parallel to the
// tree.
Outcome criterion_diam2_trees() {
    Outcome out;
    const std::vector<std::pair<std::string, Graph>> seconds = {
        {"C4", cycle_graph(4)},
        {"C5", cycle_graph(5)},
        {"K_{1,2}", complete_bipartite_graph(1, 2)},
        {"K_{2,3}", complete_bipartite_graph(2, 3)}};
    for (int order = 3; order <= 8; ++order) {
        for (const Graph& tree : enumerate_trees(order)) {
            for (const auto& [name, h] : seconds) {
                auto [product, dims] = cartesian_product(tree, h);
                auto sets = enumerate_eod_sets(product);
                bool any_parallel = false;
                for (const auto& d : sets)
                    any_parallel = any_parallel || is_parallel_eod(dims, Factor::first, d, product);
                out.expect(!any_parallel,
                           "order " + std::to_string(order) + " times " + name);
                register_sets(h, product, dims, sets);
            }
        }
    }
    return out;
}

// 10. Cycle-parallel equivalence over all labeled graphs on <= 5 vertices,
// plus the order-3 path remark.
Outcome criterion_cycle_equiv() {
    Outcome out;
    for (int k : {4, 5}) {
        Graph ck = cycle_graph(k);
        for (int n = 1; n <= 5; ++n) {
            for_each_labeled_graph(n, [&](const Graph& g) {
                auto partition = find_cycle_parallel_amenable(g, k);
                auto [product, dims] = cartesian_product(g, ck);
                SearchOptions opts;
                opts.parallel_filter = ParallelFilter{dims, Factor::first};
                opts.require = SearchOptions::Require::parallel_only;
                auto cert = find_eod_set(product, opts);
                out.expect(partition.has_value() == cert.found(),
                           "k=" + std::to_string(k) + " order=" + std::to_string(n));
                if (cert.found()) register_sets(ck, product, dims, {*cert.set});
            });
        }
    }
    Graph p3 = path_graph(3);
    out.expect(!find_cycle_parallel_amenable(p3, 4).has_value(),
               "P_3 must not be C_4-parallel amenable");
    auto [p3c4, dims] = cartesian_product(p3, cycle_graph(4));
    auto cert = find_eod_set(p3c4);
    out.expect(cert.found(), "P_3 box C_4 must be an EOD-graph");
    if (cert.found()) register_sets(cycle_graph(4), p3c4, dims, {*cert.set});
    return out;
}

// 11. Layer occupancy over every set produced by criteria 5, 9 and 10.
Outcome criterion_layer_occupancy() {
    Outcome out;
    out.expect(!g_layer_registry.empty(), "registry must not be empty");
    for (const auto& produced : g_layer_registry) {
        bool ok = true;
        for (const auto& layer : layer_occupancy(produced.product, produced.dims, produced.d)) {
            if (layer.count > 2 || (layer.count == 2 && !layer.adjacent_pair)) ok = false;
        }
        out.expect(ok, "a produced set violates the layer bound");
    }
    return out;
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "path/cycle ground truth", 5, criterion_path_cycle},
        {2, "complete-factor equivalence (r=3, n<=5)", 60, criterion_kr_equiv},
        {3, "zig-zag / K_2 equivalence and round-trips", 120, criterion_zz_equiv},
        {4, "grid characterization vs brute force", 300, criterion_grids},
        {5, "torus characterizations", 600, criterion_torus},
        {6, "complete-bipartite figure fixture", 1, criterion_fig1},
        {7, "6-cycle figure fixture", 1, criterion_fig2},
        {8, "tree recognition/family suite", 600, criterion_trees},
        {9, "no tree-parallel sets under diameter-2 factors", 600, criterion_diam2_trees},
        {10, "cycle-parallel equivalence", 600, criterion_cycle_equiv},
        {11, "layer occupancy of produced sets", 60, criterion_layer_occupancy},
    };

    bool all_ok = true;
    for (const auto& criterion : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome outcome = criterion.run();
        double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = wall < criterion.limit_seconds;
        bool pass = outcome.ok && in_time;
        all_ok = all_ok && pass;
        std::printf("[%2d] %-46s %s (%d instances, %.1f s%s)\n", criterion.id,
                    criterion.name.c_str(), pass ? "PASS" : "FAIL", outcome.instances, wall,
                    in_time ? "" : ", over time budget");
        if (!outcome.ok) std::printf("     %s\n", outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("ACCEPTANCE: %s\n", all_ok ? "PASS" : "FAIL");
    return all_ok ? 0 : 1;
}
