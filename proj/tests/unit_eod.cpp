#include <doctest.h>

#include <random>

#include "cartdom/eod.hpp"
#include "cartdom/graph.hpp"

using namespace cartdom;

namespace {

// Direct-definition reference: every vertex sees exactly one member.
bool naive_is_eod(const Graph& g, unsigned mask) {
    for (int v = 0; v < g.order(); ++v) {
        int seen = 0;
        for (int w : g.neighbors(v))
            if (mask >> w & 1) ++seen;
        if (seen != 1) return false;
    }
    return true;
}

// Independent oracle: all 2^n subsets, filtered by the definition.
std::vector<VertexSet> naive_enumerate(const Graph& g) {
    std::vector<VertexSet> out;
    for (unsigned mask = 0; mask < (1u << g.order()); ++mask) {
        if (!naive_is_eod(g, mask)) continue;
        VertexSet d;
        for (int v = 0; v < g.order(); ++v)
            if (mask >> v & 1) d.push_back(v);
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("total domination and EOD predicates") {
    Graph p4 = path_graph(4);
    CHECK(is_total_dominating_set(p4, {1, 2}));
    CHECK_FALSE(is_total_dominating_set(p4, {0, 1}));
    Graph c4 = cycle_graph(4);
    CHECK(is_total_dominating_set(c4, {0, 1, 2, 3}));

    CHECK(is_eod_set(p4, {1, 2}));
    CHECK(is_eod_set(c4, {0, 1}));
    CHECK_FALSE(is_eod_set(path_graph(5), {1, 2}));
}

TEST_CASE("exhaustive search on paths and cycles") {
    CHECK_FALSE(find_eod_set(path_graph(5)).found());
    CHECK_FALSE(find_eod_set(cycle_graph(6)).found());

    auto c8 = find_eod_set(cycle_graph(8));
    REQUIRE(c8.found());
    CHECK(is_eod_set(cycle_graph(8), *c8.set));
    auto reference = naive_enumerate(cycle_graph(8));
    CHECK(std::find(reference.begin(), reference.end(), *c8.set) != reference.end());

    SUBCASE("deterministic certificates") {
        auto again = find_eod_set(cycle_graph(8));
        CHECK(again.set == c8.set);
        CHECK(again.nodes_explored == c8.nodes_explored);
    }
}

TEST_CASE("enumeration") {
    CHECK(enumerate_eod_sets(cycle_graph(4)) ==
          std::vector<VertexSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(enumerate_eod_sets(path_graph(2)) == std::vector<VertexSet>{{0, 1}});
    CHECK(enumerate_eod_sets(path_graph(5)).empty());

    SUBCASE("matches the naive oracle on assorted graphs") {
        std::vector<Graph> graphs = {path_graph(6),  cycle_graph(8),
                                     cycle_graph(6), complete_graph(4),
                                     complete_bipartite_graph(2, 3)};
        std::mt19937 rng(314159);
        for (int trial = 0; trial < 25; ++trial)
            graphs.push_back(random_graph(rng, 3 + static_cast<int>(rng() % 8), 0.4));
        for (const Graph& g : graphs) {
            auto sets = enumerate_eod_sets(g);
            CHECK(sets == naive_enumerate(g));
            for (const auto& d : sets) {
                CHECK(is_eod_set(g, d));
                CHECK(is_total_dominating_set(g, d));
            }
        }
    }
}

TEST_CASE("parallel predicates on products") {
    auto [prod, dims] = cartesian_product(path_graph(4), complete_graph(2));
    VertexSet d = {dims.index(0, 0), dims.index(0, 1), dims.index(3, 0), dims.index(3, 1)};
    REQUIRE(is_eod_set(prod, d));
    CHECK(is_parallel_eod(dims, Factor::second, d, prod));
    CHECK_FALSE(is_parallel_eod(dims, Factor::first, d, prod));

    auto [c6k2, d6] = cartesian_product(cycle_graph(6), complete_graph(2));
    VertexSet d2 = {d6.index(0, 0), d6.index(1, 0), d6.index(3, 1), d6.index(4, 1)};
    REQUIRE(is_eod_set(c6k2, d2));
    CHECK(is_parallel_eod(d6, Factor::first, d2, c6k2));

    SUBCASE("non-EOD input is a precondition error") {
        CHECK_THROWS_AS(is_parallel_eod(dims, Factor::first, {0, 1, 2}, prod),
                        PreconditionError);
    }
}

TEST_CASE("layer occupancy") {
    auto [prod, dims] = cartesian_product(cycle_graph(6), complete_graph(2));
    SUBCASE("empty set has all-zero counts") {
        for (const auto& layer : layer_occupancy(prod, dims, {})) CHECK(layer.count == 0);
    }
    SUBCASE("a full layer pair is adjacent") {
        auto layers = layer_occupancy(prod, dims, {dims.index(2, 0), dims.index(2, 1)});
        CHECK(layers[2].count == 2);
        CHECK(layers[2].adjacent_pair);
        CHECK(layers[0].count == 0);
    }
    SUBCASE("complete factors of order > 2 admit nothing here") {
        auto [c8k3, d3] = cartesian_product(cycle_graph(8), complete_graph(3));
        CHECK(enumerate_eod_sets(c8k3).empty());
    }
}

TEST_CASE("search options validation") {
    SearchOptions opts;
    opts.require = SearchOptions::Require::parallel_only;
    CHECK_THROWS_AS(find_eod_set(path_graph(4), opts), std::invalid_argument);

    opts.parallel_filter = ParallelFilter{ProductDims{3, 2}, Factor::first};
    CHECK_THROWS_AS(find_eod_set(path_graph(4), opts), std::invalid_argument);
}

TEST_CASE("parallel-only search accepts only filtered solutions") {
    auto [prod, dims] = cartesian_product(path_graph(4), complete_graph(2));
    SearchOptions opts;
    opts.parallel_filter = ParallelFilter{dims, Factor::second};
    opts.require = SearchOptions::Require::parallel_only;
    auto cert = find_eod_set(prod, opts);
    REQUIRE(cert.found());
    CHECK(is_parallel_eod(dims, Factor::second, *cert.set, prod));

    opts.parallel_filter->factor = Factor::first;
    auto none = find_eod_set(prod, opts);
    // every EOD-set of P4 box K2 projects some induced edge to a P4 vertex
    for (const auto& d : enumerate_eod_sets(prod))
        CHECK_FALSE(is_parallel_eod(dims, Factor::first, d, prod));
    CHECK_FALSE(none.found());
}

TEST_CASE("enumerate mode with the parallel filter keeps only passing sets") {
    auto [prod, dims] = cartesian_product(cycle_graph(6), complete_graph(2));
    SearchOptions opts;
    opts.mode = SearchOptions::Mode::enumerate_all;
    opts.parallel_filter = ParallelFilter{dims, Factor::first};
    opts.require = SearchOptions::Require::parallel_only;
    auto cert = find_eod_set(prod, opts);
    REQUIRE(cert.found());
    CHECK(is_parallel_eod(dims, Factor::first, *cert.set, prod));
    CHECK(cert.is_parallel_wrt_first == std::optional<bool>(true));

    SUBCASE("the filter-free certificate still reports parallelism") {
        SearchOptions plain;
        plain.parallel_filter = ParallelFilter{dims, Factor::first};
        auto c2 = find_eod_set(prod, plain);
        REQUIRE(c2.found());
        CHECK(c2.is_parallel_wrt_first.has_value());
        CHECK(*c2.is_parallel_wrt_first ==
              is_parallel_eod(dims, Factor::first, *c2.set, prod));
    }
}

TEST_CASE("certificate text round-trips") {
    Graph c8 = cycle_graph(8);
    auto cert = find_eod_set(c8);
    std::string text = format_certificate(c8, cert);
    CHECK(text.rfind("EOD n=8 D=", 0) == 0);
    auto parsed = parse_certificate(text);
    CHECK(parsed.set == cert.set);

    auto missing = find_eod_set(path_graph(5));
    std::string no_text = format_certificate(path_graph(5), missing);
    CHECK(no_text.rfind("NO-EOD nodes=", 0) == 0);
    auto parsed_no = parse_certificate(no_text);
    CHECK_FALSE(parsed_no.found());
    CHECK(parsed_no.nodes_explored == missing.nodes_explored);

    CHECK_THROWS_AS(parse_certificate("GARBAGE"), ParseError);
}
