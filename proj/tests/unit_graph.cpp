#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cartdom/graph.hpp"

using namespace cartdom;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

// Independent graph6 encoder used as the oracle for the parser tests.
std::string reference_graph6(int n, const std::vector<Edge>& edges) {
    std::set<Edge> set(edges.begin(), edges.end());
    std::string bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits += set.count({i, j}) ? '1' : '0';
    while (bits.size() % 6) bits += '0';
    std::string out(1, static_cast<char>(n + 63));
    for (size_t k = 0; k < bits.size(); k += 6) {
        int val = 0;
        for (int b = 0; b < 6; ++b) val = val * 2 + (bits[k + b] == '1');
        out += static_cast<char>(val + 63);
    }
    return out;
}

}  // namespace

TEST_CASE("edge-list parsing") {
    Graph g = parse_graph("4 3\n0 1\n1 2\n2 3\n", GraphFormat::edge_list);
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g == path_graph(4));

    SUBCASE("comments and blank lines") {
        Graph h = parse_graph("# a path\n\n4 3\n0 1  # first\n1 2\n\n2 3\n", GraphFormat::edge_list);
        CHECK(h == path_graph(4));
    }
    SUBCASE("loop edge names the line") {
        CHECK_THROWS_WITH_AS(parse_graph("3 1\n2 2\n", GraphFormat::edge_list),
                             doctest::Contains("line 2"), ParseError);
    }
    SUBCASE("vertex out of range") {
        CHECK_THROWS_AS(parse_graph("3 1\n0 3\n", GraphFormat::edge_list), ParseError);
    }
    SUBCASE("duplicate edge") {
        CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n0 1\n", GraphFormat::edge_list),
                             doctest::Contains("duplicate"), ParseError);
    }
    SUBCASE("u >= v rejected") {
        CHECK_THROWS_AS(parse_graph("3 1\n1 0\n", GraphFormat::edge_list), ParseError);
    }
    SUBCASE("malformed header") {
        CHECK_THROWS_AS(parse_graph("oops\n", GraphFormat::edge_list), ParseError);
    }
    SUBCASE("missing edges") {
        CHECK_THROWS_AS(parse_graph("3 2\n0 1\n", GraphFormat::edge_list), ParseError);
    }
}

TEST_CASE("graph6 parsing matches an independent encoder") {
    // K4 encodes as "C~"
    CHECK(reference_graph6(4, complete_graph(4).edges()) == "C~");
    Graph k4 = parse_graph("C~", GraphFormat::graph6);
    CHECK(k4 == complete_graph(4));
    CHECK(to_graph6(complete_graph(4)) == "C~");

    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(rng, n, 0.4);
        std::string encoded = reference_graph6(g.order(), g.edges());
        CHECK(to_graph6(g) == encoded);
        CHECK(parse_graph(encoded, GraphFormat::graph6) == g);
    }

    SUBCASE("long form refused") {
        CHECK_THROWS_AS(parse_graph("~???", GraphFormat::graph6), ParseError);
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(parse_graph("C~~", GraphFormat::graph6), ParseError);
    }
    SUBCASE("nonzero padding") {
        // C5 on 5 vertices uses 10 bits; set the final padding bit
        std::string enc = to_graph6(cycle_graph(5));
        enc.back() = static_cast<char>(((enc.back() - 63) | 1) + 63);
        CHECK_THROWS_AS(parse_graph(enc, GraphFormat::graph6), ParseError);
    }
}

TEST_CASE("serialization round-trips") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.35);
        CHECK(parse_graph(to_edge_list(g), GraphFormat::edge_list) == g);
        CHECK(parse_graph(to_graph6(g), GraphFormat::graph6) == g);
        CHECK(parse_graph_auto(to_edge_list(g)) == g);
        CHECK(parse_graph_auto(to_graph6(g)) == g);
    }
}

TEST_CASE("cartesian products") {
    auto [c4, d1] = cartesian_product(path_graph(2), path_graph(2));
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    auto [k33, d2] = cartesian_product(complete_graph(3), complete_graph(3));
    CHECK(k33.order() == 9);
    CHECK(k33.size() == 18);
    for (int v = 0; v < 9; ++v) CHECK(k33.degree(v) == 4);

    auto [pk, d3] = cartesian_product(path_graph(4), complete_graph(3));
    CHECK(pk.order() == 12);
    CHECK(pk.size() == 3 * 3 + 4 * 3);

    SUBCASE("degree law") {
        std::mt19937 rng(99);
        Graph g = random_graph(rng, 5, 0.5);
        Graph h = random_graph(rng, 4, 0.5);
        auto [prod, dims] = cartesian_product(g, h);
        for (int v = 0; v < prod.order(); ++v)
            CHECK(prod.degree(v) == g.degree(dims.first(v)) + h.degree(dims.second(v)));
    }

    SUBCASE("product symmetry up to the coordinate swap") {
        std::mt19937 rng(123);
        for (int trial = 0; trial < 10; ++trial) {
            Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
            Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
            auto [gh, dgh] = cartesian_product(g, h);
            auto [hg, dhg] = cartesian_product(h, g);
            std::set<Edge> mapped;
            for (const auto& [x, y] : gh.edges()) {
                int mx = dhg.index(dgh.second(x), dgh.first(x));
                int my = dhg.index(dgh.second(y), dgh.first(y));
                mapped.insert({std::min(mx, my), std::max(mx, my)});
            }
            std::set<Edge> expected(hg.edges().begin(), hg.edges().end());
            CHECK(mapped == expected);
        }
    }
}

TEST_CASE("distances") {
    Graph p5 = path_graph(5);
    CHECK(distance(p5, 0, 4) == 4);
    CHECK(distance(p5, 2, 2) == 0);

    Graph two_parts(5, {{0, 1}, {2, 3}, {3, 4}});
    CHECK(distance(two_parts, 0, 4) == kInfDist);

    CHECK(edge_distance(p5, {0, 1}, {3, 4}) == 2);
    CHECK(edge_vertex_distance(p5, {0, 1}, 3) == 2);
    CHECK(edge_distance(p5, {0, 1}, {1, 2}) == 0);

    CHECK(set_distance(p5, {0}, {4}) == 4);
    CHECK(set_distance(p5, {0, 2}, {2, 4}) == 0);
    CHECK(set_distance(p5, {0, 1}, {3}) == 2);
    CHECK_THROWS_AS(set_distance(p5, {}, {1}), std::invalid_argument);

    CHECK(diameter(cycle_graph(4)) == 2);
    CHECK(diameter(cycle_graph(5)) == 2);
    CHECK(diameter(path_graph(4)) == 3);
    CHECK(diameter(complete_bipartite_graph(2, 3)) == 2);
    CHECK(diameter(two_parts) == kInfDist);
    CHECK(diameter(empty_graph(1)) == 0);
    CHECK(diameter(empty_graph(0)) == 0);
}

TEST_CASE("induced one-regularity") {
    Graph c6 = cycle_graph(6);
    CHECK(is_induced_one_regular(c6, {0, 1, 3, 4}));
    CHECK_FALSE(is_induced_one_regular(c6, {0, 1, 2}));
    CHECK(is_induced_one_regular(c6, {}));

    SUBCASE("cross-check against the direct induced subgraph") {
        std::mt19937 rng(4242);
        for (int trial = 0; trial < 60; ++trial) {
            int n = 2 + static_cast<int>(rng() % 8);
            Graph g = random_graph(rng, n, 0.45);
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if (rng() % 2) s.push_back(v);
            auto inside = induced_edges(g, s);
            // one-regular iff the induced subgraph has |s|/2 edges and max degree 1
            std::vector<int> deg(n, 0);
            for (const auto& [u, v] : inside) {
                ++deg[u];
                ++deg[v];
            }
            int maxdeg = 0;
            for (int v : s) maxdeg = std::max(maxdeg, deg[v]);
            bool direct = (inside.size() * 2 == s.size()) && maxdeg <= 1;
            CHECK(is_induced_one_regular(g, s) == direct);
        }
    }
}

TEST_CASE("edge projection") {
    ProductDims dims{4, 2};
    auto as_edge = project_edge(dims, {dims.index(0, 0), dims.index(1, 0)});
    REQUIRE(std::holds_alternative<Edge>(as_edge));
    CHECK(std::get<Edge>(as_edge) == Edge{0, 1});

    auto as_vertex = project_edge(dims, {dims.index(0, 0), dims.index(0, 1)});
    REQUIRE(std::holds_alternative<int>(as_vertex));
    CHECK(std::get<int>(as_vertex) == 0);

    CHECK_THROWS_AS(project_edge(dims, {dims.index(0, 0), dims.index(1, 1)}),
                    std::invalid_argument);
}

TEST_CASE("parsers reject garbage without crashing") {
    std::mt19937 rng(1234321);
    for (int trial = 0; trial < 200; ++trial) {
        std::string junk(rng() % 24, ' ');
        for (char& c : junk) c = static_cast<char>(rng() % 96 + 32);
        try {
            (void)parse_graph_auto(junk);
        } catch (const ParseError&) {
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("vertex set helpers") {
    CHECK(as_vertex_set({3, 1, 3, 2}) == VertexSet{1, 2, 3});
    CHECK(vertex_set_contains({1, 4, 6}, 4));
    CHECK_FALSE(vertex_set_contains({1, 4, 6}, 5));
    CHECK(format_vertex_set({1, 4, 5}) == "1,4,5");
    CHECK(format_vertex_set({}) == "-");
}
