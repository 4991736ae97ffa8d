#include <doctest.h>

#include "cartdom/eod.hpp"
#include "cartdom/suites.hpp"

using namespace cartdom;

TEST_CASE("labeled graph enumeration") {
    CHECK(enumerate_labeled_graphs(3).size() == 8);
    CHECK(enumerate_labeled_graphs(4).size() == 64);
    CHECK(enumerate_labeled_graphs(5).size() == 1024);
    CHECK_THROWS_AS(enumerate_labeled_graphs(7), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_labeled_graphs(0), std::invalid_argument);

    SUBCASE("mask order starts at the empty graph") {
        auto graphs = enumerate_labeled_graphs(3);
        CHECK(graphs.front().size() == 0);
        CHECK(graphs.back().size() == 3);  // all three pairs present
    }
}

TEST_CASE("fixtures") {
    Fixture fig1 = load_fixture("fig1");
    CHECK(fig1.graph.order() == 12);
    CHECK(fig1.graph.size() == 17);
    REQUIRE(fig1.partition.has_value());
    CHECK(check_kmn_amenable(fig1.graph, *fig1.partition).ok);

    auto implied1 = implied_product_eod(fig1);
    CHECK(implied1.product.order() == 60);
    CHECK(implied1.d.size() == 12);
    CHECK(is_eod_set(implied1.product, implied1.d));

    SUBCASE("the pair-labeled layer holds an adjacent pair") {
        auto layers = layer_occupancy(implied1.product, implied1.dims, implied1.d);
        int pair_layers = 0;
        for (const auto& layer : layers) {
            CHECK(layer.count <= 2);
            if (layer.count == 2) {
                CHECK(layer.adjacent_pair);
                ++pair_layers;
            }
        }
        CHECK(pair_layers == 1);  // exactly the [2,5] vertex
        CHECK(layers[11].count == 2);
    }

    Fixture fig2 = load_fixture("fig2");
    CHECK(fig2.graph.order() == 8);
    CHECK(fig2.graph.size() == 9);
    auto implied2 = implied_product_eod(fig2);
    CHECK(implied2.product.order() == 48);
    CHECK(implied2.d.size() == 12);
    CHECK(is_eod_set(implied2.product, implied2.d));

    CHECK_THROWS_AS(load_fixture("nope"), std::invalid_argument);
}

TEST_CASE("suite registry") {
    CHECK(known_suites().size() == 9);
    CHECK_THROWS_AS(run_suite("UNKNOWN"), std::invalid_argument);
    CHECK_THROWS_AS(SuiteParams({"oops"}), std::invalid_argument);
}

TEST_CASE("small suite runs pass") {
    SuiteParams small;
    small.set_int("n", 3);
    auto kr = run_suite("KR_EQUIV", small);
    CHECK(kr.all_passed());
    CHECK(kr.instances == 1 + 2 + 8);  // orders 1..3
    CHECK(kr.passed == kr.instances);

    auto zz = run_suite("ZZ_EQUIV", small);
    CHECK(zz.all_passed());
    CHECK(zz.instances == 8);

    auto kmn = run_suite("KMN_EQUIV", small);
    CHECK(kmn.all_passed());

    auto cyc = run_suite("CYC_EQUIV", small);
    CHECK(cyc.all_passed());

    SuiteParams tree_params;
    tree_params.set_int("order_lo", 3);
    tree_params.set_int("order_hi", 6);
    tree_params.set_int("family_max", 0);  // skip the heavy family cross-check here
    auto tree = run_suite("TREE_EQUIV", tree_params);
    CHECK(tree.all_passed());
    CHECK(tree.instances == 1 + 2 + 3 + 6);

    SuiteParams diam;
    diam.set_int("order_lo", 3);
    diam.set_int("order_hi", 4);
    auto d2 = run_suite("DIAM2_TREES", diam);
    CHECK(d2.all_passed());
    CHECK(d2.instances == (1 + 2) * 4);

    SuiteParams layer;
    layer.set_int("n", 3);
    auto ll = run_suite("LAYER_LEMMA", layer);
    CHECK(ll.all_passed());

    SuiteParams oracle;
    oracle.set_int("path_max", 8);
    oracle.set_int("cycle_max", 8);
    oracle.set_int("grid_tmax", 5);
    oracle.set_int("c4_tmax", 5);
    auto ox = run_suite("ORACLE_XCHECK", oracle);
    CHECK(ox.all_passed());

    SuiteParams torus;
    torus.set_int("r_max", 4);
    torus.set_int("t_max", 4);
    auto te = run_suite("TORUS_EVIDENCE", torus);
    CHECK(te.all_passed());
    CHECK(te.notes.size() == 3);  // (3,3), (3,4), (4,4)
    for (const auto& note : te.notes) CHECK(note.find("INCONSISTENT") == std::string::npos);
}

TEST_CASE("suite reports are deterministic and worker-independent") {
    SuiteParams one;
    one.set_int("n", 4);
    one.set_int("workers", 1);
    SuiteParams four = one;
    four.set_int("workers", 4);
    auto a = run_suite("KR_EQUIV", one);
    auto b = run_suite("KR_EQUIV", four);
    CHECK(a.instances == b.instances);
    CHECK(a.passed == b.passed);
    CHECK(a.failures.size() == b.failures.size());
    CHECK(a.notes == b.notes);

    auto c = run_suite("KR_EQUIV", one);
    CHECK(a.instances == c.instances);
    CHECK(a.passed == c.passed);
}

TEST_CASE("report formatting") {
    SuiteParams torus;
    torus.set_int("r_max", 4);
    torus.set_int("t_max", 4);
    auto report = run_suite("TORUS_EVIDENCE", torus);
    std::string text = format_report(report, true);
    CHECK(text.find("[TORUS_EVIDENCE]") != std::string::npos);
    CHECK(text.find("RESULT: PASS") != std::string::npos);
    CHECK(text.find("suite=TORUS_EVIDENCE") != std::string::npos);
    CHECK(text.find("note: C_4 x C_4: eod=yes conjecture=yes consistent") != std::string::npos);
}
