#include <stdexcept>

#include "cartdom/suites.hpp"

namespace cartdom {

namespace {

// 12 vertices a..g,u,v,w,x,y mapped to 0..11 in that order. The K_{2,3}
// partition has sides A={1,2}, B={3,4,5}: V_1={u,v}, V_2={w,x}, V_3={f,g},
// V_4={b,c}, V_5={d,e}, the pair class [2,5]={y} and V_0={a}.
Fixture make_fig1() {
    Fixture f;
    f.name = "fig1";
    f.vertex_names = {"a", "b", "c", "d", "e", "f", "g", "u", "v", "w", "x", "y"};
    enum { a, b, c, d, e, ff, gg, u, v, w, x, y };
    f.graph = Graph(12, {{a, b}, {a, u}, {a, y},  {a, ff}, {b, c}, {b, e},
                         {b, ff}, {c, d}, {c, gg}, {d, e},  {d, gg}, {e, ff},
                         {ff, gg}, {u, v}, {u, w}, {v, x},  {w, x}});
    std::vector<Label> labels(12);
    labels[a] = {0, 0};
    labels[u] = {1, 0};
    labels[v] = {1, 0};
    labels[w] = {2, 0};
    labels[x] = {2, 0};
    labels[ff] = {3, 0};
    labels[gg] = {3, 0};
    labels[b] = {4, 0};
    labels[c] = {4, 0};
    labels[d] = {5, 0};
    labels[e] = {5, 0};
    labels[y] = {2, 5};
    f.partition = make_kmn_partition(2, 3, std::move(labels));
    f.citation = "K_{2,3}-amenable example graph (12 vertices, 17 edges)";
    return f;
}

// 8 vertices a..h mapped to 0..7. Pair labels over a 6-cycle: [1,2]={a,d},
// [4,5]={e,f}, [3,6]={c,h}; b and g carry label 0. Each pair-labeled vertex
// contributes both named layer vertices to the product EOD-set.
Fixture make_fig2() {
    Fixture f;
    f.name = "fig2";
    f.vertex_names = {"a", "b", "c", "d", "e", "f", "g", "h"};
    enum { a, b, c, d, e, ff, gg, h };
    f.graph = Graph(8, {{a, b}, {a, ff}, {b, c}, {b, ff}, {c, h},
                        {d, e}, {d, gg}, {ff, gg}, {gg, h}});
    f.cycle_len = 6;
    f.cycle_labels.assign(8, {});
    f.cycle_labels[a] = {1, 2};
    f.cycle_labels[d] = {1, 2};
    f.cycle_labels[e] = {4, 5};
    f.cycle_labels[ff] = {4, 5};
    f.cycle_labels[c] = {3, 6};
    f.cycle_labels[h] = {3, 6};
    f.citation = "pair-labeled example graph for the 6-cycle factor (8 vertices, 9 edges)";
    return f;
}

}  // namespace

Fixture load_fixture(const std::string& name) {
    if (name == "fig1") return make_fig1();
    if (name == "fig2") return make_fig2();
    throw std::invalid_argument("unknown fixture \"" + name + "\" (known: fig1, fig2)");
}

std::vector<std::string> fixture_names() { return {"fig1", "fig2"}; }

ImpliedEod implied_product_eod(const Fixture& fixture) {
    ImpliedEod out;
    if (fixture.partition) {
        const auto& p = *fixture.partition;
        if (p.flavor != PartitionFlavor::kmn)
            throw std::invalid_argument("implied_product_eod: unsupported partition flavor");
        auto [prod, dims] =
            cartesian_product(fixture.graph, complete_bipartite_graph(p.m, p.n));
        out.product = std::move(prod);
        out.dims = dims;
        out.d = kmn_partition_to_eod(fixture.graph, p);
        return out;
    }
    if (fixture.cycle_len >= 3) {
        auto [prod, dims] = cartesian_product(fixture.graph, cycle_graph(fixture.cycle_len));
        out.product = std::move(prod);
        out.dims = dims;
        VertexSet d;
        for (int v = 0; v < fixture.graph.order(); ++v)
            for (int cls : fixture.cycle_labels[v]) d.push_back(dims.index(v, cls - 1));
        out.d = as_vertex_set(std::move(d));
        return out;
    }
    throw std::invalid_argument("fixture carries no labeling to imply a product EOD-set");
}

}  // namespace cartdom
