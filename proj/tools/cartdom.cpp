// Command-line front end: product construction, EOD search, amenability
// certificates, zig-zag sets, the tree family, closed-form oracles, the
// theorem-verification suites and the shipped fixtures.
//
// Exit codes: 0 = yes/found/all-pass, 1 = no/not-found/failures,
// 2 = usage or I/O error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cartdom/amenable.hpp"
#include "cartdom/eod.hpp"
#include "cartdom/graph.hpp"
#include "cartdom/oracles.hpp"
#include "cartdom/suites.hpp"
#include "cartdom/trees.hpp"

namespace {

using namespace cartdom;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "edge-list") return parse_graph(text, GraphFormat::edge_list);
    if (format == "graph6") return parse_graph(text, GraphFormat::graph6);
    return parse_graph_auto(text);
}

std::string emit_graph(const Graph& g, const std::string& format) {
    return format == "graph6" ? to_graph6(g) + "\n" : to_edge_list(g);
}

VertexSet parse_set_arg(const std::string& arg) {
    VertexSet out;
    if (arg.empty() || arg == "-") return out;
    std::istringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::logic_error&) {
            throw std::runtime_error("bad vertex \"" + item + "\" in set argument");
        }
    }
    return as_vertex_set(std::move(out));
}

FlavorSpec parse_flavor(const std::string& arg) {
    FlavorSpec spec;
    if (arg == "c4") {
        spec.flavor = PartitionFlavor::c4;
        spec.r = 4;
    } else if (arg == "c5") {
        spec.flavor = PartitionFlavor::c5;
        spec.r = 5;
    } else if (arg.rfind("kmn:", 0) == 0) {
        spec.flavor = PartitionFlavor::kmn;
        auto comma = arg.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("flavor \"" + arg + "\": expected kmn:<m>,<n>");
        spec.m = std::stoi(arg.substr(4, comma - 4));
        spec.n = std::stoi(arg.substr(comma + 1));
    } else if (arg.size() > 1 && arg[0] == 'k') {
        spec.flavor = PartitionFlavor::kr;
        spec.r = std::stoi(arg.substr(1));
    } else {
        throw std::runtime_error("unknown flavor \"" + arg +
                                 "\" (expected k<r>, kmn:<m>,<n>, c4 or c5)");
    }
    return spec;
}

int second_factor_order(const FlavorSpec& spec) {
    return spec.flavor == PartitionFlavor::kmn ? spec.m + spec.n : spec.r;
}

CheckResult check_with_flavor(const Graph& g, const WeakPartition& p) {
    return check_partition(g, p);
}

VertexSet partition_to_eod(const Graph& g, const WeakPartition& p) {
    switch (p.flavor) {
        case PartitionFlavor::kr: return kr_partition_to_eod(g, p);
        case PartitionFlavor::kmn: return kmn_partition_to_eod(g, p);
        case PartitionFlavor::c4:
        case PartitionFlavor::c5: return cycle_partition_to_parallel_eod(g, p);
    }
    throw std::runtime_error("unknown flavor");
}

WeakPartition eod_to_partition(const FlavorSpec& spec, const ProductDims& dims,
                               const VertexSet& d) {
    switch (spec.flavor) {
        case PartitionFlavor::kr: return eod_to_kr_partition(dims, spec.r, d);
        case PartitionFlavor::kmn: return eod_to_kmn_partition(dims, spec.m, spec.n, d);
        case PartitionFlavor::c4: return parallel_eod_to_cycle_partition(dims, 4, d);
        case PartitionFlavor::c5: return parallel_eod_to_cycle_partition(dims, 5, d);
    }
    throw std::runtime_error("unknown flavor");
}

std::vector<Edge> parse_edge_lines(const std::string& text) {
    std::vector<Edge> edges;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        int u, v;
        if (ls >> u >> v) edges.push_back({u, v});
        else {
            std::string junk;
            std::istringstream probe(line);
            if (probe >> junk)
                throw std::runtime_error("edge file line " + std::to_string(line_no) +
                                         ": expected \"u v\"");
        }
    }
    return edges;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"efficient open domination on Cartesian products"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string graph_path, graph2_path, format = "auto", emit = "edge-list";

    // product
    auto* product = app.add_subcommand("product", "Cartesian product of two graphs");
    product->add_option("first", graph_path, "first factor (path or -)")->required();
    product->add_option("second", graph2_path, "second factor (path or -)")->required();
    product->add_option("--format", format, "input format: auto|edge-list|graph6");
    product->add_option("--emit", emit, "output format: edge-list|graph6");
    product->callback([&] {
        Graph g = load_graph(graph_path, format);
        Graph h = load_graph(graph2_path, format);
        auto [prod, dims] = cartesian_product(g, h);
        std::cout << "# dims " << dims.g_size << " x " << dims.h_size << "\n"
                  << emit_graph(prod, emit);
    });

    // check-eod
    std::string set_arg;
    auto* check_eod = app.add_subcommand("check-eod", "is the given set an EOD-set?");
    check_eod->add_option("graph", graph_path)->required();
    check_eod->add_option("--set", set_arg, "comma-separated vertex list")->required();
    check_eod->add_option("--format", format);
    check_eod->callback([&] {
        Graph g = load_graph(graph_path, format);
        bool ok = is_eod_set(g, parse_set_arg(set_arg));
        std::cout << (ok ? "yes" : "no") << "\n";
        exit_code = ok ? 0 : 1;
    });

    // find-eod
    std::string parallel_arg;
    auto* find_cmd = app.add_subcommand("find-eod", "exhaustive search for an EOD-set");
    find_cmd->add_option("graph", graph_path)->required();
    find_cmd->add_option("--format", format);
    std::string dims_arg;
    find_cmd->add_option("--parallel", parallel_arg,
                         "accept only sets parallel w.r.t. this factor: first|second");
    find_cmd->add_option("--dims", dims_arg, "product dims g,h (required with --parallel)");
    find_cmd->callback([&] {
        Graph g = load_graph(graph_path, format);
        SearchOptions opts;
        if (!parallel_arg.empty()) {
            if (dims_arg.empty())
                throw std::runtime_error("--parallel requires --dims g,h");
            auto comma = dims_arg.find(',');
            if (comma == std::string::npos) throw std::runtime_error("--dims expects g,h");
            ProductDims dims{std::stoi(dims_arg.substr(0, comma)),
                             std::stoi(dims_arg.substr(comma + 1))};
            Factor factor;
            if (parallel_arg == "first") factor = Factor::first;
            else if (parallel_arg == "second") factor = Factor::second;
            else throw std::runtime_error("--parallel expects first or second");
            opts.parallel_filter = ParallelFilter{dims, factor};
            opts.require = SearchOptions::Require::parallel_only;
        }
        auto cert = find_eod_set(g, opts);
        std::cout << format_certificate(g, cert) << "\n";
        exit_code = cert.found() ? 0 : 1;
    });

    // enum-eod
    auto* enum_cmd = app.add_subcommand("enum-eod", "enumerate all EOD-sets");
    enum_cmd->add_option("graph", graph_path)->required();
    enum_cmd->add_option("--format", format);
    enum_cmd->callback([&] {
        Graph g = load_graph(graph_path, format);
        auto sets = enumerate_eod_sets(g);
        for (const auto& d : sets) std::cout << format_vertex_set(d) << "\n";
        exit_code = sets.empty() ? 1 : 0;
    });

    // check-amenable
    std::string flavor_arg, partition_path;
    auto* check_am = app.add_subcommand("check-amenable", "check a weak partition certificate");
    check_am->add_option("graph", graph_path)->required();
    check_am->add_option("partition", partition_path, "partition file")->required();
    check_am->add_option("--flavor", flavor_arg, "k<r> | kmn:<m>,<n> | c4 | c5")->required();
    check_am->add_option("--format", format);
    check_am->callback([&] {
        Graph g = load_graph(graph_path, format);
        FlavorSpec spec = parse_flavor(flavor_arg);
        WeakPartition p = parse_partition(read_input(partition_path), spec, g.order());
        auto res = check_with_flavor(g, p);
        if (res.ok) {
            std::cout << "OK\n";
        } else {
            for (const auto& v : res.violations) std::cout << v.to_string() << "\n";
            exit_code = 1;
        }
    });

    // find-amenable
    auto* find_am = app.add_subcommand("find-amenable", "search for a weak partition");
    find_am->add_option("graph", graph_path)->required();
    find_am->add_option("--flavor", flavor_arg, "k<r> | kmn:<m>,<n> | c4 | c5")->required();
    find_am->add_option("--format", format);
    find_am->callback([&] {
        Graph g = load_graph(graph_path, format);
        FlavorSpec spec = parse_flavor(flavor_arg);
        std::optional<WeakPartition> p;
        switch (spec.flavor) {
            case PartitionFlavor::kr: p = find_kr_amenable(g, spec.r); break;
            case PartitionFlavor::kmn: p = find_kmn_amenable(g, spec.m, spec.n); break;
            case PartitionFlavor::c4: p = find_cycle_parallel_amenable(g, 4); break;
            case PartitionFlavor::c5: p = find_cycle_parallel_amenable(g, 5); break;
        }
        if (p) std::cout << format_partition(*p);
        else {
            std::cout << "none\n";
            exit_code = 1;
        }
    });

    // zigzag check / find
    std::string edges_path;
    auto* zigzag = app.add_subcommand("zigzag", "zig-zag sets");
    zigzag->require_subcommand(1);
    auto* zz_check = zigzag->add_subcommand("check", "check an edge set (lines \"u v\")");
    zz_check->add_option("graph", graph_path)->required();
    zz_check->add_option("edges", edges_path, "edge set file")->required();
    zz_check->add_option("--format", format);
    zz_check->callback([&] {
        Graph g = load_graph(graph_path, format);
        auto z = make_zigzag_set(parse_edge_lines(read_input(edges_path)));
        auto res = is_zigzag_set(g, z);
        if (res.ok) {
            std::cout << "OK\n";
        } else {
            for (const auto& v : res.violations) std::cout << v.to_string() << "\n";
            exit_code = 1;
        }
    });
    auto* zz_find = zigzag->add_subcommand("find", "exhaustive zig-zag search");
    zz_find->add_option("graph", graph_path)->required();
    zz_find->add_option("--format", format);
    zz_find->callback([&] {
        Graph g = load_graph(graph_path, format);
        auto z = find_zigzag_set(g);
        if (z) {
            for (const auto& [u, v] : z->edges) std::cout << u << " " << v << "\n";
        } else {
            std::cout << "none\n";
            exit_code = 1;
        }
    });

    // to-eod
    auto* to_eod = app.add_subcommand("to-eod", "partition certificate -> product EOD-set");
    to_eod->add_option("graph", graph_path)->required();
    to_eod->add_option("partition", partition_path)->required();
    to_eod->add_option("--flavor", flavor_arg)->required();
    to_eod->add_option("--format", format);
    to_eod->callback([&] {
        Graph g = load_graph(graph_path, format);
        FlavorSpec spec = parse_flavor(flavor_arg);
        WeakPartition p = parse_partition(read_input(partition_path), spec, g.order());
        VertexSet d = partition_to_eod(g, p);
        std::cout << "EOD n=" << g.order() * second_factor_order(spec)
                  << " D=" << format_vertex_set(d) << "\n";
    });

    // from-eod
    int g_size = 0;
    auto* from_eod = app.add_subcommand("from-eod", "product EOD-set -> partition certificate");
    from_eod->add_option("--flavor", flavor_arg)->required();
    from_eod->add_option("--g-size", g_size, "order of the first factor")->required();
    from_eod->add_option("--set", set_arg, "comma-separated product vertex list")->required();
    from_eod->callback([&] {
        FlavorSpec spec = parse_flavor(flavor_arg);
        ProductDims dims{g_size, second_factor_order(spec)};
        WeakPartition p = eod_to_partition(spec, dims, parse_set_arg(set_arg));
        std::cout << format_partition(p);
    });

    // trees gen / recognize / enum
    auto* trees = app.add_subcommand("trees", "the recursive tree family");
    trees->require_subcommand(1);
    int tree_r = 3, max_order = 12, tree_order = 5;
    auto* tgen = trees->add_subcommand("gen", "family members up to an order bound");
    tgen->add_option("r", tree_r)->required();
    tgen->add_option("max_order", max_order)->required();
    tgen->callback([&] {
        for (const auto& code : generate_family(tree_r, max_order)) std::cout << code << "\n";
    });
    auto* trec = trees->add_subcommand("recognize", "derive a construction trace");
    trec->add_option("graph", graph_path)->required();
    trec->add_option("r", tree_r)->required();
    trec->add_option("--format", format);
    trec->callback([&] {
        Graph t = load_graph(graph_path, format);
        auto trace = recognize_tree(t, tree_r);
        if (trace) std::cout << format_trace(*trace) << "\n";
        else {
            std::cout << "none\n";
            exit_code = 1;
        }
    });
    auto* tenum = trees->add_subcommand("enum", "all trees of one order, as graph6");
    tenum->add_option("order", tree_order)->required();
    tenum->callback([&] {
        for (const Graph& t : enumerate_trees(tree_order)) std::cout << to_graph6(t) << "\n";
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "closed-form characterizations");
    oracle->require_subcommand(1);
    int o_n = 0, o_r = 0, o_t = 0;
    auto print_answer = [&](const OracleAnswer& a) {
        std::cout << (a.value ? "true" : "false") << " (" << a.source << ")\n";
        exit_code = a.value ? 0 : 1;
    };
    auto* o_path = oracle->add_subcommand("path", "P_n");
    o_path->add_option("n", o_n)->required();
    o_path->callback([&] { print_answer(path_eod(o_n)); });
    auto* o_cycle = oracle->add_subcommand("cycle", "C_n");
    o_cycle->add_option("n", o_n)->required();
    o_cycle->callback([&] { print_answer(cycle_eod(o_n)); });
    auto* o_grid = oracle->add_subcommand("grid", "P_r box P_t");
    o_grid->add_option("r", o_r)->required();
    o_grid->add_option("t", o_t)->required();
    o_grid->callback([&] { print_answer(grid_eod(o_r, o_t)); });
    auto* o_torus = oracle->add_subcommand("torus-parallel", "C_r box C_t, parallel");
    o_torus->add_option("r", o_r)->required();
    o_torus->add_option("t", o_t)->required();
    o_torus->callback([&] { print_answer(torus_parallel_eod(o_r, o_t)); });
    auto* o_c4 = oracle->add_subcommand("c4-torus", "C_4 box C_t");
    o_c4->add_option("t", o_t)->required();
    o_c4->callback([&] { print_answer(c4_torus_eod(o_t)); });

    // suite
    std::string suite_id;
    std::vector<std::string> suite_params;
    bool kv_dump = false;
    auto* suite = app.add_subcommand("suite", "run a verification suite");
    suite->add_option("id", suite_id, "one of the registered suite ids")->required();
    suite->add_option("params", suite_params, "key=value parameters (e.g. n=5 workers=4)");
    suite->add_flag("--kv", kv_dump, "append a machine-readable key=value dump");
    suite->callback([&] {
        auto report = run_suite(suite_id, SuiteParams(suite_params));
        std::cout << format_report(report, kv_dump);
        exit_code = report.all_passed() ? 0 : 1;
    });

    // fixture
    std::string fixture_name;
    auto* fixture = app.add_subcommand("fixture", "show a registered fixture");
    fixture->add_option("name", fixture_name, "fig1 | fig2")->required();
    fixture->callback([&] {
        Fixture f = load_fixture(fixture_name);
        std::cout << "# " << f.citation << "\n";
        std::cout << "# vertices:";
        for (size_t i = 0; i < f.vertex_names.size(); ++i)
            std::cout << " " << i << "=" << f.vertex_names[i];
        std::cout << "\n" << to_edge_list(f.graph);
        if (f.partition) {
            std::cout << "# K_{" << f.partition->m << "," << f.partition->n << "} partition\n"
                      << format_partition(*f.partition);
            auto res = check_kmn_amenable(f.graph, *f.partition);
            std::cout << "# checker: " << (res.ok ? "OK" : "FAIL") << "\n";
        }
        if (f.cycle_len) {
            std::cout << "# labels over the " << f.cycle_len << "-cycle\n";
            for (int v = 0; v < f.graph.order(); ++v) {
                if (f.cycle_labels[v].empty()) continue;
                std::cout << "[";
                for (size_t i = 0; i < f.cycle_labels[v].size(); ++i)
                    std::cout << (i ? "," : "") << f.cycle_labels[v][i];
                std::cout << "]: " << v << "\n";
            }
        }
        auto implied = implied_product_eod(f);
        std::cout << "# implied product set (|D|=" << implied.d.size() << " over "
                  << implied.product.order() << " vertices): "
                  << (is_eod_set(implied.product, implied.d) ? "EOD" : "NOT EOD") << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const cartdom::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
