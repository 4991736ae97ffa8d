#include "cartdom/amenable.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cartdom {

// ---- WeakPartition basics -----------------------------------------------------

int WeakPartition::class_count() const {
    switch (flavor) {
        case PartitionFlavor::kr: return r;
        case PartitionFlavor::c4: return 4;
        case PartitionFlavor::c5: return 5;
        case PartitionFlavor::kmn: return m + n;
    }
    return 0;
}

VertexSet WeakPartition::class_members(int cls) const {
    VertexSet out;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
        if (labels[v].a == cls && labels[v].b == 0) out.push_back(v);
    return out;
}

VertexSet WeakPartition::pair_members(int a, int b) const {
    VertexSet out;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
        if (labels[v].a == a && labels[v].b == b) out.push_back(v);
    return out;
}

VertexSet WeakPartition::zero_members() const { return class_members(0); }

VertexSet WeakPartition::nonzero_members() const {
    VertexSet out;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
        if (!labels[v].is_zero()) out.push_back(v);
    return out;
}

static void validate_labels(const WeakPartition& p) {
    const int k = p.class_count();
    for (size_t v = 0; v < p.labels.size(); ++v) {
        const Label& l = p.labels[v];
        if (l.is_pair()) {
            if (p.flavor != PartitionFlavor::kmn)
                throw std::invalid_argument("pair label at vertex " + std::to_string(v) +
                                            " is only valid for the K_{m,n} flavor");
            if (l.a < 1 || l.a > p.m || l.b <= p.m || l.b > p.m + p.n)
                throw std::invalid_argument("pair label [" + std::to_string(l.a) + "," +
                                            std::to_string(l.b) + "] out of range");
        } else if (l.a < 0 || l.a > k) {
            throw std::invalid_argument("class label " + std::to_string(l.a) + " out of range");
        }
    }
}

WeakPartition make_kr_partition(int r, std::vector<Label> labels) {
    if (r < 2) throw std::invalid_argument("K_r flavor requires r >= 2");
    WeakPartition p{PartitionFlavor::kr, r, 0, 0, std::move(labels)};
    validate_labels(p);
    return p;
}

WeakPartition make_kmn_partition(int m, int n, std::vector<Label> labels) {
    if (m < 1 || m > n) throw std::invalid_argument("K_{m,n} flavor requires 1 <= m <= n");
    WeakPartition p{PartitionFlavor::kmn, 0, m, n, std::move(labels)};
    validate_labels(p);
    return p;
}

WeakPartition make_cycle_partition(int k, std::vector<Label> labels) {
    if (k != 4 && k != 5) throw std::invalid_argument("cycle flavor requires k in {4,5}");
    WeakPartition p{k == 4 ? PartitionFlavor::c4 : PartitionFlavor::c5, k, 0, 0,
                    std::move(labels)};
    validate_labels(p);
    return p;
}

std::string format_label(const Label& l) {
    if (l.is_pair()) return "[" + std::to_string(l.a) + "," + std::to_string(l.b) + "]";
    return std::to_string(l.a);
}

std::string ViolationReport::to_string() const {
    std::string out = "VIOLATION " + condition + " at";
    for (int v : vertices) out += " " + std::to_string(v);
    for (const auto& [u, v] : edges)
        out += " (" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (!detail.empty()) out += ": " + detail;
    return out;
}

// ---- checker helpers ------------------------------------------------------------

namespace {

void require_consistent(const Graph& g, const WeakPartition& p, PartitionFlavor want,
                        const char* what) {
    if (p.flavor != want) throw std::invalid_argument(std::string(what) + ": flavor mismatch");
    if (static_cast<int>(p.labels.size()) != g.order())
        throw std::invalid_argument(std::string(what) +
                                    ": label count differs from the graph order");
    validate_labels(p);
}

int count_nbrs_with_class(const Graph& g, const WeakPartition& p, int v, int cls) {
    int cnt = 0;
    for (int w : g.neighbors(v))
        if (p.labels[w].a == cls && p.labels[w].b == 0) ++cnt;
    return cnt;
}

// cyclic class arithmetic over 1..k
int cyc(int cls, int delta, int k) { return ((cls - 1 + delta) % k + k) % k + 1; }

void add_violation(CheckResult& res, ViolationReport v) {
    for (const auto& existing : res.violations)
        if (existing.condition == v.condition) return;  // keep the first per condition
    res.violations.push_back(std::move(v));
}

// condition (A): every V_0 vertex has exactly one neighbor in each class 1..k
void check_condition_a(const Graph& g, const WeakPartition& p, int k, CheckResult& res) {
    for (int x = 0; x < g.order(); ++x) {
        if (!p.labels[x].is_zero()) continue;
        for (int i = 1; i <= k; ++i) {
            int cnt = count_nbrs_with_class(g, p, x, i);
            if (cnt != 1) {
                add_violation(res, {"A", {x}, {},
                              "vertex " + std::to_string(x) + " has " + std::to_string(cnt) +
                                  " neighbors in V_" + std::to_string(i) + ", expected 1"});
                return;
            }
        }
    }
}

// condition (B): each <V_i> is an induced perfect matching on V_i
void check_condition_b(const Graph& g, const WeakPartition& p, int k, CheckResult& res) {
    for (int i = 1; i <= k; ++i) {
        for (int v = 0; v < g.order(); ++v) {
            if (p.labels[v] != Label{i, 0}) continue;
            int inside = count_nbrs_with_class(g, p, v, i);
            if (inside != 1) {
                add_violation(res, {"B", {v}, {},
                              "vertex " + std::to_string(v) + " has " + std::to_string(inside) +
                                  " neighbors inside its own class V_" + std::to_string(i)});
                return;
            }
        }
    }
}

}  // namespace

CheckResult check_kr_amenable(const Graph& g, const WeakPartition& p) {
    require_consistent(g, p, PartitionFlavor::kr, "check_kr_amenable");
    if (p.r < 2) throw std::invalid_argument("check_kr_amenable: r must be >= 2");
    CheckResult res;

    check_condition_a(g, p, p.r, res);
    check_condition_b(g, p, p.r, res);

    // (C): the union of all classes induces a perfect matching
    for (int v = 0; v < g.order(); ++v) {
        if (p.labels[v].is_zero()) continue;
        int inside = 0;
        for (int w : g.neighbors(v))
            if (!p.labels[w].is_zero()) ++inside;
        if (inside != 1) {
            add_violation(res, {"C", {v}, {},
                          "vertex " + std::to_string(v) + " has " + std::to_string(inside) +
                              " neighbors across V_1..V_" + std::to_string(p.r)});
            break;
        }
    }

    res.ok = res.violations.empty();
    return res;
}

CheckResult check_cycle_parallel_amenable(const Graph& g, const WeakPartition& p) {
    if (p.flavor != PartitionFlavor::c4 && p.flavor != PartitionFlavor::c5)
        throw std::invalid_argument("check_cycle_parallel_amenable: flavor mismatch");
    if (static_cast<int>(p.labels.size()) != g.order())
        throw std::invalid_argument("check_cycle_parallel_amenable: label count mismatch");
    validate_labels(p);
    const int k = p.class_count();
    CheckResult res;

    check_condition_a(g, p, k, res);
    check_condition_b(g, p, k, res);

    // (C'): <V_i union V_{i+1}> is an induced perfect matching, cyclically
    for (int i = 1; i <= k; ++i) {
        int j = cyc(i, 1, k);
        for (int v = 0; v < g.order(); ++v) {
            int a = p.labels[v].a;
            if (p.labels[v].is_pair() || (a != i && a != j)) continue;
            int inside = 0;
            for (int w : g.neighbors(v))
                if (!p.labels[w].is_pair() && (p.labels[w].a == i || p.labels[w].a == j)) ++inside;
            if (inside != 1) {
                add_violation(res, {"C'", {v}, {},
                              "vertex " + std::to_string(v) + " has " + std::to_string(inside) +
                                  " neighbors in V_" + std::to_string(i) + " union V_" +
                                  std::to_string(j)});
                goto cprime_done;
            }
        }
    }
cprime_done:

    // (D) for C5 / (D') for C4: exactly one neighbor two classes away
    for (int v = 0; v < g.order(); ++v) {
        int i = p.labels[v].a;
        if (i == 0) continue;
        const char* cond = (k == 5) ? "D" : "D'";
        int up = count_nbrs_with_class(g, p, v, cyc(i, 2, k));
        int down = count_nbrs_with_class(g, p, v, cyc(i, -2, k));
        if (up != 1 || (k == 5 && down != 1)) {
            add_violation(res, {cond, {v}, {},
                          "vertex " + std::to_string(v) + " in V_" + std::to_string(i) +
                              " has " + std::to_string(up) + " neighbors in V_" +
                              std::to_string(cyc(i, 2, k)) +
                              (k == 5 ? " and " + std::to_string(down) + " in V_" +
                                            std::to_string(cyc(i, -2, k))
                                      : std::string()) +
                              ", expected 1"});
            break;
        }
    }

    res.ok = res.violations.empty();
    return res;
}

CheckResult check_kmn_amenable(const Graph& g, const WeakPartition& p) {
    require_consistent(g, p, PartitionFlavor::kmn, "check_kmn_amenable");
    const int m = p.m, n = p.n, k = m + n;
    CheckResult res;

    // (I): each <V_i> is an induced perfect matching on V_i
    for (int i = 1; i <= k; ++i) {
        for (int v = 0; v < g.order(); ++v) {
            if (p.labels[v] != Label{i, 0}) continue;
            int inside = count_nbrs_with_class(g, p, v, i);
            if (inside != 1) {
                add_violation(res, {"I", {v}, {},
                              "vertex " + std::to_string(v) + " has " + std::to_string(inside) +
                                  " neighbors inside V_" + std::to_string(i)});
                goto i_done;
            }
        }
    }
i_done:

    // (II): <V_i union V_j> for i on side A, j on side B is a perfect matching
    for (int i = 1; i <= m; ++i) {
        for (int j = m + 1; j <= k; ++j) {
            for (int v = 0; v < g.order(); ++v) {
                int a = p.labels[v].a;
                if (p.labels[v].is_pair() || (a != i && a != j)) continue;
                int inside = 0;
                for (int w : g.neighbors(v))
                    if (!p.labels[w].is_pair() &&
                        (p.labels[w].a == i || p.labels[w].a == j)) ++inside;
                if (inside != 1) {
                    add_violation(res, {"II", {v}, {},
                                  "vertex " + std::to_string(v) + " has " +
                                      std::to_string(inside) + " neighbors in V_" +
                                      std::to_string(i) + " union V_" + std::to_string(j)});
                    goto ii_done;
                }
            }
        }
    }
ii_done:

    // (III): same-side pairs of classes see each other exactly once per vertex
    for (int side = 0; side < 2; ++side) {
        int lo = side == 0 ? 1 : m + 1;
        int hi = side == 0 ? m : k;
        for (int i = lo; i <= hi; ++i) {
            for (int j = i + 1; j <= hi; ++j) {
                for (int v = 0; v < g.order(); ++v) {
                    int a = p.labels[v].a;
                    if (p.labels[v].is_pair() || (a != i && a != j)) continue;
                    int other = (a == i) ? j : i;
                    int cnt = count_nbrs_with_class(g, p, v, other);
                    if (cnt != 1) {
                        add_violation(res, {"III", {v}, {},
                                      "vertex " + std::to_string(v) + " in V_" +
                                          std::to_string(a) + " has " + std::to_string(cnt) +
                                          " neighbors in V_" + std::to_string(other) +
                                          ", expected 1"});
                        goto iii_done;
                    }
                }
            }
        }
    }
iii_done:

    // (IV): pair-class vertices have all neighbors in V_0
    for (int v = 0; v < g.order(); ++v) {
        if (!p.labels[v].is_pair()) continue;
        for (int w : g.neighbors(v)) {
            if (!p.labels[w].is_zero()) {
                add_violation(res, {"IV", {v, w}, {},
                              "vertex " + std::to_string(v) + " in V_" +
                                  format_label(p.labels[v]) + " has neighbor " +
                                  std::to_string(w) + " outside V_0"});
                goto iv_done;
            }
        }
    }
iv_done:

    // (V): each V_0 vertex sees each A-group and each B-group exactly once,
    // where group i collects V_i together with every pair class involving i
    for (int x = 0; x < g.order(); ++x) {
        if (!p.labels[x].is_zero()) continue;
        for (int i = 1; i <= m; ++i) {
            int cnt = 0;
            for (int w : g.neighbors(x)) {
                const Label& l = p.labels[w];
                if ((l.is_pair() && l.a == i) || l == Label{i, 0}) ++cnt;
            }
            if (cnt != 1) {
                add_violation(res, {"V", {x}, {},
                              "vertex " + std::to_string(x) + " has " + std::to_string(cnt) +
                                  " neighbors in the group of side-A class " +
                                  std::to_string(i) + ", expected 1"});
                goto v_done;
            }
        }
        for (int j = m + 1; j <= k; ++j) {
            int cnt = 0;
            for (int w : g.neighbors(x)) {
                const Label& l = p.labels[w];
                if ((l.is_pair() && l.b == j) || l == Label{j, 0}) ++cnt;
            }
            if (cnt != 1) {
                add_violation(res, {"V", {x}, {},
                              "vertex " + std::to_string(x) + " has " + std::to_string(cnt) +
                                  " neighbors in the group of side-B class " +
                                  std::to_string(j) + ", expected 1"});
                goto v_done;
            }
        }
    }
v_done:

    res.ok = res.violations.empty();
    return res;
}

CheckResult check_partition(const Graph& g, const WeakPartition& p) {
    switch (p.flavor) {
        case PartitionFlavor::kr: return check_kr_amenable(g, p);
        case PartitionFlavor::kmn: return check_kmn_amenable(g, p);
        case PartitionFlavor::c4:
        case PartitionFlavor::c5: return check_cycle_parallel_amenable(g, p);
    }
    throw std::invalid_argument("unknown partition flavor");
}

// ---- searchers -------------------------------------------------------------------
//
// Backtracking over total label assignments in vertex order. The partial
// feasibility rules only reject states that cannot extend to a valid
// partition: counts that already exceed their final value, or requirements
// that the remaining unassigned neighbors cannot possibly supply.

namespace {

constexpr int kMaxClasses = 15;

struct KrSearch {
    const Graph& g;
    int r;
    std::vector<int> lab;  // -1 unassigned, 0..r

    KrSearch(const Graph& graph, int classes) : g(graph), r(classes), lab(graph.order(), -1) {}

    bool feasible(int u) const {
        std::array<int, kMaxClasses + 1> cnt{};
        int un = 0;
        for (int w : g.neighbors(u)) {
            if (lab[w] < 0) ++un;
            else ++cnt[lab[w]];
        }
        if (lab[u] == 0) {
            int need = 0;
            for (int i = 1; i <= r; ++i) {
                if (cnt[i] > 1) return false;
                if (cnt[i] == 0) ++need;
            }
            return need <= un;
        }
        int tot = 0;
        for (int i = 1; i <= r; ++i) tot += cnt[i];
        if (tot > 1) return false;
        if (tot == 1 && cnt[lab[u]] == 0) return false;
        return tot == 1 || un > 0;
    }

    bool assign_ok(int v) {
        if (!feasible(v)) return false;
        for (int w : g.neighbors(v))
            if (lab[w] >= 0 && !feasible(w)) return false;
        return true;
    }

    // classes are interchangeable: the i-th class introduced is class i
    bool dfs(int v, int used) {
        if (v == g.order()) return true;
        int top = std::min(used + 1, r);
        for (int c = 0; c <= top; ++c) {
            lab[v] = c;
            if (assign_ok(v) && dfs(v + 1, std::max(used, c))) return true;
        }
        lab[v] = -1;
        return false;
    }
};

struct CycleSearch {
    const Graph& g;
    int k;
    std::vector<int> lab;

    CycleSearch(const Graph& graph, int cycle) : g(graph), k(cycle), lab(graph.order(), -1) {}

    bool feasible(int u) const {
        std::array<int, kMaxClasses + 1> cnt{};
        int un = 0;
        for (int w : g.neighbors(u)) {
            if (lab[w] < 0) ++un;
            else ++cnt[lab[w]];
        }
        if (lab[u] == 0) {
            int need = 0;
            for (int i = 1; i <= k; ++i) {
                if (cnt[i] > 1) return false;
                if (cnt[i] == 0) ++need;
            }
            return need <= un;
        }
        int i = lab[u];
        if (cnt[cyc(i, 1, k)] > 0 || cnt[cyc(i, -1, k)] > 0) return false;
        int up = cyc(i, 2, k), down = cyc(i, -2, k);
        if (cnt[i] > 1 || cnt[up] > 1 || cnt[down] > 1) return false;
        int need = (cnt[i] == 0 ? 1 : 0) + (cnt[up] == 0 ? 1 : 0);
        if (k == 5 && cnt[down] == 0) ++need;
        return need <= un;
    }

    bool assign_ok(int v) {
        if (!feasible(v)) return false;
        for (int w : g.neighbors(v))
            if (lab[w] >= 0 && !feasible(w)) return false;
        return true;
    }

    bool dfs(int v) {
        if (v == g.order()) return true;
        for (int c = 0; c <= k; ++c) {
            lab[v] = c;
            if (assign_ok(v) && dfs(v + 1)) return true;
        }
        lab[v] = -1;
        return false;
    }
};

struct KmnSearch {
    const Graph& g;
    int m, n;
    std::vector<Label> lab;           // {-1,0} means unassigned
    std::vector<Label> candidates;    // zero, classes ascending, pairs lex

    KmnSearch(const Graph& graph, int mm, int nn)
        : g(graph), m(mm), n(nn), lab(graph.order(), Label{-1, 0}) {
        candidates.push_back({0, 0});
        for (int c = 1; c <= m + n; ++c) candidates.push_back({c, 0});
        for (int i = 1; i <= m; ++i)
            for (int j = m + 1; j <= m + n; ++j) candidates.push_back({i, j});
    }

    bool feasible(int u) const {
        std::array<int, kMaxClasses + 1> cnt_class{};
        std::array<int, kMaxClasses + 1> pair_a{}, pair_b{};
        int un = 0, pair_total = 0;
        for (int w : g.neighbors(u)) {
            const Label& l = lab[w];
            if (l.a < 0) { ++un; continue; }
            if (l.is_pair()) {
                ++pair_total;
                ++pair_a[l.a];
                ++pair_b[l.b];
            } else {
                ++cnt_class[l.a];
            }
        }
        const Label& mine = lab[u];
        if (mine.is_pair()) {
            // (IV): all neighbors must be in V_0
            for (int c = 1; c <= m + n; ++c)
                if (cnt_class[c] > 0) return false;
            return pair_total == 0;
        }
        if (mine.a == 0) {
            // (V): one neighbor per side-A group and per side-B group. A
            // single future pair-labeled neighbor can supply one group on
            // each side at once, so the sides bound the slack separately.
            int need_a = 0, need_b = 0;
            for (int i = 1; i <= m; ++i) {
                int grp = cnt_class[i] + pair_a[i];
                if (grp > 1) return false;
                if (grp == 0) ++need_a;
            }
            for (int j = m + 1; j <= m + n; ++j) {
                int grp = cnt_class[j] + pair_b[j];
                if (grp > 1) return false;
                if (grp == 0) ++need_b;
            }
            return need_a <= un && need_b <= un;
        }
        // plain class: no pair neighbors (IV), no opposite-side class
        // neighbors (II given I), exactly one neighbor in every class of the
        // own side (I and III)
        if (pair_total > 0) return false;
        bool side_a = mine.a <= m;
        int lo = side_a ? 1 : m + 1;
        int hi = side_a ? m : m + n;
        int need = 0;
        for (int c = 1; c <= m + n; ++c) {
            if (c >= lo && c <= hi) {
                if (cnt_class[c] > 1) return false;
                if (cnt_class[c] == 0) ++need;
            } else if (cnt_class[c] > 0) {
                return false;
            }
        }
        return need <= un;
    }

    bool assign_ok(int v) {
        if (!feasible(v)) return false;
        for (int w : g.neighbors(v))
            if (lab[w].a >= 0 && !feasible(w)) return false;
        return true;
    }

    // Classes are interchangeable within each side; when m == n the sides are
    // additionally interchangeable, canonicalized by forcing the first
    // non-V_0 vertex into a label that involves side A.
    bool dfs(int v, int used_a, int used_b, bool any_nonzero) {
        if (v == g.order()) return true;
        for (const Label& c : candidates) {
            if (c.is_pair()) {
                if (c.a > used_a + 1 || c.b - m > used_b + 1) continue;
            } else if (c.a >= 1 && c.a <= m) {
                if (c.a > used_a + 1) continue;
            } else if (c.a > m) {
                if (c.a - m > used_b + 1) continue;
                if (m == n && !any_nonzero) continue;  // side-swap canonicalization
            }
            lab[v] = c;
            if (assign_ok(v)) {
                int na = used_a, nb = used_b;
                if (c.is_pair()) {
                    na = std::max(na, c.a);
                    nb = std::max(nb, c.b - m);
                } else if (c.a >= 1 && c.a <= m) {
                    na = std::max(na, c.a);
                } else if (c.a > m) {
                    nb = std::max(nb, c.a - m);
                }
                if (dfs(v + 1, na, nb, any_nonzero || c.a != 0)) return true;
            }
        }
        lab[v] = {-1, 0};
        return false;
    }
};

std::vector<Label> to_labels(const std::vector<int>& lab) {
    std::vector<Label> out(lab.size());
    for (size_t i = 0; i < lab.size(); ++i) out[i] = {lab[i], 0};
    return out;
}

}  // namespace

std::optional<WeakPartition> find_kr_amenable(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("find_kr_amenable: r must be >= 2");
    if (r > kMaxClasses) throw std::invalid_argument("find_kr_amenable: r too large");
    KrSearch search(g, r);
    if (!search.dfs(0, 0)) return std::nullopt;
    WeakPartition p = make_kr_partition(r, to_labels(search.lab));
    if (!check_kr_amenable(g, p).ok)
        throw std::logic_error("find_kr_amenable produced a partition failing its checker");
    return p;
}

std::optional<WeakPartition> find_cycle_parallel_amenable(const Graph& g, int k) {
    if (k != 4 && k != 5)
        throw std::invalid_argument("find_cycle_parallel_amenable: k must be 4 or 5");
    CycleSearch search(g, k);
    if (!search.dfs(0)) return std::nullopt;
    WeakPartition p = make_cycle_partition(k, to_labels(search.lab));
    if (!check_cycle_parallel_amenable(g, p).ok)
        throw std::logic_error(
            "find_cycle_parallel_amenable produced a partition failing its checker");
    return p;
}

std::optional<WeakPartition> find_kmn_amenable(const Graph& g, int m, int n) {
    if (m < 1 || m > n) throw std::invalid_argument("find_kmn_amenable: requires 1 <= m <= n");
    if (m + n > kMaxClasses) throw std::invalid_argument("find_kmn_amenable: m+n too large");
    KmnSearch search(g, m, n);
    if (!search.dfs(0, 0, 0, false)) return std::nullopt;
    WeakPartition p = make_kmn_partition(m, n, search.lab);
    if (!check_kmn_amenable(g, p).ok)
        throw std::logic_error("find_kmn_amenable produced a partition failing its checker");
    return p;
}

// ---- converters --------------------------------------------------------------------

namespace {

[[noreturn]] void fail_precondition(const char* what, const CheckResult& check) {
    std::string msg = std::string(what) + ": partition fails its checker";
    for (const auto& v : check.violations) msg += "; " + v.to_string();
    throw PreconditionError(msg);
}

}  // namespace

VertexSet kr_partition_to_eod(const Graph& g, const WeakPartition& p) {
    auto check = check_kr_amenable(g, p);
    if (!check.ok) fail_precondition("kr_partition_to_eod", check);
    ProductDims dims{g.order(), p.r};
    VertexSet d;
    for (int v = 0; v < g.order(); ++v)
        if (!p.labels[v].is_zero()) d.push_back(dims.index(v, p.labels[v].a - 1));
    return as_vertex_set(std::move(d));
}

WeakPartition eod_to_kr_partition(const ProductDims& dims, int r, const VertexSet& d) {
    if (r <= 2) throw std::invalid_argument("eod_to_kr_partition: requires r > 2");
    if (dims.h_size != r)
        throw std::invalid_argument("eod_to_kr_partition: dims.h_size must equal r");
    std::vector<Label> labels(dims.g_size, Label{0, 0});
    for (int v : d) {
        if (v < 0 || v >= dims.order())
            throw std::invalid_argument("eod_to_kr_partition: set member out of range");
        int g = dims.first(v), h = dims.second(v);
        if (!labels[g].is_zero())
            throw PreconditionError("eod_to_kr_partition: layer " + std::to_string(g) +
                                    " holds two or more set members; no EOD-set of a product "
                                    "with a complete factor of order > 2 does that");
        labels[g] = {h + 1, 0};
    }
    return make_kr_partition(r, std::move(labels));
}

VertexSet kmn_partition_to_eod(const Graph& g, const WeakPartition& p) {
    auto check = check_kmn_amenable(g, p);
    if (!check.ok) fail_precondition("kmn_partition_to_eod", check);
    ProductDims dims{g.order(), p.m + p.n};
    VertexSet d;
    for (int v = 0; v < g.order(); ++v) {
        const Label& l = p.labels[v];
        if (l.is_zero()) continue;
        d.push_back(dims.index(v, l.a - 1));
        if (l.is_pair()) d.push_back(dims.index(v, l.b - 1));
    }
    return as_vertex_set(std::move(d));
}

WeakPartition eod_to_kmn_partition(const ProductDims& dims, int m, int n, const VertexSet& d) {
    if (m < 1 || m > n) throw std::invalid_argument("eod_to_kmn_partition: requires 1 <= m <= n");
    if (dims.h_size != m + n)
        throw std::invalid_argument("eod_to_kmn_partition: dims.h_size must equal m+n");
    std::vector<std::vector<int>> per_layer(dims.g_size);
    for (int v : d) {
        if (v < 0 || v >= dims.order())
            throw std::invalid_argument("eod_to_kmn_partition: set member out of range");
        per_layer[dims.first(v)].push_back(dims.second(v));
    }
    std::vector<Label> labels(dims.g_size, Label{0, 0});
    for (int g = 0; g < dims.g_size; ++g) {
        auto& layer = per_layer[g];
        std::sort(layer.begin(), layer.end());
        if (layer.empty()) continue;
        if (layer.size() == 1) {
            labels[g] = {layer[0] + 1, 0};
        } else if (layer.size() == 2 && layer[0] < m && layer[1] >= m) {
            labels[g] = {layer[0] + 1, layer[1] + 1};
        } else {
            throw PreconditionError(
                "eod_to_kmn_partition: layer " + std::to_string(g) +
                (layer.size() > 2 ? " holds more than two set members"
                                  : " holds two same-side set members (a non-adjacent pair)") +
                "; an EOD-set of a product with a diameter-2 factor allows at most two per "
                "layer, and two only when adjacent");
        }
    }
    return make_kmn_partition(m, n, std::move(labels));
}

VertexSet cycle_partition_to_parallel_eod(const Graph& g, const WeakPartition& p) {
    auto check = check_cycle_parallel_amenable(g, p);
    if (!check.ok) fail_precondition("cycle_partition_to_parallel_eod", check);
    ProductDims dims{g.order(), p.class_count()};
    VertexSet d;
    for (int v = 0; v < g.order(); ++v)
        if (!p.labels[v].is_zero()) d.push_back(dims.index(v, p.labels[v].a - 1));
    return as_vertex_set(std::move(d));
}

WeakPartition parallel_eod_to_cycle_partition(const ProductDims& dims, int k,
                                              const VertexSet& d) {
    if (k != 4 && k != 5)
        throw std::invalid_argument("parallel_eod_to_cycle_partition: k must be 4 or 5");
    if (dims.h_size != k)
        throw std::invalid_argument("parallel_eod_to_cycle_partition: dims.h_size must equal k");
    std::vector<Label> labels(dims.g_size, Label{0, 0});
    for (int v : d) {
        if (v < 0 || v >= dims.order())
            throw std::invalid_argument("parallel_eod_to_cycle_partition: member out of range");
        int g = dims.first(v), h = dims.second(v);
        if (!labels[g].is_zero())
            throw PreconditionError("parallel_eod_to_cycle_partition: layer " +
                                    std::to_string(g) +
                                    " holds two or more set members, so the set is not parallel "
                                    "with respect to the first factor");
        labels[g] = {h + 1, 0};
    }
    return make_cycle_partition(k, std::move(labels));
}

// ---- zig-zag sets ---------------------------------------------------------------------

ZigzagSet make_zigzag_set(std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("zig-zag set: loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("zig-zag set: duplicate edge");
    return {std::move(edges)};
}

namespace {

// Core conditions (i)-(iv), assuming the preconditions already hold.
// dist is the all-pairs distance matrix of g.
CheckResult zigzag_conditions(const Graph& g, const std::vector<Edge>& edges,
                              const std::vector<std::vector<int>>& dist) {
    CheckResult res;
    const int k = static_cast<int>(edges.size());

    // (i): the endpoints of each edge have no common neighbor
    bool found_i = false;
    for (const auto& [u, v] : edges) {
        for (int x : g.neighbors(u)) {
            if (x != v && g.adjacent(x, v)) {
                add_violation(res, {"i", {u, v, x}, {{u, v}},
                              "vertex " + std::to_string(x) + " is a common neighbor"});
                found_i = true;
                break;
            }
        }
        if (found_i) break;
    }

    auto edge_dist = [&](int a, int b) {
        return std::min({dist[edges[a].first][edges[b].first],
                         dist[edges[a].first][edges[b].second],
                         dist[edges[a].second][edges[b].first],
                         dist[edges[a].second][edges[b].second]});
    };

    // (ii): pairwise edge distance at least 2
    bool found_ii = false;
    for (int a = 0; a < k && !found_ii; ++a)
        for (int b = a + 1; b < k; ++b)
            if (edge_dist(a, b) < 2) {
                add_violation(res, {"ii", {}, {edges[a], edges[b]},
                              "edge distance " + std::to_string(edge_dist(a, b))});
                found_ii = true;
                break;
            }

    // (iii): every outside vertex is at distance 1 from exactly two edges
    std::vector<char> is_endpoint(g.order(), 0);
    for (const auto& [u, v] : edges) is_endpoint[u] = is_endpoint[v] = 1;
    for (int x = 0; x < g.order(); ++x) {
        if (is_endpoint[x]) continue;
        int close = 0;
        for (int a = 0; a < k; ++a)
            if (std::min(dist[x][edges[a].first], dist[x][edges[a].second]) == 1) ++close;
        if (close != 2) {
            add_violation(res, {"iii", {x}, {},
                          "vertex " + std::to_string(x) + " is at distance 1 from " +
                              std::to_string(close) + " edges, expected exactly 2"});
            break;
        }
    }

    // (iv): no odd cyclic 2-step sequence, i.e. the auxiliary graph whose
    // nodes are the edges with adjacency "edge distance exactly 2" is
    // bipartite; an odd cycle found by the 2-coloring is the witness
    std::vector<int> color(k, -1), parent(k, -1), depth(k, 0);
    bool found_iv = false;
    for (int root = 0; root < k && !found_iv; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty() && !found_iv) {
            int a = queue.front();
            queue.pop_front();
            for (int b = 0; b < k; ++b) {
                if (b == a || edge_dist(a, b) != 2) continue;
                if (color[b] == -1) {
                    color[b] = 1 - color[a];
                    parent[b] = a;
                    depth[b] = depth[a] + 1;
                    queue.push_back(b);
                } else if (color[b] == color[a]) {
                    // walk both branches up to the meeting point
                    std::vector<int> up_a{a}, up_b{b};
                    int x = a, y = b;
                    while (depth[x] > depth[y]) up_a.push_back(x = parent[x]);
                    while (depth[y] > depth[x]) up_b.push_back(y = parent[y]);
                    while (x != y) {
                        up_a.push_back(x = parent[x]);
                        up_b.push_back(y = parent[y]);
                    }
                    std::vector<Edge> cycle;
                    for (int e : up_a) cycle.push_back(edges[e]);
                    for (auto it = up_b.rbegin(); it != up_b.rend(); ++it)
                        if (*it != x) cycle.push_back(edges[*it]);
                    add_violation(res, {"iv", {}, cycle,
                                  "odd cyclic 2-step sequence of length " +
                                      std::to_string(cycle.size())});
                    found_iv = true;
                    break;
                }
            }
        }
    }

    res.ok = res.violations.empty();
    return res;
}

}  // namespace

CheckResult is_zigzag_set(const Graph& g, const ZigzagSet& z) {
    if (g.order() < 3)
        throw std::invalid_argument("is_zigzag_set: the host graph must have order >= 3");
    if (z.edges.empty()) throw std::invalid_argument("is_zigzag_set: the edge set is empty");
    for (const auto& [u, v] : z.edges)
        if (!g.has_vertex(u) || !g.has_vertex(v) || !g.adjacent(u, v))
            throw std::invalid_argument("is_zigzag_set: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not an edge of the graph");
    return zigzag_conditions(g, z.edges, all_pairs_distances(g));
}

std::optional<ZigzagSet> find_zigzag_set(const Graph& g) {
    if (g.order() < 3 || g.size() == 0) return std::nullopt;
    auto dist = all_pairs_distances(g);

    // Candidate edges must satisfy (i) on their own, and any two edges of a
    // zig-zag set are at distance >= 2, so it suffices to walk the subsets
    // that stay pairwise spread out. Dense graphs admit very few of those.
    std::vector<Edge> candidates;
    for (const auto& [u, v] : g.edges()) {
        bool common = false;
        for (int x : g.neighbors(u))
            if (x != v && g.adjacent(x, v)) { common = true; break; }
        if (!common) candidates.push_back({u, v});
    }
    auto edist = [&](const Edge& a, const Edge& b) {
        return std::min({dist[a.first][b.first], dist[a.first][b.second],
                         dist[a.second][b.first], dist[a.second][b.second]});
    };

    std::vector<Edge> subset;
    std::optional<ZigzagSet> found;
    auto extend = [&](auto&& self, size_t next) -> bool {
        if (!subset.empty() && zigzag_conditions(g, subset, dist).ok) {
            found = ZigzagSet{subset};
            return true;
        }
        for (size_t i = next; i < candidates.size(); ++i) {
            bool compatible = true;
            for (const Edge& e : subset)
                if (edist(e, candidates[i]) < 2) { compatible = false; break; }
            if (!compatible) continue;
            subset.push_back(candidates[i]);
            if (self(self, i + 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    extend(extend, 0);
    return found;
}

WeakPartition zigzag_to_k2_partition(const Graph& g, const ZigzagSet& z) {
    auto check = is_zigzag_set(g, z);
    if (!check.ok) fail_precondition("zigzag_to_k2_partition", check);

    const auto& edges = z.edges;  // sorted, lowest-index edge seeds each component
    const int k = static_cast<int>(edges.size());
    auto dist = all_pairs_distances(g);
    auto edge_dist = [&](int a, int b) {
        return std::min({dist[edges[a].first][edges[b].first],
                         dist[edges[a].first][edges[b].second],
                         dist[edges[a].second][edges[b].first],
                         dist[edges[a].second][edges[b].second]});
    };

    std::vector<int> color(k, -1);
    for (int root = 0; root < k; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (int b = 0; b < k; ++b)
                if (b != a && color[b] == -1 && edge_dist(a, b) == 2) {
                    color[b] = 1 - color[a];
                    queue.push_back(b);
                }
        }
    }

    std::vector<Label> labels(g.order(), Label{0, 0});
    for (int a = 0; a < k; ++a) {
        int cls = color[a] == 0 ? 1 : 2;
        labels[edges[a].first] = {cls, 0};
        labels[edges[a].second] = {cls, 0};
    }
    WeakPartition p = make_kr_partition(2, std::move(labels));
    if (!check_kr_amenable(g, p).ok)
        throw std::logic_error("zigzag_to_k2_partition produced a partition failing its checker");
    return p;
}

ZigzagSet k2_partition_to_zigzag(const Graph& g, const WeakPartition& p) {
    if (p.flavor != PartitionFlavor::kr || p.r != 2)
        throw std::invalid_argument("k2_partition_to_zigzag: expects the K_2 flavor");
    auto check = check_kr_amenable(g, p);
    if (!check.ok) fail_precondition("k2_partition_to_zigzag", check);
    VertexSet support = p.nonzero_members();
    if (support.empty())
        throw std::invalid_argument("k2_partition_to_zigzag: V_1 union V_2 is empty");
    ZigzagSet z{induced_edges(g, support)};
    if (!is_zigzag_set(g, z).ok)
        throw std::logic_error("k2_partition_to_zigzag produced a set failing the zig-zag check");
    return z;
}

// ---- partition file format ------------------------------------------------------------

WeakPartition parse_partition(std::string_view text, const FlavorSpec& spec, int order) {
    std::vector<Label> labels(order, Label{0, 0});
    std::vector<char> seen(order, 0);

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (blank) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected \"<class>: v ...\"");
        std::string head = line.substr(0, colon);
        // strip spaces around the class token
        head.erase(std::remove_if(head.begin(), head.end(),
                                  [](unsigned char c) { return isspace(c); }),
                   head.end());
        Label label{};
        try {
            if (!head.empty() && head.front() == '[') {
                if (head.back() != ']')
                    throw ParseError("line " + std::to_string(line_no) + ": unclosed pair label");
                auto comma = head.find(',');
                if (comma == std::string::npos)
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": pair label needs two indices");
                label.a = std::stoi(head.substr(1, comma - 1));
                label.b = std::stoi(head.substr(comma + 1, head.size() - comma - 2));
            } else {
                label.a = std::stoi(head);
            }
        } catch (const std::logic_error&) {  // stoi failures; ParseError passes through
            throw ParseError("line " + std::to_string(line_no) + ": malformed class label \"" +
                             head + "\"");
        }

        std::istringstream ls(line.substr(colon + 1));
        long long v;
        while (ls >> v) {
            if (v < 0 || v >= order)
                throw ParseError("line " + std::to_string(line_no) + ": vertex " +
                                 std::to_string(v) + " out of range for order " +
                                 std::to_string(order));
            if (seen[v])
                throw ParseError("line " + std::to_string(line_no) + ": vertex " +
                                 std::to_string(v) + " labeled twice");
            seen[v] = 1;
            labels[v] = label;
        }
        if (!ls.eof()) {
            std::string junk;
            ls.clear();
            ls >> junk;
            throw ParseError("line " + std::to_string(line_no) + ": bad vertex token \"" + junk +
                             "\"");
        }
    }

    switch (spec.flavor) {
        case PartitionFlavor::kr: return make_kr_partition(spec.r, std::move(labels));
        case PartitionFlavor::kmn: return make_kmn_partition(spec.m, spec.n, std::move(labels));
        case PartitionFlavor::c4: return make_cycle_partition(4, std::move(labels));
        case PartitionFlavor::c5: return make_cycle_partition(5, std::move(labels));
    }
    throw std::invalid_argument("unknown partition flavor");
}

std::string format_partition(const WeakPartition& p) {
    std::map<std::pair<int, int>, VertexSet> groups;
    for (int v = 0; v < static_cast<int>(p.labels.size()); ++v) {
        const Label& l = p.labels[v];
        groups[{l.a, l.b}].push_back(v);
    }
    std::ostringstream out;
    for (const auto& [key, members] : groups) {
        out << format_label({key.first, key.second}) << ':';
        for (int v : members) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace cartdom
