#include "gonal/gonality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gonal/hurwitz.hpp"

namespace gonal {

namespace {

// ---- unlabeled tree enumeration -------------------------------------------

using TreeEdges = std::vector<std::pair<int, int>>;

std::string rooted_canon(int root, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> kids;
    for (int u : adj[root])
        if (u != parent) kids.push_back(rooted_canon(u, root, adj));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const std::string& k : kids) out += k;
    out += ")";
    return out;
}

std::string tree_canon(int n, const TreeEdges& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // centers by leaf stripping
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int u : adj[v])
                if (!removed[u] && --deg[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::string best;
    for (int c = 0; c < n; ++c) {
        if (removed[c]) continue;
        std::string s = rooted_canon(c, -1, adj);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

const std::vector<TreeEdges>& tree_list(int n) {
    static std::vector<std::vector<TreeEdges>> cache{{}, {TreeEdges{}}};
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        std::vector<TreeEdges> out;
        std::vector<std::string> seen;
        for (const TreeEdges& t : cache[m - 1]) {
            for (int v = 0; v < m - 1; ++v) {
                TreeEdges grown = t;
                grown.emplace_back(v, m - 1);
                std::string key = tree_canon(m, grown);
                if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                    seen.push_back(key);
                    out.push_back(std::move(grown));
                }
            }
        }
        cache.push_back(std::move(out));
    }
    return cache[n];
}

WeightedGraph tree_graph(int n, const TreeEdges& edges) {
    std::vector<VertexSpec> vs;
    for (int i = 0; i < n; ++i) vs.push_back(VertexSpec{"t" + std::to_string(i), 0});
    std::vector<EdgeSpec> es;
    for (std::size_t i = 0; i < edges.size(); ++i)
        es.push_back(EdgeSpec{"f" + std::to_string(i),
                              {"t" + std::to_string(edges[i].first),
                               "t" + std::to_string(edges[i].second)}});
    return WeightedGraph(std::move(vs), std::move(es));
}

// ---- search over one (tree, vertex map) pair -------------------------------

struct BudgetGone {};

struct Searcher {
    const WeightedGraph& g0;
    long long d;
    MorphismMode mode;
    const GonalitySearchOptions& opts;

    long long nodes = 0;

    void tick() {
        if (++nodes > opts.node_budget) throw BudgetGone{};
    }

    // current tree
    const WeightedGraph* tree = nullptr;
    std::vector<std::vector<std::size_t>> tree_adj_edges;  // per tree vertex: incident edges

    // map state
    std::vector<int> image;      // source vertex -> tree vertex (-1 unset)
    std::vector<int> fiber_size;
    std::vector<std::size_t> order;  // BFS order over source vertices

    std::optional<IndexedMorphism> found;
    HarmonicCertificate found_cert;
    std::map<std::string, PartitionSet> found_profiles;

    explicit Searcher(const WeightedGraph& graph, long long degree, MorphismMode md,
                      const GonalitySearchOptions& options)
        : g0(graph), d(degree), mode(md), opts(options) {
        order.resize(g0.vertex_count());
        std::vector<char> seen(g0.vertex_count(), 0);
        std::size_t head = 0, tail = 0;
        order[tail++] = 0;
        seen[0] = 1;
        while (head < tail) {
            std::size_t v = order[head++];
            for (auto [e, side] : g0.incident(v)) {
                std::size_t u = g0.end(e, 1 - side);
                if (!seen[u]) {
                    seen[u] = 1;
                    order[tail++] = u;
                }
            }
        }
    }

    bool run_tree(const WeightedGraph& t) {
        tree = &t;
        tree_adj_edges.assign(t.vertex_count(), {});
        for (std::size_t e = 0; e < t.edge_count(); ++e)
            for (int side = 0; side < 2; ++side) tree_adj_edges[t.end(e, side)].push_back(e);
        image.assign(g0.vertex_count(), -1);
        fiber_size.assign(t.vertex_count(), 0);
        return place(0);
    }

    bool place(std::size_t k) {
        if (k == g0.vertex_count()) {
            for (std::size_t u = 0; u < tree->vertex_count(); ++u)
                if (fiber_size[u] == 0) return false;
            return evaluate_map();
        }
        std::size_t v = order[k];
        std::size_t unused = 0;
        for (std::size_t u = 0; u < tree->vertex_count(); ++u)
            if (fiber_size[u] == 0) ++unused;
        if (g0.vertex_count() - k < unused) return false;  // surjectivity is out of reach

        for (std::size_t u = 0; u < tree->vertex_count(); ++u) {
            if (fiber_size[u] >= d) continue;  // each fiber member needs local degree >= 1
            bool ok = true;
            for (auto [e, side] : g0.incident(v)) {
                std::size_t w = g0.end(e, 1 - side);
                if (image[w] < 0) continue;
                std::size_t wi = static_cast<std::size_t>(image[w]);
                if (wi == u) continue;
                bool adjacent = false;
                for (std::size_t te : tree_adj_edges[u]) {
                    std::size_t a = tree->end(te, 0), b = tree->end(te, 1);
                    if ((a == u && b == wi) || (b == u && a == wi)) adjacent = true;
                }
                if (!adjacent) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            tick();
            image[v] = static_cast<int>(u);
            ++fiber_size[u];
            if (place(k + 1)) return true;
            --fiber_size[u];
            image[v] = -1;
        }
        return false;
    }

    // ---- with a full vertex map: derive classes, enumerate m and indices ----

    struct MapData {
        std::vector<int> edge_class;           // source edge -> tree edge, -1 = contracted
        std::vector<std::vector<std::size_t>> class_edges;  // per tree edge
        // per source vertex, count of incident edges per incident tree edge
        std::vector<std::map<std::size_t, int>> cover;
        std::vector<long long> m_lo;
    };

    bool evaluate_map() {
        MapData md;
        md.edge_class.assign(g0.edge_count(), -1);
        md.class_edges.assign(tree->edge_count(), {});
        md.cover.assign(g0.vertex_count(), {});
        for (std::size_t e = 0; e < g0.edge_count(); ++e) {
            std::size_t a = g0.end(e, 0), b = g0.end(e, 1);
            if (image[a] == image[b]) continue;  // contracted
            int te = -1;
            for (std::size_t f : tree_adj_edges[image[a]]) {
                std::size_t x = tree->end(f, 0), y = tree->end(f, 1);
                if ((static_cast<int>(x) == image[a] && static_cast<int>(y) == image[b]) ||
                    (static_cast<int>(y) == image[a] && static_cast<int>(x) == image[b]))
                    te = static_cast<int>(f);
            }
            if (te < 0) return false;  // cannot happen after placement filtering
            md.edge_class[e] = te;
            md.class_edges[te].push_back(e);
            ++md.cover[a][te];
            ++md.cover[b][te];
        }
        // every tree edge at the image must be covered at every vertex
        md.m_lo.assign(g0.vertex_count(), 1);
        for (std::size_t v = 0; v < g0.vertex_count(); ++v) {
            for (std::size_t te : tree_adj_edges[image[v]]) {
                auto it = md.cover[v].find(te);
                if (it == md.cover[v].end()) return false;  // m(v) would vanish
                md.m_lo[v] = std::max(md.m_lo[v], static_cast<long long>(it->second));
            }
        }
        // enumerate m fiber by fiber
        std::vector<std::vector<std::size_t>> fibers(tree->vertex_count());
        for (std::size_t i = 0; i < g0.vertex_count(); ++i) {
            std::size_t v = order[i];  // canonical within-fiber order
            fibers[image[v]].push_back(v);
        }
        std::vector<long long> m(g0.vertex_count(), 0);
        return enumerate_m(md, fibers, 0, m);
    }

    bool enumerate_m(const MapData& md, const std::vector<std::vector<std::size_t>>& fibers,
                     std::size_t u, std::vector<long long>& m) {
        if (u == fibers.size()) return try_indices(md, m);
        const std::vector<std::size_t>& fib = fibers[u];
        auto rec = [&](auto&& self, std::size_t i, long long rest) -> bool {
            if (i + 1 == fib.size()) {
                std::size_t v = fib[i];
                if (rest < md.m_lo[v]) return false;
                m[v] = rest;
                if (!m_feasible(v, rest)) return false;
                tick();
                return enumerate_m(md, fibers, u + 1, m);
            }
            std::size_t v = fib[i];
            long long reserve = 0;
            for (std::size_t j = i + 1; j < fib.size(); ++j) reserve += md.m_lo[fib[j]];
            for (long long x = md.m_lo[v]; x <= rest - reserve; ++x) {
                m[v] = x;
                if (!m_feasible(v, x)) continue;
                tick();
                if (self(self, i + 1, rest - x)) return true;
            }
            return false;
        };
        if (fib.empty()) return false;
        return rec(rec, 0, d);
    }

    // Riemann-Hurwitz inequality at v. The index sum over edges at v equals
    // m(v) for every covered tree edge, so the left side only involves m(v):
    //   m(v)*val_T(image(v)) - val(v) <= 2(m(v) - 1 + w(v))   (weightless tree)
    bool m_feasible(std::size_t v, long long mval) {
        if (mode != MorphismMode::harmonic) return true;
        long long val_t = static_cast<long long>(tree_adj_edges[image[v]].size());
        return mval * val_t - g0.valency(v) <= 2 * (mval - 1 + g0.weight(v));
    }

    bool try_indices(const MapData& md, const std::vector<long long>& m) {
        // per-vertex per-class remaining sums
        std::vector<std::map<std::size_t, long long>> rem(g0.vertex_count());
        std::vector<std::map<std::size_t, int>> left(g0.vertex_count());
        for (std::size_t v = 0; v < g0.vertex_count(); ++v)
            for (const auto& [te, cnt] : md.cover[v]) {
                rem[v][te] = m[v];
                left[v][te] = cnt;
            }
        std::vector<int> index(g0.edge_count(), 0);
        return assign_class(md, m, rem, left, index, 0, 0);
    }

    bool assign_class(const MapData& md, const std::vector<long long>& m,
                      std::vector<std::map<std::size_t, long long>>& rem,
                      std::vector<std::map<std::size_t, int>>& left, std::vector<int>& index,
                      std::size_t te, std::size_t pos) {
        if (te == md.class_edges.size()) return finish(md, m, index);
        if (pos == md.class_edges[te].size()) {
            for (std::size_t v = 0; v < g0.vertex_count(); ++v) {
                auto it = rem[v].find(te);
                if (it != rem[v].end() && it->second != 0) return false;
            }
            return assign_class(md, m, rem, left, index, te + 1, 0);
        }
        std::size_t e = md.class_edges[te][pos];
        std::size_t a = g0.end(e, 0), b = g0.end(e, 1);
        long long hi = std::min({rem[a][te] - (left[a][te] - 1), rem[b][te] - (left[b][te] - 1),
                                 d});
        for (long long r = 1; r <= hi; ++r) {
            bool last_a = left[a][te] == 1, last_b = left[b][te] == 1;
            if (last_a && rem[a][te] != r) continue;
            if (last_b && rem[b][te] != r) continue;
            tick();
            index[e] = static_cast<int>(r);
            rem[a][te] -= r;
            rem[b][te] -= r;
            --left[a][te];
            --left[b][te];
            if (assign_class(md, m, rem, left, index, te, pos + 1)) return true;
            ++left[a][te];
            ++left[b][te];
            rem[a][te] += r;
            rem[b][te] += r;
            index[e] = 0;
        }
        return false;
    }

    bool finish(const MapData& md, const std::vector<long long>& m, const std::vector<int>& index) {
        // Every vertex profile must close up to a branched cover of the right
        // genus. There is no small-degree shortcut: a local degree 1 at a
        // positive-weight vertex already fails, whatever the total degree.
        std::map<std::string, PartitionSet> profiles;
        if (opts.hurwitz) {
            for (std::size_t v = 0; v < g0.vertex_count(); ++v) {
                std::map<std::size_t, std::vector<int>> parts;
                for (auto [e, side] : g0.incident(v))
                    if (md.edge_class[e] >= 0)
                        parts[static_cast<std::size_t>(md.edge_class[e])].push_back(index[e]);
                std::vector<std::vector<int>> plist;
                for (auto& [te, p] : parts) plist.push_back(std::move(p));
                PartitionSet profile(m[v], std::move(plist));
                auto completed = complete_with_simple(profile, g0.weight(v));
                if (!completed) return false;
                if (!is_hurwitz_type(*completed, false, opts.hurwitz_degree_cap).realizable)
                    return false;
                profiles.emplace(g0.vertex_id(v), std::move(profile));
            }
        }
        // build the witness morphism
        std::map<std::string, std::string> vmap;
        for (std::size_t v = 0; v < g0.vertex_count(); ++v)
            vmap[g0.vertex_id(v)] = tree->vertex_id(image[v]);
        std::vector<MorphismEdge> edata;
        for (std::size_t e = 0; e < g0.edge_count(); ++e) {
            MorphismEdge me;
            me.id = g0.edges()[e].id;
            if (md.edge_class[e] < 0) {
                me.action = EdgeAction::contract;
                me.index = 0;
            } else {
                me.action = EdgeAction::map_to;
                me.target_edge = tree->edges()[md.edge_class[e]].id;
                me.index = index[e];
            }
            edata.push_back(std::move(me));
        }
        IndexedMorphism phi(g0, *tree, std::move(vmap), std::move(edata));
        PseudoHarmonicReport check = check_pseudo_harmonic(phi, d);
        if (!check.ok() || !check.certificate->non_degenerate)
            throw std::logic_error("gonality search produced an invalid witness");
        if (mode == MorphismMode::harmonic && !check_harmonic(phi, d).harmonic)
            throw std::logic_error("gonality search witness fails the harmonic check");
        found = std::move(phi);
        found_cert = *check.certificate;
        found_profiles = std::move(profiles);
        return true;
    }
};

}  // namespace

std::vector<WeightedGraph> trees_with_vertices(int n) {
    if (n < 1) throw std::invalid_argument("trees_with_vertices requires n >= 1");
    std::vector<WeightedGraph> out;
    for (const TreeEdges& t : tree_list(n)) out.push_back(tree_graph(n, t));
    return out;
}

GonalityReport find_harmonic_to_tree(const WeightedGraph& g, long long d, MorphismMode mode,
                                     const GonalitySearchOptions& opts) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    g.require_valid();
    if (g.has_legs())
        throw std::invalid_argument("gonality search does not support graphs with legs");

    WeightedGraph g0 = loopless_model(g);
    GonalityReport report;

    if (g0.vertex_count() == 1) {
        // Isolated vertex: the only target is the one-point tree and the local
        // degree is a free choice, pinned to d.
        report.trees_tried = 1;
        WeightedGraph k1({VertexSpec{"t0", 0}}, {});
        std::map<std::string, std::string> vmap{{g0.vertex_id(0), "t0"}};
        IndexedMorphism phi(g0, k1, std::move(vmap), {});
        PseudoHarmonicReport check = check_pseudo_harmonic(phi, d);
        bool ok = check.ok() && check.certificate->non_degenerate;
        if (ok && mode == MorphismMode::harmonic) ok = check_harmonic(phi, d).harmonic;
        if (ok && opts.hurwitz) {
            // the empty profile must close to a genus-w(v) cover of degree d;
            // cheap enough to check honestly even for small d
            PartitionSet empty(d, {});
            auto completed = complete_with_simple(empty, g0.weight(0));
            bool h = completed.has_value() &&
                     is_hurwitz_type(*completed, false, opts.hurwitz_degree_cap).realizable;
            report.hurwitz_ok = h;
            ok = h;
        }
        if (ok) {
            report.outcome = GonalityReport::Outcome::found;
            report.certificate = *check.certificate;
            report.witness = std::move(phi);
        }
        return report;
    }

    // Target size bound: a non-degenerate morphism of positive degree makes
    // every vertex-fiber sum positive, so the vertex map is surjective and
    // |V(T)| <= |V(G0)|.
    Searcher searcher(g0, d, mode, opts);
    try {
        int max_tree = static_cast<int>(g0.vertex_count());
        for (int nt = 2; nt <= max_tree && !searcher.found; ++nt) {
            // a surjective map with fibers of size <= d needs nt >= n/d
            if (static_cast<long long>(g0.vertex_count()) > d * nt) continue;
            for (const WeightedGraph& t : trees_with_vertices(nt)) {
                ++searcher.nodes;  // tree counts toward the budget too
                ++report.trees_tried;
                if (searcher.run_tree(t)) break;
            }
        }
    } catch (BudgetGone&) {
        report.nodes_explored = searcher.nodes;
        report.outcome = GonalityReport::Outcome::inconclusive;
        return report;
    }
    report.nodes_explored = searcher.nodes;
    if (searcher.found) {
        report.outcome = GonalityReport::Outcome::found;
        report.witness = std::move(searcher.found);
        report.certificate = searcher.found_cert;
        report.vertex_profiles = std::move(searcher.found_profiles);
        if (opts.hurwitz) report.hurwitz_ok = true;
    }
    return report;
}

bool is_geometrically_gonal(const WeightedGraph& g, long long d,
                            const GonalitySearchOptions& opts) {
    GonalityReport r = find_harmonic_to_tree(g, d, MorphismMode::harmonic, opts);
    if (r.outcome == GonalityReport::Outcome::inconclusive)
        throw std::runtime_error("gonality search exhausted its node budget");
    return r.decision();
}

namespace {

std::optional<Divisor> least_witness(const WeightedGraph& g, long long d, long long r,
                                     long long cap) {
    RankEngine engine(g);
    std::optional<Divisor> best;
    for (PicardClass& pc : enumerate_classes(g, d, cap)) {
        if (!engine.rank_at_least(pc.representative, r)) continue;
        bool better = true;
        if (best) {
            for (std::size_t v = 0; v < engine.model().vertex_count(); ++v) {
                long long x = pc.representative.coeff(engine.model().vertex_id(v));
                long long y = best->coeff(engine.model().vertex_id(v));
                if (x != y) {
                    better = x < y;
                    break;
                }
                better = false;
            }
        }
        if (better) best = pc.representative;
    }
    return best;
}

}  // namespace

RefinementReport find_divisorial_refinement(const WeightedGraph& g, long long d, long long r,
                                            int max_subdiv, long long cap) {
    if (d < 1 || r < 1 || max_subdiv < 1)
        throw std::invalid_argument("find_divisorial_refinement requires d, r, max_subdiv >= 1");
    g.require_valid();
    RefinementReport report;
    std::size_t ne = g.edge_count();
    int max_total = static_cast<int>(ne) * (max_subdiv - 1);
    std::vector<int> extra(ne, 0);  // inserted vertices per edge

    auto try_plan = [&]() -> bool {
        std::map<std::string, int> plan;
        for (std::size_t e = 0; e < ne; ++e)
            if (extra[e] > 0) plan[g.edges()[e].id] = extra[e] + 1;
        WeightedGraph refined = refine(g, plan);
        std::optional<Divisor> witness = least_witness(refined, d, r, cap);
        if (!witness) return false;
        report.found = true;
        report.plan = std::move(plan);
        report.subdivision_total = std::accumulate(extra.begin(), extra.end(), 0);
        report.refined = std::move(refined);
        report.witness = std::move(witness);
        return true;
    };

    if (ne == 0) {
        try_plan();
        return report;
    }
    for (int total = 0; total <= max_total; ++total) {
        // compositions of `total` over the edges, each part <= max_subdiv - 1
        auto rec = [&](auto&& self, std::size_t e, int rest) -> bool {
            if (e + 1 == ne) {
                if (rest > max_subdiv - 1) return false;
                extra[e] = rest;
                bool hit = try_plan();
                extra[e] = 0;
                return hit;
            }
            for (int x = 0; x <= std::min(rest, max_subdiv - 1); ++x) {
                extra[e] = x;
                if (self(self, e + 1, rest - x)) return true;
            }
            extra[e] = 0;
            return false;
        };
        if (rec(rec, 0, total)) return report;
    }
    return report;
}

}  // namespace gonal
