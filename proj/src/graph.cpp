#include "gonal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gonal {

namespace {

std::string fresh_id(std::string base, const std::set<std::string>& used) {
    while (used.count(base)) base += "+";
    return base;
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges,
                             std::vector<LegSpec> legs)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), legs_(std::move(legs)) {
    if (vertices_.empty()) throw std::invalid_argument("graph has no vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_index_.emplace(vertices_[i].id, i).second)
            throw std::invalid_argument("duplicate vertex id: " + vertices_[i].id);
    }
    incident_.resize(vertices_.size());
    leg_count_.assign(vertices_.size(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const EdgeSpec& e = edges_[i];
        if (!edge_index_.emplace(e.id, i).second)
            throw std::invalid_argument("duplicate edge id: " + e.id);
        for (int side = 0; side < 2; ++side) {
            auto it = vertex_index_.find(e.ends[side]);
            if (it == vertex_index_.end())
                throw std::invalid_argument("edge " + e.id + " references unknown vertex " +
                                            e.ends[side]);
            incident_[it->second].emplace_back(i, side);
        }
    }
    std::set<std::string> leg_ids;
    for (const LegSpec& l : legs_) {
        if (!leg_ids.insert(l.id).second)
            throw std::invalid_argument("duplicate leg id: " + l.id);
        auto it = vertex_index_.find(l.vertex);
        if (it == vertex_index_.end())
            throw std::invalid_argument("leg " + l.id + " references unknown vertex " + l.vertex);
        ++leg_count_[it->second];
    }
}

std::vector<std::string> validate(const HalfEdgeTable& table) {
    std::vector<std::string> out;
    std::map<std::string, const HalfEdgeTable::HalfEdge*> by_id;
    std::set<std::string> vertex_ids;
    for (const VertexSpec& v : table.vertices) {
        if (!vertex_ids.insert(v.id).second) out.push_back("duplicate vertex id: " + v.id);
        if (v.weight < 0) out.push_back("negative weight at vertex " + v.id);
    }
    for (const auto& h : table.half_edges) {
        if (!by_id.emplace(h.id, &h).second) out.push_back("duplicate half-edge id: " + h.id);
        if (!vertex_ids.count(h.endpoint))
            out.push_back("half-edge " + h.id + " has unknown endpoint " + h.endpoint);
    }
    for (const auto& h : table.half_edges) {
        if (h.partner == h.id) {
            out.push_back("involution has fixed point at half-edge " + h.id);
            continue;
        }
        auto it = by_id.find(h.partner);
        if (it == by_id.end()) {
            out.push_back("half-edge " + h.id + " has unknown partner " + h.partner);
        } else if (it->second->partner != h.id) {
            out.push_back("involution is not self-inverse at half-edge " + h.id);
        }
    }
    for (const LegSpec& l : table.legs)
        if (!vertex_ids.count(l.vertex))
            out.push_back("leg " + l.id + " has unknown endpoint " + l.vertex);
    if (!out.empty()) return out;

    // Structure is consistent; check connectivity through the derived graph.
    WeightedGraph g = WeightedGraph::from_half_edges(table);
    for (std::string& v : g.validate()) out.push_back(std::move(v));
    return out;
}

WeightedGraph WeightedGraph::from_half_edges(const HalfEdgeTable& table) {
    std::map<std::string, const HalfEdgeTable::HalfEdge*> by_id;
    for (const auto& h : table.half_edges) by_id.emplace(h.id, &h);
    std::vector<EdgeSpec> edges;
    for (const auto& h : table.half_edges) {
        if (h.partner <= h.id) continue;  // take each orbit once, from its smaller id
        auto it = by_id.find(h.partner);
        if (it == by_id.end() || it->second->partner != h.id || h.partner == h.id)
            throw std::invalid_argument("broken involution at half-edge " + h.id);
        edges.push_back(EdgeSpec{h.id, {h.endpoint, it->second->endpoint}});
    }
    if (edges.size() * 2 != table.half_edges.size())
        throw std::invalid_argument("broken involution: half-edges do not pair up");
    return WeightedGraph(table.vertices, std::move(edges), table.legs);
}

std::optional<std::size_t> WeightedGraph::vertex_index(std::string_view id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> WeightedGraph::edge_index(std::string_view id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

std::size_t WeightedGraph::require_vertex(std::string_view id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
        throw std::invalid_argument("unknown vertex: " + std::string(id));
    return it->second;
}

std::size_t WeightedGraph::end(std::size_t e, int side) const {
    return *vertex_index(edges_[e].ends[side]);
}

bool WeightedGraph::is_loop(std::size_t e) const {
    return edges_[e].ends[0] == edges_[e].ends[1];
}

int WeightedGraph::valency(std::size_t v) const {
    return static_cast<int>(incident_[v].size()) + leg_count_[v];
}

int WeightedGraph::edge_valency(std::size_t v) const {
    return static_cast<int>(incident_[v].size());
}

int WeightedGraph::loop_count_at(std::size_t v) const {
    int n = 0;
    for (auto [e, side] : incident_[v])
        if (side == 0 && is_loop(e)) ++n;
    return n;
}

bool WeightedGraph::has_loops() const {
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (is_loop(e)) return true;
    return false;
}

bool WeightedGraph::connected() const {
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto [e, side] : incident_[v]) {
            std::size_t u = end(e, 1 - side);
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<std::string> WeightedGraph::validate() const {
    std::vector<std::string> out;
    for (const VertexSpec& v : vertices_)
        if (v.weight < 0) out.push_back("negative weight at vertex " + v.id);
    if (!connected()) out.push_back("disconnected");
    return out;
}

void WeightedGraph::require_valid() const {
    auto v = validate();
    if (!v.empty()) throw std::invalid_argument("invalid graph: " + v.front());
}

long long WeightedGraph::total_weight() const {
    long long s = 0;
    for (const VertexSpec& v : vertices_) s += v.weight;
    return s;
}

long long genus(const WeightedGraph& g) {
    g.require_valid();
    return static_cast<long long>(g.edge_count()) - static_cast<long long>(g.vertex_count()) + 1 +
           g.total_weight();
}

int valency(const WeightedGraph& g, const std::string& vertex) {
    return g.valency(g.require_vertex(vertex));
}

WeightedGraph loopless_model(const WeightedGraph& g) {
    g.require_valid();
    std::set<std::string> used_v, used_e;
    for (const VertexSpec& v : g.vertices()) used_v.insert(v.id);
    for (const EdgeSpec& e : g.edges()) used_e.insert(e.id);

    std::vector<VertexSpec> vs = g.vertices();
    std::vector<EdgeSpec> es;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const EdgeSpec& e = g.edges()[i];
        if (!g.is_loop(i)) {
            es.push_back(e);
            continue;
        }
        std::string mid = fresh_id("mid:" + e.id, used_v);
        used_v.insert(mid);
        std::string ea = fresh_id(e.id + ":a", used_e);
        used_e.insert(ea);
        std::string eb = fresh_id(e.id + ":b", used_e);
        used_e.insert(eb);
        vs.push_back(VertexSpec{mid, 0});
        es.push_back(EdgeSpec{ea, {e.ends[0], mid}});
        es.push_back(EdgeSpec{eb, {mid, e.ends[1]}});
    }
    return WeightedGraph(std::move(vs), std::move(es), g.legs());
}

WeightedGraph weightless_model(const WeightedGraph& g) {
    WeightedGraph g0 = loopless_model(g);
    std::set<std::string> used_v, used_e;
    for (const VertexSpec& v : g0.vertices()) used_v.insert(v.id);
    for (const EdgeSpec& e : g0.edges()) used_e.insert(e.id);

    std::vector<VertexSpec> vs;
    std::vector<EdgeSpec> es = g0.edges();
    for (const VertexSpec& v : g0.vertices()) vs.push_back(VertexSpec{v.id, 0});
    // Each unit of weight becomes a 2-cycle: a loop split by one new vertex.
    for (const VertexSpec& v : g0.vertices()) {
        for (int i = 1; i <= v.weight; ++i) {
            std::string tag = v.id + ":" + std::to_string(i);
            std::string mid = fresh_id("w:" + tag, used_v);
            used_v.insert(mid);
            std::string ea = fresh_id("we:" + tag + ":a", used_e);
            used_e.insert(ea);
            std::string eb = fresh_id("we:" + tag + ":b", used_e);
            used_e.insert(eb);
            vs.push_back(VertexSpec{mid, 0});
            es.push_back(EdgeSpec{ea, {v.id, mid}});
            es.push_back(EdgeSpec{eb, {mid, v.id}});
        }
    }
    return WeightedGraph(std::move(vs), std::move(es), g0.legs());
}

WeightedGraph refine(const WeightedGraph& g, const std::map<std::string, int>& plan) {
    g.require_valid();
    for (const auto& [id, k] : plan) {
        if (!g.edge_index(id))
            throw std::invalid_argument("refinement plan references unknown edge " + id);
        if (k < 1) throw std::invalid_argument("refinement plan value must be >= 1 at edge " + id);
    }
    std::set<std::string> used_v, used_e;
    for (const VertexSpec& v : g.vertices()) used_v.insert(v.id);
    for (const EdgeSpec& e : g.edges()) used_e.insert(e.id);

    std::vector<VertexSpec> vs = g.vertices();
    std::vector<EdgeSpec> es;
    for (const EdgeSpec& e : g.edges()) {
        auto it = plan.find(e.id);
        int k = it == plan.end() ? 1 : it->second;
        if (k == 1) {
            es.push_back(e);
            continue;
        }
        std::string prev = e.ends[0];
        for (int i = 1; i < k; ++i) {
            std::string mid = fresh_id("r:" + e.id + ":" + std::to_string(i), used_v);
            used_v.insert(mid);
            std::string seg = fresh_id(e.id + ":" + std::to_string(i), used_e);
            used_e.insert(seg);
            vs.push_back(VertexSpec{mid, 0});
            es.push_back(EdgeSpec{seg, {prev, mid}});
            prev = mid;
        }
        std::string seg = fresh_id(e.id + ":" + std::to_string(k), used_e);
        used_e.insert(seg);
        es.push_back(EdgeSpec{seg, {prev, e.ends[1]}});
    }
    return WeightedGraph(std::move(vs), std::move(es), g.legs());
}

WeightedGraph stabilize(const WeightedGraph& g) {
    if (genus(g) < 2) throw std::invalid_argument("stabilize requires genus >= 2");
    std::vector<VertexSpec> vs = g.vertices();
    std::vector<EdgeSpec> es = g.edges();
    std::vector<LegSpec> legs = g.legs();

    for (;;) {
        WeightedGraph cur(vs, es, legs);
        std::optional<std::size_t> victim;
        bool is_leaf = false;
        for (std::size_t v = 0; v < cur.vertex_count(); ++v) {
            if (cur.weight(v) != 0 || cur.leg_count_at(v) != 0) continue;
            int val = cur.valency(v);
            if (val == 1) {
                victim = v;
                is_leaf = true;
                break;
            }
            if (val == 2) {
                auto inc = cur.incident(v);
                if (inc[0].first == inc[1].first) continue;  // lone loop, nothing to smooth
                victim = v;
                is_leaf = false;
                break;
            }
        }
        if (!victim) return cur;

        const std::string vid = cur.vertex_id(*victim);
        if (is_leaf) {
            std::size_t e = cur.incident(*victim)[0].first;
            const std::string eid = cur.edges()[e].id;
            es.erase(std::remove_if(es.begin(), es.end(),
                                    [&](const EdgeSpec& x) { return x.id == eid; }),
                     es.end());
        } else {
            auto inc = cur.incident(*victim);
            std::size_t e1 = inc[0].first, e2 = inc[1].first;
            // Far endpoints of the two edges, seen from the removed vertex.
            std::string a = cur.vertex_id(cur.end(e1, 1 - inc[0].second));
            std::string b = cur.vertex_id(cur.end(e2, 1 - inc[1].second));
            std::string id1 = cur.edges()[e1].id, id2 = cur.edges()[e2].id;
            std::set<std::string> used_e;
            for (const EdgeSpec& x : es) used_e.insert(x.id);
            std::string merged = fresh_id("(" + std::min(id1, id2) + "~" + std::max(id1, id2) + ")",
                                          used_e);
            es.erase(std::remove_if(es.begin(), es.end(),
                                    [&](const EdgeSpec& x) { return x.id == id1 || x.id == id2; }),
                     es.end());
            es.push_back(EdgeSpec{merged, {a, b}});
        }
        vs.erase(std::remove_if(vs.begin(), vs.end(),
                                [&](const VertexSpec& x) { return x.id == vid; }),
                 vs.end());
    }
}

std::vector<std::string> bridges(const WeightedGraph& g) {
    g.require_valid();
    std::vector<std::string> out;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        // Connectivity with edge e removed, by flood fill.
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (auto [f, side] : g.incident(v)) {
                if (f == e) continue;
                std::size_t u = g.end(f, 1 - side);
                if (!seen[u]) {
                    seen[u] = 1;
                    ++count;
                    stack.push_back(u);
                }
            }
        }
        if (count != g.vertex_count()) out.push_back(g.edges()[e].id);
    }
    return out;
}

bool is_2_edge_connected(const WeightedGraph& g) {
    return bridges(g).empty();
}

bool is_stable(const WeightedGraph& g) {
    g.require_valid();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.weight(v) + g.valency(v) < 3) return false;
    return true;
}

bool is_semistable(const WeightedGraph& g) {
    g.require_valid();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.weight(v) + g.valency(v) < 2) return false;
    return true;
}

WeightedGraph contract_edges(const WeightedGraph& g, const std::set<std::string>& edge_ids) {
    g.require_valid();
    for (const std::string& id : edge_ids) {
        auto e = g.edge_index(id);
        if (!e) throw std::invalid_argument("contract: unknown edge " + id);
        if (g.is_loop(*e)) throw std::invalid_argument("contract: edge " + id + " is a loop");
    }
    // Merge endpoint groups; each group keeps its lexicographically least id
    // and the sum of its weights.
    std::vector<std::size_t> group(g.vertex_count());
    std::iota(group.begin(), group.end(), 0);
    auto find = [&](std::size_t v) {
        while (group[v] != v) v = group[v] = group[group[v]];
        return v;
    };
    for (const std::string& id : edge_ids) {
        std::size_t e = *g.edge_index(id);
        std::size_t a = find(g.end(e, 0)), b = find(g.end(e, 1));
        if (a != b) group[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::string> name;
    std::map<std::size_t, long long> wsum;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t r = find(v);
        auto it = name.find(r);
        if (it == name.end() || g.vertex_id(v) < it->second) name[r] = g.vertex_id(v);
        wsum[r] += g.weight(v);
    }
    std::vector<VertexSpec> vs;
    std::set<std::size_t> emitted;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t r = find(v);
        if (emitted.insert(r).second)
            vs.push_back(VertexSpec{name[r], static_cast<int>(wsum[r])});
    }
    std::vector<EdgeSpec> es;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (edge_ids.count(g.edges()[e].id)) continue;
        es.push_back(EdgeSpec{g.edges()[e].id,
                              {name[find(g.end(e, 0))], name[find(g.end(e, 1))]}});
    }
    std::vector<LegSpec> legs;
    for (const LegSpec& l : g.legs())
        legs.push_back(LegSpec{l.id, name[find(g.require_vertex(l.vertex))]});
    return WeightedGraph(std::move(vs), std::move(es), std::move(legs));
}

WeightedGraph contract_bridges(const WeightedGraph& g) {
    g.require_valid();
    if (g.has_loops()) throw std::invalid_argument("contract_bridges requires a loopless graph");
    std::vector<std::string> br = bridges(g);
    return contract_edges(g, std::set<std::string>(br.begin(), br.end()));
}

namespace {

// Vertex signature used to cut the isomorphism search: weight, leg count,
// loop count and the sorted multiset of incident non-loop multiplicities.
struct Signature {
    int weight, legs, loops, valency;
    std::vector<int> neighbor_mults;
    bool operator==(const Signature&) const = default;
    bool operator<(const Signature& o) const {
        return std::tie(weight, legs, loops, valency, neighbor_mults) <
               std::tie(o.weight, o.legs, o.loops, o.valency, o.neighbor_mults);
    }
};

std::vector<Signature> signatures(const WeightedGraph& g,
                                  std::vector<std::vector<int>>& mult,
                                  std::vector<int>& loops) {
    std::size_t n = g.vertex_count();
    mult.assign(n, std::vector<int>(n, 0));
    loops.assign(n, 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::size_t a = g.end(e, 0), b = g.end(e, 1);
        if (a == b) {
            ++loops[a];
        } else {
            ++mult[a][b];
            ++mult[b][a];
        }
    }
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
        sig[v].weight = g.weight(v);
        sig[v].legs = g.leg_count_at(v);
        sig[v].loops = loops[v];
        sig[v].valency = g.valency(v);
        for (std::size_t u = 0; u < n; ++u)
            if (mult[v][u] > 0) sig[v].neighbor_mults.push_back(mult[v][u]);
        std::sort(sig[v].neighbor_mults.begin(), sig[v].neighbor_mults.end());
    }
    return sig;
}

}  // namespace

bool are_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
    a.require_valid();
    b.require_valid();
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.legs().size() != b.legs().size())
        return false;
    std::vector<std::vector<int>> ma, mb;
    std::vector<int> la, lb;
    std::vector<Signature> sa = signatures(a, ma, la);
    std::vector<Signature> sb = signatures(b, mb, lb);
    {
        auto ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
    }
    std::size_t n = a.vertex_count();
    std::vector<int> map_ab(n, -1), used_b(n, 0);

    // Assign vertices of a in an order that keeps the partial map connected
    // where possible: rarest signatures first.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::map<Signature, int> freq;
    for (const Signature& s : sa) ++freq[s];
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return freq[sa[x]] < freq[sa[y]];
    });

    auto backtrack = [&](auto&& self, std::size_t k) -> bool {
        if (k == n) return true;
        std::size_t v = order[k];
        for (std::size_t u = 0; u < n; ++u) {
            if (used_b[u] || !(sa[v] == sb[u])) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                std::size_t w = order[j];
                if (ma[v][w] != mb[u][map_ab[w]]) ok = false;
            }
            if (!ok) continue;
            map_ab[v] = static_cast<int>(u);
            used_b[u] = 1;
            if (self(self, k + 1)) return true;
            used_b[u] = 0;
            map_ab[v] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

}  // namespace gonal
