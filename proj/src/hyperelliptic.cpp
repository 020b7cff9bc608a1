#include "gonal/hyperelliptic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gonal {

namespace {

std::string orbit_name(const GraphInvolution& iota, const std::string& v) {
    const std::string& img = iota.vertex_image.at(v);
    return std::min(v, img);
}

}  // namespace

std::vector<std::string> validate_involution(const WeightedGraph& g,
                                             const GraphInvolution& iota) {
    std::vector<std::string> out;
    for (const VertexSpec& v : g.vertices()) {
        auto it = iota.vertex_image.find(v.id);
        if (it == iota.vertex_image.end()) {
            out.push_back("vertex " + v.id + " has no image");
            continue;
        }
        if (!g.vertex_index(it->second)) {
            out.push_back("vertex " + v.id + " maps to unknown vertex " + it->second);
            continue;
        }
        auto back = iota.vertex_image.find(it->second);
        if (back == iota.vertex_image.end() || back->second != v.id)
            out.push_back("vertex map is not an involution at " + v.id);
    }
    for (const EdgeSpec& e : g.edges()) {
        auto it = iota.edge_image.find(e.id);
        if (it == iota.edge_image.end()) {
            out.push_back("edge " + e.id + " has no image");
            continue;
        }
        auto img = g.edge_index(it->second);
        if (!img) {
            out.push_back("edge " + e.id + " maps to unknown edge " + it->second);
            continue;
        }
        auto back = iota.edge_image.find(it->second);
        if (back == iota.edge_image.end() || back->second != e.id) {
            out.push_back("edge map is not an involution at " + e.id);
            continue;
        }
        // incidence: the image edge must join the images of the endpoints
        const EdgeSpec& f = g.edges()[*img];
        auto a = iota.vertex_image.find(e.ends[0]);
        auto b = iota.vertex_image.find(e.ends[1]);
        if (a == iota.vertex_image.end() || b == iota.vertex_image.end()) continue;
        bool match = (a->second == f.ends[0] && b->second == f.ends[1]) ||
                     (a->second == f.ends[1] && b->second == f.ends[0]);
        if (!match) out.push_back("edge " + e.id + " image is not incidence-compatible");
    }
    return out;
}

bool is_inverted(const WeightedGraph& g, const GraphInvolution& iota, const std::string& edge) {
    auto e = g.edge_index(edge);
    if (!e) throw std::invalid_argument("unknown edge " + edge);
    if (iota.edge_image.at(edge) != edge) return false;
    const EdgeSpec& spec = g.edges()[*e];
    return iota.vertex_image.at(spec.ends[0]) == spec.ends[1] && spec.ends[0] != spec.ends[1];
}

WeightedGraph quotient(const WeightedGraph& g, const GraphInvolution& iota) {
    g.require_valid();
    auto violations = validate_involution(g, iota);
    if (!violations.empty())
        throw std::invalid_argument("invalid involution: " + violations.front());

    std::vector<VertexSpec> vs;
    std::set<std::string> emitted;
    for (const VertexSpec& v : g.vertices()) {
        std::string name = orbit_name(iota, v.id);
        if (emitted.insert(name).second) vs.push_back(VertexSpec{name, 0});
    }
    std::vector<EdgeSpec> es;
    std::set<std::string> done;
    for (const EdgeSpec& e : g.edges()) {
        if (done.count(e.id)) continue;
        const std::string& img = iota.edge_image.at(e.id);
        done.insert(e.id);
        done.insert(img);
        if (img == e.id && is_inverted(g, iota, e.id)) continue;  // collapses
        es.push_back(EdgeSpec{e.id,
                              {orbit_name(iota, e.ends[0]), orbit_name(iota, e.ends[1])}});
    }
    return WeightedGraph(std::move(vs), std::move(es));
}

namespace {

struct InvolutionEnumerator {
    const WeightedGraph& g;
    std::size_t n;
    std::vector<int> vmap;  // vertex involution being built, -1 unset

    // parallel classes: unordered endpoint pair -> edge indices in order
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> classes;

    InvolutionSearch result;

    explicit InvolutionEnumerator(const WeightedGraph& graph) : g(graph), n(graph.vertex_count()) {
        vmap.assign(n, -1);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            std::size_t a = g.end(e, 0), b = g.end(e, 1);
            classes[{std::min(a, b), std::max(a, b)}].push_back(e);
        }
    }

    void run() { place_vertex(); }

    void place_vertex() {
        std::size_t v = n;
        for (std::size_t i = 0; i < n; ++i)
            if (vmap[i] < 0) {
                v = i;
                break;
            }
        if (v == n) {
            extend_to_edges();
            return;
        }
        vmap[v] = static_cast<int>(v);
        place_vertex();
        vmap[v] = -1;
        if (g.weight(v) == 0) {
            for (std::size_t u = v + 1; u < n; ++u) {
                if (vmap[u] >= 0 || g.weight(u) != 0) continue;
                if (g.valency(v) != g.valency(u)) continue;
                vmap[v] = static_cast<int>(u);
                vmap[u] = static_cast<int>(v);
                place_vertex();
                vmap[v] = vmap[u] = -1;
            }
        }
    }

    // Edge extension: classes map to classes; within a self-paired class we
    // enumerate involutions of the edge list, across distinct classes the
    // sizes must match and the pairing is canonical (any other pairing yields
    // the same orbit multiplicities, hence the same quotient).
    void extend_to_edges() {
        std::vector<int> emap(g.edge_count(), -1);
        std::vector<std::pair<const std::vector<std::size_t>*, const std::vector<std::size_t>*>>
            self_classes_todo;
        for (const auto& [key, edges] : classes) {
            auto [a, b] = key;
            std::size_t ia = static_cast<std::size_t>(vmap[a]);
            std::size_t ib = static_cast<std::size_t>(vmap[b]);
            auto img_key = std::make_pair(std::min(ia, ib), std::max(ia, ib));
            auto it = classes.find(img_key);
            if (it == classes.end() || it->second.size() != edges.size()) return;
            if (img_key == key) {
                self_classes_todo.emplace_back(&edges, nullptr);
            } else if (img_key > key) {
                for (std::size_t i = 0; i < edges.size(); ++i) {
                    emap[edges[i]] = static_cast<int>(it->second[i]);
                    emap[it->second[i]] = static_cast<int>(edges[i]);
                }
            }
        }
        pair_self_class(emap, self_classes_todo, 0);
    }

    void pair_self_class(
        std::vector<int>& emap,
        const std::vector<std::pair<const std::vector<std::size_t>*,
                                    const std::vector<std::size_t>*>>& todo,
        std::size_t idx) {
        if (idx == todo.size()) {
            finish(emap);
            return;
        }
        const std::vector<std::size_t>& edges = *todo[idx].first;
        // involutions of one list: first unmatched is fixed or paired with a later one
        auto rec = [&](auto&& self, std::size_t at) -> void {
            while (at < edges.size() && emap[edges[at]] >= 0) ++at;
            if (at == edges.size()) {
                pair_self_class(emap, todo, idx + 1);
                return;
            }
            std::size_t e = edges[at];
            emap[e] = static_cast<int>(e);
            self(self, at + 1);
            emap[e] = -1;
            for (std::size_t j = at + 1; j < edges.size(); ++j) {
                std::size_t f = edges[j];
                if (emap[f] >= 0) continue;
                emap[e] = static_cast<int>(f);
                emap[f] = static_cast<int>(e);
                self(self, at + 1);
                emap[e] = emap[f] = -1;
            }
        };
        rec(rec, 0);
    }

    void finish(const std::vector<int>& emap) {
        GraphInvolution iota;
        for (std::size_t v = 0; v < n; ++v)
            iota.vertex_image[g.vertex_id(v)] = g.vertex_id(vmap[v]);
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            iota.edge_image[g.edges()[e].id] = g.edges()[emap[e]].id;
        WeightedGraph q = quotient(g, iota);
        if (genus(q) != 0) return;  // quotient must be a tree
        ++result.certificates_found;
        if (!result.involution) result.involution = std::move(iota);
    }
};

IndexedMorphism quotient_to_morphism(const WeightedGraph& g, const GraphInvolution& iota) {
    WeightedGraph tree = quotient(g, iota);
    std::map<std::string, std::string> vmap;
    for (const VertexSpec& v : g.vertices()) vmap[v.id] = orbit_name(iota, v.id);
    std::vector<MorphismEdge> edata;
    for (const EdgeSpec& e : g.edges()) {
        MorphismEdge me;
        me.id = e.id;
        const std::string& img = iota.edge_image.at(e.id);
        if (img == e.id && is_inverted(g, iota, e.id)) {
            me.action = EdgeAction::contract;
            me.index = 0;
        } else {
            // quotient() keeps the orbit member that comes first in edge order
            me.action = EdgeAction::map_to;
            me.target_edge = *g.edge_index(e.id) < *g.edge_index(img) ? e.id : img;
            me.index = img == e.id ? 2 : 1;
        }
        edata.push_back(std::move(me));
    }
    return IndexedMorphism(g, std::move(tree), std::move(vmap), std::move(edata));
}

}  // namespace

InvolutionSearch find_hyperelliptic_involution(const WeightedGraph& g) {
    g.require_valid();
    if (g.has_loops())
        throw std::invalid_argument("involution search requires a loopless graph");
    if (!is_2_edge_connected(g))
        throw std::invalid_argument("involution search requires a 2-edge-connected graph");
    if (genus(g) < 2) throw std::invalid_argument("involution search requires genus >= 2");

    InvolutionEnumerator en(g);
    en.run();
    InvolutionSearch out = std::move(en.result);
    if (out.involution && g.vertex_count() >= 3)
        out.quotient_morphism = quotient_to_morphism(g, *out.involution);
    return out;
}

HyperellipticResult is_hyperelliptic(const WeightedGraph& g) {
    g.require_valid();
    HyperellipticResult out;
    if (genus(g) <= 1) {
        out.hyperelliptic = true;
        out.method = "genus<=1";
        return out;
    }
    GonalWitness divisorial = is_divisorially_gonal(g, 2);
    out.hyperelliptic = divisorial.gonal;
    out.witness = divisorial.witness;
    out.method = "divisorial";

    WeightedGraph reduced = contract_bridges(loopless_model(g));
    if (genus(reduced) >= 2) {
        InvolutionSearch inv = find_hyperelliptic_involution(reduced);
        if (inv.involution.has_value() != divisorial.gonal)
            throw std::logic_error(
                "divisorial and involution hyperellipticity tests disagree");
        out.involution = inv.involution;
        out.method = "divisorial+involution";
    }
    return out;
}

bool two_vertex_classification(const WeightedGraph& g) {
    g.require_valid();
    if (g.has_loops() || g.vertex_count() != 2 || !is_2_edge_connected(g) || genus(g) < 2)
        throw std::invalid_argument(
            "two_vertex_classification needs a loopless 2-edge-connected two-vertex graph "
            "of genus >= 2");
    if (g.edge_count() == 2) return true;
    return g.weight(0) == 0 && g.weight(1) == 0;
}

BridgeConditionReport bridge_condition(const WeightedGraph& g) {
    g.require_valid();
    BridgeConditionReport out;
    std::map<std::string, int> count;
    for (const std::string& b : bridges(g)) {
        std::size_t e = *g.edge_index(b);
        ++count[g.edges()[e].ends[0]];
        ++count[g.edges()[e].ends[1]];
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto it = count.find(g.vertex_id(v));
        int brdg = it == count.end() ? 0 : it->second;
        if (brdg > 2 * g.weight(v) + 2) {
            out.ok = false;
            out.violators.push_back(g.vertex_id(v));
        }
    }
    return out;
}

CurveLocusReport stable_curve_hyperelliptic_locus(const WeightedGraph& g,
                                                  const GonalitySearchOptions& opts) {
    if (!is_stable(g)) throw std::invalid_argument("curve locus test requires a stable graph");
    if (genus(g) < 2) throw std::invalid_argument("curve locus test requires genus >= 2");
    CurveLocusReport out;
    out.hyperelliptic = is_hyperelliptic(g).hyperelliptic;
    BridgeConditionReport br = bridge_condition(g);
    out.bridge_ok = br.ok;
    out.violators = std::move(br.violators);
    out.in_locus = out.hyperelliptic && out.bridge_ok;

    // the 2-gonality side of the equivalence carries the Hurwitz-type
    // requirement on vertex profiles; without it the cross-check is broken by
    // degree-1 local factors at positive-weight vertices
    GonalitySearchOptions cross = opts;
    cross.hurwitz = true;
    GonalityReport gr = find_harmonic_to_tree(g, 2, MorphismMode::harmonic, cross);
    if (gr.outcome != GonalityReport::Outcome::inconclusive) {
        out.two_gonal = gr.decision();
        if (g.vertex_count() != 2) out.consistent = (*out.two_gonal == out.in_locus);
    }
    return out;
}

}  // namespace gonal
