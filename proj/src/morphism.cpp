#include "gonal/morphism.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gonal {

namespace {

void require_morphism_graph(const WeightedGraph& g, const char* role) {
    g.require_valid();
    if (g.has_loops())
        throw std::invalid_argument(std::string("morphism ") + role + " must be loopless");
    if (g.has_legs())
        throw std::invalid_argument(std::string("morphism ") + role + " must be leg-free");
}

}  // namespace

IndexedMorphism::IndexedMorphism(WeightedGraph source, WeightedGraph target,
                                 std::map<std::string, std::string> vertex_map,
                                 std::vector<MorphismEdge> edges)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      edges_(std::move(edges)) {
    require_morphism_graph(source_, "source");
    require_morphism_graph(target_, "target");

    for (const VertexSpec& v : source_.vertices()) {
        auto it = vertex_map_.find(v.id);
        if (it == vertex_map_.end())
            throw std::invalid_argument("vertex map misses source vertex " + v.id);
        if (!target_.vertex_index(it->second))
            throw std::invalid_argument("vertex map sends " + v.id + " to unknown vertex " +
                                        it->second);
    }
    if (vertex_map_.size() != source_.vertex_count())
        throw std::invalid_argument("vertex map mentions vertices outside the source");

    if (edges_.size() != source_.edge_count())
        throw std::invalid_argument("edge data does not cover the source edges exactly");
    std::set<std::string> seen;
    std::vector<MorphismEdge> aligned(source_.edge_count());
    for (MorphismEdge& me : edges_) {
        auto e = source_.edge_index(me.id);
        if (!e) throw std::invalid_argument("edge data references unknown edge " + me.id);
        if (!seen.insert(me.id).second)
            throw std::invalid_argument("duplicate edge data for " + me.id);
        const EdgeSpec& spec = source_.edges()[*e];
        const std::string& a = vertex_map_.at(spec.ends[0]);
        const std::string& b = vertex_map_.at(spec.ends[1]);
        if (me.action == EdgeAction::contract) {
            if (me.index != 0)
                throw std::invalid_argument("contracted edge " + me.id + " must have index 0");
            if (a != b)
                throw std::invalid_argument("edge " + me.id +
                                            " cannot be contracted: endpoint images differ");
        } else {
            if (me.index < 1)
                throw std::invalid_argument("mapped edge " + me.id + " must have index >= 1");
            auto te = target_.edge_index(me.target_edge);
            if (!te)
                throw std::invalid_argument("edge " + me.id + " maps to unknown target edge " +
                                            me.target_edge);
            const EdgeSpec& tspec = target_.edges()[*te];
            bool match = (a == tspec.ends[0] && b == tspec.ends[1]) ||
                         (a == tspec.ends[1] && b == tspec.ends[0]);
            if (!match)
                throw std::invalid_argument("edge " + me.id + " maps to " + me.target_edge +
                                            " but endpoint images do not match");
        }
        aligned[*e] = std::move(me);
    }
    edges_ = std::move(aligned);
}

const std::string& IndexedMorphism::image_of(const std::string& v) const {
    auto it = vertex_map_.find(v);
    if (it == vertex_map_.end()) throw std::invalid_argument("unknown source vertex " + v);
    return it->second;
}

const MorphismEdge& IndexedMorphism::edge_entry(const std::string& source_edge) const {
    auto e = source_.edge_index(source_edge);
    if (!e) throw std::invalid_argument("unknown source edge " + source_edge);
    return edges_[*e];
}

bool IndexedMorphism::is_simple() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const MorphismEdge& e) { return e.index <= 1; });
}

PseudoHarmonicReport check_pseudo_harmonic(const IndexedMorphism& phi,
                                           std::optional<long long> degree_hint) {
    PseudoHarmonicReport report;
    const WeightedGraph& src = phi.source();
    const WeightedGraph& tgt = phi.target();

    HarmonicCertificate cert;
    cert.simple = phi.is_simple();

    for (std::size_t vi = 0; vi < src.vertex_count(); ++vi) {
        const std::string& v = src.vertex_id(vi);
        std::size_t tv = *tgt.vertex_index(phi.image_of(v));
        // index sums at v, one per target edge incident to the image
        std::map<std::string, long long> sums;
        for (auto [te, side] : tgt.incident(tv)) sums[tgt.edges()[te].id] = 0;
        for (auto [e, side] : src.incident(vi)) {
            const MorphismEdge& me = phi.edge_data()[e];
            if (me.action == EdgeAction::contract) continue;
            sums[me.target_edge] += me.index;
        }
        if (sums.empty()) {
            // Image vertex is isolated: only a single-vertex source over a
            // single-vertex target has a coherent (free) local degree.
            if (src.vertex_count() == 1) {
                cert.m[v] = degree_hint.value_or(1);
            } else {
                report.failures.push_back(
                    "vertex " + v +
                    ": image is isolated while the source has several vertices; "
                    "no local degree is determined");
            }
            continue;
        }
        long long value = sums.begin()->second;
        for (const auto& [te, s] : sums) {
            if (s != value) {
                report.failures.push_back("vertex " + v + ": index sums differ between target edges " +
                                          sums.begin()->first + " (" +
                                          std::to_string(value) + ") and " + te + " (" +
                                          std::to_string(s) + ")");
                break;
            }
        }
        cert.m[v] = value;
    }
    if (!report.failures.empty()) return report;

    // degree via edge fibers
    std::optional<long long> degree;
    for (std::size_t te = 0; te < tgt.edge_count(); ++te) {
        long long total = 0;
        for (const MorphismEdge& me : phi.edge_data())
            if (me.action == EdgeAction::map_to && me.target_edge == tgt.edges()[te].id)
                total += me.index;
        if (degree && *degree != total) {
            report.failures.push_back("edge fibers of " + tgt.edges()[te].id + " sum to " +
                                      std::to_string(total) + ", others to " +
                                      std::to_string(*degree));
            return report;
        }
        degree = total;
    }
    // degree via vertex fibers
    for (std::size_t tv = 0; tv < tgt.vertex_count(); ++tv) {
        long long total = 0;
        bool hit = false;
        for (const auto& [v, img] : phi.vertex_map())
            if (img == tgt.vertex_id(tv)) {
                total += cert.m.at(v);
                hit = true;
            }
        if (!hit) {
            report.failures.push_back("target vertex " + tgt.vertex_id(tv) +
                                      " has an empty fiber");
            return report;
        }
        if (degree && *degree != total) {
            report.failures.push_back("vertex fiber of " + tgt.vertex_id(tv) + " sums to " +
                                      std::to_string(total) + " against degree " +
                                      std::to_string(*degree));
            return report;
        }
        degree = total;
    }
    cert.degree = *degree;
    if (degree_hint && *degree_hint != cert.degree) {
        report.failures.push_back("degree is " + std::to_string(cert.degree) +
                                  ", expected " + std::to_string(*degree_hint));
        return report;
    }
    cert.non_degenerate = std::all_of(cert.m.begin(), cert.m.end(),
                                      [](const auto& kv) { return kv.second >= 1; });
    report.certificate = std::move(cert);
    return report;
}

namespace {

HarmonicCertificate require_pseudo_harmonic(const IndexedMorphism& phi,
                                            std::optional<long long> degree_hint) {
    PseudoHarmonicReport r = check_pseudo_harmonic(phi, degree_hint);
    if (!r.ok())
        throw std::invalid_argument("morphism is not pseudo-harmonic: " + r.failures.front());
    return *r.certificate;
}

}  // namespace

Divisor ramification_divisor(const IndexedMorphism& phi, std::optional<long long> degree_hint) {
    HarmonicCertificate cert = require_pseudo_harmonic(phi, degree_hint);
    const WeightedGraph& src = phi.source();
    const WeightedGraph& tgt = phi.target();
    Divisor r;
    for (std::size_t vi = 0; vi < src.vertex_count(); ++vi) {
        const std::string& v = src.vertex_id(vi);
        long long m = cert.m.at(v);
        long long wprime = tgt.weight(*tgt.vertex_index(phi.image_of(v)));
        long long lhs = 0;
        for (auto [e, side] : src.incident(vi)) lhs += phi.edge_data()[e].index - 1;
        r.set(v, 2 * (m - 1 + src.weight(vi) - m * wprime) - lhs);
    }
    return r;
}

HarmonicCheck check_harmonic(const IndexedMorphism& phi, std::optional<long long> degree_hint) {
    HarmonicCheck out;
    out.slack = ramification_divisor(phi, degree_hint);
    out.harmonic = out.slack.effective();
    return out;
}

Divisor pullback(const IndexedMorphism& phi, const Divisor& on_target,
                 std::optional<long long> degree_hint) {
    HarmonicCertificate cert = require_pseudo_harmonic(phi, degree_hint);
    for (const auto& [v, c] : on_target.coeffs())
        if (!phi.target().vertex_index(v))
            throw std::invalid_argument("pullback: divisor mentions unknown target vertex " + v);
    Divisor out;
    for (const auto& [v, img] : phi.vertex_map()) {
        long long c = on_target.coeff(img);
        if (c != 0) out.add(v, cert.m.at(v) * c);
    }
    return out;
}

PartitionSet vertex_partition_set(const IndexedMorphism& phi, const std::string& vertex,
                                  std::optional<long long> degree_hint) {
    HarmonicCertificate cert = require_pseudo_harmonic(phi, degree_hint);
    long long m = cert.m.at(vertex);
    if (m < 1)
        throw std::invalid_argument("vertex " + vertex + " is degenerate (local degree 0)");
    const WeightedGraph& src = phi.source();
    std::size_t vi = src.require_vertex(vertex);
    std::map<std::string, std::vector<int>> parts;  // per covered target edge
    for (auto [e, side] : src.incident(vi)) {
        const MorphismEdge& me = phi.edge_data()[e];
        if (me.action == EdgeAction::contract) continue;
        parts[me.target_edge].push_back(me.index);
    }
    std::vector<std::vector<int>> out;
    for (auto& [te, p] : parts) out.push_back(std::move(p));
    return PartitionSet(m, std::move(out));
}

IndexedMorphism homomorphize(const IndexedMorphism& phi, std::optional<long long> degree_hint) {
    HarmonicCertificate cert = require_pseudo_harmonic(phi, degree_hint);
    if (!cert.non_degenerate)
        throw std::invalid_argument("homomorphize requires a non-degenerate morphism");
    const WeightedGraph& tgt = phi.target();
    if (genus(tgt) != 0 || tgt.total_weight() != 0)
        throw std::invalid_argument("homomorphize requires a tree target");
    const WeightedGraph& src = phi.source();

    std::vector<VertexSpec> svs = src.vertices();
    std::vector<EdgeSpec> ses;
    std::vector<VertexSpec> tvs = tgt.vertices();
    std::vector<EdgeSpec> tes = tgt.edges();
    std::map<std::string, std::string> vmap = phi.vertex_map();
    std::vector<MorphismEdge> edata;

    for (std::size_t e = 0; e < src.edge_count(); ++e) {
        const MorphismEdge& me = phi.edge_data()[e];
        const EdgeSpec& spec = src.edges()[e];
        if (me.action == EdgeAction::map_to) {
            ses.push_back(spec);
            edata.push_back(me);
            continue;
        }
        // vertical edge: subdivide, grow leaf fibers over a fresh target leaf
        const std::string& eid = spec.id;
        const std::string u = phi.vertex_map().at(spec.ends[0]);
        std::string vhat = "vhat:" + eid;
        std::string what = "what:" + eid;
        std::string lhat = "lhat:" + eid;
        svs.push_back(VertexSpec{vhat, 0});
        tvs.push_back(VertexSpec{what, 0});
        tes.push_back(EdgeSpec{lhat, {u, what}});
        vmap[vhat] = what;
        ses.push_back(EdgeSpec{eid + ":1", {spec.ends[0], vhat}});
        ses.push_back(EdgeSpec{eid + ":2", {vhat, spec.ends[1]}});
        edata.push_back(MorphismEdge{eid + ":1", EdgeAction::map_to, lhat, 1});
        edata.push_back(MorphismEdge{eid + ":2", EdgeAction::map_to, lhat, 1});

        // fiber of u, endpoints of e first, the rest in vertex order
        std::vector<std::string> fiber{spec.ends[0], spec.ends[1]};
        for (std::size_t vi = 0; vi < src.vertex_count(); ++vi) {
            const std::string& v = src.vertex_id(vi);
            if (v != spec.ends[0] && v != spec.ends[1] && phi.vertex_map().at(v) == u)
                fiber.push_back(v);
        }
        for (std::size_t i = 0; i < fiber.size(); ++i) {
            long long leaves = cert.m.at(fiber[i]) - (i < 2 ? 1 : 0);
            for (long long j = 1; j <= leaves; ++j) {
                std::string tag = eid + ":" + fiber[i] + ":" + std::to_string(j);
                svs.push_back(VertexSpec{"lw:" + tag, 0});
                ses.push_back(EdgeSpec{"l:" + tag, {fiber[i], "lw:" + tag}});
                vmap["lw:" + tag] = what;
                edata.push_back(MorphismEdge{"l:" + tag, EdgeAction::map_to, lhat, 1});
            }
        }
    }
    return IndexedMorphism(WeightedGraph(std::move(svs), std::move(ses)),
                           WeightedGraph(std::move(tvs), std::move(tes)), std::move(vmap),
                           std::move(edata));
}

}  // namespace gonal
