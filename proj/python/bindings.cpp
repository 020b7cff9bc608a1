// Python bindings for the core operations. Graphs and morphisms cross the
// boundary as objects, divisors as plain {vertex: chips} dicts, and the
// larger search reports as dicts mirroring the CLI report fields.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gonal/divisor.hpp"
#include "gonal/fixtures.hpp"
#include "gonal/gonality.hpp"
#include "gonal/graph.hpp"
#include "gonal/hurwitz.hpp"
#include "gonal/hyperelliptic.hpp"
#include "gonal/json_io.hpp"
#include "gonal/morphism.hpp"

namespace py = pybind11;
using namespace gonal;

namespace {

Divisor to_divisor(const std::map<std::string, long long>& coeffs) {
    return Divisor(coeffs);
}

py::dict certificate_dict(const HarmonicCertificate& cert) {
    py::dict out;
    out["degree"] = cert.degree;
    out["m"] = cert.m;
    out["non_degenerate"] = cert.non_degenerate;
    out["simple"] = cert.simple;
    return out;
}

py::dict gonality_dict(const GonalityReport& r) {
    py::dict out;
    out["decision"] = r.decision();
    out["outcome"] = r.outcome == GonalityReport::Outcome::found        ? "found"
                     : r.outcome == GonalityReport::Outcome::not_found ? "not_found"
                                                                        : "inconclusive";
    out["nodes_explored"] = r.nodes_explored;
    out["trees_tried"] = r.trees_tried;
    if (r.witness) out["witness"] = morphism_to_json(*r.witness);
    if (r.certificate) out["certificate"] = certificate_dict(*r.certificate);
    if (r.hurwitz_ok) out["hurwitz_ok"] = *r.hurwitz_ok;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "divisor ranks, harmonic morphisms and gonality on weighted multigraphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<EnumerationCapExceeded>(m, "EnumerationCapExceeded",
                                                   PyExc_RuntimeError);
    py::register_exception<DegreeCapExceeded>(m, "DegreeCapExceeded", PyExc_RuntimeError);

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def(py::init([](const std::string& text) { return parse_graph(text); }),
             py::arg("json"))
        .def_static("from_json", [](const std::string& text) { return parse_graph(text); })
        .def("to_json", [](const WeightedGraph& g) { return graph_to_json(g); })
        .def("vertex_ids",
             [](const WeightedGraph& g) {
                 std::vector<std::string> out;
                 for (const VertexSpec& v : g.vertices()) out.push_back(v.id);
                 return out;
             })
        .def("weight",
             [](const WeightedGraph& g, const std::string& v) {
                 return g.weight(g.require_vertex(v));
             })
        .def("edge_ids",
             [](const WeightedGraph& g) {
                 std::vector<std::string> out;
                 for (const EdgeSpec& e : g.edges()) out.push_back(e.id);
                 return out;
             })
        .def("validate", [](const WeightedGraph& g) { return g.validate(); })
        .def("__repr__", [](const WeightedGraph& g) {
            return "WeightedGraph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    m.def("genus", [](const WeightedGraph& g) { return genus(g); });
    m.def("valency",
          [](const WeightedGraph& g, const std::string& v) { return valency(g, v); });
    m.def("loopless_model", &loopless_model);
    m.def("weightless_model", &weightless_model);
    m.def("refine", &refine, py::arg("graph"), py::arg("plan"));
    m.def("stabilize", &stabilize);
    m.def("contract_bridges", &contract_bridges);
    m.def("bridges", &bridges);
    m.def("is_2_edge_connected", &is_2_edge_connected);
    m.def("is_stable", &is_stable);
    m.def("is_semistable", &is_semistable);
    m.def("are_isomorphic", &are_isomorphic);

    m.def("canonical_divisor",
          [](const WeightedGraph& g) { return canonical_divisor(g).coeffs(); });
    m.def(
        "reduce_divisor",
        [](const WeightedGraph& g, const std::map<std::string, long long>& d,
           const std::string& q) { return reduce(g, to_divisor(d), q).coeffs(); },
        py::arg("graph"), py::arg("divisor"), py::arg("base"));
    m.def("is_equivalent",
          [](const WeightedGraph& g, const std::map<std::string, long long>& a,
             const std::map<std::string, long long>& b) {
              return is_equivalent(g, to_divisor(a), to_divisor(b));
          });
    m.def("rank", [](const WeightedGraph& g, const std::map<std::string, long long>& d) {
        return rank(g, to_divisor(d));
    });
    m.def("jacobian_order", &jacobian_order);
    m.def(
        "enumerate_classes",
        [](const WeightedGraph& g, long long degree, long long cap) {
            std::vector<std::map<std::string, long long>> out;
            for (const PicardClass& pc : enumerate_classes(g, degree, cap))
                out.push_back(pc.representative.coeffs());
            return out;
        },
        py::arg("graph"), py::arg("degree"), py::arg("cap") = 1000000);
    m.def(
        "w_r_d",
        [](const WeightedGraph& g, long long d, long long r, long long cap) {
            std::vector<std::map<std::string, long long>> out;
            for (const PicardClass& pc : W_r_d(g, d, r, cap))
                out.push_back(pc.representative.coeffs());
            return out;
        },
        py::arg("graph"), py::arg("d"), py::arg("r"), py::arg("cap") = 1000000);
    m.def(
        "is_divisorially_gonal",
        [](const WeightedGraph& g, long long d) {
            GonalWitness w = is_divisorially_gonal(g, d);
            py::dict out;
            out["decision"] = w.gonal;
            if (w.witness) out["witness"] = w.witness->coeffs();
            return out;
        },
        py::arg("graph"), py::arg("d"));

    py::class_<IndexedMorphism>(m, "IndexedMorphism")
        .def(py::init([](const std::string& text) { return parse_morphism(text); }),
             py::arg("json"))
        .def_static("from_json", [](const std::string& text) { return parse_morphism(text); })
        .def("to_json", [](const IndexedMorphism& phi) { return morphism_to_json(phi); })
        .def("source", &IndexedMorphism::source)
        .def("target", &IndexedMorphism::target)
        .def("is_simple", &IndexedMorphism::is_simple);

    m.def(
        "check_pseudo_harmonic",
        [](const IndexedMorphism& phi, std::optional<long long> hint) {
            PseudoHarmonicReport r = check_pseudo_harmonic(phi, hint);
            py::dict out;
            out["ok"] = r.ok();
            out["failures"] = r.failures;
            if (r.certificate) out["certificate"] = certificate_dict(*r.certificate);
            return out;
        },
        py::arg("morphism"), py::arg("degree_hint") = std::nullopt);
    m.def(
        "check_harmonic",
        [](const IndexedMorphism& phi) {
            HarmonicCheck c = check_harmonic(phi);
            return py::make_tuple(c.harmonic, c.slack.coeffs());
        },
        py::arg("morphism"));
    m.def("pullback",
          [](const IndexedMorphism& phi, const std::map<std::string, long long>& d) {
              return pullback(phi, to_divisor(d)).coeffs();
          });
    m.def("ramification_divisor",
          [](const IndexedMorphism& phi) { return ramification_divisor(phi).coeffs(); });
    m.def("vertex_partition_set",
          [](const IndexedMorphism& phi, const std::string& v) {
              PartitionSet p = vertex_partition_set(phi, v);
              return py::make_tuple(p.degree(), p.partitions());
          });
    m.def("homomorphize", [](const IndexedMorphism& phi) { return homomorphize(phi); });

    m.def(
        "rh_genus",
        [](long long d, const std::vector<std::vector<int>>& partitions) {
            RhGenus g = rh_genus(PartitionSet(d, partitions));
            py::dict out;
            out["integral"] = g.integral;
            if (g.integral) {
                out["genus"] = g.genus;
                out["negative"] = g.negative;
            }
            return out;
        },
        py::arg("d"), py::arg("partitions"));
    m.def(
        "is_hurwitz_type",
        [](long long d, const std::vector<std::vector<int>>& partitions, int cap) {
            HurwitzResult r = is_hurwitz_type(PartitionSet(d, partitions), true, cap);
            py::dict out;
            out["decision"] = r.realizable;
            if (r.witness) out["witness"] = r.witness->cycle_notation();
            return out;
        },
        py::arg("d"), py::arg("partitions"), py::arg("cap") = 8);
    m.def(
        "complete_with_simple",
        [](long long d, const std::vector<std::vector<int>>& partitions, long long genus)
            -> std::optional<std::vector<std::vector<int>>> {
            auto done = complete_with_simple(PartitionSet(d, partitions), genus);
            if (!done) return std::nullopt;
            return done->partitions();
        },
        py::arg("d"), py::arg("partitions"), py::arg("genus"));

    m.def(
        "find_harmonic_to_tree",
        [](const WeightedGraph& g, long long d, const std::string& mode, bool hurwitz,
           long long budget) {
            GonalitySearchOptions opts;
            opts.hurwitz = hurwitz;
            opts.node_budget = budget;
            MorphismMode md = mode == "pseudo" ? MorphismMode::pseudo_harmonic
                                               : MorphismMode::harmonic;
            return gonality_dict(find_harmonic_to_tree(g, d, md, opts));
        },
        py::arg("graph"), py::arg("d"), py::arg("mode") = "harmonic",
        py::arg("hurwitz") = false, py::arg("budget") = 20000000);
    m.def(
        "is_geometrically_gonal",
        [](const WeightedGraph& g, long long d) { return is_geometrically_gonal(g, d); },
        py::arg("graph"), py::arg("d"));
    m.def(
        "find_divisorial_refinement",
        [](const WeightedGraph& g, long long d, long long r, int max_subdiv) {
            RefinementReport rr = find_divisorial_refinement(g, d, r, max_subdiv);
            py::dict out;
            out["decision"] = rr.found;
            if (rr.found) {
                out["plan"] = rr.plan;
                out["subdivision_total"] = rr.subdivision_total;
                out["witness"] = rr.witness->coeffs();
                out["refined"] = *rr.refined;
            }
            return out;
        },
        py::arg("graph"), py::arg("d"), py::arg("r"), py::arg("max_subdiv"));

    m.def("is_hyperelliptic", [](const WeightedGraph& g) {
        HyperellipticResult r = is_hyperelliptic(g);
        py::dict out;
        out["decision"] = r.hyperelliptic;
        out["method"] = r.method;
        if (r.witness) out["witness"] = r.witness->coeffs();
        if (r.involution) {
            py::dict inv;
            inv["vertex_image"] = r.involution->vertex_image;
            inv["edge_image"] = r.involution->edge_image;
            out["involution"] = inv;
        }
        return out;
    });
    m.def("two_vertex_classification", &two_vertex_classification);
    m.def("bridge_condition", [](const WeightedGraph& g) {
        BridgeConditionReport r = bridge_condition(g);
        return py::make_tuple(r.ok, r.violators);
    });
    m.def("stable_curve_hyperelliptic_locus", [](const WeightedGraph& g) {
        CurveLocusReport r = stable_curve_hyperelliptic_locus(g);
        py::dict out;
        out["decision"] = r.in_locus;
        out["hyperelliptic"] = r.hyperelliptic;
        out["bridge_ok"] = r.bridge_ok;
        out["violators"] = r.violators;
        if (r.two_gonal) out["two_gonal"] = *r.two_gonal;
        if (r.consistent) out["consistent"] = *r.consistent;
        return out;
    });

    m.def("fixture_names", &fixtures::names);
    m.def("fixture", &fixtures::by_name, py::arg("name"));
}
