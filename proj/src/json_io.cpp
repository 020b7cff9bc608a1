#include "gonal/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace gonal {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " +
                         e.what());
    }
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

const json& need(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
    return *it;
}

WeightedGraph graph_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("graph: expected an object");
    std::vector<VertexSpec> vs;
    for (const json& v : need(j, "vertices", "graph")) {
        VertexSpec spec;
        spec.id = need(v, "id", "vertex").get<std::string>();
        spec.weight = v.value("weight", 0);
        vs.push_back(std::move(spec));
    }
    std::vector<EdgeSpec> es;
    if (j.contains("edges")) {
        for (const json& e : j.at("edges")) {
            EdgeSpec spec;
            spec.id = need(e, "id", "edge").get<std::string>();
            const json& ends = need(e, "ends", "edge");
            if (!ends.is_array() || ends.size() != 2)
                throw ParseError("edge " + spec.id + ": \"ends\" must list two vertices");
            spec.ends = {ends[0].get<std::string>(), ends[1].get<std::string>()};
            es.push_back(std::move(spec));
        }
    }
    std::vector<LegSpec> legs;
    if (j.contains("legs")) {
        for (const json& l : j.at("legs")) {
            legs.push_back(LegSpec{need(l, "id", "leg").get<std::string>(),
                                   need(l, "vertex", "leg").get<std::string>()});
        }
    }
    try {
        return WeightedGraph(std::move(vs), std::move(es), std::move(legs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

}  // namespace

WeightedGraph parse_graph(const std::string& text) {
    return graph_from_json(parse_text(text));
}

std::string graph_to_json(const WeightedGraph& g) {
    std::ostringstream out;
    out << "{\"vertices\":[";
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        const VertexSpec& v = g.vertices()[i];
        out << (i ? "," : "") << "{\"id\":\"" << escape(v.id) << "\",\"weight\":" << v.weight
            << "}";
    }
    out << "],\"edges\":[";
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        const EdgeSpec& e = g.edges()[i];
        out << (i ? "," : "") << "{\"id\":\"" << escape(e.id) << "\",\"ends\":[\""
            << escape(e.ends[0]) << "\",\"" << escape(e.ends[1]) << "\"]}";
    }
    out << "],\"legs\":[";
    for (std::size_t i = 0; i < g.legs().size(); ++i) {
        const LegSpec& l = g.legs()[i];
        out << (i ? "," : "") << "{\"id\":\"" << escape(l.id) << "\",\"vertex\":\""
            << escape(l.vertex) << "\"}";
    }
    out << "]}";
    return out.str();
}

DivisorFile parse_divisor(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("divisor: expected an object");
    DivisorFile out;
    Divisor d;
    for (const auto& [v, c] : need(j, "coeffs", "divisor").items()) {
        if (!c.is_number_integer())
            throw ParseError("divisor: coefficient of " + v + " must be an integer");
        d.set(v, c.get<long long>());
    }
    out.divisor = std::move(d);
    if (j.contains("graph")) {
        const json& gr = j.at("graph");
        if (gr.is_string())
            out.graph_ref = gr.get<std::string>();
        else
            out.graph = graph_from_json(gr);
    }
    return out;
}

std::string divisor_to_json(const Divisor& d) {
    std::ostringstream out;
    out << "{\"coeffs\":{";
    bool first = true;
    for (const auto& [v, c] : d.coeffs()) {
        out << (first ? "" : ",") << "\"" << escape(v) << "\":" << c;
        first = false;
    }
    out << "}}";
    return out.str();
}

IndexedMorphism parse_morphism(const std::string& text) {
    json j = parse_text(text);
    WeightedGraph source = graph_from_json(need(j, "source", "morphism"));
    WeightedGraph target = graph_from_json(need(j, "target", "morphism"));
    std::map<std::string, std::string> vmap;
    for (const auto& [v, img] : need(j, "vertex_map", "morphism").items())
        vmap[v] = img.get<std::string>();
    std::vector<MorphismEdge> edges;
    for (const json& e : need(j, "edges", "morphism")) {
        MorphismEdge me;
        me.id = need(e, "id", "morphism edge").get<std::string>();
        std::string action = need(e, "action", "morphism edge").get<std::string>();
        me.index = e.value("index", action == "contract" ? 0 : 1);
        if (action == "contract") {
            me.action = EdgeAction::contract;
        } else {
            me.action = EdgeAction::map_to;
            me.target_edge = action;
        }
        edges.push_back(std::move(me));
    }
    try {
        return IndexedMorphism(std::move(source), std::move(target), std::move(vmap),
                               std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("morphism: ") + e.what());
    }
}

std::string morphism_to_json(const IndexedMorphism& phi) {
    std::ostringstream out;
    out << "{\"source\":" << graph_to_json(phi.source())
        << ",\"target\":" << graph_to_json(phi.target()) << ",\"vertex_map\":{";
    bool first = true;
    for (const auto& [v, img] : phi.vertex_map()) {
        out << (first ? "" : ",") << "\"" << escape(v) << "\":\"" << escape(img) << "\"";
        first = false;
    }
    out << "},\"edges\":[";
    for (std::size_t i = 0; i < phi.edge_data().size(); ++i) {
        const MorphismEdge& me = phi.edge_data()[i];
        out << (i ? "," : "") << "{\"id\":\"" << escape(me.id) << "\",\"action\":\""
            << (me.action == EdgeAction::contract ? "contract" : escape(me.target_edge))
            << "\",\"index\":" << me.index << "}";
    }
    out << "]}";
    return out.str();
}

PartitionSet parse_partition_set(const std::string& text) {
    json j = parse_text(text);
    long long d = need(j, "d", "partition set").get<long long>();
    std::vector<std::vector<int>> parts;
    for (const json& p : need(j, "partitions", "partition set"))
        parts.push_back(p.get<std::vector<int>>());
    try {
        return PartitionSet(d, std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("partition set: ") + e.what());
    }
}

std::string partition_set_to_json(const PartitionSet& p) {
    std::ostringstream out;
    out << "{\"d\":" << p.degree() << ",\"partitions\":[";
    for (std::size_t i = 0; i < p.partitions().size(); ++i) {
        out << (i ? "," : "") << "[";
        for (std::size_t k = 0; k < p.partitions()[i].size(); ++k)
            out << (k ? "," : "") << p.partitions()[i][k];
        out << "]";
    }
    out << "]}";
    return out.str();
}

std::map<std::string, int> parse_refinement_plan(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("refinement plan: expected an object");
    std::map<std::string, int> plan;
    for (const auto& [e, k] : j.items()) {
        if (!k.is_number_integer()) throw ParseError("refinement plan: value of " + e);
        plan[e] = k.get<int>();
    }
    return plan;
}

}  // namespace gonal
