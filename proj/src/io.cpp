#include "qlan/io.hpp"

#include <sstream>

#include "qlan/error.hpp"

namespace qlan::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) parse_error("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
    return *it;
}

VertexId vertex_id(const Json& j, const char* context) {
    if (!j.is_number_unsigned()) parse_error(std::string(context) + ": vertex ids are non-negative integers");
    return j.get<VertexId>();
}

VertexId vertex_key(const std::string& key) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(key, &used);
        if (used == key.size() && key[0] != '-' && key[0] != '+') return static_cast<VertexId>(v);
    } catch (const std::exception&) {
    }
    parse_error("roles: \"" + key + "\" is not a vertex id");
}

Json vertex_list(const VertexSet& vs) {
    Json out = Json::array();
    for (VertexId v : vs) out.push_back(v);
    return out;
}

std::string dot_body(const Graph& g, const QlanState* roles) {
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v : g.vertices()) {
        out << "  " << v;
        if (roles && roles->roles().contains(v)) {
            const bool orchestrator = roles->is_orchestrator(v);
            out << " [label=\"" << roles->label(v) << "\", shape=" << (orchestrator ? "diamond" : "circle");
            if (roles->is_fictitious(v)) out << ", style=dashed";
            out << "]";
        }
        out << ";\n";
    }
    for (const Edge& e : g.edges()) out << "  " << e.a << " -- " << e.b << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace

Json to_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
    return Json{{"vertices", vertex_list(g.vertices())}, {"edges", std::move(edges)}};
}

Json to_json(const QlanState& s) {
    Json j = to_json(s.graph());
    Json roles = Json::object();
    for (const auto& [v, r] : s.roles()) roles[std::to_string(v)] = std::string(to_string(r));
    j["roles"] = std::move(roles);
    if (!s.fictitious().empty()) j["fictitious"] = vertex_list(s.fictitious());
    return j;
}

Json to_json(const MeasurementPlan& plan) {
    Json steps = Json::array();
    for (const MeasurementStep& st : plan.steps) {
        Json step{{"target", st.target}, {"basis", std::string(to_string(st.basis))}};
        if (st.support) step["support"] = *st.support;
        steps.push_back(std::move(step));
    }
    return Json{{"steps", std::move(steps)}};
}

Json to_json(const TopologyReport& r) {
    Json trajectory = Json::array();
    for (const Graph& g : r.trajectory) trajectory.push_back(to_json(g));
    Json checks = Json::array();
    for (const Check& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"procedure", r.procedure}, {"ok", r.ok()},           {"initial", to_json(r.initial)},
                {"plan", to_json(r.plan)},   {"final", to_json(r.final)}, {"edge_count", r.final.edge_count()},
                {"trajectory", trajectory},  {"checks", checks}};
}

Json to_json(const DemandPlan& p) {
    Json j{{"feasible", p.feasible}, {"plan", to_json(p.plan)}};
    if (!p.reason.empty()) j["reason"] = p.reason;
    j["final"] = to_json(p.final);
    return j;
}

Graph graph_from_json(const Json& j) {
    const Json& vs = field(j, "vertices");
    const Json& es = field(j, "edges");
    if (!vs.is_array()) parse_error("\"vertices\" must be an array");
    if (!es.is_array()) parse_error("\"edges\" must be an array");
    VertexSet vertices;
    for (const Json& v : vs) {
        if (!vertices.insert(vertex_id(v, "vertices")).second) parse_error("duplicate vertex in \"vertices\"");
    }
    std::vector<Edge> edges;
    for (const Json& e : es) {
        if (!e.is_array() || e.size() != 2) parse_error("each edge must be a pair [a, b]");
        edges.emplace_back(vertex_id(e[0], "edges"), vertex_id(e[1], "edges"));
    }
    return Graph(std::move(vertices), edges);
}

QlanState state_from_json(const Json& j) {
    Graph g = graph_from_json(j);
    const Json& rs = field(j, "roles");
    if (!rs.is_object()) parse_error("\"roles\" must be an object");
    std::map<VertexId, Role> roles;
    for (const auto& [key, value] : rs.items()) {
        if (!value.is_string()) parse_error("role of " + key + " must be a string");
        roles[vertex_key(key)] = parse_role(value.get<std::string>());
    }
    VertexSet fictitious;
    if (auto it = j.find("fictitious"); it != j.end()) {
        if (!it->is_array()) parse_error("\"fictitious\" must be an array");
        for (const Json& v : *it) fictitious.insert(vertex_id(v, "fictitious"));
    }
    return QlanState(std::move(g), std::move(roles), std::move(fictitious));
}

MeasurementPlan plan_from_json(const Json& j) {
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) parse_error("\"steps\" must be an array");
    MeasurementPlan plan;
    for (const Json& s : steps) {
        MeasurementStep step;
        step.target = vertex_id(field(s, "target"), "target");
        const Json& basis = field(s, "basis");
        if (!basis.is_string()) parse_error("\"basis\" must be a string");
        step.basis = parse_basis(basis.get<std::string>());
        if (auto it = s.find("support"); it != s.end() && !it->is_null()) step.support = vertex_id(*it, "support");
        plan.steps.push_back(step);
    }
    return plan;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string to_dot(const Graph& g) { return dot_body(g, nullptr); }

std::string to_dot(const QlanState& s) { return dot_body(s.graph(), &s); }

std::string to_dot(const Graph& g, const QlanState& roles_from) { return dot_body(g, &roles_from); }

}  // namespace qlan::io
