#pragma once

#include <planemu/asset.hpp>
#include <planemu/constructions.hpp>
#include <planemu/covers.hpp>
#include <planemu/errors.hpp>
#include <planemu/graph.hpp>
#include <planemu/maps.hpp>
#include <planemu/planarity.hpp>
#include <planemu/rotation.hpp>
#include <planemu/search.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace planemu
{
    using Json = nlohmann::ordered_json;

    namespace detail
    {
        inline void only_fields(const Json & j, std::initializer_list<std::string_view> allowed, std::string_view what)
        {
            if (! j.is_object())
                throw ParseError{std::string{what} + " must be a JSON object"};
            for (auto it = j.begin(); it != j.end(); ++it)
                if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
                    throw ParseError{"unknown field '" + it.key() + "' in " + std::string{what}};
        }

        inline auto required(const Json & j, const std::string & key, std::string_view what) -> const Json &
        {
            if (! j.contains(key))
                throw ParseError{std::string{what} + " is missing field '" + key + "'"};
            return j.at(key);
        }

        inline auto as_id(const Json & j, std::string_view what) -> VertexId
        {
            if (! j.is_number_integer() || j.get<long long>() < 0)
                throw ParseError{std::string{what} + " must be a non-negative integer"};
            return j.get<VertexId>();
        }

        inline auto key_id(const std::string & key, std::string_view what) -> VertexId
        {
            if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError{std::string{what} + " key '" + key + "' is not a vertex id"};
            return std::stoul(key);
        }

        inline auto id_list(const Json & j, std::string_view what) -> std::vector<VertexId>
        {
            if (! j.is_array())
                throw ParseError{std::string{what} + " must be an array"};
            std::vector<VertexId> result;
            for (const auto &x : j)
                result.push_back(as_id(x, what));
            return result;
        }
    }

    inline auto read_json_file(const std::filesystem::path & path) -> Json
    {
        std::ifstream in{path};
        if (! in)
            throw ParseError{"cannot open " + path.string()};
        try {
            return Json::parse(in);
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError{path.string() + ": " + e.what()};
        }
    }

    inline void write_json_file(const std::filesystem::path & path, const Json & j)
    {
        std::ofstream out{path};
        if (! out)
            throw ParseError{"cannot write " + path.string()};
        out << j.dump(1) << '\n';
    }

    // graphs

    inline auto to_json(const Graph & g) -> Json
    {
        Json vertices = Json::array();
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            Json entry{{"id", v}};
            if (g.name(v))
                entry["name"] = *g.name(v);
            vertices.push_back(std::move(entry));
        }
        Json edges = Json::array();
        for (auto e : g.edges())
            edges.push_back({e.u, e.v});
        return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
    }

    /// Ids must be exactly 0..n-1; edges are [min, max] pairs without repeats.
    inline auto graph_from_json(const Json & j) -> Graph
    {
        detail::only_fields(j, {"vertices", "edges"}, "graph");
        const auto &vs = detail::required(j, "vertices", "graph");
        const auto &es = detail::required(j, "edges", "graph");
        if (! vs.is_array() || ! es.is_array())
            throw ParseError{"graph vertices and edges must be arrays"};

        std::vector<std::optional<std::optional<std::string>>> names(vs.size());
        for (const auto &v : vs) {
            detail::only_fields(v, {"id", "name"}, "vertex");
            auto id = detail::as_id(detail::required(v, "id", "vertex"), "vertex id");
            if (id >= vs.size())
                throw ParseError{"vertex ids must be dense: " + std::to_string(id) + " with " +
                    std::to_string(vs.size()) + " vertices"};
            if (names[id])
                throw ParseError{"duplicate vertex id " + std::to_string(id)};
            std::optional<std::string> name;
            if (v.contains("name")) {
                if (! v["name"].is_string())
                    throw ParseError{"vertex name must be a string"};
                name = v["name"].get<std::string>();
            }
            names[id] = std::move(name);
        }
        Graph g;
        for (auto &name : names)
            g.add_vertex(*name);
        for (const auto &e : es) {
            if (! e.is_array() || e.size() != 2)
                throw ParseError{"edge must be a pair of vertex ids"};
            auto u = detail::as_id(e[0], "edge endpoint"), w = detail::as_id(e[1], "edge endpoint");
            if (u >= w)
                throw ParseError{"edge [" + std::to_string(u) + ", " + std::to_string(w) + "] must list the smaller id first"};
            if (! g.contains(w))
                throw ParseError{"edge references unknown vertex " + std::to_string(w)};
            if (! g.add_edge(u, w))
                throw ParseError{"duplicate edge [" + std::to_string(u) + ", " + std::to_string(w) + "]"};
        }
        return g;
    }

    /// A graph given inline, as "builtin:<name>", or as a path relative to `base`.
    inline auto resolve_graph(const Json & j, const std::filesystem::path & base) -> Graph
    {
        if (j.is_object())
            return graph_from_json(j);
        if (! j.is_string())
            throw ParseError{"graph reference must be an object or a string"};
        auto ref = j.get<std::string>();
        if (ref.starts_with("builtin:")) {
            try {
                return build(ref.substr(8));
            }
            catch (const ConstructionError & e) {
                throw ParseError{e.what()};
            }
        }
        return graph_from_json(read_json_file(base / ref));
    }

    // maps

    inline auto assignment_to_json(const GraphMap & m) -> Json
    {
        Json a = Json::object();
        for (VertexId v = 0; v < m.assignment().size(); ++v)
            a[std::to_string(v)] = m.assignment()[v];
        return a;
    }

    inline auto assignment_from_json(const Json & j, const Graph & domain, const Graph & codomain) -> GraphMap
    {
        if (! j.is_object())
            throw ParseError{"assignment must be an object"};
        std::vector<VertexId> a(domain.vertex_count(), std::numeric_limits<VertexId>::max());
        for (auto it = j.begin(); it != j.end(); ++it) {
            auto v = detail::key_id(it.key(), "assignment");
            if (! domain.contains(v))
                throw ParseError{"assignment references unknown domain vertex " + it.key()};
            a[v] = detail::as_id(it.value(), "assignment image");
        }
        for (VertexId v = 0; v < a.size(); ++v)
            if (a[v] == std::numeric_limits<VertexId>::max())
                throw ParseError{"assignment is not total: no image for vertex " + std::to_string(v)};
        try {
            return GraphMap{domain, codomain, std::move(a)};
        }
        catch (const MapError & e) {
            throw ParseError{e.what()};
        }
    }

    inline auto to_json(const GraphMap & m) -> Json
    {
        return Json{{"domain", to_json(m.domain())}, {"codomain", to_json(m.codomain())}, {"assignment", assignment_to_json(m)}};
    }

    inline auto map_from_json(const Json & j, const std::filesystem::path & base = ".") -> GraphMap
    {
        detail::only_fields(j, {"domain", "codomain", "assignment"}, "map");
        auto domain = resolve_graph(detail::required(j, "domain", "map"), base);
        auto codomain = resolve_graph(detail::required(j, "codomain", "map"), base);
        return assignment_from_json(detail::required(j, "assignment", "map"), domain, codomain);
    }

    // embeddings

    inline auto rotation_to_json(const RotationSystem & r) -> Json
    {
        Json rot = Json::object();
        for (VertexId v = 0; v < r.graph().vertex_count(); ++v)
            rot[std::to_string(v)] = r.at(v);
        return rot;
    }

    /// Vertices without neighbours may be omitted.
    inline auto rotation_from_json(const Json & j, const Graph & g) -> RotationSystem
    {
        if (! j.is_object())
            throw ParseError{"rotation must be an object"};
        std::vector<std::vector<VertexId>> rot(g.vertex_count());
        for (auto it = j.begin(); it != j.end(); ++it) {
            auto v = detail::key_id(it.key(), "rotation");
            if (! g.contains(v))
                throw ParseError{"rotation references unknown vertex " + it.key()};
            rot[v] = detail::id_list(it.value(), "rotation");
        }
        try {
            return RotationSystem{g, std::move(rot)};
        }
        catch (const EmbeddingError & e) {
            throw ParseError{e.what()};
        }
    }

    inline auto to_json(const RotationSystem & r) -> Json
    {
        return Json{{"graph", to_json(r.graph())}, {"rotation", rotation_to_json(r)}};
    }

    inline auto embedding_from_json(const Json & j, const std::filesystem::path & base = ".") -> RotationSystem
    {
        detail::only_fields(j, {"graph", "rotation"}, "embedding");
        auto g = resolve_graph(detail::required(j, "graph", "embedding"), base);
        return rotation_from_json(detail::required(j, "rotation", "embedding"), g);
    }

    inline auto faces_to_json(const std::vector<Face> & fs) -> Json
    {
        Json result = Json::array();
        for (const auto &f : fs)
            result.push_back(f);
        return result;
    }

    // voltages and involutions

    inline auto to_json(const VoltageAssignment & va) -> Json
    {
        Json volt = Json::object();
        for (auto [e, b] : va.voltage())
            volt[std::to_string(e.u) + "-" + std::to_string(e.v)] = b ? 1 : 0;
        return Json{{"graph", to_json(va.graph())}, {"voltage", std::move(volt)}};
    }

    /// Keys "u-w"; edges not listed carry voltage 0.
    inline auto voltage_from_json(const Json & j, const std::filesystem::path & base = ".") -> VoltageAssignment
    {
        detail::only_fields(j, {"graph", "voltage"}, "voltage assignment");
        auto g = resolve_graph(detail::required(j, "graph", "voltage assignment"), base);
        VoltageAssignment va{g};
        const auto &volt = detail::required(j, "voltage", "voltage assignment");
        if (! volt.is_object())
            throw ParseError{"voltage must be an object"};
        for (auto it = volt.begin(); it != volt.end(); ++it) {
            auto dash = it.key().find('-');
            if (dash == std::string::npos)
                throw ParseError{"voltage key '" + it.key() + "' is not of the form u-w"};
            auto u = detail::key_id(it.key().substr(0, dash), "voltage");
            auto w = detail::key_id(it.key().substr(dash + 1), "voltage");
            if (! it.value().is_number_integer() || (it.value() != 0 && it.value() != 1))
                throw ParseError{"voltage values must be 0 or 1"};
            if (u == w || ! g.contains(u) || ! g.contains(w) || ! g.has_edge(u, w))
                throw ParseError{"voltage key '" + it.key() + "' is not an edge"};
            va.set(Edge{u, w}, it.value() == 1);
        }
        return va;
    }

    inline auto to_json(const Involution & inv) -> Json
    {
        Json pairing = Json::object();
        for (VertexId v = 0; v < inv.pairing().size(); ++v)
            pairing[std::to_string(v)] = inv(v);
        return Json{{"pairing", std::move(pairing)}};
    }

    inline auto involution_from_json(const Json & j, const Graph & g) -> Involution
    {
        detail::only_fields(j, {"pairing"}, "involution");
        const auto &p = detail::required(j, "pairing", "involution");
        if (! p.is_object())
            throw ParseError{"pairing must be an object"};
        std::vector<VertexId> pairing(g.vertex_count(), std::numeric_limits<VertexId>::max());
        for (auto it = p.begin(); it != p.end(); ++it) {
            auto v = detail::key_id(it.key(), "pairing");
            if (! g.contains(v))
                throw ParseError{"pairing references unknown vertex " + it.key()};
            pairing[v] = detail::as_id(it.value(), "pairing image");
        }
        try {
            return Involution{g, std::move(pairing)};
        }
        catch (const CoverError & e) {
            throw ParseError{e.what()};
        }
    }

    // assets

    inline auto to_json(const FigureAsset & a) -> Json
    {
        Json meta{{"target", a.meta.target}, {"apex", a.meta.apex}};
        if (a.meta.expected_vertices)
            meta["expected_vertices"] = *a.meta.expected_vertices;
        if (a.meta.description)
            meta["description"] = *a.meta.description;

        Json j{{"graph", to_json(a.graph)},
            {"map", Json{{"codomain", "builtin:" + a.meta.target}, {"assignment", assignment_to_json(a.map)}}}};
        if (a.embedding)
            j["embedding"] = Json{{"rotation", rotation_to_json(*a.embedding)}};
        if (! a.shaded_faces.empty())
            j["shaded_faces"] = faces_to_json(a.shaded_faces);
        if (a.involution)
            j["involution"] = to_json(*a.involution);
        j["meta"] = std::move(meta);
        return j;
    }

    /// The map's domain and the embedding's graph default to the asset graph.
    inline auto asset_from_json(const Json & j, const std::filesystem::path & base = ".") -> FigureAsset
    {
        detail::only_fields(j, {"graph", "map", "embedding", "shaded_faces", "involution", "meta"}, "asset");
        FigureAsset a;
        a.graph = resolve_graph(detail::required(j, "graph", "asset"), base);

        const auto &meta = detail::required(j, "meta", "asset");
        detail::only_fields(meta, {"target", "apex", "expected_vertices", "description"}, "asset meta");
        if (! detail::required(meta, "target", "asset meta").is_string())
            throw ParseError{"meta target must be a string"};
        a.meta.target = meta["target"].get<std::string>();
        if (meta.contains("apex")) {
            if (! meta["apex"].is_string())
                throw ParseError{"meta apex must be a string"};
            a.meta.apex = meta["apex"].get<std::string>();
        }
        if (meta.contains("expected_vertices"))
            a.meta.expected_vertices = detail::as_id(meta["expected_vertices"], "expected_vertices");
        if (meta.contains("description")) {
            if (! meta["description"].is_string())
                throw ParseError{"meta description must be a string"};
            a.meta.description = meta["description"].get<std::string>();
        }

        const auto &m = detail::required(j, "map", "asset");
        detail::only_fields(m, {"domain", "codomain", "assignment"}, "asset map");
        auto domain = m.contains("domain") ? resolve_graph(m["domain"], base) : a.graph;
        auto codomain = resolve_graph(detail::required(m, "codomain", "asset map"), base);
        a.map = assignment_from_json(detail::required(m, "assignment", "asset map"), domain, codomain);

        if (j.contains("embedding")) {
            const auto &e = j["embedding"];
            detail::only_fields(e, {"graph", "rotation"}, "asset embedding");
            auto g = e.contains("graph") ? resolve_graph(e["graph"], base) : a.graph;
            a.embedding = rotation_from_json(detail::required(e, "rotation", "asset embedding"), g);
        }
        if (j.contains("shaded_faces")) {
            if (! j["shaded_faces"].is_array())
                throw ParseError{"shaded_faces must be an array of face walks"};
            for (const auto &f : j["shaded_faces"])
                a.shaded_faces.push_back(detail::id_list(f, "shaded face"));
        }
        if (j.contains("involution"))
            a.involution = involution_from_json(j["involution"], a.graph);
        return a;
    }

    inline auto load_asset(const std::filesystem::path & path) -> FigureAsset
    {
        return asset_from_json(read_json_file(path), path.parent_path());
    }

    // reports

    inline auto vertex_ref(const Graph & g, VertexId v) -> Json
    {
        return Json{{"id", v}, {"name", g.label(v)}};
    }

    /// `at` names a domain vertex, `detail` codomain vertices.
    inline auto to_json(const LocalFailure & f, const GraphMap & m) -> Json
    {
        Json j{{"kind", to_string(f.kind)}};
        j["at"] = f.at ? vertex_ref(m.domain(), *f.at) : Json{};
        Json detail = Json::array();
        for (auto t : f.detail)
            detail.push_back(vertex_ref(m.codomain(), t));
        j["detail"] = std::move(detail);
        return j;
    }

    inline auto to_json(const Classification & c, const GraphMap & m) -> Json
    {
        Json j{{"class", to_string(c.kind)}};
        j["witness"] = c.witness ? to_json(*c.witness, m) : Json{};
        return j;
    }

    inline auto to_json(const AssetReport & r, const std::optional<GraphMap> & resolved_map = std::nullopt) -> Json
    {
        Json j{{"ok", r.ok}, {"errors", r.errors}, {"warnings", r.warnings}, {"target", r.target},
            {"vertices", r.vertices}, {"edges", r.edges}};
        j["expected_vertices"] = r.expected_vertices ? Json(*r.expected_vertices) : Json{};
        j["planar"] = r.planar;
        j["embedding_genus"] = r.embedding_genus ? Json(*r.embedding_genus) : Json{};
        if (r.classification) {
            j["classification"] = to_string(r.classification->kind);
            j["witness"] = r.classification->witness && resolved_map ? to_json(*r.classification->witness, *resolved_map) : Json{};
        }
        j["fiber_sizes"] = r.fiber_sizes;
        j["shaded_faces"] = r.shaded_faces;
        j["apex_fibres"] = r.apex_fibres;
        j["condition_a"] = r.condition_a ? Json(*r.condition_a) : Json{};
        j["condition_b"] = r.condition_b ? Json(*r.condition_b) : Json{};
        if (r.involution) {
            Json inv{{"valid", r.involution->valid}};
            if (! r.involution->error.empty())
                inv["error"] = r.involution->error;
            inv["quotient_vertices"] = r.involution->quotient_vertices;
            inv["quotient_class"] = r.involution->quotient_class ? Json(to_string(*r.involution->quotient_class)) : Json{};
            j["involution"] = std::move(inv);
        }
        else
            j["involution"] = Json{};
        return j;
    }

    inline auto to_json(const ProjectiveDecision & d) -> Json
    {
        Json j{{"projective_planar", d.projective_planar}, {"assignments_checked", d.assignments_checked},
            {"assignments_total", d.assignments_total}};
        j["certificate"] = d.certificate ? to_json(*d.certificate) : Json{};
        return j;
    }

    inline auto to_json(const SearchResult & r) -> Json
    {
        Json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
        j["labeling"] = r.labeling ? to_json(*r.labeling) : Json{};
        return j;
    }

    inline auto to_json(const RefuteReport & r) -> Json
    {
        Json hosts = Json::array();
        for (const auto &h : r.hosts) {
            Json entry{{"host", to_json(h.host)}, {"status", to_string(h.status)}, {"nodes", h.nodes}};
            if (h.labeling)
                entry["assignment"] = assignment_to_json(*h.labeling);
            hosts.push_back(std::move(entry));
        }
        return Json{{"max_vertices", r.max_vertices}, {"hosts_checked", r.hosts.size()},
            {"found", r.count(SearchStatus::found)}, {"none", r.count(SearchStatus::none)},
            {"budget_exhausted", r.count(SearchStatus::budget_exhausted)}, {"hosts", std::move(hosts)}};
    }

    // export

    namespace detail
    {
        inline auto dot_quote(const std::string & s) -> std::string
        {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    out += '\\';
                out += c;
            }
            return out + '"';
        }

        inline auto xml_escape(const std::string & s) -> std::string
        {
            std::string out;
            for (char c : s)
                switch (c) {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                case '"': out += "&quot;"; break;
                default: out += c;
                }
            return out;
        }
    }

    /// Undirected DOT; nodes are ids, labelled with display names.
    inline auto to_dot(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << "graph G {\n";
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            out << "  " << v << " [label=" << detail::dot_quote(g.label(v)) << "];\n";
        for (auto e : g.edges())
            out << "  " << e.u << " -- " << e.v << ";\n";
        out << "}\n";
        return out.str();
    }

    inline auto to_graphml(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
            << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
            << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            out << "    <node id=\"n" << v << "\"><data key=\"label\">" << detail::xml_escape(g.label(v)) << "</data></node>\n";
        for (auto e : g.edges())
            out << "    <edge source=\"n" << e.u << "\" target=\"n" << e.v << "\"/>\n";
        out << "  </graph>\n</graphml>\n";
        return out.str();
    }

    /// "json", "dot" or "graphml"; anything else throws ParseError.
    inline auto export_graph(const Graph & g, const std::string & format) -> std::string
    {
        if (format == "json")
            return to_json(g).dump(1) + "\n";
        if (format == "dot")
            return to_dot(g);
        if (format == "graphml")
            return to_graphml(g);
        throw ParseError{"unknown export format '" + format + "'"};
    }
}
