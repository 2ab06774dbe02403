#include <planemu/planemu.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace planemu;

namespace
{
    /// Verification failure: report already written, exit 1.
    struct Failed
    {
    };

    auto load_graph(const std::string & arg) -> Graph
    {
        if (arg.starts_with("builtin:"))
            return resolve_graph(Json(arg), ".");
        std::filesystem::path path{arg};
        return graph_from_json(read_json_file(path));
    }

    /// Either a graph file or an asset file; assets yield their apex-inserted graph.
    auto load_graph_or_asset(const std::string & arg) -> Graph
    {
        if (arg.starts_with("builtin:"))
            return load_graph(arg);
        std::filesystem::path path{arg};
        auto j = read_json_file(path);
        if (j.is_object() && j.contains("meta"))
            return resolve_asset(asset_from_json(j, path.parent_path())).graph;
        return graph_from_json(j);
    }

    void emit(const Json & j)
    {
        std::cout << j.dump(1) << '\n';
    }

    void fail_with(const Json & witness, const std::string & summary)
    {
        std::cerr << summary << '\n' << witness.dump() << '\n';
        throw Failed{};
    }

    auto describe(const AssetReport & r) -> std::string
    {
        std::string s = r.classification ? std::string{to_string(r.classification->kind)} : "unclassified";
        s += r.planar ? ", planar, " : ", non-planar, ";
        s += std::to_string(r.vertices) + " vertices";
        if (r.involution && r.involution->valid)
            s += ", quotient " + std::to_string(r.involution->quotient_vertices) + " vertices";
        return s;
    }

    void verify_map_command(const std::string & file, const std::string & require)
    {
        std::filesystem::path path{file};
        auto m = map_from_json(read_json_file(path), path.parent_path());
        auto c = classify(m);
        std::optional<LocalFailure> failure;
        if (c.kind == MapClass::invalid)
            failure = verify_homomorphism(m);
        else if (require == "emulator" && c.kind == MapClass::homomorphism_only)
            failure = verify_emulator(m);
        else if (require == "cover" && c.kind != MapClass::cover)
            failure = verify_cover(m);

        Json out = to_json(c, m);
        out["require"] = require;
        out["ok"] = ! failure.has_value();
        out["fiber_sizes"] = fiber_sizes(m);
        emit(out);
        if (failure)
            fail_with(to_json(*failure, m), "map is not a " + require + ": " + std::string{to_string(failure->kind)});
        std::cerr << to_string(c.kind) << '\n';
    }

    void verify_asset_command(const std::string & file)
    {
        auto asset = load_asset(file);
        auto report = verify_asset(asset);
        std::optional<GraphMap> resolved;
        if (report.ok)
            resolved = resolve_asset(asset).map;
        emit(to_json(report, resolved));
        for (const auto &w : report.warnings)
            std::cerr << "warning: " << w << '\n';
        if (! report.ok)
            fail_with(Json{{"errors", report.errors}}, "asset verification failed");
        std::cerr << describe(report) << '\n';
    }

    void planarity_command(const std::string & file, bool kuratowski)
    {
        auto g = load_graph_or_asset(file);
        auto r = test_planarity(g, {kuratowski});
        Json out{{"planar", r.planar}};
        if (r.embedding) {
            out["rotation"] = rotation_to_json(*r.embedding);
            out["faces"] = faces_to_json(faces(*r.embedding));
        }
        if (r.obstruction) {
            Json edges = Json::array();
            for (auto e : *r.obstruction)
                edges.push_back({e.u, e.v});
            out["obstruction"] = std::move(edges);
        }
        emit(out);
        std::cerr << (r.planar ? "planar" : "not planar") << '\n';
    }

    void faces_command(const std::string & file)
    {
        std::filesystem::path path{file};
        auto r = embedding_from_json(read_json_file(path), path.parent_path());
        auto fs = faces(r);
        Json out{{"faces", faces_to_json(fs)}};
        out["euler_genus"] = is_connected(r.graph()) ? Json(euler_genus(r)) : Json{};
        emit(out);
        std::cerr << fs.size() << " faces\n";
    }

    void double_cover_command(const std::string & file)
    {
        std::filesystem::path path{file};
        auto va = voltage_from_json(read_json_file(path), path.parent_path());
        auto [lift, projection] = derive_double_cover(va);
        emit(to_json(projection));
        std::cerr << "double cover with " << lift.vertex_count() << " vertices, " << lift.edge_count() << " edges\n";
    }

    void projective_command(const std::string & file, unsigned jobs)
    {
        auto g = load_graph(file);
        Json components = Json::array();
        bool all_projective = true;
        std::size_t non_planar = 0;
        std::uint64_t checked = 0, total = 0;
        for (const auto &comp : connected_components(g)) {
            auto [sub, renumber] = induced_subgraph(g, comp);
            auto d = is_projective_planar(sub, {jobs, std::nullopt});
            all_projective = all_projective && d.projective_planar;
            if (! is_planar(sub))
                ++non_planar;
            checked += d.assignments_checked;
            total += d.assignments_total;
            Json entry{{"vertices", comp}};
            entry.update(to_json(d));
            components.push_back(std::move(entry));
        }
        bool overall = all_projective && non_planar <= 1;
        emit(Json{{"projective_planar", overall}, {"assignments_checked", checked}, {"assignments_total", total},
            {"components", std::move(components)}});
        if (overall)
            std::cerr << "projective-planar\n";
        else
            std::cerr << "not projective-planar (" << checked << " of " << total
                      << " voltage assignments checked, no planar double cover)\n";
    }

    void quotient_command(const std::string & file)
    {
        auto asset = resolve_asset(load_asset(file));
        if (! asset.involution)
            throw CoverError{"asset has no involution, or it does not extend over the apex fibres"};
        auto q = quotient_by_involution(asset.graph, *asset.involution, asset.map);
        auto c = classify(*q.induced);
        Json out{{"graph", to_json(q.graph)}, {"projection", assignment_to_json(q.projection)},
            {"induced", assignment_to_json(*q.induced)}, {"classification", to_json(c, *q.induced)},
            {"planar", is_planar(q.graph)}};
        emit(out);
        if (c.kind == MapClass::invalid || c.kind == MapClass::homomorphism_only)
            fail_with(to_json(c.kind == MapClass::invalid ? *verify_homomorphism(*q.induced) : *verify_emulator(*q.induced),
                          *q.induced),
                "induced map is not an emulator");
        std::cerr << "quotient: " << q.graph.vertex_count() << " vertices, " << to_string(c.kind) << '\n';
    }

    void apex_insert_command(const std::string & file)
    {
        auto asset = load_asset(file);
        try {
            auto resolved = resolve_asset(asset);
            resolved.shaded_faces.clear();
            emit(to_json(resolved));
            std::cerr << "inserted " << asset.shaded_faces.size() << " apex copies, " << resolved.graph.vertex_count()
                      << " vertices\n";
        }
        catch (const ApexConditionError & e) {
            Json w{{"condition", std::string(1, e.condition)}, {"message", e.what()}};
            w["face"] = e.face ? Json(*e.face) : Json{};
            w["vertex"] = e.vertex ? Json(*e.vertex) : Json{};
            fail_with(w, "apex insertion refused");
        }
    }

    void search_command(const std::string & host, const std::string & target, const std::string & partial,
        std::uint64_t nodes)
    {
        SearchProblem p{load_graph(host), load_graph(target), {}, {nodes}};
        if (! partial.empty()) {
            auto j = read_json_file(partial);
            if (! j.is_object())
                throw ParseError{"partial assignment must be an object of host id -> target id"};
            for (auto it = j.begin(); it != j.end(); ++it) {
                auto key = it.key();
                if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || ! it.value().is_number_unsigned())
                    throw ParseError{"partial assignment entries must map ids to ids"};
                p.partial[std::stoul(key)] = it.value().get<VertexId>();
            }
        }
        auto r = find_emulator_labeling(p);
        emit(to_json(r));
        std::cerr << to_string(r.status) << " after " << r.nodes << " nodes\n";
    }

    void refute_command(const std::string & target, std::size_t max_vertices, std::uint64_t nodes)
    {
        RefuteOptions options;
        options.max_nodes_per_host = nodes;
        auto report = refute_small_hosts(load_graph(target), max_vertices, options);
        emit(to_json(report));
        std::cerr << report.hosts.size() << " hosts: " << report.count(SearchStatus::found) << " found, "
                  << report.count(SearchStatus::none) << " none, " << report.count(SearchStatus::budget_exhausted)
                  << " budget-exhausted\n";
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"planar emulators, covers and projective planarity"};
    app.require_subcommand(1);

    std::string name, file, require = "emulator", format = "json", host, target, partial;
    bool kuratowski = false;
    unsigned jobs = 1;
    std::uint64_t nodes = SearchLimits{}.max_nodes;
    std::size_t max_vertices = 0;

    auto build_cmd = app.add_subcommand("build", "print a named construction");
    build_cmd->add_option("name", name, "cube, octahedron, k45_minus_4k2, k1222, cone(<name>), k<n>, k<a>_<b>, c<n>, p<n>")->required();
    build_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "graphml"}));

    auto verify_map = app.add_subcommand("verify-map", "classify a map file");
    verify_map->add_option("file", file)->required();
    verify_map->add_option("--require", require)->check(CLI::IsMember({"cover", "emulator", "homomorphism"}));

    auto verify_asset_cmd = app.add_subcommand("verify-asset", "re-verify a figure asset");
    verify_asset_cmd->add_option("file", file)->required();

    auto planarity = app.add_subcommand("planarity", "planarity test with embedding");
    planarity->add_option("file", file, "graph or asset file, or builtin:<name>")->required();
    planarity->add_flag("--kuratowski", kuratowski, "extract an obstruction when not planar");

    auto faces_cmd = app.add_subcommand("faces", "trace the faces of an embedding file");
    faces_cmd->add_option("file", file)->required();

    auto double_cover = app.add_subcommand("double-cover", "derive the double cover of a voltage file");
    double_cover->add_option("file", file)->required();

    auto projective = app.add_subcommand("projective", "decide projective planarity per component");
    projective->add_option("file", file, "graph file or builtin:<name>")->required();
    projective->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto quotient = app.add_subcommand("quotient", "quotient an asset by its involution");
    quotient->add_option("file", file)->required();

    auto apex_insert = app.add_subcommand("apex-insert", "insert apex copies into shaded faces");
    apex_insert->add_option("file", file)->required();

    auto search = app.add_subcommand("search", "search for an emulator labeling");
    search->add_option("--host", host)->required();
    search->add_option("--target", target)->required();
    search->add_option("--partial", partial);
    search->add_option("--nodes", nodes);

    auto refute = app.add_subcommand("refute", "search every small connected planar host");
    refute->add_option("--target", target)->required();
    refute->add_option("--max-vertices", max_vertices)->required();
    refute->add_option("--nodes", nodes);

    auto export_cmd = app.add_subcommand("export", "write a graph or asset as json, dot or graphml");
    export_cmd->add_option("file", file, "graph or asset file, or builtin:<name>")->required();
    export_cmd->add_option("--format", format);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build_cmd->parsed())
            std::cout << export_graph(build(name), format);
        else if (verify_map->parsed())
            verify_map_command(file, require);
        else if (verify_asset_cmd->parsed())
            verify_asset_command(file);
        else if (planarity->parsed())
            planarity_command(file, kuratowski);
        else if (faces_cmd->parsed())
            faces_command(file);
        else if (double_cover->parsed())
            double_cover_command(file);
        else if (projective->parsed())
            projective_command(file, jobs);
        else if (quotient->parsed())
            quotient_command(file);
        else if (apex_insert->parsed())
            apex_insert_command(file);
        else if (search->parsed())
            search_command(host, target, partial, nodes);
        else if (refute->parsed())
            refute_command(target, max_vertices, nodes);
        else if (export_cmd->parsed())
            std::cout << export_graph(load_graph_or_asset(file), format);
        return 0;
    }
    catch (const Failed &) {
        return 1;
    }
    catch (const ParseError & e) {
        std::cerr << Json{{"error", e.what()}}.dump() << '\n';
        return 2;
    }
    catch (const ConstructionError & e) {
        std::cerr << Json{{"error", e.what()}}.dump() << '\n';
        return build_cmd->parsed() ? 2 : 1;
    }
    catch (const Error & e) {
        std::cerr << Json{{"error", e.what()}}.dump() << '\n';
        return 1;
    }
}
