#pragma once

#include <planemu/constructions.hpp>
#include <planemu/covers.hpp>
#include <planemu/errors.hpp>
#include <planemu/graph.hpp>
#include <planemu/maps.hpp>
#include <planemu/planarity.hpp>
#include <planemu/rotation.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace planemu
{
    struct AssetMeta
    {
        /// Name accepted by build(); the asset map's codomain must equal it.
        std::string target;
        /// Display name of the apex in the target, used when shaded faces are present.
        std::string apex = "v";
        std::optional<std::size_t> expected_vertices;
        std::optional<std::string> description;

        friend auto operator==(const AssetMeta &, const AssetMeta &) -> bool = default;
    };

    /// A figure distributed as data. With shaded faces, `map` sends `graph`
    /// onto the target minus its apex and the faces are where apex copies go.
    struct FigureAsset
    {
        Graph graph;
        GraphMap map;
        std::optional<RotationSystem> embedding;
        std::vector<Face> shaded_faces;
        std::optional<Involution> involution;
        AssetMeta meta;
    };

    /// Raised when a shaded face misses part of the apex neighbourhood
    /// (condition 'A') or a vertex touches no shaded face (condition 'B').
    class ApexConditionError : public ConstructionError
    {
    public:
        ApexConditionError(char condition, std::optional<std::size_t> face, std::optional<VertexId> vertex,
            const std::string & message) :
            ConstructionError(message),
            condition(condition),
            face(face),
            vertex(vertex)
        {
        }

        char condition;
        std::optional<std::size_t> face;
        std::optional<VertexId> vertex;
    };

    namespace detail
    {
        /// The least rotation of a closed walk.
        inline auto canonical_walk(Face f) -> Face
        {
            auto best = f;
            for (std::size_t i = 1; i < f.size(); ++i) {
                std::rotate(f.begin(), f.begin() + 1, f.end());
                best = std::min(best, f);
            }
            return best;
        }
    }

    /// Inserts one copy of `apex` into every shaded face, joined to each
    /// distinct vertex on the face boundary, and extends the embedding, map
    /// and (when it permutes the shaded faces) the involution.
    ///
    /// Requires `asset.map` to be an emulator onto target minus apex, every
    /// shaded face to show exactly the apex neighbourhood (condition A), and
    /// every vertex to lie on a shaded face (condition B).
    inline auto apex_insertion(const FigureAsset & asset, const Graph & target, VertexId apex) -> FigureAsset
    {
        target.require(apex);
        if (! asset.embedding)
            throw ConstructionError{"apex insertion needs an embedding"};
        if (asset.shaded_faces.empty())
            throw ConstructionError{"apex insertion needs at least one shaded face"};
        if (asset.map.domain() != asset.graph || asset.embedding->graph() != asset.graph)
            throw ConstructionError{"asset map and embedding must be on the asset graph"};
        if (asset.map.codomain() != target)
            throw ConstructionError{"asset map codomain is not the target"};

        const auto &a = asset.map.assignment();
        if (std::find(a.begin(), a.end(), apex) != a.end())
            throw ConstructionError{"asset already has apex fibres"};

        auto [base_target, renumber] = remove_vertex(target, apex);
        std::vector<VertexId> restricted;
        for (auto t : a)
            restricted.push_back(*renumber[t]);
        if (auto failure = verify_emulator(GraphMap{asset.graph, base_target, restricted}))
            throw ConstructionError{"asset map is not an emulator onto the target minus the apex (" +
                std::string{to_string(failure->kind)} + ")"};

        std::set<Face> seen_faces;
        for (std::size_t i = 0; i < asset.shaded_faces.size(); ++i) {
            const auto &face = asset.shaded_faces[i];
            if (! is_face(*asset.embedding, face))
                throw ConstructionError{"shaded face " + std::to_string(i) + " is not a face of the embedding"};
            if (! seen_faces.insert(detail::canonical_walk(face)).second)
                throw ConstructionError{"shaded face " + std::to_string(i) + " listed twice; one apex per face"};
        }

        auto apex_nbrs = target.neighbors(apex);
        std::vector<VertexId> wanted(apex_nbrs.begin(), apex_nbrs.end());
        for (std::size_t i = 0; i < asset.shaded_faces.size(); ++i) {
            auto labels = face_labels(*asset.embedding, asset.map, asset.shaded_faces[i]);
            if (labels != wanted)
                throw ApexConditionError{'A', i, std::nullopt,
                    "condition A violated: shaded face " + std::to_string(i) + " shows " + std::to_string(labels.size()) +
                        " labels, apex neighbourhood has " + std::to_string(wanted.size())};
        }

        std::vector<bool> touched(asset.graph.vertex_count(), false);
        for (const auto &face : asset.shaded_faces)
            for (auto v : face)
                touched[v] = true;
        for (VertexId v = 0; v < touched.size(); ++v)
            if (! touched[v])
                throw ApexConditionError{'B', std::nullopt, v,
                    "condition B violated: vertex " + std::to_string(v) + " lies on no shaded face"};

        Graph g = asset.graph;
        auto assignment = a;
        auto rotation = asset.embedding->rotation();
        for (const auto &face : asset.shaded_faces) {
            auto x = g.add_vertex(target.name(apex));
            assignment.push_back(apex);
            rotation.emplace_back();

            // Walk w0 w1 ... : at w(i+1) the apex sits between w(i) and w(i+2),
            // and the apex sees the boundary in reverse walk order.
            std::set<VertexId> joined;
            auto k = face.size();
            for (std::size_t i = 0; i < k; ++i) {
                auto prev = face[(i + k - 1) % k], here = face[i];
                if (! joined.insert(here).second)
                    continue;
                g.add_edge(x, here);
                auto &order = rotation[here];
                auto pos = std::find(order.begin(), order.end(), prev);
                order.insert(pos + 1, x);
                rotation[x].push_back(here);
            }
            std::reverse(rotation[x].begin(), rotation[x].end());
        }

        FigureAsset result;
        result.graph = g;
        result.map = GraphMap{g, target, assignment};
        result.embedding = RotationSystem{g, rotation};
        result.meta = asset.meta;

        if (asset.involution) {
            auto pairing = asset.involution->pairing();
            bool extends = true;
            std::vector<Face> walks;
            for (const auto &face : asset.shaded_faces)
                walks.push_back(detail::canonical_walk(face));
            for (std::size_t i = 0; i < walks.size() && extends; ++i) {
                Face image;
                for (auto v : walks[i])
                    image.push_back((*asset.involution)(v));
                auto reversed = Face(image.rbegin(), image.rend());
                auto j = std::find(walks.begin(), walks.end(), detail::canonical_walk(reversed));
                if (j == walks.end())
                    j = std::find(walks.begin(), walks.end(), detail::canonical_walk(image));
                if (j == walks.end() || j - walks.begin() == static_cast<long>(i))
                    extends = false;
                else
                    pairing.push_back(asset.graph.vertex_count() + static_cast<std::size_t>(j - walks.begin()));
            }
            if (extends)
                result.involution = Involution{g, pairing};
        }
        return result;
    }

    /// Apex-inserted form of an asset with shaded faces; the asset itself otherwise.
    inline auto resolve_asset(const FigureAsset & asset) -> FigureAsset
    {
        if (asset.shaded_faces.empty())
            return asset;
        auto target = build(asset.meta.target);
        auto apex = target.find_by_name(asset.meta.apex);
        if (! apex)
            throw ConstructionError{"target " + asset.meta.target + " has no vertex named " + asset.meta.apex};
        return apex_insertion(asset, target, *apex);
    }

    struct InvolutionSummary
    {
        bool valid = false;
        std::string error;
        std::size_t quotient_vertices = 0;
        std::optional<MapClass> quotient_class;
    };

    struct AssetReport
    {
        bool ok = true;                     ///< no hard failure
        std::vector<std::string> errors;    ///< hard failures
        std::vector<std::string> warnings;  ///< e.g. vertex count differs from the expected value

        std::string target;
        std::size_t vertices = 0;
        std::size_t edges = 0;
        std::optional<std::size_t> expected_vertices;
        bool planar = false;
        std::optional<long> embedding_genus;
        std::optional<Classification> classification;
        std::vector<std::size_t> fiber_sizes;

        std::size_t shaded_faces = 0;
        std::size_t apex_fibres = 0;
        std::optional<bool> condition_a;
        std::optional<bool> condition_b;

        std::optional<InvolutionSummary> involution;
    };

    /// Re-verifies an asset from scratch: codomain against build(target),
    /// apex insertion when faces are shaded, emulator condition, planarity,
    /// the stored embedding, and the involution with its quotient.
    inline auto verify_asset(const FigureAsset & asset) -> AssetReport
    {
        AssetReport report;
        report.target = asset.meta.target;
        report.expected_vertices = asset.meta.expected_vertices;
        auto fail = [&](std::string message) {
            report.ok = false;
            report.errors.push_back(std::move(message));
        };

        Graph target;
        try {
            target = build(asset.meta.target);
        }
        catch (const Error & e) {
            fail(e.what());
            return report;
        }
        if (asset.map.codomain() != target)
            fail("map codomain differs from build(\"" + asset.meta.target + "\")");
        if (asset.map.domain() != asset.graph)
            fail("map domain differs from the asset graph");
        if (! report.ok)
            return report;

        FigureAsset resolved = asset;
        if (! asset.shaded_faces.empty()) {
            report.shaded_faces = asset.shaded_faces.size();
            try {
                resolved = resolve_asset(asset);
                report.condition_a = true;
                report.condition_b = true;
                report.apex_fibres = asset.shaded_faces.size();
            }
            catch (const ApexConditionError & e) {
                (e.condition == 'A' ? report.condition_a : report.condition_b) = false;
                fail(e.what());
                return report;
            }
            catch (const Error & e) {
                fail(e.what());
                return report;
            }
        }

        const auto &g = resolved.graph;
        report.vertices = g.vertex_count();
        report.edges = g.edge_count();
        report.fiber_sizes = fiber_sizes(resolved.map);
        report.classification = classify(resolved.map);
        if (report.classification->kind == MapClass::invalid || report.classification->kind == MapClass::homomorphism_only)
            fail("map is not an emulator of " + asset.meta.target);

        report.planar = is_planar(g);
        if (! report.planar)
            fail("asset graph is not planar");
        if (resolved.embedding) {
            if (resolved.embedding->graph() != g)
                fail("stored embedding is for a different graph");
            else if (is_connected(g)) {
                report.embedding_genus = euler_genus(*resolved.embedding);
                if (*report.embedding_genus != 0)
                    fail("stored embedding is not spherical");
            }
        }

        if (asset.meta.expected_vertices && *asset.meta.expected_vertices != report.vertices)
            report.warnings.push_back("expected " + std::to_string(*asset.meta.expected_vertices) + " vertices, found " +
                std::to_string(report.vertices));

        if (asset.involution) {
            InvolutionSummary summary;
            if (! resolved.involution) {
                summary.error = "involution does not extend to the apex fibres";
                fail(summary.error);
            }
            else {
                try {
                    auto q = quotient_by_involution(g, *resolved.involution, resolved.map);
                    summary.valid = true;
                    summary.quotient_vertices = q.graph.vertex_count();
                    summary.quotient_class = classify(*q.induced).kind;
                }
                catch (const Error & e) {
                    summary.error = e.what();
                    fail(summary.error);
                }
            }
            report.involution = summary;
        }
        return report;
    }
}
