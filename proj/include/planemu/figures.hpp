#pragma once

#include <planemu/asset.hpp>
#include <planemu/constructions.hpp>
#include <planemu/planarity.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace planemu
{
    namespace detail
    {
        /// Cube geometry used to lay out patches: corners are 3-bit integers,
        /// edges join corners differing in one bit, faces fix one coordinate.
        struct GeometricCube
        {
            std::vector<Edge> edges;
            std::array<std::array<VertexId, 4>, 6> faces{};

            GeometricCube()
            {
                for (VertexId a = 0; a < 8; ++a)
                    for (VertexId bit = 1; bit < 8; bit <<= 1)
                        if ((a & bit) == 0)
                            edges.emplace_back(a, a | bit);
                std::sort(edges.begin(), edges.end());
                std::size_t f = 0;
                for (VertexId axis = 0; axis < 3; ++axis)
                    for (VertexId side = 0; side < 2; ++side) {
                        std::size_t k = 0;
                        for (VertexId c = 0; c < 8; ++c)
                            if (((c >> axis) & 1U) == side)
                                faces[f][k++] = c;
                        ++f;
                    }
            }

            [[nodiscard]] auto edges_at(VertexId corner) const -> std::vector<std::size_t>
            {
                std::vector<std::size_t> result;
                for (std::size_t i = 0; i < edges.size(); ++i)
                    if (edges[i].u == corner || edges[i].v == corner)
                        result.push_back(i);
                return result;
            }

            [[nodiscard]] auto in_face(std::size_t f, std::size_t edge) const -> bool
            {
                const auto &fc = faces[f];
                return std::find(fc.begin(), fc.end(), edges[edge].u) != fc.end() &&
                    std::find(fc.begin(), fc.end(), edges[edge].v) != fc.end();
            }
        };

        /// One corner patch per geometric corner: the patch centre label and
        /// the even label given to each of the corner's three geometric edges.
        struct PatchLayout
        {
            std::array<VertexId, 8> centre{};
            std::map<std::size_t, VertexId> edge_label;
        };

        /// Odd cube label adjacent to all three given labels.
        inline auto common_neighbour(const Graph & q, VertexId a, VertexId b, VertexId c) -> VertexId
        {
            for (auto x : q.neighbors(a))
                if (q.has_edge(x, b) && q.has_edge(x, c))
                    return x;
            throw ConstructionError{"labels have no common cube neighbour"};
        }

        /// Backtracking over the eight corners: patches sharing a geometric edge
        /// agree on its label and have different centres; around each face the
        /// four side labels are the four odd labels.
        inline auto find_patch_layout() -> PatchLayout
        {
            const GeometricCube geo;
            const auto q = cube();
            const std::array<VertexId, 4> evens{0, 2, 4, 6};
            PatchLayout layout;
            std::array<bool, 8> placed{};

            auto face_ok = [&](std::size_t f) {
                std::set<VertexId> sides;
                for (auto c : geo.faces[f]) {
                    if (! placed[c])
                        return true;
                    std::vector<VertexId> on_face;
                    for (auto e : geo.edges_at(c))
                        if (geo.in_face(f, e))
                            on_face.push_back(layout.edge_label.at(e));
                    sides.insert(common_neighbour(q, layout.centre[c], on_face[0], on_face[1]));
                }
                return sides.size() == 4;
            };

            auto search = [&](auto &self, VertexId corner) -> bool {
                if (corner == 8)
                    return true;
                auto incident = geo.edges_at(corner);
                for (auto centre : evens) {
                    std::vector<VertexId> others;
                    for (auto x : evens)
                        if (x != centre)
                            others.push_back(x);
                    do {
                        bool ok = true;
                        for (std::size_t i = 0; i < 3 && ok; ++i) {
                            auto e = incident[i];
                            auto other = geo.edges[e].other(corner);
                            if (placed[other])
                                ok = layout.edge_label.at(e) == others[i] && layout.centre[other] != centre;
                        }
                        if (! ok)
                            continue;
                        std::map<std::size_t, VertexId> saved;
                        for (std::size_t i = 0; i < 3; ++i) {
                            saved[incident[i]] = layout.edge_label.contains(incident[i]) ? layout.edge_label[incident[i]] : 99;
                            layout.edge_label[incident[i]] = others[i];
                        }
                        layout.centre[corner] = centre;
                        placed[corner] = true;
                        bool faces_ok = true;
                        for (std::size_t f = 0; f < 6; ++f)
                            faces_ok = faces_ok && face_ok(f);
                        if (faces_ok && self(self, corner + 1))
                            return true;
                        placed[corner] = false;
                        for (auto [e, old] : saved) {
                            if (old == 99)
                                layout.edge_label.erase(e);
                            else
                                layout.edge_label[e] = old;
                        }
                    } while (std::next_permutation(others.begin(), others.end()));
                }
                return false;
            };
            if (! search(search, 0))
                throw ConstructionError{"no consistent corner-patch layout"};
            return layout;
        }
    }

    /// Planar proper emulator of K_{4,5} - 4K_2 on 50 vertices.
    ///
    /// Eight corner patches (one per corner of a reference cube, centres on the
    /// even labels) are glued in the cuboctahedral pattern: two patches meeting
    /// at a geometric edge share the far vertex placed there. The odd-labelled
    /// sides of the patches around each geometric face receive a common apex
    /// copy "v". Vertex 0 is a shared "0" whose two patches both contribute a
    /// "3" neighbour.
    inline auto figure2_asset() -> FigureAsset
    {
        const detail::GeometricCube geo;
        const auto layout = detail::find_patch_layout();
        const auto target = k45_minus_4k2();
        const VertexId apex = 8;

        struct Proto
        {
            VertexId label;
        };
        std::vector<Proto> protos;
        std::vector<std::pair<std::size_t, std::size_t>> proto_edges;

        std::vector<std::size_t> shared(geo.edges.size());
        for (std::size_t e = 0; e < geo.edges.size(); ++e) {
            shared[e] = protos.size();
            protos.push_back({layout.edge_label.at(e)});
        }

        // side vertex of each (corner, face) pair
        std::map<std::pair<VertexId, std::size_t>, std::size_t> side_of;
        for (VertexId corner = 0; corner < 8; ++corner) {
            auto patch = corner_patch(layout.centre[corner]);
            auto incident = geo.edges_at(corner);
            std::vector<std::size_t> local(7);
            for (VertexId p = 0; p < 7; ++p) {
                auto label = patch.map.assignment()[p];
                auto it = std::find_if(incident.begin(), incident.end(),
                    [&](std::size_t e) { return layout.edge_label.at(e) == label; });
                if (it != incident.end())
                    local[p] = shared[*it];
                else {
                    local[p] = protos.size();
                    protos.push_back({label});
                }
            }
            for (auto e : patch.graph.edges())
                proto_edges.emplace_back(local[e.u], local[e.v]);

            for (std::size_t f = 0; f < 6; ++f) {
                std::vector<std::size_t> on_face;
                for (auto e : incident)
                    if (geo.in_face(f, e))
                        on_face.push_back(shared[e]);
                if (on_face.size() != 2)
                    continue;
                for (VertexId p = 1; p <= 6; p += 2)
                    if (std::count_if(proto_edges.end() - 9, proto_edges.end(), [&](const auto & pe) {
                            return (pe.first == local[p] && (pe.second == on_face[0] || pe.second == on_face[1])) ||
                                (pe.second == local[p] && (pe.first == on_face[0] || pe.first == on_face[1]));
                        }) == 2)
                        side_of[{corner, f}] = local[p];
            }
        }

        for (std::size_t f = 0; f < 6; ++f) {
            auto v = protos.size();
            protos.push_back({apex});
            for (auto c : geo.faces[f])
                proto_edges.emplace_back(v, side_of.at({c, f}));
        }

        // the witness vertex first, everything else in construction order
        Graph unordered;
        for (const auto &p : protos)
            unordered.add_vertex(target.name(p.label));
        for (auto [a, b] : proto_edges)
            unordered.add_edge(a, b);
        std::optional<std::size_t> witness;
        for (std::size_t e = 0; e < geo.edges.size() && ! witness; ++e) {
            auto v = shared[e];
            if (protos[v].label != 0)
                continue;
            auto threes = std::count_if(unordered.neighbors(v).begin(), unordered.neighbors(v).end(),
                [&](VertexId w) { return protos[w].label == 3; });
            if (threes == 2)
                witness = v;
        }
        std::vector<std::size_t> order;
        if (witness)
            order.push_back(*witness);
        for (std::size_t v = 0; v < protos.size(); ++v)
            if (v != witness)
                order.push_back(v);
        std::vector<VertexId> new_id(protos.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            new_id[order[i]] = i;

        FigureAsset asset;
        std::vector<VertexId> assignment;
        for (auto old : order) {
            asset.graph.add_vertex(target.name(protos[old].label));
            assignment.push_back(protos[old].label);
        }
        for (auto [a, b] : proto_edges)
            asset.graph.add_edge(new_id[a], new_id[b]);
        asset.map = GraphMap{asset.graph, target, assignment};
        asset.embedding = test_planarity(asset.graph).embedding;
        asset.meta.target = "k45_minus_4k2";
        asset.meta.expected_vertices = 50;
        asset.meta.description = "eight cube-corner patches glued in the cuboctahedral pattern, one apex per square";
        return asset;
    }

    namespace detail
    {
        using Point = std::array<int, 3>;

        inline auto dot(const Point & a, const Point & b) -> int
        {
            return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        }

        inline auto negate(const Point & a) -> Point
        {
            return {-a[0], -a[1], -a[2]};
        }

        /// Vertices of the cuboctahedron: the permutations of (±1, ±1, 0).
        inline auto cuboctahedron_points() -> std::vector<Point>
        {
            std::set<Point> points;
            for (int zero = 0; zero < 3; ++zero)
                for (int s = -1; s <= 1; s += 2)
                    for (int t = -1; t <= 1; t += 2) {
                        Point p{};
                        p[(zero + 1) % 3] = s;
                        p[(zero + 2) % 3] = t;
                        points.insert(p);
                    }
            return {points.begin(), points.end()};
        }
    }

    /// Symmetric planar emulator of the octahedron whose shaded faces receive
    /// the apex of K_{1,2,2,2}.
    ///
    /// The cuboctahedron's edges lie on four great circles, normal to the body
    /// diagonals; they carry the great-circle triangles {0,1,2}, {2,3,4},
    /// {1,3,5}, {0,4,5}. Each crossing is labelled by the label its two circles
    /// share, each edge is subdivided by the third label of its circle, and the
    /// three subdivision vertices inside every triangular region are joined in
    /// a triangle. The six square regions become octagons showing all six
    /// labels; those are the shaded faces. The antipodal map is the involution.
    inline auto figure3_asset() -> FigureAsset
    {
        using detail::Point;
        const std::array<Point, 4> normals{{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}};
        const auto circles = great_circle_triangles();
        const auto target = k1222();

        auto circles_through = [&](const Point & p) {
            std::vector<std::size_t> result;
            for (std::size_t c = 0; c < 4; ++c)
                if (detail::dot(normals[c], p) == 0)
                    result.push_back(c);
            return result;
        };
        auto third_label = [&](std::size_t circle, VertexId a, VertexId b) {
            for (auto l : circles[circle])
                if (l != a && l != b)
                    return l;
            throw ConstructionError{"great circle labels are malformed"};
        };

        const auto points = detail::cuboctahedron_points();
        std::map<Point, VertexId> point_id;
        std::vector<VertexId> assignment;
        Graph g;
        for (const auto &p : points) {
            auto through = circles_through(p);
            VertexId label = 0;
            for (auto l : circles[through[0]])
                if (std::find(circles[through[1]].begin(), circles[through[1]].end(), l) != circles[through[1]].end())
                    label = l;
            point_id[p] = g.add_vertex(target.name(label));
            assignment.push_back(label);
        }

        auto adjacent = [](const Point & a, const Point & b) {
            int d = 0;
            for (int i = 0; i < 3; ++i)
                d += (a[i] - b[i]) * (a[i] - b[i]);
            return d == 2;
        };

        std::map<std::pair<Point, Point>, VertexId> mid;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                const auto &a = points[i], &b = points[j];
                if (! adjacent(a, b))
                    continue;
                auto ca = circles_through(a), cb = circles_through(b);
                std::size_t circle = 0;
                for (auto c : ca)
                    if (std::find(cb.begin(), cb.end(), c) != cb.end())
                        circle = c;
                auto label = third_label(circle, assignment[point_id[a]], assignment[point_id[b]]);
                auto m = g.add_vertex(target.name(label));
                assignment.push_back(label);
                mid[{a, b}] = m;
                g.add_edge(point_id[a], m);
                g.add_edge(m, point_id[b]);
            }

        auto mid_of = [&](const Point & a, const Point & b) { return a < b ? mid.at({a, b}) : mid.at({b, a}); };
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                for (std::size_t k = j + 1; k < points.size(); ++k) {
                    const auto &a = points[i], &b = points[j], &c = points[k];
                    if (adjacent(a, b) && adjacent(b, c) && adjacent(a, c)) {
                        g.add_edge(mid_of(a, b), mid_of(b, c));
                        g.add_edge(mid_of(b, c), mid_of(a, c));
                        g.add_edge(mid_of(a, c), mid_of(a, b));
                    }
                }

        std::vector<VertexId> pairing(g.vertex_count());
        for (const auto &p : points)
            pairing[point_id[p]] = point_id[detail::negate(p)];
        for (auto [ends, m] : mid)
            pairing[m] = mid_of(detail::negate(ends.first), detail::negate(ends.second));

        FigureAsset asset;
        asset.graph = g;
        asset.map = GraphMap{g, target, assignment};
        asset.embedding = test_planarity(g).embedding;
        asset.involution = Involution{g, pairing};
        if (! asset.embedding)
            throw ConstructionError{"great-circle arrangement is not planar"};

        auto apex_nbrs = target.neighbors(6);
        std::vector<VertexId> all_labels(apex_nbrs.begin(), apex_nbrs.end());
        for (const auto &face : faces(*asset.embedding))
            if (face_labels(*asset.embedding, asset.map, face) == all_labels)
                asset.shaded_faces.push_back(face);

        asset.meta.target = "k1222";
        asset.meta.apex = "v";
        asset.meta.expected_vertices = 266;
        asset.meta.description = "four labelled great circles on the cuboctahedron; the square regions are shaded";
        return asset;
    }
}
