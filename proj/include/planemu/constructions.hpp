#pragma once

#include <planemu/covers.hpp>
#include <planemu/errors.hpp>
#include <planemu/graph.hpp>
#include <planemu/maps.hpp>
#include <planemu/planarity.hpp>
#include <planemu/rotation.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

namespace planemu
{
    inline auto complete_graph(std::size_t n) -> Graph
    {
        Graph g;
        for (std::size_t i = 0; i < n; ++i)
            g.add_vertex(std::to_string(i));
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    /// Parts {0..a-1} and {a..a+b-1}.
    inline auto complete_bipartite_graph(std::size_t a, std::size_t b) -> Graph
    {
        Graph g;
        for (std::size_t i = 0; i < a + b; ++i)
            g.add_vertex(std::to_string(i));
        for (VertexId u = 0; u < a; ++u)
            for (VertexId v = a; v < a + b; ++v)
                g.add_edge(u, v);
        return g;
    }

    inline auto cycle_graph(std::size_t n) -> Graph
    {
        if (n < 3)
            throw ConstructionError{"a simple cycle needs at least 3 vertices"};
        Graph g;
        for (std::size_t i = 0; i < n; ++i)
            g.add_vertex(std::to_string(i));
        for (VertexId i = 0; i < n; ++i)
            g.add_edge(i, (i + 1) % n);
        return g;
    }

    inline auto path_graph(std::size_t n) -> Graph
    {
        Graph g;
        for (std::size_t i = 0; i < n; ++i)
            g.add_vertex(std::to_string(i));
        for (VertexId i = 0; i + 1 < n; ++i)
            g.add_edge(i, i + 1);
        return g;
    }

    /// 1-skeleton of the cube, vertices named "0".."7": an outer square
    /// 0-1-2-3, an inner square 4-5-6-7, and spokes i -- 4 + (i + 1) mod 4.
    /// The colour classes are the even and the odd labels.
    inline auto cube() -> Graph
    {
        Graph g;
        for (int i = 0; i < 8; ++i)
            g.add_vertex(std::to_string(i));
        for (VertexId i = 0; i < 4; ++i) {
            g.add_edge(i, (i + 1) % 4);
            g.add_edge(4 + i, 4 + (i + 1) % 4);
            g.add_edge(i, 4 + (i + 1) % 4);
        }
        return g;
    }

    /// 1-skeleton of the octahedron on "0".."5"; i and i + 3 are the
    /// antipodal (non-adjacent) pairs.
    inline auto octahedron() -> Graph
    {
        Graph g;
        for (int i = 0; i < 6; ++i)
            g.add_vertex(std::to_string(i));
        for (VertexId u = 0; u < 6; ++u)
            for (VertexId v = u + 1; v < 6; ++v)
                if (v != u + 3)
                    g.add_edge(u, v);
        return g;
    }

    /// `base` plus a new vertex named `apex_name` joined to `attach` (all of
    /// `base` when empty). The apex gets the last id.
    inline auto cone(const Graph & base, std::vector<VertexId> attach = {}, std::string apex_name = "v") -> Graph
    {
        Graph g = base;
        if (attach.empty())
            for (VertexId v = 0; v < base.vertex_count(); ++v)
                attach.push_back(v);
        auto apex = g.add_vertex(std::move(apex_name));
        for (auto v : attach)
            g.add_edge(apex, v);
        return g;
    }

    /// K_{4,5} - 4K_2: the cube plus an apex "v" (id 8) adjacent to 1, 3, 5, 7.
    inline auto k45_minus_4k2() -> Graph
    {
        return cone(cube(), {1, 3, 5, 7});
    }

    /// K_{1,2,2,2}: the octahedron plus an apex "v" (id 6) adjacent to all of it.
    inline auto k1222() -> Graph
    {
        return cone(octahedron());
    }

    /// Named constructions: cube, octahedron, k45_minus_4k2, k1222,
    /// cone(<name>), and the families k<n>, k<a>_<b>, c<n>, p<n>.
    inline auto build(const std::string & name) -> Graph
    {
        if (name == "cube")
            return cube();
        if (name == "octahedron")
            return octahedron();
        if (name == "k45_minus_4k2")
            return k45_minus_4k2();
        if (name == "k1222")
            return k1222();

        std::smatch match;
        static const std::regex cone_re{R"(cone\((.+)\))"}, complete_re{R"(k(\d+))"}, bipartite_re{R"(k(\d+)_(\d+))"},
            cycle_re{R"(c(\d+))"}, path_re{R"(p(\d+))"};
        if (std::regex_match(name, match, cone_re))
            return cone(build(match[1].str()));
        if (std::regex_match(name, match, bipartite_re))
            return complete_bipartite_graph(std::stoul(match[1].str()), std::stoul(match[2].str()));
        if (std::regex_match(name, match, complete_re))
            return complete_graph(std::stoul(match[1].str()));
        if (std::regex_match(name, match, cycle_re))
            return cycle_graph(std::stoul(match[1].str()));
        if (std::regex_match(name, match, path_re))
            return path_graph(std::stoul(match[1].str()));
        throw ConstructionError{"unknown construction '" + name + "'"};
    }

    /// The four octahedron triangles {0,1,2}, {2,3,4}, {1,3,5}, {0,4,5}: one
    /// colour class of its faces, each spanning a great circle of the
    /// symmetric K_{1,2,2,2} emulator.
    inline auto great_circle_triangles() -> std::array<std::array<VertexId, 3>, 4>
    {
        return {{{0, 1, 2}, {2, 3, 4}, {1, 3, 5}, {0, 4, 5}}};
    }

    /// Antipodal map of the octahedron: each vertex paired with the unique
    /// vertex sharing none of the great-circle triangles containing it.
    inline auto octahedron_antipodes() -> Involution
    {
        auto g = octahedron();
        auto triangles = great_circle_triangles();
        std::vector<VertexId> pairing(6);
        for (VertexId v = 0; v < 6; ++v) {
            std::set<VertexId> seen{v};
            for (const auto &t : triangles)
                if (std::find(t.begin(), t.end(), v) != t.end())
                    seen.insert(t.begin(), t.end());
            std::vector<VertexId> absent;
            for (VertexId w = 0; w < 6; ++w)
                if (! seen.contains(w))
                    absent.push_back(w);
            if (absent.size() != 1)
                throw ConstructionError{"great-circle triangles do not determine an antipode"};
            pairing[v] = absent.front();
        }
        return Involution{g, std::move(pairing)};
    }

    /// True iff the octahedron's faces admit a proper 2-colouring in which
    /// one colour class is exactly the four great-circle triangles.
    inline auto face_two_coloring_check() -> bool
    {
        auto embedding = test_planarity(octahedron()).embedding;
        if (! embedding)
            return false;
        auto fs = faces(*embedding);
        auto colour = dual_two_coloring(*embedding);
        if (! colour || fs.size() != 8)
            return false;

        std::set<std::set<VertexId>> wanted;
        for (const auto &t : great_circle_triangles())
            wanted.insert({t.begin(), t.end()});
        for (int c = 0; c < 2; ++c) {
            std::set<std::set<VertexId>> cls;
            for (std::size_t i = 0; i < fs.size(); ++i)
                if ((*colour)[i] == c)
                    cls.insert({fs[i].begin(), fs[i].end()});
            if (cls == wanted)
                return true;
        }
        return false;
    }

    /// The three squares of the cube around one corner.
    struct CornerPatch
    {
        Graph graph;        ///< 7 vertices: id 0 is the corner, 1..6 the hexagonal boundary
        GraphMap map;       ///< each patch vertex to its cube label
        std::vector<VertexId> boundary;  ///< neighbour, diagonal, neighbour, diagonal, ...
    };

    /// Patch around cube vertex `corner`: the corner, its three neighbours, and
    /// the far vertex of each incident square, with the 9 edges of those squares.
    inline auto corner_patch(VertexId corner) -> CornerPatch
    {
        auto q = cube();
        if (! q.contains(corner))
            throw ConstructionError{"not a cube vertex: " + std::to_string(corner)};
        auto n = q.neighbors(corner);
        std::array<VertexId, 3> nbr{n[0], n[1], n[2]};

        auto diagonal = [&](VertexId a, VertexId b) {
            for (auto x : q.neighbors(a))
                if (x != corner && q.has_edge(x, b))
                    return x;
            throw ConstructionError{"cube squares are malformed"};
        };

        std::vector<VertexId> labels{corner};
        for (std::size_t i = 0; i < 3; ++i) {
            labels.push_back(nbr[i]);
            labels.push_back(diagonal(nbr[i], nbr[(i + 1) % 3]));
        }

        Graph patch;
        for (auto l : labels)
            patch.add_vertex(q.name(l));
        for (VertexId i = 1; i <= 6; ++i) {
            patch.add_edge(i, i % 6 + 1);
            if (i % 2 == 1)
                patch.add_edge(0, i);
        }
        return CornerPatch{patch, GraphMap{patch, q, labels}, {1, 2, 3, 4, 5, 6}};
    }
}
