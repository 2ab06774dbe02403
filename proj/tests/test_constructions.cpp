#include "oracles.hpp"

#include <planemu/planemu.hpp>

#include <gtest/gtest.h>

using namespace planemu;

namespace
{
    auto bipartite(const Graph & g) -> bool
    {
        std::vector<int> side(g.vertex_count(), -1);
        for (VertexId s = 0; s < g.vertex_count(); ++s) {
            if (side[s] >= 0)
                continue;
            side[s] = 0;
            std::vector<VertexId> queue{s};
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (auto w : g.neighbors(queue[i])) {
                    if (side[w] < 0) {
                        side[w] = 1 - side[queue[i]];
                        queue.push_back(w);
                    }
                    else if (side[w] == side[queue[i]])
                        return false;
                }
        }
        return true;
    }

    /// Triangle mapped identically to K3, its one bounded face shaded.
    auto shaded_triangle() -> FigureAsset
    {
        FigureAsset a;
        a.graph = complete_graph(3);
        a.map = GraphMap{a.graph, complete_graph(4), {0, 1, 2}};
        a.embedding = *test_planarity(a.graph).embedding;
        a.shaded_faces = {faces(*a.embedding).front()};
        a.meta.target = "k4";
        a.meta.apex = "3";
        return a;
    }
}

TEST(Build, Cube)
{
    auto g = build("cube");
    EXPECT_EQ(g.vertex_count(), 8U);
    EXPECT_EQ(g.edge_count(), 12U);
    for (VertexId v = 0; v < 8; ++v)
        EXPECT_EQ(g.degree(v), 3U);
    EXPECT_TRUE(bipartite(g));
    for (auto e : g.edges())
        EXPECT_NE(e.u % 2, e.v % 2);
}

TEST(Build, K45Minus4K2)
{
    auto g = build("k45_minus_4k2");
    EXPECT_EQ(g.vertex_count(), 9U);
    EXPECT_EQ(g.edge_count(), 16U);
    // K_{4,5} with parts {0..3}, {4..8}, minus the matching i -- 4 + i
    auto k45 = complete_bipartite_graph(4, 5);
    auto edges = k45.edges();
    std::vector<Edge> kept;
    for (auto e : edges)
        if (e.v != e.u + 4)
            kept.push_back(e);
    EXPECT_TRUE(oracle::isomorphic(g, spanning_subgraph(k45, kept)));
    EXPECT_TRUE(oracle::isomorphic(g, cone(cube(), {1, 3, 5, 7})));
}

TEST(Build, K1222)
{
    auto g = build("k1222");
    EXPECT_EQ(g.vertex_count(), 7U);
    EXPECT_EQ(g.edge_count(), 18U);
    auto v = *g.find_by_name("v");
    EXPECT_EQ(g.degree(v), 6U);
    for (VertexId w = 0; w < 6; ++w)
        EXPECT_EQ(g.degree(w), 5U);

    // complete 4-partite graph with parts {v} and the antipodal pairs
    auto inv = octahedron_antipodes();
    Graph multipartite(7);
    for (VertexId a = 0; a < 7; ++a)
        for (VertexId b = a + 1; b < 7; ++b)
            if (a == 6 || b == 6 || inv(a) != b)
                multipartite.add_edge(a, b);
    EXPECT_TRUE(oracle::isomorphic(g, multipartite));
}

TEST(Build, Families)
{
    EXPECT_EQ(build("k5").edge_count(), 10U);
    EXPECT_EQ(build("k3_3").edge_count(), 9U);
    EXPECT_EQ(build("c7").edge_count(), 7U);
    EXPECT_EQ(build("p4").edge_count(), 3U);
    EXPECT_EQ(build("cone(c5)").vertex_count(), 6U);
    EXPECT_EQ(build("cone(octahedron)"), k1222());
    EXPECT_THROW(build("dodecahedron"), ConstructionError);
    EXPECT_THROW(build("c2"), ConstructionError);
}

TEST(Build, DisplayNames)
{
    auto g = build("k45_minus_4k2");
    for (VertexId v = 0; v < 8; ++v)
        EXPECT_EQ(g.label(v), std::to_string(v));
    EXPECT_EQ(g.label(8), "v");
}

TEST(Antipodes, Octahedron)
{
    auto inv = octahedron_antipodes();
    EXPECT_EQ(inv(0), 3U);
    EXPECT_EQ(inv.pairing(), (std::vector<VertexId>{3, 4, 5, 0, 1, 2}));
    for (VertexId v = 0; v < 6; ++v) {
        EXPECT_EQ(inv(inv(v)), v);
        EXPECT_NE(inv(v), v);
    }
    auto g = octahedron();
    for (VertexId a = 0; a < 6; ++a)
        for (VertexId b = 0; b < 6; ++b)
            if (a != b) {
                EXPECT_EQ(g.has_edge(a, b), g.has_edge(inv(a), inv(b)));
            }
}

TEST(Antipodes, DerivedFromTheTriangles)
{
    // the unique label missing from every listed triangle through v
    auto triangles = great_circle_triangles();
    for (VertexId v = 0; v < 6; ++v) {
        std::set<VertexId> absent{0, 1, 2, 3, 4, 5};
        for (const auto &t : triangles)
            if (std::find(t.begin(), t.end(), v) != t.end())
                for (auto x : t)
                    absent.erase(x);
        ASSERT_EQ(absent.size(), 1U);
        EXPECT_EQ(*absent.begin(), octahedron_antipodes()(v));
    }
}

TEST(FaceColouring, OctahedronGreatCircleTriangles)
{
    EXPECT_TRUE(face_two_coloring_check());
}

TEST(CornerPatch, CornerZero)
{
    auto p = corner_patch(0);
    EXPECT_EQ(p.graph.vertex_count(), 7U);
    EXPECT_EQ(p.graph.edge_count(), 9U);
    EXPECT_EQ(p.map(0), 0U);
    EXPECT_EQ(p.graph.degree(0), 3U);
    EXPECT_FALSE(verify_homomorphism(p.map));
    EXPECT_TRUE(is_planar(p.graph));

    // the three squares of the cube at corner 0, found by brute force
    auto q = cube();
    std::set<std::set<VertexId>> squares;
    for (auto a : q.neighbors(0))
        for (auto b : q.neighbors(0))
            if (a < b)
                for (VertexId d = 0; d < 8; ++d)
                    if (d != 0 && q.has_edge(a, d) && q.has_edge(b, d))
                        squares.insert({0, a, b, d});
    std::set<VertexId> labels(p.map.assignment().begin(), p.map.assignment().end());
    std::set<VertexId> expected;
    for (const auto &s : squares)
        expected.insert(s.begin(), s.end());
    EXPECT_EQ(squares.size(), 3U);
    EXPECT_EQ(labels, expected);
}

TEST(CornerPatch, BoundaryAlternates)
{
    for (VertexId c = 0; c < 8; ++c) {
        auto p = corner_patch(c);
        auto q = cube();
        ASSERT_EQ(p.boundary.size(), 6U);
        for (std::size_t i = 0; i < 6; ++i) {
            auto here = p.boundary[i], next = p.boundary[(i + 1) % 6];
            EXPECT_TRUE(p.graph.has_edge(here, next));
            EXPECT_EQ(q.has_edge(c, p.map(here)), i % 2 == 0);
        }
        // the hexagon plus the centre is the whole patch
        EXPECT_EQ(p.graph.degree(0), 3U);
    }
    EXPECT_THROW(corner_patch(8), ConstructionError);
}

TEST(ApexInsertion, TriangleBecomesK4)
{
    auto a = shaded_triangle();
    auto r = apex_insertion(a, complete_graph(4), 3);
    EXPECT_TRUE(oracle::isomorphic(r.graph, complete_graph(4)));
    EXPECT_EQ(classify(r.map).kind, MapClass::cover);
    ASSERT_TRUE(r.embedding);
    EXPECT_EQ(euler_genus(*r.embedding), 0);
}

TEST(ApexInsertion, OctahedronOneColourFacesFailConditionA)
{
    FigureAsset a;
    a.graph = octahedron();
    a.map = GraphMap{a.graph, k1222(), {0, 1, 2, 3, 4, 5}};
    a.embedding = *test_planarity(a.graph).embedding;
    auto colour = *dual_two_coloring(*a.embedding);
    auto fs = faces(*a.embedding);
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (colour[i] == 0)
            a.shaded_faces.push_back(fs[i]);
    ASSERT_EQ(a.shaded_faces.size(), 4U);
    try {
        apex_insertion(a, k1222(), 6);
        FAIL() << "condition A not detected";
    }
    catch (const ApexConditionError & e) {
        EXPECT_EQ(e.condition, 'A');
        EXPECT_EQ(e.face, 0U);
    }
}

TEST(ApexInsertion, ConditionBNamesTheUncoveredVertex)
{
    // two triangles sharing edge 0-1; shading one face leaves a vertex off
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    auto target = complete_graph(4);
    FigureAsset a;
    a.graph = g;
    a.map = GraphMap{g, target, {0, 1, 2, 2}};
    a.embedding = *test_planarity(g).embedding;
    for (const auto &f : faces(*a.embedding))
        if (f.size() == 3 && std::find(f.begin(), f.end(), 3) == f.end()) {
            a.shaded_faces.push_back(f);
            break;
        }
    ASSERT_EQ(a.shaded_faces.size(), 1U);
    try {
        apex_insertion(a, target, 3);
        FAIL() << "condition B not detected";
    }
    catch (const ApexConditionError & e) {
        EXPECT_EQ(e.condition, 'B');
        EXPECT_EQ(e.vertex, 3U);
    }
}

TEST(ApexInsertion, RejectsDuplicateFacesAndForeignWalks)
{
    auto a = shaded_triangle();
    a.shaded_faces.push_back(a.shaded_faces.front());
    EXPECT_THROW(apex_insertion(a, complete_graph(4), 3), ConstructionError);
    auto b = shaded_triangle();
    b.shaded_faces = {Face{0, 2, 1, 0}};
    EXPECT_THROW(apex_insertion(b, complete_graph(4), 3), ConstructionError);
    auto c = shaded_triangle();
    c.embedding.reset();
    EXPECT_THROW(apex_insertion(c, complete_graph(4), 3), ConstructionError);
}

TEST(ApexInsertion, OutputIsAnEmulatorOnSyntheticBases)
{
    // random planar bases whose faces each show every vertex (trees and
    // cycles), shaded everywhere, against the cone over the base
    std::mt19937 rng(71);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 20; ++t) {
        auto base = oracle::random_connected_graph(rng, 3 + t % 4, 0.5);
        auto r = test_planarity(base);
        if (! r.planar)
            continue;
        auto fs = faces(*r.embedding);
        if (fs.size() != 1 && ! std::all_of(fs.begin(), fs.end(), [&](const Face & f) {
                return std::set<VertexId>(f.begin(), f.end()).size() == base.vertex_count();
            }))
            continue;
        auto target = cone(base);
        FigureAsset a;
        a.graph = base;
        std::vector<VertexId> id(base.vertex_count());
        std::iota(id.begin(), id.end(), 0);
        a.map = GraphMap{base, target, id};
        a.embedding = *r.embedding;
        a.shaded_faces = fs;
        auto out = apex_insertion(a, target, base.vertex_count());
        EXPECT_FALSE(verify_emulator(out.map));
        EXPECT_TRUE(oracle::emulator(out.graph, target, out.map.assignment()));
        EXPECT_EQ(euler_genus(*out.embedding), 0);
        EXPECT_TRUE(oracle::planar(out.graph));
        ++checked;
    }
    EXPECT_GT(checked, 3);
}

TEST(Assets, Figure2)
{
    auto a = figure2_asset();
    auto r = verify_asset(a);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.errors.empty());
    EXPECT_TRUE(r.warnings.empty());
    EXPECT_EQ(r.vertices, 50U);
    EXPECT_TRUE(r.planar);
    EXPECT_EQ(r.embedding_genus, 0);
    EXPECT_EQ(r.classification->kind, MapClass::proper_emulator);
    EXPECT_EQ(a.map.codomain(), build("k45_minus_4k2"));
}

TEST(Assets, Figure3)
{
    auto a = figure3_asset();
    EXPECT_EQ(a.shaded_faces.size(), 6U);
    auto r = verify_asset(a);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.planar);
    EXPECT_EQ(r.condition_a, true);
    EXPECT_EQ(r.condition_b, true);
    EXPECT_EQ(r.apex_fibres, 6U);
    ASSERT_TRUE(r.involution);
    EXPECT_TRUE(r.involution->valid);
    EXPECT_EQ(r.involution->quotient_vertices * 2, r.vertices);
    // the transcribed construction is smaller than the figure, so the count warns
    ASSERT_EQ(r.warnings.size(), 1U);
    EXPECT_NE(r.warnings[0].find("266"), std::string::npos);
}

TEST(Assets, BrokenAssetsFailHard)
{
    auto a = figure2_asset();
    auto assignment = a.map.assignment();
    std::swap(assignment[0], assignment[1]);
    a.map = GraphMap{a.graph, a.map.codomain(), assignment};
    EXPECT_FALSE(verify_asset(a).ok);

    auto b = figure2_asset();
    b.meta.target = "k1222";
    EXPECT_FALSE(verify_asset(b).ok);

    auto c = figure2_asset();
    c.meta.expected_vertices = 51;
    auto rc = verify_asset(c);
    EXPECT_TRUE(rc.ok);
    EXPECT_EQ(rc.warnings.size(), 1U);
}
