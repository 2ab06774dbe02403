#include "oracles.hpp"

#include <planemu/planemu.hpp>

#include <gtest/gtest.h>

using namespace planemu;

namespace
{
    auto mod3() -> GraphMap
    {
        return GraphMap{cycle_graph(6), cycle_graph(3), {0, 1, 2, 0, 1, 2}};
    }

    /// x1 - y1 - x2 onto the edge x - y.
    auto bent_path() -> GraphMap
    {
        Graph edge;
        edge.add_vertex("x");
        edge.add_vertex("y");
        edge.add_edge(0, 1);
        Graph path;
        path.add_vertex("x1");
        path.add_vertex("y1");
        path.add_vertex("x2");
        path.add_edge(0, 1);
        path.add_edge(1, 2);
        return GraphMap{path, edge, {0, 1, 0}};
    }
}

TEST(Maps, AssignmentMustBeTotalAndInRange)
{
    EXPECT_THROW((GraphMap{cycle_graph(6), cycle_graph(3), {0, 1, 2}}), MapError);
    EXPECT_THROW((GraphMap{cycle_graph(3), cycle_graph(3), {0, 1, 5}}), MapError);
}

TEST(Maps, IdentityOnCubeIsAHomomorphism)
{
    EXPECT_FALSE(verify_homomorphism(GraphMap::identity(cube())));
}

TEST(Maps, ConstantMapOnAnEdgeIsNotEdgePreserving)
{
    auto f = verify_homomorphism(GraphMap{path_graph(2), complete_graph(1), {0, 0}});
    ASSERT_TRUE(f);
    EXPECT_EQ(f->kind, FailureKind::not_edge_preserving);
    EXPECT_EQ(f->at, 0U);
}

TEST(Maps, Mod3MapIsACover)
{
    auto m = mod3();
    EXPECT_FALSE(verify_homomorphism(m));
    EXPECT_FALSE(verify_emulator(m));
    EXPECT_FALSE(verify_cover(m));
    EXPECT_EQ(classify(m).kind, MapClass::cover);
    EXPECT_EQ(fiber_sizes(m), (std::vector<std::size_t>{2, 2, 2}));
}

TEST(Maps, BentPathIsAProperEmulator)
{
    auto m = bent_path();
    EXPECT_FALSE(verify_emulator(m));
    auto f = verify_cover(m);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->kind, FailureKind::not_injective);
    EXPECT_EQ(m.domain().label(*f->at), "y1");
    EXPECT_EQ(f->detail, (std::vector<VertexId>{0}));
    EXPECT_TRUE(reproduces(m, *f));
    EXPECT_EQ(classify(m).kind, MapClass::proper_emulator);
}

TEST(Maps, IdentityIsACoverWithUnitFibres)
{
    auto m = GraphMap::identity(k1222());
    EXPECT_EQ(classify(m).kind, MapClass::cover);
    EXPECT_EQ(fiber_sizes(m), std::vector<std::size_t>(7, 1));
}

TEST(Maps, VerifiersRequireAHomomorphism)
{
    GraphMap bad{path_graph(2), complete_graph(1), {0, 0}};
    EXPECT_THROW((void) verify_emulator(bad), MapError);
    EXPECT_THROW((void) verify_cover(bad), MapError);
    EXPECT_EQ(classify(bad).kind, MapClass::invalid);
}

TEST(Maps, MissingNeighbourImageIsReported)
{
    // path 0-1-2 onto a triangle: vertex 0 sees only one of two neighbours
    GraphMap m{path_graph(3), complete_graph(3), {0, 1, 2}};
    auto f = verify_emulator(m);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->kind, FailureKind::not_surjective);
    EXPECT_EQ(f->at, 0U);
    EXPECT_EQ(f->detail, (std::vector<VertexId>{2}));
    EXPECT_TRUE(reproduces(m, *f));
    EXPECT_EQ(classify(m).kind, MapClass::homomorphism_only);
}

TEST(Maps, NotVertexSurjective)
{
    // two disjoint triangles onto two disjoint triangles, both onto the first
    Graph two(6);
    for (VertexId base : {0U, 3U}) {
        two.add_edge(base, base + 1);
        two.add_edge(base + 1, base + 2);
        two.add_edge(base, base + 2);
    }
    GraphMap m{two, two, {0, 1, 2, 0, 1, 2}};
    auto f = verify_emulator(m);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->kind, FailureKind::not_vertex_surjective);
    EXPECT_FALSE(f->at);
    EXPECT_EQ(f->detail, (std::vector<VertexId>{3}));
    EXPECT_TRUE(reproduces(m, *f));
}

TEST(Maps, FailureKindNames)
{
    EXPECT_EQ(to_string(FailureKind::not_surjective), "not-surjective");
    EXPECT_EQ(to_string(FailureKind::not_injective), "not-injective");
    EXPECT_EQ(to_string(FailureKind::not_edge_preserving), "not-edge-preserving");
    EXPECT_EQ(to_string(FailureKind::not_vertex_surjective), "not-vertex-surjective");
}

TEST(Maps, Figure2AssetIsAProperEmulatorWithADuplicatedThree)
{
    auto asset = figure2_asset();
    EXPECT_FALSE(verify_emulator(asset.map));
    EXPECT_TRUE(oracle::emulator(asset.graph, asset.map.codomain(), asset.map.assignment()));
    auto f = verify_cover(asset.map);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->kind, FailureKind::not_injective);
    EXPECT_EQ(asset.graph.label(*f->at), "0");
    ASSERT_EQ(f->detail.size(), 1U);
    EXPECT_EQ(asset.map.codomain().label(f->detail[0]), "3");
    EXPECT_TRUE(reproduces(asset.map, *f));
    EXPECT_EQ(classify(asset.map).kind, MapClass::proper_emulator);

    auto sizes = fiber_sizes(asset.map);
    EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), 50U);
}

TEST(Maps, WitnessesAlwaysReproduce)
{
    std::mt19937 rng(5);
    auto t = cube();
    int failures = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto h = oracle::random_graph(rng, 8, 0.35);
        std::vector<VertexId> a(8);
        for (auto &x : a)
            x = std::uniform_int_distribution<VertexId>(0, 7)(rng);
        GraphMap m{h, t, a};
        auto c = classify(m);
        if (c.witness) {
            ++failures;
            EXPECT_TRUE(reproduces(m, *c.witness));
        }
        EXPECT_EQ(c.kind == MapClass::invalid, ! oracle::homomorphism(h, t, a));
        if (c.kind != MapClass::invalid) {
            EXPECT_EQ(c.kind == MapClass::cover || c.kind == MapClass::proper_emulator, oracle::emulator(h, t, a));
            EXPECT_EQ(c.kind == MapClass::cover, oracle::cover(h, t, a));
        }
    }
    EXPECT_GT(failures, 0);
}

TEST(Maps, EmulatorClassificationAgreesWithOracleOnAllSmallLabelings)
{
    // every labeling of every graph on 4 vertices into the path P3
    auto t = path_graph(3);
    for (std::uint64_t code = 0; code < 64; ++code) {
        auto h = oracle::graph_from_code(4, code);
        for (int digits = 0; digits < 81; ++digits) {
            std::vector<VertexId> a;
            for (int d = digits, i = 0; i < 4; ++i, d /= 3)
                a.push_back(static_cast<VertexId>(d % 3));
            auto c = classify(GraphMap{h, t, a});
            EXPECT_EQ(c.kind == MapClass::cover || c.kind == MapClass::proper_emulator, oracle::emulator(h, t, a));
            EXPECT_EQ(c.kind == MapClass::cover, oracle::cover(h, t, a));
        }
    }
}

TEST(Maps, ComposeRequiresMatchingGraphs)
{
    EXPECT_THROW(compose(mod3(), mod3()), MapError);
    auto m = compose(GraphMap::identity(cycle_graph(3)), mod3());
    EXPECT_EQ(m, mod3());
}
