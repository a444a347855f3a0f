#include <gtest/gtest.h>

#include "dynclique/graph.hpp"
#include "dynclique/random.hpp"
#include "test_util.hpp"

using namespace dynclique;
using dynclique::testing::make_graph;

TEST(Edge, NormalizesEndpoints)
{
    Edge e(5, 2);
    EXPECT_EQ(e.u(), 2u);
    EXPECT_EQ(e.v(), 5u);
    EXPECT_EQ(Edge(2, 5), e);
    EXPECT_EQ(EdgeHash{}(Edge(2, 5)), EdgeHash{}(e));
}

TEST(Edge, RejectsSelfLoop)
{
    EXPECT_THROW(Edge(5, 5), SelfLoopError);
}

TEST(Graph, AddEdgeCreatesEndpoints)
{
    Graph g;
    g.add_edge(Edge(1, 2));
    EXPECT_EQ(g.vertex_count(), 2u);
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.degree(1), 1u);
    EXPECT_EQ(g.degree(2), 1u);
}

TEST(Graph, DuplicateEdgeIsRejected)
{
    Graph g = make_graph({{1, 2}, {2, 3}, {1, 3}});
    EXPECT_THROW(g.add_edge(Edge(1, 2)), DuplicateEdgeError);
    EXPECT_THROW(g.add_edge(Edge(2, 1)), DuplicateEdgeError);
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Graph, RemoveEdgeKeepsVertices)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    g.remove_edge(Edge(1, 2));
    EXPECT_EQ(g.vertices(), (std::vector<VertexId>{1, 2, 3}));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{Edge(2, 3)}));
    EXPECT_EQ(g.degree(1), 0u);
}

TEST(Graph, RemoveTriangleEdgeLeavesPath)
{
    Graph g = make_graph({{1, 2}, {2, 3}, {1, 3}});
    g.remove_edge(Edge(1, 3));
    EXPECT_EQ(g, make_graph({{1, 2}, {2, 3}}));
}

TEST(Graph, RemoveAbsentEdgeThrows)
{
    Graph g;
    EXPECT_THROW(g.remove_edge(Edge(7, 9)), AbsentEdgeError);
}

TEST(Graph, UnknownVertexQueriesThrow)
{
    Graph g = make_graph({{1, 2}});
    EXPECT_THROW(g.neighbors(9), UnknownVertexError);
    EXPECT_THROW(common_neighbors(g, 1, 9), UnknownVertexError);
    EXPECT_FALSE(g.has_edge(Edge(1, 9)));
}

TEST(Graph, CommonNeighbors)
{
    Graph k4 = make_graph({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    EXPECT_EQ(common_neighbors(k4, 1, 2), (std::vector<VertexId>{3, 4}));
    Graph path = make_graph({{1, 2}, {2, 3}});
    EXPECT_EQ(common_neighbors(path, 1, 3), (std::vector<VertexId>{2}));
    Graph pair = make_graph({{1, 2}, {3, 4}});
    EXPECT_TRUE(common_neighbors(pair, 1, 3).empty());
}

TEST(Graph, InducedSubgraph)
{
    Graph tri = make_graph({{1, 2}, {2, 3}, {1, 3}});
    std::vector<VertexId> two{1, 2};
    EXPECT_EQ(induced_subgraph(tri, two), make_graph({{1, 2}}));
    EXPECT_EQ(induced_subgraph(tri, std::vector<VertexId>{}).vertex_count(), 0u);

    Graph k4 = make_graph({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    std::vector<VertexId> three{1, 2, 3};
    EXPECT_EQ(induced_subgraph(k4, three), tri);

    std::vector<VertexId> bad{1, 99};
    EXPECT_THROW(induced_subgraph(tri, bad), UnknownVertexError);
}

TEST(Graph, InducedOnAllVerticesIsIdentity)
{
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        Graph g = dynclique::testing::random_graph(rng, 12, 0.4);
        auto vs = g.vertices();
        EXPECT_EQ(induced_subgraph(g, vs), g);
    }
}

TEST(Graph, RandomMutationsKeepInvariants)
{
    Rng rng(11);
    Graph g;
    std::vector<Edge> present;
    for (int step = 0; step < 3000; ++step) {
        VertexId a = rng.between(1, 30);
        VertexId b = rng.between(1, 30);
        if (a == b)
            continue;
        Edge e(a, b);
        if (g.has_edge(e)) {
            g.remove_edge(e);
            std::erase(present, e);
        } else {
            g.add_edge(e);
            present.push_back(e);
        }
    }
    std::size_t degree_sum = 0;
    for (VertexId v : g.vertices()) {
        degree_sum += g.degree(v);
        for (VertexId w : g.neighbors(v))
            EXPECT_TRUE(std::ranges::binary_search(g.neighbors(w), v));
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
    std::sort(present.begin(), present.end());
    EXPECT_EQ(g.edges(), present);
}

TEST(Graph, AddThenRemoveRestoresEdgeSet)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    auto before = g.edges();
    g.add_edge(Edge(1, 3));
    g.remove_edge(Edge(1, 3));
    EXPECT_EQ(g.edges(), before);
}

TEST(Batch, Validation)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    EXPECT_NO_THROW(validate_batch(g, EdgeBatch{{Edge(1, 3)}, BatchMode::insert}));
    EXPECT_THROW(validate_batch(g, EdgeBatch{{Edge(1, 2)}, BatchMode::insert}), InvalidBatchError);
    EXPECT_THROW(validate_batch(g, EdgeBatch{{Edge(1, 3), Edge(3, 1)}, BatchMode::insert}),
                 InvalidBatchError);
    EXPECT_THROW(validate_batch(g, EdgeBatch{{Edge(1, 3)}, BatchMode::remove}), InvalidBatchError);
    EXPECT_NO_THROW(validate_batch(g, EdgeBatch{{Edge(2, 1)}, BatchMode::remove}));
}
