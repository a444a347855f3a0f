#include <gtest/gtest.h>

#include "dynclique/delta.hpp"
#include "dynclique/extremal.hpp"
#include "dynclique/oracle.hpp"
#include "test_util.hpp"

using namespace dynclique;
using dynclique::testing::absent_edges;
using dynclique::testing::make_graph;
using dynclique::testing::random_graph;
using dynclique::testing::sorted;

using Cliques = std::vector<Clique>;

namespace {

EdgeBatch ins(std::vector<Edge> edges) { return EdgeBatch{std::move(edges), BatchMode::insert}; }
EdgeBatch del(std::vector<Edge> edges) { return EdgeBatch{std::move(edges), BatchMode::remove}; }

CliqueRegistry registry_of(const Graph& g) { return CliqueRegistry::from_cliques(ttt(g)); }

ChangeSet sorted_change(ChangeSet c)
{
    c.new_cliques = sorted(std::move(c.new_cliques));
    c.del_cliques = sorted(std::move(c.del_cliques));
    return c;
}

std::vector<Edge> sample(Rng& rng, std::vector<Edge> pool, std::size_t k)
{
    rng.shuffle(std::span<Edge>(pool));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(std::min(k, pool.size())), pool.end());
    return pool;
}

}  // namespace

TEST(EnumNew, SingleEdgeToIsolatedVertex)
{
    Graph g = make_graph({{1, 2}}, {3});
    EXPECT_EQ(enum_new(g, ins({Edge(2, 3)})), (Cliques{{2, 3}}));
    EXPECT_TRUE(g.has_edge(Edge(2, 3)));
}

// H = {(3,5),(4,5)}: the only new clique through (4,5) is {2,3,4,5}.
TEST(EnumNew, CliqueThroughLastEdge)
{
    Graph g = make_graph({{1, 2}, {2, 3}, {2, 4}, {3, 4}, {2, 5}});
    auto h = ins({Edge(3, 5), Edge(4, 5)});
    Graph g1 = g;
    auto cliques = enum_new(g1, h);
    EXPECT_EQ(sorted(cliques), (Cliques{{2, 3, 4, 5}}));

    Graph after = g1;
    auto local = detail::edge_neighborhood(after, Edge(4, 5));
    EXPECT_EQ(local.first, (std::vector<VertexId>{2, 3, 4, 5}));
}

TEST(EnumNew, CompleteGraphFromEmptyEmittedOnce)
{
    std::vector<Edge> k4{Edge(1, 2), Edge(1, 3), Edge(1, 4), Edge(2, 3), Edge(2, 4), Edge(3, 4)};
    Graph a = make_graph({}, {1, 2, 3, 4});
    Graph b = a;
    EXPECT_EQ(enum_new(a, ins(k4)), (Cliques{{1, 2, 3, 4}}));
    EXPECT_EQ(enum_new_te(b, ins(k4)), (Cliques{{1, 2, 3, 4}}));
}

TEST(EnumNew, OrderedEdgesShareCliqueOnce)
{
    Graph g = make_graph({{2, 3}, {2, 4}, {3, 4}, {2, 6}, {4, 5}, {5, 6}}, {1});
    auto h = ins({Edge(3, 6), Edge(4, 6)});
    Graph a = g;
    Graph b = g;
    auto te = enum_new_te(a, h);
    EXPECT_EQ(te, (Cliques{{2, 3, 4, 6}, {4, 5, 6}}));
    EXPECT_EQ(sorted(enum_new(b, h)), sorted(te));
}

TEST(EnumNew, InvalidBatchLeavesGraphUntouched)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    Graph before = g;
    EXPECT_THROW(enum_new(g, ins({Edge(1, 3), Edge(1, 2)})), InvalidBatchError);
    EXPECT_EQ(g, before);
    EXPECT_THROW(enum_new_te(g, del({Edge(1, 2)})), InvalidBatchError);
    EXPECT_EQ(g, before);
}

TEST(EnumNew, MethodsAgreeWithOracle)
{
    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        Graph g = random_graph(rng, rng.between(2, 25), rng.unit());
        auto h = ins(sample(rng, absent_edges(g), rng.between(1, 6)));
        auto expected = oracle_change(g, h).new_cliques;
        Graph a = g;
        Graph b = g;
        auto te = enum_new_te(a, h);
        auto plain = enum_new(b, h);
        ASSERT_EQ(sorted(te), expected) << "trial " << i;
        ASSERT_EQ(sorted(plain), expected) << "trial " << i;
        ASSERT_EQ(te.size(), expected.size());
        ASSERT_EQ(plain.size(), expected.size());
    }
}

TEST(EnumNew, SingleEdgeBatchMethodsIdentical)
{
    Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng, 14, rng.unit());
        auto h = ins(sample(rng, absent_edges(g), 1));
        Graph a = g;
        Graph b = g;
        EXPECT_EQ(enum_new_te(a, h), enum_new(b, h));
    }
}

TEST(EnumSubsumed, PathClosedIntoTriangle)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    auto reg = registry_of(g);
    auto h = ins({Edge(1, 3)});
    auto fresh = enum_new_te(g, h);
    EXPECT_EQ(sorted(enum_subsumed(g, h, reg, fresh)), (Cliques{{1, 2}, {2, 3}}));
}

TEST(EnumSubsumed, SingletonsJoined)
{
    Graph g = make_graph({}, {1, 2});
    auto reg = registry_of(g);
    auto h = ins({Edge(1, 2)});
    auto fresh = enum_new_te(g, h);
    EXPECT_EQ(sorted(enum_subsumed(g, h, reg, fresh)), (Cliques{{1}, {2}}));
}

// A clique of the joined part plus one independent vertex is subsumed once
// the independent side gains edges.
TEST(EnumSubsumed, BatchExtremalSubsumption)
{
    auto [g, h] = batch_extremal(7, 4);
    auto reg = registry_of(g);
    Graph before = g;
    auto fresh = enum_new_te(g, h);
    auto gone = sorted(enum_subsumed(g, h, reg, fresh));
    EXPECT_EQ(gone, oracle_change(before, h).del_cliques);
    Cliques all_pairs;
    for (VertexId x = 1; x <= 4; ++x)
        for (VertexId y = 5; y <= 7; ++y)
            all_pairs.push_back({x, y});
    EXPECT_EQ(gone, all_pairs);
    EXPECT_EQ(fresh.size(), 12u);
}

TEST(EnumSubsumed, CandidateSetStaysWithinBound)
{
    std::vector<Edge> k5;
    for (VertexId a = 1; a <= 5; ++a)
        for (VertexId b = a + 1; b <= 5; ++b)
            k5.emplace_back(a, b);
    Graph g = make_graph({}, {1, 2, 3, 4, 5});
    auto reg = registry_of(g);
    auto h = ins(k5);
    auto fresh = enum_new_te(g, h);
    SubsumedStats stats;
    auto gone = enum_subsumed(g, h, reg, fresh, &stats);
    EXPECT_EQ(sorted(gone), (Cliques{{1}, {2}, {3}, {4}, {5}}));
    EXPECT_EQ(stats.bound_violations, 0u);
    EXPECT_GT(stats.max_candidates, 1u);
}

TEST(EnumSubsumed, NoDuplicatesAcrossNewCliques)
{
    Rng rng(35);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, rng.between(3, 16), rng.unit());
        auto reg = registry_of(g);
        auto h = ins(sample(rng, absent_edges(g), rng.between(1, 6)));
        auto expected = oracle_change(g, h).del_cliques;
        auto fresh = enum_new_te(g, h);
        SubsumedStats stats;
        auto gone = enum_subsumed(g, h, reg, fresh, &stats);
        ASSERT_EQ(gone.size(), expected.size()) << "trial " << i;
        ASSERT_EQ(sorted(gone), expected) << "trial " << i;
        ASSERT_EQ(stats.bound_violations, 0u);
    }
}

TEST(ApplyInsert, EmptyBatch)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    auto reg = registry_of(g);
    auto before = reg;
    auto change = apply_insert_batch(g, ins({}), reg);
    EXPECT_TRUE(change.empty());
    EXPECT_EQ(reg, before);
}

TEST(ApplyInsert, SingleEdgeExtremalEight)
{
    auto [g, e] = single_edge_extremal(8);
    auto reg = registry_of(g);
    auto change = apply_insert_batch(g, ins({e}), reg);
    EXPECT_EQ(change.new_cliques.size(), 9u);
    EXPECT_EQ(change.del_cliques.size(), 18u);
    EXPECT_EQ(change.size(), 27u);
}

TEST(ApplyInsert, RegistryTracksOracle)
{
    Rng rng(37);
    for (int i = 0; i < 1000; ++i) {
        Graph g = random_graph(rng, rng.between(1, 25), rng.unit());
        auto reg = registry_of(g);
        auto h = ins(sample(rng, absent_edges(g), rng.between(0, 5)));
        auto expected = oracle_change(g, h);
        auto method = i % 2 ? NewCliqueMethod::filter : NewCliqueMethod::exclude;
        auto change = sorted_change(apply_insert_batch(g, h, reg, method));
        ASSERT_EQ(change.new_cliques, expected.new_cliques) << "trial " << i;
        ASSERT_EQ(change.del_cliques, expected.del_cliques) << "trial " << i;
        ASSERT_EQ(reg, CliqueRegistry::from_cliques(oracle_cliques(g))) << "trial " << i;
    }
}

TEST(ApplyInsert, StreamingOverloadMatches)
{
    Rng rng(39);
    Graph g = random_graph(rng, 20, 0.5);
    auto h = ins(sample(rng, absent_edges(g), 5));
    Graph g2 = g;
    auto reg = registry_of(g);
    auto reg2 = reg;
    auto change = apply_insert_batch(g, h, reg);
    ChangeSet streamed;
    apply_insert_batch(
        g2, h, reg2, [&](const Clique& c) { streamed.new_cliques.push_back(c); },
        [&](const Clique& c) { streamed.del_cliques.push_back(c); });
    EXPECT_EQ(sorted_change(change).new_cliques, sorted_change(streamed).new_cliques);
    EXPECT_EQ(sorted_change(change).del_cliques, sorted_change(streamed).del_cliques);
    EXPECT_EQ(reg, reg2);
}

TEST(ApplyInsert, RejectsInvalidBatchWithoutMutation)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    auto reg = registry_of(g);
    auto before_reg = reg;
    Graph before = g;
    EXPECT_THROW(apply_insert_batch(g, ins({Edge(1, 3), Edge(1, 2)}), reg), InvalidBatchError);
    EXPECT_THROW(apply_insert_batch(g, del({Edge(1, 2)}), reg), InvalidBatchError);
    EXPECT_EQ(g, before);
    EXPECT_EQ(reg, before_reg);
}

TEST(ApplyInsert, StaleRegistryRollsBack)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    auto reg = CliqueRegistry::from_cliques(Cliques{{1, 2, 3}});
    Graph before = g;
    EXPECT_THROW(apply_insert_batch(g, ins({Edge(1, 3)}), reg), RegistryError);
    EXPECT_EQ(g, before);
    EXPECT_EQ(reg, CliqueRegistry::from_cliques(Cliques{{1, 2, 3}}));
}

TEST(ApplyDelete, TriangleLosesEdge)
{
    Graph g = make_graph({{1, 2}, {2, 3}, {1, 3}});
    auto reg = registry_of(g);
    auto change = sorted_change(apply_delete_batch(g, del({Edge(1, 3)}), reg));
    EXPECT_EQ(change.del_cliques, (Cliques{{1, 2, 3}}));
    EXPECT_EQ(change.new_cliques, (Cliques{{1, 2}, {2, 3}}));
    EXPECT_EQ(g, make_graph({{1, 2}, {2, 3}}));
    EXPECT_EQ(reg, registry_of(g));
}

TEST(ApplyDelete, WholeTriangle)
{
    Graph g = make_graph({{1, 2}, {2, 3}, {1, 3}});
    auto reg = registry_of(g);
    auto change = sorted_change(apply_delete_batch(g, del({Edge(1, 2), Edge(2, 3), Edge(1, 3)}), reg));
    EXPECT_EQ(change.del_cliques, (Cliques{{1, 2, 3}}));
    EXPECT_EQ(change.new_cliques, (Cliques{{1}, {2}, {3}}));
    EXPECT_EQ(g.vertex_count(), 3u);
}

TEST(ApplyDelete, AbsentEdgeRejected)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    auto reg = registry_of(g);
    Graph before = g;
    EXPECT_THROW(apply_delete_batch(g, del({Edge(1, 2), Edge(1, 3)}), reg), InvalidBatchError);
    EXPECT_EQ(g, before);
    EXPECT_EQ(reg, registry_of(before));
}

TEST(ApplyDelete, MirrorsInsertion)
{
    Rng rng(41);
    for (int i = 0; i < 500; ++i) {
        Graph g = random_graph(rng, rng.between(2, 18), rng.unit());
        auto h_edges = sample(rng, g.edges(), rng.between(1, 6));
        Graph smaller = g;
        for (const Edge& e : h_edges)
            smaller.remove_edge(e);

        Graph down = g;
        auto reg_down = registry_of(down);
        auto removed = sorted_change(apply_delete_batch(down, del(h_edges), reg_down));

        Graph up = smaller;
        auto reg_up = registry_of(up);
        auto added = sorted_change(apply_insert_batch(up, ins(h_edges), reg_up));

        ASSERT_EQ(removed.del_cliques, added.new_cliques) << "trial " << i;
        ASSERT_EQ(removed.new_cliques, added.del_cliques) << "trial " << i;
        ASSERT_EQ(down, smaller);
        ASSERT_EQ(reg_down, registry_of(smaller));
    }
}

TEST(FullyDynamic, NoInsertsEqualsDelete)
{
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng, 12, rng.unit());
        auto d = del(sample(rng, g.edges(), 4));
        Graph a = g;
        Graph b = g;
        auto ra = registry_of(a);
        auto rb = registry_of(b);
        auto x = sorted_change(fully_dynamic(a, ins({}), d, ra));
        auto y = sorted_change(apply_delete_batch(b, d, rb));
        ASSERT_EQ(x.new_cliques, y.new_cliques);
        ASSERT_EQ(x.del_cliques, y.del_cliques);
        ASSERT_EQ(ra, rb);
    }
}

TEST(FullyDynamic, OverlapRejected)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    auto reg = registry_of(g);
    Graph before = g;
    EXPECT_THROW(fully_dynamic(g, ins({Edge(1, 3)}), del({Edge(1, 3)}), reg), InvalidBatchError);
    EXPECT_EQ(g, before);
}

// Path 1-2-3: inserting (1,3) creates {1,2,3}; deleting (2,3) destroys it,
// and {1,2} is lost in phase one but maximal again at the end.
TEST(FullyDynamic, CancellingPhases)
{
    Graph g = make_graph({{1, 2}, {2, 3}});
    auto reg = registry_of(g);
    auto change = sorted_change(fully_dynamic(g, ins({Edge(1, 3)}), del({Edge(2, 3)}), reg));
    EXPECT_EQ(change.new_cliques, (Cliques{{1, 3}}));
    EXPECT_EQ(change.del_cliques, (Cliques{{2, 3}}));
    EXPECT_EQ(g, make_graph({{1, 2}, {1, 3}}));
    EXPECT_EQ(reg, registry_of(g));
}

TEST(FullyDynamic, NetChangeMatchesOracle)
{
    Rng rng(47);
    for (int i = 0; i < 500; ++i) {
        Graph g = random_graph(rng, rng.between(2, 20), rng.unit());
        auto i_batch = ins(sample(rng, absent_edges(g), rng.between(0, 6)));
        auto d_batch = del(sample(rng, g.edges(), rng.between(0, 6)));
        Graph after = g;
        for (const Edge& e : i_batch.edges)
            after.add_edge(e);
        for (const Edge& e : d_batch.edges)
            after.remove_edge(e);
        auto expected = oracle_diff(g, after);
        auto reg = registry_of(g);
        auto change = sorted_change(fully_dynamic(g, i_batch, d_batch, reg));
        ASSERT_EQ(change.new_cliques, expected.new_cliques) << "trial " << i;
        ASSERT_EQ(change.del_cliques, expected.del_cliques) << "trial " << i;
        ASSERT_EQ(g, after);
        ASSERT_EQ(reg, registry_of(after));
    }
}

TEST(Naive, MatchesIncremental)
{
    Rng rng(53);
    Graph g = random_graph(rng, 40, 0.2);
    Graph g2 = g;
    auto reg = registry_of(g);
    auto current = sorted(ttt(g2));
    for (int step = 0; step < 20; ++step) {
        auto h = ins(sample(rng, absent_edges(g), 5));
        auto a = sorted_change(apply_insert_batch(g, h, reg));
        auto b = apply_batch_naive(g2, h, current);
        ASSERT_EQ(a.new_cliques, b.new_cliques);
        ASSERT_EQ(a.del_cliques, b.del_cliques);
    }
    EXPECT_EQ(current, sorted(ttt(g)));
}

TEST(Metrics, TotalChangeSize)
{
    ChangeSet c{{{1, 2, 3}, {4, 5, 6, 7}}, {{8, 9}}};
    EXPECT_EQ(total_change_size(c), 10u);
    EXPECT_EQ(total_change_size(ChangeSet{{{1}}, {{2}, {3}}}), 0u);
    EXPECT_EQ(total_change_size(ChangeSet{}), 0u);
}
