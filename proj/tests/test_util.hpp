#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "dynclique/graph.hpp"
#include "dynclique/random.hpp"
#include "dynclique/ttt.hpp"

namespace dynclique::testing {

inline Graph make_graph(std::initializer_list<std::pair<VertexId, VertexId>> edges,
                        std::initializer_list<VertexId> isolated = {})
{
    Graph g;
    for (VertexId v : isolated)
        g.add_vertex(v);
    for (auto [a, b] : edges)
        g.add_edge(Edge(a, b));
    return g;
}

/// G(n, p) on vertices 1..n.
inline Graph random_graph(Rng& rng, std::size_t n, double p)
{
    Graph g;
    for (VertexId v = 1; v <= n; ++v)
        g.add_vertex(v);
    for (VertexId a = 1; a <= n; ++a)
        for (VertexId b = a + 1; b <= n; ++b)
            if (rng.bernoulli(p))
                g.add_edge(Edge(a, b));
    return g;
}

inline std::vector<Edge> absent_edges(const Graph& g)
{
    std::vector<Edge> out;
    auto vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(Edge(vs[i], vs[j])))
                out.emplace_back(vs[i], vs[j]);
    return out;
}

inline std::vector<Clique> sorted(std::vector<Clique> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace dynclique::testing
