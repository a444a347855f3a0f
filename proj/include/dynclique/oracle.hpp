#pragma once

// Brute-force ground truth for small graphs. Deliberately shares nothing with
// the pivoting enumerator: cliques are bitmasks and are built one vertex at a
// time, keeping the maximal cliques of every prefix graph.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dynclique/errors.hpp"
#include "dynclique/graph.hpp"
#include "dynclique/signature.hpp"

namespace dynclique {

inline constexpr std::size_t oracle_vertex_limit = 25;

/// All maximal cliques of g, sorted lexicographically.
inline std::vector<Clique> oracle_cliques(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n > oracle_vertex_limit)
        throw OracleLimitError("oracle limited to " + std::to_string(oracle_vertex_limit) +
                               " vertices, graph has " + std::to_string(n));
    const std::vector<VertexId> ids = g.vertices();
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.has_edge(Edge(ids[i], ids[j]))) {
                adj[i] |= std::uint32_t{1} << j;
                adj[j] |= std::uint32_t{1} << i;
            }

    // Maximal cliques of the graph induced on vertices [0, i).
    std::vector<std::uint32_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        const std::uint32_t prefix = (bit << 1) - 1;
        auto maximal_in_prefix = [&](std::uint32_t clique) {
            std::uint32_t joiners = prefix & ~clique;
            for (std::uint32_t rest = clique; rest != 0; rest &= rest - 1)
                joiners &= adj[static_cast<std::size_t>(std::countr_zero(rest))];
            return joiners == 0;
        };
        std::vector<std::uint32_t> next;
        if (current.empty())
            next.push_back(bit);
        for (std::uint32_t c : current) {
            if ((c & ~adj[i]) == 0) {
                next.push_back(c | bit);
                continue;
            }
            next.push_back(c);
            std::uint32_t grown = (c & adj[i]) | bit;
            if (maximal_in_prefix(grown))
                next.push_back(grown);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current.swap(next);
    }

    std::vector<Clique> out;
    out.reserve(current.size());
    for (std::uint32_t mask : current) {
        Clique c;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1)
            c.push_back(ids[static_cast<std::size_t>(std::countr_zero(rest))]);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Net change between two graphs, both within the oracle's size limit.
/// Lists come back sorted.
inline ChangeSet oracle_diff(const Graph& before, const Graph& after)
{
    auto a = oracle_cliques(before);
    auto b = oracle_cliques(after);
    ChangeSet out;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out.new_cliques));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.del_cliques));
    return out;
}

/// Change caused by applying h to g, computed by full enumeration before and
/// after. g itself is not modified.
inline ChangeSet oracle_change(const Graph& g, const EdgeBatch& h)
{
    validate_batch(g, h);
    Graph after = g;
    for (const Edge& e : h.edges) {
        if (h.mode == BatchMode::insert)
            after.add_edge(e);
        else
            after.remove_edge(e);
    }
    return oracle_diff(g, after);
}

}  // namespace dynclique
