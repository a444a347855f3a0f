#pragma once

// Graphs with the largest possible number of maximal cliques, and the
// constructions built from them that force the largest changes.
// Vertices are numbered from 1 in consecutive blocks, one block per part.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynclique/errors.hpp"
#include "dynclique/graph.hpp"

namespace dynclique {

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
        throw std::overflow_error("clique count does not fit in 64 bits");
    return a * b;
}

inline std::uint64_t pow3(std::size_t e)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r = checked_mul(r, 3);
    return r;
}

/// Max clique count for n >= 1; f(1) = 1 is the single-vertex graph.
inline std::uint64_t max_cliques_from_one(std::size_t n)
{
    if (n == 1)
        return 1;
    switch (n % 3) {
    case 0: return pow3(n / 3);
    case 1: return checked_mul(4, pow3((n - 4) / 3));
    default: return checked_mul(2, pow3((n - 2) / 3));
    }
}

/// Part sizes of the extremal multipartite graph. With `four_cycle`, the
/// n ≡ 1 (mod 3) case uses two parts of size 2 instead of one of size 4.
inline std::vector<std::size_t> moon_moser_parts(std::size_t n, bool four_cycle = false)
{
    std::vector<std::size_t> parts;
    std::size_t threes = n / 3;
    switch (n % 3) {
    case 1:
        --threes;
        if (four_cycle) {
            parts.push_back(2);
            parts.push_back(2);
        } else {
            parts.push_back(4);
        }
        break;
    case 2: parts.push_back(2); break;
    default: break;
    }
    parts.insert(parts.end(), threes, 3);
    return parts;
}

/// Complete multipartite graph on first, first+1, ...; parts in ID order.
inline void add_complete_multipartite(Graph& g, const std::vector<std::size_t>& parts, VertexId first)
{
    std::vector<std::pair<VertexId, VertexId>> blocks;
    VertexId next = first;
    for (std::size_t size : parts) {
        blocks.emplace_back(next, next + size);
        next += size;
    }
    for (VertexId v = first; v < next; ++v)
        g.add_vertex(v);
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
            for (VertexId x = blocks[a].first; x < blocks[a].second; ++x)
                for (VertexId y = blocks[b].first; y < blocks[b].second; ++y)
                    g.add_edge(Edge(x, y));
}

}  // namespace detail

/// Largest number of maximal cliques in any graph on n >= 2 vertices.
inline std::uint64_t f_max(std::size_t n)
{
    if (n < 2)
        throw PreconditionError("f_max needs n >= 2, got " + std::to_string(n));
    return detail::max_cliques_from_one(n);
}

/// Complete multipartite graph on 1..n with parts of size 3, plus one part of
/// size 4 (n ≡ 1 mod 3) or 2 (n ≡ 2 mod 3) placed first.
inline Graph moon_moser(std::size_t n)
{
    if (n < 2)
        throw PreconditionError("moon_moser needs n >= 2, got " + std::to_string(n));
    Graph g;
    detail::add_complete_multipartite(g, detail::moon_moser_parts(n), 1);
    return g;
}

/// G on 1..n: an extremal graph on 1..n-2, with n-1 and n joined to all of it
/// but not to each other; e = (n-1, n). Adding e changes 3 f(n-2) cliques.
inline std::pair<Graph, Edge> single_edge_extremal(std::size_t n)
{
    if (n <= 2)
        throw PreconditionError("single_edge_extremal needs n > 2, got " + std::to_string(n));
    Graph g;
    const std::size_t core = n - 2;
    if (core == 1)
        g.add_vertex(1);
    else
        detail::add_complete_multipartite(g, detail::moon_moser_parts(core), 1);
    const VertexId a = n - 1;
    const VertexId b = n;
    for (VertexId v = 1; v <= core; ++v) {
        g.add_edge(Edge(v, a));
        g.add_edge(Edge(v, b));
    }
    return {std::move(g), Edge(a, b)};
}

/// G: independent set V1 = 1..eps fully joined to an extremal graph on
/// eps+1..n. H turns V1 into an extremal graph; for eps ≡ 1 (mod 3) the
/// 2+2 variant is used so no vertex of V1 stays isolated. Every maximal clique
/// changes: |Λ| = (eps + f(eps)) f(n - eps).
inline std::pair<Graph, EdgeBatch> batch_extremal(std::size_t n, std::size_t eps)
{
    if (eps <= 3 || n < eps + 2)
        throw PreconditionError("batch_extremal needs eps > 3 and n >= eps + 2, got n=" +
                                std::to_string(n) + " eps=" + std::to_string(eps));
    Graph g;
    for (VertexId v = 1; v <= eps; ++v)
        g.add_vertex(v);
    detail::add_complete_multipartite(g, detail::moon_moser_parts(n - eps), eps + 1);
    for (VertexId x = 1; x <= eps; ++x)
        for (VertexId y = eps + 1; y <= n; ++y)
            g.add_edge(Edge(x, y));

    Graph target;
    detail::add_complete_multipartite(target, detail::moon_moser_parts(eps, true), 1);
    EdgeBatch h{target.edges(), BatchMode::insert};
    return {std::move(g), std::move(h)};
}

/// (eps + f(eps)) * f(n - eps): change forced by batch_extremal(n, eps).
inline std::uint64_t batch_extremal_change(std::size_t n, std::size_t eps)
{
    if (eps <= 3 || n < eps + 2)
        throw PreconditionError("batch_extremal_change needs eps > 3 and n >= eps + 2");
    return detail::checked_mul(eps + f_max(eps), f_max(n - eps));
}

/// eps in [4, n-2] maximising batch_extremal_change, smallest on ties.
inline std::size_t best_batch_eps(std::size_t n)
{
    if (n < 6)
        throw PreconditionError("best_batch_eps needs n >= 6");
    std::size_t best = 4;
    for (std::size_t eps = 5; eps + 2 <= n; ++eps)
        if (batch_extremal_change(n, eps) > batch_extremal_change(n, best))
            best = eps;
    return best;
}

/// The four S0 edges that turn H_n into G_n.
inline std::vector<Edge> correction_cycle()
{
    return {Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(1, 4)};
}

/// For n ≡ 1 (mod 3): H_n is the extremal multipartite graph with the size-4
/// part S0 = {1,2,3,4}; G_n additionally joins S0 into the cycle 1-2-3-4-1.
/// Both have f(n) maximal cliques.
inline std::pair<Graph, Graph> moon_moser_correction_pair(std::size_t n)
{
    if (n < 4 || n % 3 != 1)
        throw PreconditionError("moon_moser_correction_pair needs n >= 4 and n ≡ 1 (mod 3), got " +
                                std::to_string(n));
    Graph h = moon_moser(n);
    Graph g = h;
    for (const Edge& e : correction_cycle())
        g.add_edge(e);
    return {std::move(h), std::move(g)};
}

}  // namespace dynclique
