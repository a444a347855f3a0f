#pragma once

// Maximal clique enumeration by backtracking with pivoting, plus the variant
// that refuses to grow a clique across any edge of an exclusion set.
//
// Emission order: depth first; at every level the non-pivot-neighbour
// candidates are tried in ascending vertex ID order. Callers should treat the
// output as a set.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynclique/errors.hpp"
#include "dynclique/graph.hpp"

namespace dynclique {

/// Maximal clique, vertices strictly ascending.
using Clique = std::vector<VertexId>;

inline bool is_canonical(std::span<const VertexId> c)
{
    return std::adjacent_find(c.begin(), c.end(), std::greater_equal<>()) == c.end();
}

inline Clique canonicalize(Clique c)
{
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

inline bool contains_vertex(std::span<const VertexId> c, VertexId v)
{
    return std::binary_search(c.begin(), c.end(), v);
}

/// Excluded edges indexed by endpoint, for O(deg) "does K ∪ {q} contain one" tests.
class ExcludedEdgeSet {
public:
    ExcludedEdgeSet() = default;

    ExcludedEdgeSet(std::span<const Edge> edges)
    {
        for (const Edge& e : edges)
            insert(e);
    }

    bool insert(const Edge& e)
    {
        if (!edges_.insert(e).second)
            return false;
        partners_[e.u()].push_back(e.v());
        partners_[e.v()].push_back(e.u());
        return true;
    }

    bool contains(const Edge& e) const { return edges_.contains(e); }
    bool empty() const noexcept { return edges_.empty(); }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const VertexId> partners(VertexId v) const
    {
        auto it = partners_.find(v);
        if (it == partners_.end())
            return {};
        return it->second;
    }

    /// True if some excluded edge has both endpoints in the sorted vertex list.
    bool touches(std::span<const VertexId> sorted_vertices) const
    {
        if (edges_.empty())
            return false;
        for (VertexId x : sorted_vertices)
            for (VertexId p : partners(x))
                if (x < p && contains_vertex(sorted_vertices, p))
                    return true;
        return false;
    }

private:
    EdgeSet edges_;
    std::unordered_map<VertexId, std::vector<VertexId>> partners_;
};

namespace detail {

using LocalId = std::uint32_t;

/// Induced subgraph relabelled to dense IDs 0..k-1 in ascending external order,
/// so the smallest local ID is always the smallest external ID.
class LocalGraph {
public:
    LocalGraph(const Graph& g, std::vector<VertexId> sorted_vertices)
        : ids_(std::move(sorted_vertices)), adj_(ids_.size())
    {
        for (LocalId i = 0; i < ids_.size(); ++i) {
            auto nb = g.neighbors(ids_[i]);
            auto& out = adj_[i];
            // merge-walk two sorted lists
            auto a = nb.begin();
            auto b = ids_.begin();
            if (nb.size() * 8 < ids_.size()) {
                for (VertexId w : nb)
                    if (auto j = local(w))
                        out.push_back(*j);
                continue;
            }
            while (a != nb.end() && b != ids_.end()) {
                if (*a < *b)
                    ++a;
                else if (*b < *a)
                    ++b;
                else {
                    out.push_back(static_cast<LocalId>(b - ids_.begin()));
                    ++a;
                    ++b;
                }
            }
        }
    }

    std::size_t size() const noexcept { return ids_.size(); }
    VertexId external(LocalId i) const { return ids_[i]; }
    std::span<const LocalId> neighbors(LocalId i) const { return adj_[i]; }

    std::optional<LocalId> local(VertexId v) const
    {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v)
            return std::nullopt;
        return static_cast<LocalId>(it - ids_.begin());
    }

private:
    std::vector<VertexId> ids_;
    std::vector<std::vector<LocalId>> adj_;
};

inline bool sorted_contains(std::span<const LocalId> s, LocalId x)
{
    return std::binary_search(s.begin(), s.end(), x);
}

/// |a ∩ b| for sorted lists; iterates the shorter one.
inline std::size_t intersection_size(std::span<const LocalId> a, std::span<const LocalId> b)
{
    if (a.size() > b.size())
        std::swap(a, b);
    std::size_t n = 0;
    if (a.size() * 8 < b.size()) {
        for (LocalId x : a)
            n += sorted_contains(b, x);
        return n;
    }
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

inline void intersect_into(std::span<const LocalId> a, std::span<const LocalId> b,
                           std::vector<LocalId>& out)
{
    out.clear();
    if (a.size() > b.size())
        std::swap(a, b);
    if (a.size() * 8 < b.size()) {
        for (LocalId x : a)
            if (sorted_contains(b, x))
                out.push_back(x);
        return;
    }
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

/// Backtracking search with Tomita-style pivoting. `excluded[q]` lists local
/// partners p such that (p, q) may never both be in an emitted clique.
template <class Emit>
class PivotSearch {
public:
    PivotSearch(const LocalGraph& g, const std::vector<std::vector<LocalId>>* excluded, Emit& emit)
        : g_(g), excluded_(excluded), emit_(emit), in_clique_(g.size(), false)
    {
    }

    void run(std::vector<LocalId> clique, std::vector<LocalId> cand, std::vector<LocalId> fini)
    {
        clique_ = std::move(clique);
        for (LocalId k : clique_)
            in_clique_[k] = true;
        expand(cand, fini);
        for (LocalId k : clique_)
            in_clique_[k] = false;
    }

private:
    bool blocked(LocalId q) const
    {
        if (excluded_ == nullptr)
            return false;
        for (LocalId p : (*excluded_)[q])
            if (in_clique_[p])
                return true;
        return false;
    }

    LocalId choose_pivot(std::span<const LocalId> cand, std::span<const LocalId> fini) const
    {
        // Ascending merge of cand ∪ fini; strict > keeps the smallest ID on ties.
        LocalId best = 0;
        std::size_t best_score = 0;
        bool have = false;
        auto consider = [&](LocalId u) {
            std::size_t s = intersection_size(cand, g_.neighbors(u));
            if (!have || s > best_score) {
                best = u;
                best_score = s;
                have = true;
            }
        };
        auto i = cand.begin();
        auto j = fini.begin();
        while (i != cand.end() || j != fini.end()) {
            if (j == fini.end() || (i != cand.end() && *i < *j))
                consider(*i++);
            else
                consider(*j++);
        }
        return best;
    }

    void report()
    {
        Clique out;
        out.reserve(clique_.size());
        for (LocalId k : clique_)
            out.push_back(g_.external(k));
        std::sort(out.begin(), out.end());
        emit_(std::as_const(out));
    }

    void expand(const std::vector<LocalId>& cand, const std::vector<LocalId>& fini)
    {
        if (cand.empty()) {
            if (fini.empty())
                report();
            return;
        }
        LocalId pivot = choose_pivot(cand, fini);
        auto pivot_nb = g_.neighbors(pivot);
        std::vector<LocalId> ext;
        std::set_difference(cand.begin(), cand.end(), pivot_nb.begin(), pivot_nb.end(),
                            std::back_inserter(ext));

        // Processing ext[i] moves ext[0..i) from cand to fini; those are filtered
        // out of cand_q and merged into fini_q instead of copying cand each step.
        std::vector<LocalId> cand_nb, fini_nb, cand_q, fini_q, moved;
        for (std::size_t i = 0; i < ext.size(); ++i) {
            LocalId q = ext[i];
            if (blocked(q))
                continue;
            auto q_nb = g_.neighbors(q);
            intersect_into(cand, q_nb, cand_nb);
            intersect_into(fini, q_nb, fini_nb);
            cand_q.clear();
            moved.clear();
            for (LocalId x : cand_nb) {
                auto it = std::lower_bound(ext.begin(), ext.begin() + static_cast<std::ptrdiff_t>(i), x);
                if (it != ext.begin() + static_cast<std::ptrdiff_t>(i) && *it == x)
                    moved.push_back(x);
                else
                    cand_q.push_back(x);
            }
            fini_q.clear();
            std::merge(fini_nb.begin(), fini_nb.end(), moved.begin(), moved.end(),
                       std::back_inserter(fini_q));

            clique_.push_back(q);
            in_clique_[q] = true;
            expand(cand_q, fini_q);
            in_clique_[q] = false;
            clique_.pop_back();
        }
    }

    const LocalGraph& g_;
    const std::vector<std::vector<LocalId>>* excluded_;
    Emit& emit_;
    std::vector<LocalId> clique_;
    std::vector<bool> in_clique_;
};

/// Excluded partner lists restricted to the local graph's vertices.
inline std::vector<std::vector<LocalId>> localize(const LocalGraph& g, const ExcludedEdgeSet& excl)
{
    std::vector<std::vector<LocalId>> out(g.size());
    for (LocalId i = 0; i < g.size(); ++i)
        for (VertexId p : excl.partners(g.external(i)))
            if (auto j = g.local(p))
                out[i].push_back(*j);
    return out;
}

template <class Emit>
void search(const LocalGraph& g, const ExcludedEdgeSet* excl, std::vector<LocalId> clique,
            std::vector<LocalId> cand, std::vector<LocalId> fini, Emit&& emit)
{
    if (clique.empty() && cand.empty() && fini.empty())
        return;  // no vertices: the empty set is not a clique we report
    std::vector<std::vector<LocalId>> excluded;
    if (excl != nullptr && !excl->empty())
        excluded = localize(g, *excl);
    PivotSearch<std::remove_reference_t<Emit>> s(g, excluded.empty() ? nullptr : &excluded, emit);
    s.run(std::move(clique), std::move(cand), std::move(fini));
}

inline std::vector<LocalId> all_local(const LocalGraph& g)
{
    std::vector<LocalId> v(g.size());
    for (LocalId i = 0; i < g.size(); ++i)
        v[i] = i;
    return v;
}

}  // namespace detail

/// Calls emit(const Clique&) once per maximal clique of g. Isolated vertices
/// come out as singletons.
template <class Emit>
void ttt(const Graph& g, Emit&& emit)
{
    detail::LocalGraph local(g, g.vertices());
    detail::search(local, nullptr, {}, detail::all_local(local), {}, emit);
}

inline std::vector<Clique> ttt(const Graph& g)
{
    std::vector<Clique> out;
    ttt(g, [&](const Clique& c) { out.push_back(c); });
    return out;
}

/// Maximal cliques c of g with k ⊆ c, c \ k ⊆ cand, c ∩ fini = ∅ and no edge of
/// excl inside c.
///
/// Vertices adjacent to all of k but outside cand ∪ fini are treated as if they
/// were in fini: they can never be added, but they still block maximality, so
/// every emitted clique is maximal in g itself.
template <class Emit>
void ttt_ext(const Graph& g, const Clique& k, std::span<const VertexId> cand,
             std::span<const VertexId> fini, const ExcludedEdgeSet& excl, Emit&& emit)
{
    if (!is_canonical(k))
        throw PreconditionError("clique to extend must be sorted and duplicate free");
    std::vector<VertexId> cand_s(cand.begin(), cand.end());
    std::vector<VertexId> fini_s(fini.begin(), fini.end());
    std::sort(cand_s.begin(), cand_s.end());
    std::sort(fini_s.begin(), fini_s.end());
    cand_s.erase(std::unique(cand_s.begin(), cand_s.end()), cand_s.end());
    fini_s.erase(std::unique(fini_s.begin(), fini_s.end()), fini_s.end());

    for (VertexId v : k) {
        if (!g.has_vertex(v))
            throw UnknownVertexError("unknown vertex " + std::to_string(v));
        if (contains_vertex(cand_s, v) || contains_vertex(fini_s, v))
            throw PreconditionError("clique vertex " + std::to_string(v) + " also in cand/fini");
    }
    for (VertexId v : cand_s) {
        if (!g.has_vertex(v))
            throw UnknownVertexError("unknown vertex " + std::to_string(v));
        if (contains_vertex(fini_s, v))
            throw PreconditionError("vertex " + std::to_string(v) + " in both cand and fini");
    }
    for (VertexId v : fini_s)
        if (!g.has_vertex(v))
            throw UnknownVertexError("unknown vertex " + std::to_string(v));
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j)
            if (!g.has_edge(Edge(k[i], k[j])))
                throw PreconditionError("vertices to extend do not form a clique");

    if (excl.touches(k))
        return;

    // Γ(k): all vertices when k is empty, else the common neighbourhood.
    std::vector<VertexId> common;
    if (k.empty()) {
        common = g.vertices();
    } else {
        auto first = g.neighbors(k.front());
        common.assign(first.begin(), first.end());
        std::vector<VertexId> next;
        for (std::size_t i = 1; i < k.size(); ++i) {
            auto nb = g.neighbors(k[i]);
            next.clear();
            std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                                  std::back_inserter(next));
            common.swap(next);
        }
    }

    std::vector<VertexId> vertices = k;
    vertices.insert(vertices.end(), common.begin(), common.end());
    std::sort(vertices.begin(), vertices.end());
    detail::LocalGraph local(g, std::move(vertices));

    std::vector<detail::LocalId> lk, lcand, lfini;
    for (VertexId v : k)
        lk.push_back(*local.local(v));
    for (VertexId v : common) {
        auto id = *local.local(v);
        if (contains_vertex(cand_s, v))
            lcand.push_back(id);
        else
            lfini.push_back(id);
    }
    detail::search(local, &excl, std::move(lk), std::move(lcand), std::move(lfini), emit);
}

inline std::vector<Clique> ttt_ext(const Graph& g, const Clique& k, std::span<const VertexId> cand,
                                   std::span<const VertexId> fini, const ExcludedEdgeSet& excl)
{
    std::vector<Clique> out;
    ttt_ext(g, k, cand, fini, excl, [&](const Clique& c) { out.push_back(c); });
    return out;
}

}  // namespace dynclique
