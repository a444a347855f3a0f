#pragma once

// Change-sensitive maintenance of the maximal clique set.
//
// Insertion of a batch H into G:
//   * new cliques: every new maximal clique contains some e = (u, v) in H and
//     lives inside the graph induced on {u, v} ∪ (Γ(u) ∩ Γ(v)) of G + H. Edges
//     are processed in batch order; a clique is attributed to the first batch
//     edge it contains.
//   * subsumed cliques: each one is a maximal clique of c − H for some new
//     clique c, found by repeatedly splitting c on its batch edges and keeping
//     the pieces registered as maximal in G.
// Deletion is the same computation run from G − H towards G with the roles of
// the two lists swapped.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <set>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dynclique/errors.hpp"
#include "dynclique/graph.hpp"
#include "dynclique/signature.hpp"
#include "dynclique/ttt.hpp"

namespace dynclique {

/// How new maximal cliques are enumerated per batch edge.
enum class NewCliqueMethod {
    /// Enumerate all maximal cliques around each edge, drop those holding an
    /// earlier batch edge.
    filter,
    /// Never grow a clique across an earlier batch edge in the first place.
    exclude,
};

namespace detail {

/// The vertex set {u, v} ∪ (Γ(u) ∩ Γ(v)), sorted, and the common part alone.
inline std::pair<std::vector<VertexId>, std::vector<VertexId>> edge_neighborhood(const Graph& g,
                                                                                  const Edge& e)
{
    std::vector<VertexId> common = common_neighbors(g, e.u(), e.v());
    std::vector<VertexId> vs;
    vs.reserve(common.size() + 2);
    const std::array<VertexId, 2> ends{e.u(), e.v()};
    std::merge(common.begin(), common.end(), ends.begin(), ends.end(), std::back_inserter(vs));
    return {std::move(vs), std::move(common)};
}

/// Λ^new for a graph that already contains every edge of h.
template <class Emit>
void enum_new_on(const Graph& g_prime, std::span<const Edge> h, NewCliqueMethod method, Emit&& emit)
{
    ExcludedEdgeSet earlier;
    for (const Edge& e : h) {
        auto [vs, common] = edge_neighborhood(g_prime, e);
        LocalGraph local(g_prime, std::move(vs));
        if (method == NewCliqueMethod::exclude) {
            std::vector<LocalId> cand;
            cand.reserve(common.size());
            for (VertexId w : common)
                cand.push_back(*local.local(w));
            search(local, &earlier, {*local.local(e.u()), *local.local(e.v())}, std::move(cand), {},
                   emit);
        } else {
            search(local, nullptr, {}, all_local(local), {}, [&](const Clique& c) {
                if (!earlier.touches(c))
                    emit(c);
            });
        }
        earlier.insert(e);
    }
}

}  // namespace detail

/// Counters for the subsumed-clique split loop.
struct SubsumedStats {
    std::size_t cliques_seen = 0;
    /// Largest candidate set observed.
    std::size_t max_candidates = 0;
    /// Times the candidate set exceeded 2^j after splitting on j batch edges.
    std::size_t bound_violations = 0;
};

/// Consumes new cliques one at a time and emits the subsumed ones, each once.
/// `is_maximal_before(c)` must answer whether c was maximal before the update.
template <class Membership>
class SubsumedEnumerator {
public:
    SubsumedEnumerator(std::span<const Edge> h, Membership is_maximal_before)
        : is_maximal_before_(std::move(is_maximal_before))
    {
        for (const Edge& e : h) {
            partners_[e.u()].push_back(e.v());
            partners_[e.v()].push_back(e.u());
        }
    }

    template <class Emit>
    void feed(const Clique& c, Emit&& emit)
    {
        ++stats_.cliques_seen;
        std::vector<Edge> inside;
        for (VertexId x : c) {
            auto it = partners_.find(x);
            if (it == partners_.end())
                continue;
            for (VertexId p : it->second)
                if (x < p && contains_vertex(c, p))
                    inside.emplace_back(x, p);
        }

        std::vector<Clique> candidates{c};
        std::vector<Clique> next;
        std::size_t splits = 0;
        for (const Edge& e : inside) {
            next.clear();
            for (Clique& cur : candidates) {
                if (contains_vertex(cur, e.u()) && contains_vertex(cur, e.v())) {
                    next.push_back(without(cur, e.u()));
                    next.push_back(without(cur, e.v()));
                } else {
                    next.push_back(std::move(cur));
                }
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            candidates.swap(next);
            stats_.max_candidates = std::max(stats_.max_candidates, candidates.size());
            ++splits;
            // after j splits at most 2^j candidates
            if (splits < 63 && candidates.size() > (std::size_t{1} << splits))
                ++stats_.bound_violations;
        }
        if (inside.empty())
            return;

        for (const Clique& cand : candidates) {
            if (!is_maximal_before_(cand))
                continue;
            if (emitted_.insert(signature(cand)).second)
                emit(cand);
        }
    }

    const SubsumedStats& stats() const noexcept { return stats_; }

private:
    static Clique without(const Clique& c, VertexId v)
    {
        Clique out;
        out.reserve(c.size() - 1);
        for (VertexId x : c)
            if (x != v)
                out.push_back(x);
        return out;
    }

    Membership is_maximal_before_;
    std::unordered_map<VertexId, std::vector<VertexId>> partners_;
    std::unordered_set<CliqueSignature, CliqueSignatureHash> emitted_;
    SubsumedStats stats_;
};

/// Adds h to g and streams Λ^new(G, G + H) to emit. Throws InvalidBatchError
/// (graph unmodified) unless h is a valid insert batch for g.
template <class Emit>
void enum_new(Graph& g, const EdgeBatch& h, NewCliqueMethod method, Emit&& emit)
{
    if (h.mode != BatchMode::insert)
        throw InvalidBatchError("new-clique enumeration needs an insert batch");
    validate_batch(g, h);
    for (const Edge& e : h.edges)
        g.add_edge(e);
    detail::enum_new_on(g, h.edges, method, emit);
}

inline std::vector<Clique> enum_new(Graph& g, const EdgeBatch& h)
{
    std::vector<Clique> out;
    enum_new(g, h, NewCliqueMethod::filter, [&](const Clique& c) { out.push_back(c); });
    return out;
}

inline std::vector<Clique> enum_new_te(Graph& g, const EdgeBatch& h)
{
    std::vector<Clique> out;
    enum_new(g, h, NewCliqueMethod::exclude, [&](const Clique& c) { out.push_back(c); });
    return out;
}

/// Λ^del(G, G + H) given G' = G + H, the registry of cliques(G) and Λ^new.
inline std::vector<Clique> enum_subsumed(const Graph& g_prime, const EdgeBatch& h,
                                         const CliqueRegistry& registry,
                                         std::span<const Clique> new_cliques,
                                         SubsumedStats* stats = nullptr)
{
    for (const Edge& e : h.edges)
        if (!g_prime.has_edge(e))
            throw PreconditionError("batch edge " + to_string(e) + " missing from updated graph");
    auto member = [&](const Clique& c) { return registry.contains(c); };
    SubsumedEnumerator<decltype(member)> sub(h.edges, member);
    std::vector<Clique> out;
    for (const Clique& c : new_cliques)
        sub.feed(c, [&](const Clique& d) { out.push_back(d); });
    if (stats != nullptr)
        *stats = sub.stats();
    return out;
}

/// Streaming insert: cliques are passed to on_new / on_del as they are found;
/// the registry is committed after enumeration. On any error the graph and
/// registry are left as they were.
template <class OnNew, class OnDel>
void apply_insert_batch(Graph& g, const EdgeBatch& h, CliqueRegistry& registry, OnNew&& on_new,
                        OnDel&& on_del, NewCliqueMethod method = NewCliqueMethod::exclude,
                        SubsumedStats* stats = nullptr)
{
    if (h.mode != BatchMode::insert)
        throw InvalidBatchError("insert update needs an insert batch");
    validate_batch(g, h);
    for (const Edge& e : h.edges)
        g.add_edge(e);
    try {
        CliqueRegistry::Transaction tx(registry);
        auto member = [&](const Clique& c) { return registry.contains(c); };
        SubsumedEnumerator<decltype(member)> sub(h.edges, member);
        detail::enum_new_on(g, h.edges, method, [&](const Clique& c) {
            on_new(c);
            tx.add(c);
            sub.feed(c, [&](const Clique& d) {
                on_del(d);
                tx.remove(d);
            });
        });
        tx.commit();
        if (stats != nullptr)
            *stats = sub.stats();
    } catch (...) {
        for (const Edge& e : h.edges)
            g.remove_edge(e);
        throw;
    }
}

inline ChangeSet apply_insert_batch(Graph& g, const EdgeBatch& h, CliqueRegistry& registry,
                                    NewCliqueMethod method = NewCliqueMethod::exclude,
                                    SubsumedStats* stats = nullptr)
{
    ChangeSet out;
    apply_insert_batch(
        g, h, registry, [&](const Clique& c) { out.new_cliques.push_back(c); },
        [&](const Clique& c) { out.del_cliques.push_back(c); }, method, stats);
    return out;
}

/// Streaming delete. Λ^del(G, G − H) are the new cliques of G relative to
/// G − H; Λ^new(G, G − H) are the pieces of those that are maximal in G − H,
/// checked directly against G − H since the registry only knows cliques(G).
template <class OnNew, class OnDel>
void apply_delete_batch(Graph& g, const EdgeBatch& h, CliqueRegistry& registry, OnNew&& on_new,
                        OnDel&& on_del, NewCliqueMethod method = NewCliqueMethod::exclude,
                        SubsumedStats* stats = nullptr)
{
    if (h.mode != BatchMode::remove)
        throw InvalidBatchError("delete update needs a delete batch");
    validate_batch(g, h);
    EdgeSet removed(h.edges.begin(), h.edges.end());
    auto adjacent_after = [&](VertexId a, VertexId b) {
        Edge e(a, b);
        return g.has_edge(e) && !removed.contains(e);
    };
    // c is a clique of G − H; maximal there iff no outside vertex joins all of it.
    auto maximal_after = [&](const Clique& c) {
        VertexId anchor = *std::min_element(c.begin(), c.end(), [&](VertexId a, VertexId b) {
            return g.degree(a) < g.degree(b);
        });
        for (VertexId w : g.neighbors(anchor)) {
            if (contains_vertex(c, w) || removed.contains(Edge(anchor, w)))
                continue;
            bool joins_all = true;
            for (VertexId x : c)
                if (x != anchor && !adjacent_after(w, x)) {
                    joins_all = false;
                    break;
                }
            if (joins_all)
                return false;
        }
        return true;
    };

    CliqueRegistry::Transaction tx(registry);
    SubsumedEnumerator<decltype(maximal_after)> sub(h.edges, maximal_after);
    detail::enum_new_on(g, h.edges, method, [&](const Clique& c) {
        on_del(c);
        tx.remove(c);
        sub.feed(c, [&](const Clique& d) {
            on_new(d);
            tx.add(d);
        });
    });
    tx.commit();
    if (stats != nullptr)
        *stats = sub.stats();
    for (const Edge& e : h.edges)
        g.remove_edge(e);
}

inline ChangeSet apply_delete_batch(Graph& g, const EdgeBatch& h, CliqueRegistry& registry,
                                    NewCliqueMethod method = NewCliqueMethod::exclude,
                                    SubsumedStats* stats = nullptr)
{
    ChangeSet out;
    apply_delete_batch(
        g, h, registry, [&](const Clique& c) { out.new_cliques.push_back(c); },
        [&](const Clique& c) { out.del_cliques.push_back(c); }, method, stats);
    return out;
}

/// Insertions first, then deletions. The returned change is the net one
/// between the starting and final graphs: a clique created by one phase and
/// removed by the other appears in neither list.
inline ChangeSet fully_dynamic(Graph& g, const EdgeBatch& inserts, const EdgeBatch& deletes,
                               CliqueRegistry& registry,
                               NewCliqueMethod method = NewCliqueMethod::exclude)
{
    if (inserts.mode != BatchMode::insert || deletes.mode != BatchMode::remove)
        throw InvalidBatchError("fully dynamic update needs an insert and a delete batch");
    EdgeSet inserted(inserts.edges.begin(), inserts.edges.end());
    for (const Edge& e : deletes.edges)
        if (inserted.contains(e))
            throw InvalidBatchError("edge " + to_string(e) + " both inserted and deleted");
    validate_batch(g, inserts);
    validate_batch(g, deletes);

    ChangeSet first = apply_insert_batch(g, inserts, registry, method);
    ChangeSet second;
    try {
        second = apply_delete_batch(g, deletes, registry, method);
    } catch (...) {
        // roll the insert phase back so the call stays all-or-nothing
        for (const Edge& e : inserts.edges)
            g.remove_edge(e);
        registry.apply(ChangeSet{first.del_cliques, first.new_cliques});
        throw;
    }

    auto as_set = [](const std::vector<Clique>& v) { return std::set<Clique>(v.begin(), v.end()); };
    const auto new1 = as_set(first.new_cliques);
    const auto del1 = as_set(first.del_cliques);
    const auto new2 = as_set(second.new_cliques);
    const auto del2 = as_set(second.del_cliques);

    ChangeSet net;
    for (const Clique& c : first.new_cliques)
        if (!del2.contains(c))
            net.new_cliques.push_back(c);
    for (const Clique& c : second.new_cliques)
        if (!del1.contains(c))
            net.new_cliques.push_back(c);
    for (const Clique& c : first.del_cliques)
        if (!new2.contains(c))
            net.del_cliques.push_back(c);
    for (const Clique& c : second.del_cliques)
        if (!new1.contains(c))
            net.del_cliques.push_back(c);
    return net;
}

/// Baseline: recompute every maximal clique after the update and diff against
/// the previous full list. `current` must hold cliques(g), sorted; it is
/// replaced by cliques(G ± H).
inline ChangeSet apply_batch_naive(Graph& g, const EdgeBatch& h, std::vector<Clique>& current)
{
    validate_batch(g, h);
    for (const Edge& e : h.edges) {
        if (h.mode == BatchMode::insert)
            g.add_edge(e);
        else
            g.remove_edge(e);
    }
    std::vector<Clique> next = ttt(g);
    std::sort(next.begin(), next.end());
    ChangeSet out;
    std::set_difference(next.begin(), next.end(), current.begin(), current.end(),
                        std::back_inserter(out.new_cliques));
    std::set_difference(current.begin(), current.end(), next.begin(), next.end(),
                        std::back_inserter(out.del_cliques));
    current = std::move(next);
    return out;
}

/// Sum over changed cliques of k(k-1)/2, the number of edges inside each.
inline std::size_t total_change_size(const ChangeSet& change)
{
    std::size_t total = 0;
    for (const auto* list : {&change.new_cliques, &change.del_cliques})
        for (const Clique& c : *list)
            total += c.size() * (c.size() - 1) / 2;
    return total;
}

}  // namespace dynclique
