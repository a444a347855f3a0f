#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dynclique/errors.hpp"

namespace dynclique {

using VertexId = std::uint64_t;

/// Undirected edge, always stored with u() < v().
class Edge {
public:
    Edge(VertexId a, VertexId b) : u_(std::min(a, b)), v_(std::max(a, b))
    {
        if (a == b)
            throw SelfLoopError("self loop on vertex " + std::to_string(a));
    }

    VertexId u() const noexcept { return u_; }
    VertexId v() const noexcept { return v_; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;

private:
    VertexId u_;
    VertexId v_;
};

inline std::string to_string(const Edge& e)
{
    return "(" + std::to_string(e.u()) + "," + std::to_string(e.v()) + ")";
}

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept
    {
        std::uint64_t h = e.u() * 0x9E3779B97F4A7C15ULL;
        h ^= e.v() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

using EdgeSet = std::unordered_set<Edge, EdgeHash>;

/// Mutable simple undirected graph. Vertices keep their external IDs;
/// adjacency lists are kept sorted so neighbourhood intersection is a merge.
class Graph {
public:
    Graph() = default;

    bool has_vertex(VertexId v) const { return index_.contains(v); }

    /// Returns false if the vertex already existed.
    bool add_vertex(VertexId v)
    {
        auto [it, inserted] = index_.try_emplace(v, static_cast<std::uint32_t>(ids_.size()));
        if (inserted) {
            ids_.push_back(v);
            adj_.emplace_back();
        }
        return inserted;
    }

    bool has_edge(const Edge& e) const
    {
        auto it = index_.find(e.u());
        if (it == index_.end() || !has_vertex(e.v()))
            return false;
        const auto& nb = adj_[it->second];
        return std::binary_search(nb.begin(), nb.end(), e.v());
    }

    /// Endpoints are created on demand.
    void add_edge(const Edge& e)
    {
        if (has_edge(e))
            throw DuplicateEdgeError("edge " + to_string(e) + " already present");
        add_vertex(e.u());
        add_vertex(e.v());
        insert_sorted(adj_[index_.at(e.u())], e.v());
        insert_sorted(adj_[index_.at(e.v())], e.u());
        ++edge_count_;
    }

    /// Both endpoints stay in the graph, possibly isolated.
    void remove_edge(const Edge& e)
    {
        if (!has_edge(e))
            throw AbsentEdgeError("edge " + to_string(e) + " not present");
        erase_sorted(adj_[index_.at(e.u())], e.v());
        erase_sorted(adj_[index_.at(e.v())], e.u());
        --edge_count_;
    }

    std::span<const VertexId> neighbors(VertexId v) const { return adj_[slot(v)]; }

    std::size_t degree(VertexId v) const { return adj_[slot(v)].size(); }

    std::size_t vertex_count() const noexcept { return ids_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Sorted ascending.
    std::vector<VertexId> vertices() const
    {
        std::vector<VertexId> out = ids_;
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Sorted ascending by (u, v).
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t i = 0; i < ids_.size(); ++i)
            for (VertexId w : adj_[i])
                if (ids_[i] < w)
                    out.emplace_back(ids_[i], w);
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
            return false;
        for (std::size_t i = 0; i < a.ids_.size(); ++i) {
            VertexId v = a.ids_[i];
            if (!b.has_vertex(v))
                return false;
            auto other = b.neighbors(v);
            if (!std::equal(a.adj_[i].begin(), a.adj_[i].end(), other.begin(), other.end()))
                return false;
        }
        return true;
    }

private:
    std::size_t slot(VertexId v) const
    {
        auto it = index_.find(v);
        if (it == index_.end())
            throw UnknownVertexError("unknown vertex " + std::to_string(v));
        return it->second;
    }

    static void insert_sorted(std::vector<VertexId>& list, VertexId v)
    {
        list.insert(std::lower_bound(list.begin(), list.end(), v), v);
    }

    static void erase_sorted(std::vector<VertexId>& list, VertexId v)
    {
        list.erase(std::lower_bound(list.begin(), list.end(), v));
    }

    std::unordered_map<VertexId, std::uint32_t> index_;
    std::vector<VertexId> ids_;
    std::vector<std::vector<VertexId>> adj_;
    std::size_t edge_count_ = 0;
};

/// Sorted Γ(u) ∩ Γ(v).
inline std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v)
{
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Graph induced_subgraph(const Graph& g, std::span<const VertexId> vs)
{
    std::vector<VertexId> keep(vs.begin(), vs.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    Graph out;
    for (VertexId v : keep) {
        if (!g.has_vertex(v))
            throw UnknownVertexError("unknown vertex " + std::to_string(v));
        out.add_vertex(v);
    }
    for (VertexId v : keep)
        for (VertexId w : g.neighbors(v))
            if (v < w && std::binary_search(keep.begin(), keep.end(), w))
                out.add_edge(Edge(v, w));
    return out;
}

enum class BatchMode { insert, remove };

/// Ordered batch of edges applied together. The order is the processing order
/// used by the change enumerators.
struct EdgeBatch {
    std::vector<Edge> edges;
    BatchMode mode = BatchMode::insert;

    bool empty() const noexcept { return edges.empty(); }
    std::size_t size() const noexcept { return edges.size(); }
};

/// Throws InvalidBatchError unless the batch has no duplicates and, for insert
/// mode, no edge already in g, or for remove mode, every edge in g.
inline void validate_batch(const Graph& g, const EdgeBatch& h)
{
    EdgeSet seen;
    for (const Edge& e : h.edges) {
        if (!seen.insert(e).second)
            throw InvalidBatchError("duplicate edge " + to_string(e) + " in batch");
        bool present = g.has_edge(e);
        if (h.mode == BatchMode::insert && present)
            throw InvalidBatchError("inserted edge " + to_string(e) + " already present");
        if (h.mode == BatchMode::remove && !present)
            throw InvalidBatchError("deleted edge " + to_string(e) + " not present");
    }
}

}  // namespace dynclique
