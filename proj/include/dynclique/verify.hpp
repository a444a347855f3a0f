#pragma once

// Randomised agreement checks between the incremental updates and the
// brute-force oracle. Drives the `verify` command.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dynclique/delta.hpp"
#include "dynclique/graph.hpp"
#include "dynclique/oracle.hpp"
#include "dynclique/random.hpp"
#include "dynclique/signature.hpp"
#include "dynclique/ttt.hpp"

namespace dynclique {

enum class TrialKind { insert, remove, mixed };

inline const char* to_string(TrialKind k)
{
    switch (k) {
    case TrialKind::insert: return "insert";
    case TrialKind::remove: return "delete";
    case TrialKind::mixed: return "mixed";
    }
    return "?";
}

struct VerifyOptions {
    std::size_t trials = 1000;
    std::size_t max_n = 25;
    std::size_t max_batch = 6;
    std::uint64_t seed = 1;
    /// Test hook: mutates each computed change before it is compared.
    std::function<void(ChangeSet&)> tamper;
};

struct VerifyReport {
    std::size_t trials_run = 0;
    /// Serialized failing instance; empty when every trial passed.
    std::string failure;

    bool passed() const noexcept { return failure.empty(); }
};

/// One random instance: n vertices 1..n, each pair an edge with probability
/// density, plus up to max_batch absent edges to insert and/or present edges
/// to delete.
struct TrialCase {
    TrialKind kind = TrialKind::insert;
    Graph graph;
    EdgeBatch inserts{{}, BatchMode::insert};
    EdgeBatch deletes{{}, BatchMode::remove};
    NewCliqueMethod method = NewCliqueMethod::exclude;
};

inline TrialCase random_trial(Rng& rng, TrialKind kind, std::size_t max_n, std::size_t max_batch)
{
    TrialCase t;
    t.kind = kind;
    const std::size_t n = static_cast<std::size_t>(rng.between(1, std::max<std::size_t>(1, max_n)));
    double density = rng.unit();
    while (density == 0.0)
        density = rng.unit();
    std::vector<Edge> present, absent;
    for (VertexId v = 1; v <= n; ++v)
        t.graph.add_vertex(v);
    for (VertexId a = 1; a <= n; ++a)
        for (VertexId b = a + 1; b <= n; ++b) {
            if (rng.bernoulli(density)) {
                t.graph.add_edge(Edge(a, b));
                present.emplace_back(a, b);
            } else {
                absent.emplace_back(a, b);
            }
        }
    rng.shuffle(std::span<Edge>(present));
    rng.shuffle(std::span<Edge>(absent));
    if (kind != TrialKind::remove) {
        std::size_t k = std::min<std::size_t>(rng.between(0, max_batch), absent.size());
        t.inserts.edges.assign(absent.begin(), absent.begin() + static_cast<std::ptrdiff_t>(k));
    }
    if (kind != TrialKind::insert) {
        std::size_t k = std::min<std::size_t>(rng.between(0, max_batch), present.size());
        t.deletes.edges.assign(present.begin(), present.begin() + static_cast<std::ptrdiff_t>(k));
    }
    t.method = rng.bernoulli(0.5) ? NewCliqueMethod::exclude : NewCliqueMethod::filter;
    return t;
}

namespace detail {

inline std::string describe_edges(const std::vector<Edge>& edges)
{
    std::string out;
    for (const Edge& e : edges)
        out += " " + std::to_string(e.u()) + "-" + std::to_string(e.v());
    return out;
}

inline std::string describe_cliques(const std::vector<Clique>& cliques)
{
    std::string out;
    for (const Clique& c : cliques)
        out += " {" + canonical_string(c) + "}";
    return out;
}

inline std::vector<Clique> sorted_copy(std::vector<Clique> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace detail

/// Runs one trial; returns a description of the disagreement, if any.
inline std::optional<std::string> check_trial(const TrialCase& t,
                                              const std::function<void(ChangeSet&)>& tamper = {})
{
    Graph after = t.graph;
    for (const Edge& e : t.inserts.edges)
        after.add_edge(e);
    for (const Edge& e : t.deletes.edges)
        after.remove_edge(e);
    const ChangeSet expected = oracle_diff(t.graph, after);

    Graph g = t.graph;
    CliqueRegistry registry = CliqueRegistry::from_cliques(ttt(g), SignatureMode::strict);
    ChangeSet got;
    switch (t.kind) {
    case TrialKind::insert: got = apply_insert_batch(g, t.inserts, registry, t.method); break;
    case TrialKind::remove: got = apply_delete_batch(g, t.deletes, registry, t.method); break;
    case TrialKind::mixed: got = fully_dynamic(g, t.inserts, t.deletes, registry, t.method); break;
    }
    if (tamper)
        tamper(got);

    std::vector<std::string> problems;
    auto new_sorted = detail::sorted_copy(got.new_cliques);
    auto del_sorted = detail::sorted_copy(got.del_cliques);
    if (std::adjacent_find(new_sorted.begin(), new_sorted.end()) != new_sorted.end())
        problems.push_back("duplicate new clique");
    if (std::adjacent_find(del_sorted.begin(), del_sorted.end()) != del_sorted.end())
        problems.push_back("duplicate subsumed clique");
    if (new_sorted != expected.new_cliques)
        problems.push_back("new cliques differ");
    if (del_sorted != expected.del_cliques)
        problems.push_back("subsumed cliques differ");

    // (cliques(G) \ del) ∪ new == cliques(G')
    auto before = oracle_cliques(t.graph);
    std::vector<Clique> rebuilt;
    std::set_difference(before.begin(), before.end(), del_sorted.begin(), del_sorted.end(),
                        std::back_inserter(rebuilt));
    rebuilt.insert(rebuilt.end(), new_sorted.begin(), new_sorted.end());
    std::sort(rebuilt.begin(), rebuilt.end());
    auto target = oracle_cliques(after);
    if (rebuilt != target)
        problems.push_back("reconstruction identity fails");
    if (!(registry == CliqueRegistry::from_cliques(target)))
        problems.push_back("registry differs from cliques of the updated graph");
    if (!(g == after))
        problems.push_back("graph not updated as requested");

    if (problems.empty())
        return std::nullopt;
    std::ostringstream out;
    for (const auto& p : problems)
        out << "  problem: " << p << "\n";
    out << "  kind: " << to_string(t.kind) << "\n";
    out << "  method: " << (t.method == NewCliqueMethod::exclude ? "enumnte" : "enumn") << "\n";
    out << "  vertices: " << t.graph.vertex_count() << "\n";
    out << "  edges:" << detail::describe_edges(t.graph.edges()) << "\n";
    out << "  inserts:" << detail::describe_edges(t.inserts.edges) << "\n";
    out << "  deletes:" << detail::describe_edges(t.deletes.edges) << "\n";
    out << "  expected new:" << detail::describe_cliques(expected.new_cliques) << "\n";
    out << "  expected del:" << detail::describe_cliques(expected.del_cliques) << "\n";
    out << "  got new:" << detail::describe_cliques(new_sorted) << "\n";
    out << "  got del:" << detail::describe_cliques(del_sorted) << "\n";
    return out.str();
}

/// Trials rotate insert, delete, mixed. Stops at the first failure.
inline VerifyReport run_verification(const VerifyOptions& opt)
{
    VerifyReport report;
    for (std::size_t i = 0; i < opt.trials; ++i) {
        Rng rng(opt.seed * 0x9E3779B97F4A7C15ULL + i);
        TrialKind kind = static_cast<TrialKind>(i % 3);
        TrialCase t = random_trial(rng, kind, opt.max_n, opt.max_batch);
        ++report.trials_run;
        if (auto failure = check_trial(t, opt.tamper)) {
            report.failure = "trial " + std::to_string(i) + " (seed " + std::to_string(opt.seed) +
                             ") failed\n" + *failure;
            break;
        }
    }
    return report;
}

}  // namespace dynclique
