#pragma once

// Edge-list parsing and dynamic edge streams.
//
// Edge list: one "u v" pair per line, '#' comments, direction ignored.
// A self-loop line "v v" is dropped as an edge but keeps v as a vertex, which
// is how isolated vertices are written out.
//
// Stream file:
//     initial <m>
//     <m lines "u v">
//     isolated <k>          (optional; vertices that appear in no edge)
//     <k lines "v">
//     batch <k>             (repeated)
//     <k lines "u v">

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dynclique/errors.hpp"
#include "dynclique/graph.hpp"
#include "dynclique/random.hpp"

namespace dynclique {

struct ParseReport {
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;

    std::size_t warnings() const noexcept { return self_loops + duplicates; }
};

namespace detail {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    /// Next line without its terminator; false at end of input.
    bool next(std::string_view& line)
    {
        if (pos_ >= text_.size())
            return false;
        std::size_t end = text_.find('\n', pos_);
        if (end == std::string_view::npos)
            end = text_.size();
        line = text_.substr(pos_, end - pos_);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        pos_ = end + 1;
        ++number_;
        return true;
    }

    std::size_t number() const noexcept { return number_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t number_ = 0;
};

inline std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool blank_or_comment(std::string_view line)
{
    auto tokens = split_ws(line);
    return tokens.empty() || tokens.front().front() == '#';
}

inline VertexId parse_id(std::string_view token, std::size_t line)
{
    VertexId v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, ParseErrorKind::token,
                         "expected a non-negative integer vertex ID, got '" + std::string(token) + "'");
    return v;
}

inline std::pair<VertexId, VertexId> parse_pair(std::string_view text, std::size_t line)
{
    auto tokens = split_ws(text);
    if (tokens.size() != 2)
        throw ParseError(line, ParseErrorKind::token,
                         "expected two vertex IDs, got " + std::to_string(tokens.size()) + " tokens");
    return {parse_id(tokens[0], line), parse_id(tokens[1], line)};
}

inline void put_edge(std::string& out, VertexId a, VertexId b)
{
    out += std::to_string(a);
    out.push_back('\t');
    out += std::to_string(b);
    out.push_back('\n');
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text, ParseReport* report = nullptr)
{
    Graph g;
    ParseReport local;
    detail::LineReader reader(text);
    std::string_view line;
    while (reader.next(line)) {
        if (detail::blank_or_comment(line))
            continue;
        auto [a, b] = detail::parse_pair(line, reader.number());
        if (a == b) {
            g.add_vertex(a);
            ++local.self_loops;
            continue;
        }
        Edge e(a, b);
        if (g.has_edge(e)) {
            ++local.duplicates;
            continue;
        }
        g.add_edge(e);
    }
    if (report != nullptr)
        *report = local;
    return g;
}

/// Edges in sorted order, then isolated vertices as "v v" lines.
inline std::string write_edge_list(const Graph& g)
{
    std::string out;
    for (const Edge& e : g.edges())
        detail::put_edge(out, e.u(), e.v());
    for (VertexId v : g.vertices())
        if (g.degree(v) == 0)
            detail::put_edge(out, v, v);
    return out;
}

enum class StreamOrdering { random, high_degree };

struct StreamConfig {
    double retain_prob = 0.1;
    std::size_t batch_size = 1000;
    std::uint64_t seed = 1;
    StreamOrdering ordering = StreamOrdering::random;
    /// Number of top-degree vertices for StreamOrdering::high_degree.
    std::size_t high_degree_k = 100;
};

/// Starting graph plus the insert batches that follow it. The starting graph
/// holds every vertex the stream mentions.
struct EdgeStream {
    Graph initial;
    std::vector<EdgeBatch> batches;

    friend bool operator==(const EdgeStream& a, const EdgeStream& b)
    {
        if (!(a.initial == b.initial) || a.batches.size() != b.batches.size())
            return false;
        for (std::size_t i = 0; i < a.batches.size(); ++i)
            if (a.batches[i].edges != b.batches[i].edges || a.batches[i].mode != b.batches[i].mode)
                return false;
        return true;
    }
};

/// Keeps each edge of g with probability retain_prob (edges visited in sorted
/// order), shuffles the rest and cuts them into batches. In high-degree mode
/// only discarded edges touching one of the k highest-degree vertices of the
/// starting graph are streamed (degree ties go to the smaller ID); they are
/// filtered first, then shuffled.
inline EdgeStream gen_stream(const Graph& g, const StreamConfig& cfg)
{
    if (!(cfg.retain_prob >= 0.0 && cfg.retain_prob <= 1.0))
        throw PreconditionError("retain_prob must be in [0, 1]");
    if (cfg.batch_size == 0)
        throw PreconditionError("batch_size must be positive");
    if (cfg.ordering == StreamOrdering::high_degree && cfg.high_degree_k == 0)
        throw PreconditionError("high_degree_k must be positive");

    Rng rng(cfg.seed);
    EdgeStream s;
    for (VertexId v : g.vertices())
        s.initial.add_vertex(v);
    std::vector<Edge> rest;
    for (const Edge& e : g.edges()) {
        if (rng.bernoulli(cfg.retain_prob))
            s.initial.add_edge(e);
        else
            rest.push_back(e);
    }

    if (cfg.ordering == StreamOrdering::high_degree) {
        std::vector<VertexId> by_degree = s.initial.vertices();
        std::stable_sort(by_degree.begin(), by_degree.end(), [&](VertexId a, VertexId b) {
            return s.initial.degree(a) > s.initial.degree(b);
        });
        by_degree.resize(std::min(by_degree.size(), cfg.high_degree_k));
        std::unordered_set<VertexId> hubs(by_degree.begin(), by_degree.end());
        std::erase_if(rest, [&](const Edge& e) { return !hubs.contains(e.u()) && !hubs.contains(e.v()); });
    }
    rng.shuffle(std::span<Edge>(rest));

    for (std::size_t i = 0; i < rest.size(); i += cfg.batch_size) {
        std::size_t end = std::min(rest.size(), i + cfg.batch_size);
        s.batches.push_back(EdgeBatch{{rest.begin() + static_cast<std::ptrdiff_t>(i),
                                       rest.begin() + static_cast<std::ptrdiff_t>(end)},
                                      BatchMode::insert});
    }
    return s;
}

inline std::string write_stream(const EdgeStream& s)
{
    std::unordered_set<VertexId> mentioned;
    for (const EdgeBatch& b : s.batches)
        for (const Edge& e : b.edges) {
            mentioned.insert(e.u());
            mentioned.insert(e.v());
        }
    std::vector<VertexId> isolated;
    for (VertexId v : s.initial.vertices())
        if (s.initial.degree(v) == 0 && !mentioned.contains(v))
            isolated.push_back(v);

    std::string out = "initial " + std::to_string(s.initial.edge_count()) + "\n";
    for (const Edge& e : s.initial.edges())
        detail::put_edge(out, e.u(), e.v());
    if (!isolated.empty()) {
        out += "isolated " + std::to_string(isolated.size()) + "\n";
        for (VertexId v : isolated)
            out += std::to_string(v) + "\n";
    }
    for (const EdgeBatch& b : s.batches) {
        out += "batch " + std::to_string(b.edges.size()) + "\n";
        for (const Edge& e : b.edges)
            detail::put_edge(out, e.u(), e.v());
    }
    return out;
}

inline EdgeStream read_stream(std::string_view text)
{
    detail::LineReader reader(text);
    std::string_view line;

    auto section = [&](std::string_view expected_or_any, std::string& name) -> std::size_t {
        auto tokens = detail::split_ws(line);
        const auto kind =
            expected_or_any == "initial" ? ParseErrorKind::header : ParseErrorKind::section;
        if (tokens.size() != 2)
            throw ParseError(reader.number(), kind, "malformed section line '" + std::string(line) + "'");
        name = std::string(tokens[0]);
        if (std::all_of(name.begin(), name.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw ParseError(reader.number(), ParseErrorKind::count,
                             "edge line where a section header was expected (section longer than declared)");
        if (!expected_or_any.empty() && name != expected_or_any)
            throw ParseError(reader.number(), kind,
                             "expected '" + std::string(expected_or_any) + "', got '" + name + "'");
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), n);
        if (ec != std::errc() || ptr != tokens[1].data() + tokens[1].size())
            throw ParseError(reader.number(), kind, "bad section size '" + std::string(tokens[1]) + "'");
        return n;
    };

    auto next_content = [&]() {
        while (reader.next(line))
            if (!detail::blank_or_comment(line))
                return true;
        return false;
    };

    if (!next_content())
        throw ParseError(reader.number(), ParseErrorKind::header, "missing 'initial' header");
    std::string name;
    std::size_t count = section("initial", name);

    EdgeStream s;
    auto read_edges = [&](std::size_t k, std::vector<Edge>& into) {
        for (std::size_t i = 0; i < k; ++i) {
            if (!next_content())
                throw ParseError(reader.number(), ParseErrorKind::count,
                                 "section ended after " + std::to_string(i) + " of " +
                                     std::to_string(k) + " edges");
            auto tokens = detail::split_ws(line);
            if (tokens.size() == 2 && (tokens[0] == "batch" || tokens[0] == "isolated"))
                throw ParseError(reader.number(), ParseErrorKind::count,
                                 "section ended after " + std::to_string(i) + " of " +
                                     std::to_string(k) + " edges");
            auto [a, b] = detail::parse_pair(line, reader.number());
            if (a == b)
                throw ParseError(reader.number(), ParseErrorKind::token, "self loop in stream");
            into.emplace_back(a, b);
        }
    };

    std::vector<Edge> initial_edges;
    read_edges(count, initial_edges);
    for (const Edge& e : initial_edges) {
        if (s.initial.has_edge(e))
            throw ParseError(reader.number(), ParseErrorKind::token, "duplicate initial edge " + to_string(e));
        s.initial.add_edge(e);
    }

    EdgeSet seen(initial_edges.begin(), initial_edges.end());
    bool first_section = true;
    while (next_content()) {
        count = section("", name);
        if (name == "isolated") {
            if (!first_section)
                throw ParseError(reader.number(), ParseErrorKind::section,
                                 "'isolated' must directly follow the initial edges");
            for (std::size_t i = 0; i < count; ++i) {
                if (!next_content())
                    throw ParseError(reader.number(), ParseErrorKind::count, "isolated section too short");
                auto tokens = detail::split_ws(line);
                if (tokens.size() != 1)
                    throw ParseError(reader.number(), ParseErrorKind::count, "isolated section too short");
                s.initial.add_vertex(detail::parse_id(tokens[0], reader.number()));
            }
        } else if (name == "batch") {
            EdgeBatch b;
            read_edges(count, b.edges);
            for (const Edge& e : b.edges)
                if (!seen.insert(e).second)
                    throw ParseError(reader.number(), ParseErrorKind::token,
                                     "edge " + to_string(e) + " streamed twice");
            s.batches.push_back(std::move(b));
        } else {
            throw ParseError(reader.number(), ParseErrorKind::section, "unknown section '" + name + "'");
        }
        first_section = false;
    }

    for (const EdgeBatch& b : s.batches)
        for (const Edge& e : b.edges) {
            s.initial.add_vertex(e.u());
            s.initial.add_vertex(e.v());
        }
    return s;
}

}  // namespace dynclique
