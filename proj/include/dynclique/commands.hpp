#pragma once

// Subcommands of the dynclique tool. Each returns a process exit code and
// writes only to the streams it is given, so tests can drive them directly.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dynclique/delta.hpp"
#include "dynclique/errors.hpp"
#include "dynclique/extremal.hpp"
#include "dynclique/graph.hpp"
#include "dynclique/signature.hpp"
#include "dynclique/stream.hpp"
#include "dynclique/ttt.hpp"
#include "dynclique/verify.hpp"

namespace dynclique {

enum exit_code : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_verify = 3,
};

class FileError : public Error {
public:
    using Error::Error;
};

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FileError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& data)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size())))
        throw FileError("cannot write " + path);
}

/// Per-batch row of the stream metrics CSV.
struct BatchMetrics {
    std::size_t batch_index = 0;
    std::size_t batch_size = 0;
    std::int64_t elapsed_ms = 0;
    std::size_t new_count = 0;
    std::size_t del_count = 0;
    std::size_t total_change_size = 0;
};

inline constexpr const char* metrics_header =
    "batch_index,batch_size,elapsed_ms,new_count,del_count,total_change_size";

inline std::string to_csv_row(const BatchMetrics& m)
{
    return std::to_string(m.batch_index) + "," + std::to_string(m.batch_size) + "," +
           std::to_string(m.elapsed_ms) + "," + std::to_string(m.new_count) + "," +
           std::to_string(m.del_count) + "," + std::to_string(m.total_change_size);
}

// --- mce ---------------------------------------------------------------

struct MceOptions {
    std::string input;
    bool count_only = false;
};

inline int cmd_mce(const MceOptions& opt, std::ostream& out, std::ostream& err)
{
    try {
        ParseReport report;
        Graph g = parse_edge_list(read_file(opt.input), &report);
        if (report.warnings() > 0)
            err << "warning: dropped " << report.self_loops << " self loop(s) and "
                << report.duplicates << " duplicate edge(s)\n";
        std::size_t count = 0;
        ttt(g, [&](const Clique& c) {
            ++count;
            if (!opt.count_only)
                out << canonical_string(c) << "\n";
        });
        out << "count=" << count << "\n";
        return exit_ok;
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const ParseError& e) {
        err << "error: " << opt.input << ": " << e.what() << "\n";
        return exit_parse;
    }
}

// --- stream ------------------------------------------------------------

enum class StreamAlgo { enumn, enumnte, naive };

struct StreamOptions {
    std::string input;
    StreamAlgo algo = StreamAlgo::enumnte;
    std::string metrics_out;    ///< empty: CSV goes to `out`
    std::string emit_cliques;   ///< empty: no listing
    bool verify_signatures = false;
    std::string snapshot_out;   ///< empty: no snapshot
};

/// Replays a stream, returning the per-batch metrics and optionally the
/// change sets. Shared by cmd_stream and the benchmarks.
struct ReplayResult {
    std::vector<BatchMetrics> metrics;
    std::vector<ChangeSet> changes;
    std::vector<double> seconds;  ///< unrounded per-batch update time
    Graph final_graph;
    CliqueRegistry registry;
};

inline ReplayResult replay_stream(const EdgeStream& stream, StreamAlgo algo, bool keep_changes,
                                  SignatureMode mode = SignatureMode::fast)
{
    using clock = std::chrono::steady_clock;
    ReplayResult r;
    r.final_graph = stream.initial;
    Graph& g = r.final_graph;
    std::vector<Clique> current = ttt(g);
    std::sort(current.begin(), current.end());
    r.registry = CliqueRegistry::from_cliques(current, mode);
    if (algo != StreamAlgo::naive)
        current.clear();

    for (std::size_t i = 0; i < stream.batches.size(); ++i) {
        const EdgeBatch& batch = stream.batches[i];
        ChangeSet change;
        auto start = clock::now();
        switch (algo) {
        case StreamAlgo::enumn:
            change = apply_insert_batch(g, batch, r.registry, NewCliqueMethod::filter);
            break;
        case StreamAlgo::enumnte:
            change = apply_insert_batch(g, batch, r.registry, NewCliqueMethod::exclude);
            break;
        case StreamAlgo::naive:
            change = apply_batch_naive(g, batch, current);
            break;
        }
        auto elapsed = clock::now() - start;
        if (algo == StreamAlgo::naive)
            registry_update(r.registry, change);

        BatchMetrics m;
        m.batch_index = i;
        m.batch_size = batch.size();
        m.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        m.new_count = change.new_cliques.size();
        m.del_count = change.del_cliques.size();
        m.total_change_size = total_change_size(change);
        r.metrics.push_back(m);
        r.seconds.push_back(std::chrono::duration<double>(elapsed).count());
        if (keep_changes)
            r.changes.push_back(std::move(change));
    }
    return r;
}

inline int cmd_stream(const StreamOptions& opt, std::ostream& out, std::ostream& err)
{
    EdgeStream stream;
    try {
        stream = read_stream(read_file(opt.input));
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const ParseError& e) {
        err << "error: " << opt.input << ": " << e.what() << "\n";
        return exit_parse;
    }

    const bool listing = !opt.emit_cliques.empty();
    const SignatureMode mode = opt.verify_signatures ? SignatureMode::strict : SignatureMode::fast;
    ReplayResult r;
    try {
        r = replay_stream(stream, opt.algo, listing, mode);
    } catch (const SignatureCollisionError& e) {
        err << "verification failed: " << e.what() << "\n";
        return exit_verify;
    } catch (const RegistryError& e) {
        err << "verification failed: " << e.what() << "\n";
        return exit_verify;
    }

    std::string csv = std::string(metrics_header) + "\n";
    for (const BatchMetrics& m : r.metrics)
        csv += to_csv_row(m) + "\n";

    try {
        if (opt.metrics_out.empty())
            out << csv;
        else
            write_file(opt.metrics_out, csv);

        if (listing) {
            std::string text;
            for (std::size_t i = 0; i < r.changes.size(); ++i) {
                text += "batch " + std::to_string(i) + "\n";
                for (const Clique& c : r.changes[i].new_cliques)
                    text += "+ " + canonical_string(c) + "\n";
                for (const Clique& c : r.changes[i].del_cliques)
                    text += "- " + canonical_string(c) + "\n";
            }
            write_file(opt.emit_cliques, text);
        }

        if (!opt.snapshot_out.empty())
            write_file(opt.snapshot_out, registry_snapshot(r.registry));
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }

    if (opt.verify_signatures) {
        // Full recount on the final graph, with strings kept to catch collisions.
        try {
            auto full = CliqueRegistry::from_cliques(ttt(r.final_graph), SignatureMode::strict);
            if (!(full == r.registry)) {
                err << "verification failed: registry holds " << r.registry.size()
                    << " signatures, final graph has " << full.size() << " maximal cliques\n";
                return exit_verify;
            }
        } catch (const SignatureCollisionError& e) {
            err << "verification failed: " << e.what() << "\n";
            return exit_verify;
        }
        err << "signatures verified: " << r.registry.size() << " cliques\n";
    }
    return exit_ok;
}

// --- gen-stream --------------------------------------------------------

struct GenStreamOptions {
    std::string input;
    std::string output;
    StreamConfig config;
};

inline int cmd_gen_stream(const GenStreamOptions& opt, std::ostream& out, std::ostream& err)
{
    try {
        ParseReport report;
        Graph g = parse_edge_list(read_file(opt.input), &report);
        if (report.warnings() > 0)
            err << "warning: dropped " << report.self_loops << " self loop(s) and "
                << report.duplicates << " duplicate edge(s)\n";
        EdgeStream s = gen_stream(g, opt.config);
        std::string text = write_stream(s);
        if (opt.output.empty())
            out << text;
        else
            write_file(opt.output, text);
        return exit_ok;
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const ParseError& e) {
        err << "error: " << opt.input << ": " << e.what() << "\n";
        return exit_parse;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

// --- verify ------------------------------------------------------------

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err)
{
    if (opt.trials == 0) {
        err << "warning: --trials 0, nothing checked\n";
        out << "PASS 0 trials\n";
        return exit_ok;
    }
    if (opt.max_n > oracle_vertex_limit) {
        err << "error: --max-n is limited to " << oracle_vertex_limit << "\n";
        return exit_usage;
    }
    VerifyReport report = run_verification(opt);
    if (!report.passed()) {
        out << "FAIL " << report.failure;
        return exit_verify;
    }
    out << "PASS " << report.trials_run << " trials\n";
    return exit_ok;
}

// --- extremal ----------------------------------------------------------

struct ExtremalOptions {
    std::string kind;  ///< moon-moser | single-edge | batch | mm-pair
    std::size_t n = 0;
    std::optional<std::size_t> eps;
    std::string prefix;  ///< output path prefix; defaults to the kind
};

/// Edge-list of g, preceded by a comment so vertices of degree zero survive
/// re-reading (they are written as self-loop lines).
inline std::string extremal_file(const Graph& g, const std::string& title)
{
    return "# " + title + "\n" + write_edge_list(g);
}

inline std::string stream_with_batch(const Graph& g, std::vector<Edge> batch)
{
    EdgeStream s;
    s.initial = g;
    s.batches.push_back(EdgeBatch{std::move(batch), BatchMode::insert});
    return write_stream(s);
}

inline int cmd_extremal(const ExtremalOptions& opt, std::ostream& out, std::ostream& err)
{
    const std::string prefix = opt.prefix.empty() ? opt.kind : opt.prefix;
    const std::size_t n = opt.n;
    std::vector<std::string> written;
    auto emit = [&](const std::string& path, const std::string& data) {
        write_file(path, data);
        written.push_back(path);
    };
    try {
        std::string sidecar;
        if (opt.kind == "moon-moser") {
            Graph g = moon_moser(n);
            emit(prefix + ".edges", extremal_file(g, "moon-moser n=" + std::to_string(n)));
            sidecar = "cliques=" + std::to_string(f_max(n)) + "\n";
        } else if (opt.kind == "single-edge") {
            auto [g, e] = single_edge_extremal(n);
            const std::uint64_t core = detail::max_cliques_from_one(n - 2);
            emit(prefix + ".edges", extremal_file(g, "single-edge n=" + std::to_string(n) +
                                                         " e=" + to_string(e)));
            emit(prefix + ".stream", stream_with_batch(g, {e}));
            sidecar = "edge=" + std::to_string(e.u()) + "," + std::to_string(e.v()) + "\n" +
                      "cliques=" + std::to_string(2 * core) + "\n" +
                      "new=" + std::to_string(core) + "\n" + "del=" + std::to_string(2 * core) +
                      "\n" + "lambda=" + std::to_string(3 * core) + "\n";
        } else if (opt.kind == "batch") {
            if (!opt.eps) {
                err << "error: batch needs eps\n";
                return exit_usage;
            }
            const std::size_t eps = *opt.eps;
            auto [g, h] = batch_extremal(n, eps);
            emit(prefix + ".edges", extremal_file(g, "batch n=" + std::to_string(n) +
                                                         " eps=" + std::to_string(eps)));
            emit(prefix + ".stream", stream_with_batch(g, h.edges));
            sidecar = "batch_edges=" + std::to_string(h.size()) + "\n" +
                      "cliques=" + std::to_string(eps * f_max(n - eps)) + "\n" +
                      "lambda=" + std::to_string(batch_extremal_change(n, eps)) + "\n";
        } else if (opt.kind == "mm-pair") {
            auto [h, g] = moon_moser_correction_pair(n);
            const std::uint64_t f = f_max(n);
            emit(prefix + "_H.edges", extremal_file(h, "mm-pair H n=" + std::to_string(n)));
            emit(prefix + "_G.edges", extremal_file(g, "mm-pair G n=" + std::to_string(n)));
            emit(prefix + "_H.expected", "cliques=" + std::to_string(f) + "\n");
            emit(prefix + "_G.expected", "cliques=" + std::to_string(f) + "\n");
            emit(prefix + ".stream", stream_with_batch(h, correction_cycle()));
            sidecar = "cliques=" + std::to_string(f) + "\n" +
                      "lambda=" + std::to_string(2 * f) + "\n";
        } else {
            err << "error: unknown kind '" << opt.kind
                << "' (expected moon-moser, single-edge, batch or mm-pair)\n";
            return exit_usage;
        }
        emit(prefix + ".expected", sidecar);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }
    for (const auto& path : written)
        out << "wrote " << path << "\n";
    return exit_ok;
}

}  // namespace dynclique
