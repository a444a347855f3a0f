#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "dynclique/commands.hpp"

using namespace dynclique;

int main(int argc, char** argv)
{
    CLI::App app{"Maximal clique enumeration on graphs that change in batches"};
    app.require_subcommand(1);

    MceOptions mce;
    auto* mce_cmd = app.add_subcommand("mce", "List the maximal cliques of an edge-list file");
    mce_cmd->add_option("input", mce.input, "Edge-list file")->required();
    mce_cmd->add_flag("--count-only", mce.count_only, "Print only count=<k>");

    StreamOptions stream;
    const std::map<std::string, StreamAlgo> algos{
        {"enumn", StreamAlgo::enumn}, {"enumnte", StreamAlgo::enumnte}, {"naive", StreamAlgo::naive}};
    auto* stream_cmd = app.add_subcommand("stream", "Replay a stream file and report per-batch metrics");
    stream_cmd->add_option("input", stream.input, "Stream file")->required();
    stream_cmd->add_option("--algo", stream.algo, "enumn, enumnte or naive")
        ->transform(CLI::CheckedTransformer(algos, CLI::ignore_case));
    stream_cmd->add_option("--metrics-out", stream.metrics_out, "CSV path (default: stdout)");
    stream_cmd->add_option("--emit-cliques", stream.emit_cliques,
                           "Write new (+) and subsumed (-) cliques of every batch to this path");
    stream_cmd->add_flag("--verify-signatures", stream.verify_signatures,
                         "Keep canonical strings, fail on hash collisions, recount at the end");
    stream_cmd->add_option("--snapshot-out", stream.snapshot_out, "Write the final registry snapshot");

    GenStreamOptions gen;
    bool high_degree = false;
    auto* gen_cmd = app.add_subcommand("gen-stream", "Build a stream file from a static edge list");
    gen_cmd->add_option("input", gen.input, "Edge-list file")->required();
    gen_cmd->add_option("-o,--output", gen.output, "Stream path (default: stdout)");
    gen_cmd->add_option("--retain", gen.config.retain_prob, "Probability of keeping an edge initially")
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--batch-size", gen.config.batch_size)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen.config.seed);
    gen_cmd->add_flag("--high-degree", high_degree,
                      "Stream only edges touching the top-k degree vertices");
    gen_cmd->add_option("--k", gen.config.high_degree_k, "Hub count for --high-degree")
        ->check(CLI::PositiveNumber);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Compare the updates with brute force on random graphs");
    verify_cmd->add_option("--trials", verify.trials);
    verify_cmd->add_option("--max-n", verify.max_n)->check(CLI::Range(1, 25));
    verify_cmd->add_option("--max-batch", verify.max_batch);
    verify_cmd->add_option("--seed", verify.seed);

    ExtremalOptions extremal;
    std::size_t eps = 0;
    auto* extremal_cmd = app.add_subcommand("extremal", "Write an extremal construction and its predicted counts");
    extremal_cmd->add_option("kind", extremal.kind, "moon-moser, single-edge, batch or mm-pair")
        ->required()
        ->check(CLI::IsMember({"moon-moser", "single-edge", "batch", "mm-pair"}));
    extremal_cmd->add_option("n", extremal.n)->required();
    auto* eps_opt = extremal_cmd->add_option("eps", eps, "Batch size parameter (batch only)");
    extremal_cmd->add_option("-o,--prefix", extremal.prefix, "Output path prefix (default: the kind)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (*mce_cmd)
        return cmd_mce(mce, std::cout, std::cerr);
    if (*stream_cmd)
        return cmd_stream(stream, std::cout, std::cerr);
    if (*gen_cmd) {
        if (high_degree)
            gen.config.ordering = StreamOrdering::high_degree;
        return cmd_gen_stream(gen, std::cout, std::cerr);
    }
    if (*verify_cmd)
        return cmd_verify(verify, std::cout, std::cerr);
    if (*extremal_cmd) {
        if (eps_opt->count() > 0)
            extremal.eps = eps;
        return cmd_extremal(extremal, std::cout, std::cerr);
    }
    return exit_usage;
}
