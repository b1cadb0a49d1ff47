#include <iostream>

#include <CLI11.hpp>

#include "folx/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"folx - first-order logic engine over finite interpretations"};
    app.require_subcommand(1);

    CLI::App* run = app.add_subcommand("run", "run a .fol program");
    std::string path;
    folx::RunOptions options;
    std::string format = "text";
    run->add_option("file", path, "program file, or - for stdin")->required();
    run->add_flag("--dump-all", options.dumpAll, "dump every defined relation at the end");
    run->add_flag("--trace-fixpoint", options.traceFixpoint,
                  "print per-iteration relation sizes for rec blocks");
    run->add_flag("--no-assert", options.noAssert,
                  "do not fail the run when a holds query is false");
    run->add_option("--max-iterations", options.maxIterations,
                    "hard cap on fixpoint rounds (0 = theoretical bound)");
    run->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    run->add_option("--threads", options.threads, "worker threads (0 = auto)");
    run->add_flag("--serial", options.serial, "run the kernels serially");

    CLI11_PARSE(app, argc, argv);

    options.format = format == "json" ? folx::RunOptions::Format::Json
                                      : folx::RunOptions::Format::Text;
    return folx::runFile(path, options, std::cout, std::cerr);
}
