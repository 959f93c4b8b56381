#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace fatchroma::cli;

    CLI::App app{"fatchroma: exact chromatic and FAT chromatic numbers of simple graphs"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "graph file format")
        ->check(CLI::IsMember({"graph6", "dimacs"}))
        ->capture_default_str();
    app.add_flag("--json", global.json, "emit JSON instead of text");
    app.add_option("--timeout", global.timeout_seconds, "per-solve time budget in seconds");
    app.add_flag("--deterministic", global.deterministic,
                 "canonical witnesses even with --threads > 1");
    app.add_option("--threads", global.threads, "worker threads for independent branches")
        ->envname("FATCHROMA_THREADS")
        ->check(CLI::PositiveNumber);

    GenerateOptions generate;
    auto* gen_cmd = app.add_subcommand("generate", "emit a named graph family instance");
    gen_cmd->add_option("--family", generate.family, "family name")->required();
    gen_cmd->add_option("--params", generate.params, "comma-separated k=v parameters");
    gen_cmd->add_option("--out", generate.out_path, "output file (default stdout)");

    SolveCmdOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "solve chi, chifat, spectrum, or bounds");
    solve_cmd->add_option("--what", solve.what, "quantity to compute")
        ->check(CLI::IsMember({"chi", "chifat", "spectrum", "bounds"}))
        ->capture_default_str();
    solve_cmd->add_option("--in", solve.in_path, "input graph file, '-' for stdin")->required();
    solve_cmd->add_option("--cap", solve.spectrum_cap, "vertex cap for spectrum solves")
        ->capture_default_str();

    SolveCmdOptions spectrum;
    spectrum.what = "spectrum";
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "feasibility of every block count (alias of solve)");
    spectrum_cmd->add_option("--in", spectrum.in_path, "input graph file, '-' for stdin")
        ->required();
    spectrum_cmd->add_option("--cap", spectrum.spectrum_cap, "vertex cap for spectrum solves")
        ->capture_default_str();

    VerifyOptions verify;
    auto* verify_cmd =
        app.add_subcommand("verify", "check or infer FAT parameters for a coloring");
    verify_cmd->add_option("--in", verify.in_path, "input graph file")->required();
    verify_cmd->add_option("--coloring", verify.coloring_path, "one '<vertex> <label>' per line")
        ->required();
    verify_cmd->add_option("--alpha", verify.alpha, "off-class ratio p/q");
    verify_cmd->add_option("--beta", verify.beta, "own-class ratio p/q");

    ReproduceOptions reproduce;
    bool reproduce_all = false;
    auto* repro_cmd =
        app.add_subcommand("reproduce", "check the solver against known family values");
    repro_cmd->add_option("--theorem", reproduce.theorem,
                          "disconnected1|disconnected2|connected|general");
    repro_cmd->add_flag("--all", reproduce_all, "run every theorem (default)");
    repro_cmd->add_option("--lmax", reproduce.lmax, "largest L2 for the disconnected families")
        ->capture_default_str();
    repro_cmd->add_option("--nmax", reproduce.nmax, "largest n for the general family")
        ->capture_default_str();
    repro_cmd
        ->add_option("--connected-n", reproduce.connected_n,
                     "odd n values for the connected family (n=7 is a 49-vertex instance)")
        ->capture_default_str();

    // Global flags may appear after the subcommand name.
    for (auto* sub : {gen_cmd, solve_cmd, spectrum_cmd, verify_cmd, repro_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    if (gen_cmd->parsed())
        return cmd_generate(generate, global, std::cout, std::cerr);
    if (solve_cmd->parsed())
        return cmd_solve(solve, global, std::cout, std::cerr);
    if (spectrum_cmd->parsed())
        return cmd_solve(spectrum, global, std::cout, std::cerr);
    if (verify_cmd->parsed())
        return cmd_verify(verify, global, std::cout, std::cerr);
    if (repro_cmd->parsed()) {
        if (reproduce_all)
            reproduce.theorem.reset();
        return cmd_reproduce(reproduce, global, std::cout, std::cerr);
    }
    return kExitInputError;
}
