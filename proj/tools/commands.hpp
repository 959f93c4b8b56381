#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reproduce.hpp"

namespace fatchroma::cli {

// Documented exit codes, stable across subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitReject = 1; // verify rejection / reproduce mismatch
inline constexpr int kExitTimeout = 2;
inline constexpr int kExitInputError = 3;

struct GlobalOptions {
    std::string format = "graph6"; // graph6 | dimacs
    bool json = false;
    double timeout_seconds = 0.0;
    bool deterministic = false;
    int threads = 1;
};

SolveOptions solve_options(const GlobalOptions& g);

struct GenerateOptions {
    std::string family;
    std::string params; // "k=v,k=v"
    std::string out_path;  // empty = stdout
};

struct SolveCmdOptions {
    std::string what = "chifat"; // chi | chifat | spectrum | bounds
    std::string in_path;         // "-" = stdin
    int spectrum_cap = 32;
};

struct VerifyOptions {
    std::string in_path;
    std::string coloring_path;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
};

struct ReproduceOptions {
    std::optional<std::string> theorem; // absent = --all
    int lmax = 4;
    int nmax = 6;
    std::vector<int> connected_n = {5};
};

int cmd_generate(const GenerateOptions& opts, const GlobalOptions& global, std::ostream& out,
                 std::ostream& err);
int cmd_solve(const SolveCmdOptions& opts, const GlobalOptions& global, std::ostream& out,
              std::ostream& err);
int cmd_verify(const VerifyOptions& opts, const GlobalOptions& global, std::ostream& out,
               std::ostream& err);
int cmd_reproduce(const ReproduceOptions& opts, const GlobalOptions& global, std::ostream& out,
                  std::ostream& err);

} // namespace fatchroma::cli
