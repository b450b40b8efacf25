#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monospline/approx.hpp"
#include "monospline/partition.hpp"

namespace monospline {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitSolver = 3, kExitInvariant = 4 };

struct RunConfig {
    std::string command;
    std::optional<std::string> function_id;
    std::optional<std::string> input_csv;
    std::optional<double> a;
    std::optional<double> b;
    ApproxConfig approx;
    PartitionKind partition = PartitionKind::Uniform;
    std::vector<int> sizes;
    double inner_fraction = 0.8;
    std::uint64_t seed = 42;
    std::string out_dir = "monospline_out";
    bool write_csv = true;
    bool write_json = true;
    int workers = 1;
    /// counterexample: exponents 1..n_max.
    int n_max = 99;
    /// check-markov: instances per degree.
    int trials = 1000;

    /// Throws ConfigInvalid naming the offending flag.
    void validate() const;
};

int cmd_approx(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_markov(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_counterexample(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (subcommands approx, converge, check-markov, counterexample),
/// runs the command and returns its exit status. Every failure is reported as
/// a single line on `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monospline
