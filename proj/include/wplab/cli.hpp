#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wplab::cli {

enum ExitCode { Ok = 0, CheckFailed = 1, BadInput = 2, NumericFailure = 3 };

struct RunConfig {
    std::string command;
    std::string family = "identity";
    double c = 0.3;
    double eps = 0.05;
    int k = 2;
    std::string pair_file; ///< import a pair instead of building from the catalog
    int N = 64;
    std::vector<int> orders; ///< empty: just N
    std::string grid;        ///< "n_r x n_theta"; empty: default ladder or 256x512
    int samples = 0;         ///< Theodorsen M, 0 = automatic
    double tol = 0.0;        ///< 0: the command's default tolerance
    double s2 = 0.0;
    int genus = 2;
    int L = 2;
    std::string param;       ///< sweep parameter: c or eps
    std::vector<double> values;
    std::string range;       ///< "start:stop:step"
    std::string output;
    std::string format;      ///< json | csv; empty picks per command
    std::string dump_dir;    ///< matrix CSV dumps for the grunsky command
    int verbosity = 0;
};

/// Parse argv (flags, optional --config key=value file) into a RunConfig.
/// Throws InvalidInput on unknown commands or malformed values.
RunConfig parse_args(int argc, const char* const* argv);

/// Execute one command. Reports go to `out` (or the configured file), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping; the entry point of the executable.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wplab::cli
