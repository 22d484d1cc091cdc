#ifndef SLSPEC_CLI_HPP
#define SLSPEC_CLI_HPP

#include <string>

#include "slspec/potentials.hpp"
#include "slspec/propagator.hpp"

namespace slspec::cli {

struct RunConfig {
    std::string command;
    PotentialSpec potential;
    int M = 2048;
    int n_max = 64;
    SystemForm form = SystemForm::sigma_form;
    std::string bc = "both"; // both | dirichlet | neumann
    std::string output_dir = ".";
    std::uint64_t seed = 1;
    int threads = 0;         // 0 = hardware
    double lambda_max = 40.0;
    int lambda_count = 81;
    int mc_samples = 200000;
    double alpha = -1.0;     // <0: derive from the potential spec

    void validate() const;   // throws ConfigError
};

// key=value lines, '#' comments, unknown keys rejected with line numbers
RunConfig parse_config(const std::string& text);

// single `--key value` override on top of a parsed config
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value,
                    const std::string& where);

// executes the configured pipeline; returns the process exit code
// (0 success, 1 numerical failure, 2 configuration error)
int run(const RunConfig& cfg);

// argv-level entry: [command] [--config file] [--key value]...
int main_entry(int argc, const char* const* argv);

} // namespace slspec::cli

#endif
