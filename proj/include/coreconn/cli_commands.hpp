#pragma once

#include <cstdint>
#include <string>

namespace coreconn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitGuardExceeded = 3;

enum class PairPolicy { kAuto, kAll, kSample, kNone };

struct RunConfig {
    std::string input_path;
    std::string output_dir = ".";
    bool wide = false;               // strict by default
    bool shell_one_extension = true;
    PairPolicy pair_policy = PairPolicy::kAuto;
    std::uint64_t sample_size = 100000;
    std::uint64_t pair_limit = 10000000;   // refuse "all" beyond this many pairs
    std::uint32_t flow_node_limit = 5000;  // max-flow RAM guard
    std::uint64_t seed = 12345;            // pair sampling only
    std::uint64_t render_edge_cap = 5000;
};

// Each command reads the input edge list, writes its files into output_dir
// and returns one of the exit codes above. Outputs are deterministic
// functions of (input bytes, config).
int cmd_decompose(const RunConfig& config);  // shells.tsv
int cmd_connect(const RunConfig& config);    // membership.tsv, trace.tsv
int cmd_bounds(const RunConfig& config);     // bounds.tsv
int cmd_metrics(const RunConfig& config);    // metrics.json
int cmd_validate(const RunConfig& config);   // validation.tsv; exit 1 on violations
int cmd_render(const RunConfig& config);     // render.svg

/// Full argv interface (the CLI main is a thin wrapper around this).
int run_cli(int argc, const char* const* argv);

}  // namespace coreconn
