#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "bcabe/cli/report.hpp"

namespace bcabe::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
inline constexpr int io = 3;
} // namespace exit_code

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    int size = 4;
    std::string family = "rho+";
    std::optional<std::string> mode; // exact | sampled
    int samples = 10000;
    std::uint64_t seed = 0;
    std::string out;                 // report / state path; empty = stdout
    std::optional<double> tolerance;
    bool tamper = false;             // verify only: perturb rho+ before checking
};

inline constexpr double kVerifyTolerance = 1e-12;
inline constexpr double kCutTolerance = 1e-10;
inline constexpr double kExactTolerance = 1e-12;
inline constexpr double kSampledTolerance = 0.05;

/// Writes the family density matrix to opts.out (required).
void cmd_state(const Options& opts);
Report cmd_verify(const Options& opts);
Report cmd_cuts(const Options& opts);
/// Also writes the protocol transcripts to opts.out + ".transcript.jsonl"
/// when opts.out is set.
Report cmd_certify(const Options& opts);

/// Path the certify command writes transcripts to.
std::string transcript_path(const std::string& report_path);

/// Full command line: parses, dispatches, writes outputs, returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bcabe::cli
