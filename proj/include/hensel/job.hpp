#ifndef HENSEL_JOB_HPP
#define HENSEL_JOB_HPP

#include <optional>
#include <string>
#include <vector>

#include "hensel/errors.hpp"

namespace hensel {

enum class Subcommand { Lift, Root, Commute, Decompose, Probe, Eval };
enum class OutputMode { Text, Structured };

/// A fully parsed command-line job.
struct JobSpec {
    Subcommand subcommand = Subcommand::Lift;
    std::string ring;
    std::optional<std::string> poly;
    std::optional<std::string> f1;
    std::optional<std::string> f2;
    std::vector<std::string> blocks;
    std::optional<std::string> at;
    std::vector<std::string> samples;
    std::optional<std::string> p;
    std::optional<std::string> q;
    std::optional<int> precision;
    OutputMode output = OutputMode::Text;
    bool verify = false;
};

/// Parses argv (without the program name). Throws UsageError with a
/// diagnostic naming the offending token and position.
JobSpec parse_job(const std::vector<std::string>& argv);

struct JobResult {
    int exit_code;           // 0 success, 1 usage/input error, 2 obstruction
    std::string output;      // result document (stdout)
    std::string diagnostics; // errors and notes (stderr)
};

/// Runs a parsed job. Never throws; all failures are encoded in the exit
/// code and diagnostics.
JobResult run_job(const JobSpec& spec);

/// One-line usage summary used by the CLI on errors.
std::string usage_text();

} // namespace hensel

#endif
