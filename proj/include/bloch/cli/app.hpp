#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bloch/descriptor.hpp"
#include "bloch/norms.hpp"

namespace bloch::cli {

inline constexpr const char* kToolName = "blochtool";
inline constexpr const char* kToolVersion = "1.0.0";

/// Exit statuses.
inline constexpr int kExitDefinitive = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RangeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string command;
    /// Resolved parameters as text, keyed by flag name without dashes.
    std::map<std::string, std::string> values;
    SamplingPlan plan;
    std::string out_path;
    std::string csv_path;
    bool timing = false;
};

/// Parses argv (argv[0] is the program name). Values from a --config JSON
/// document are applied first and overridden by explicit flags. Throws
/// UsageError or RangeError; a help request throws HelpRequested.
RunConfig parse_config(const std::vector<std::string>& args);

class HelpRequested : public std::runtime_error {
public:
    explicit HelpRequested(std::string text) : std::runtime_error("help"), text_(std::move(text)) {}
    const std::string& text() const noexcept { return text_; }

private:
    std::string text_;
};

struct Report {
    Json doc;
    std::vector<EvidencePoint> evidence;
    int exit_code = kExitDefinitive;
};

/// Runs the configured command. Range checks happen before any computation.
Report run(const RunConfig& config);

/// Rounds every floating-point number in the document to 15 significant
/// digits; non-finite values become the strings "inf", "-inf" and "nan".
Json normalize_numbers(const Json& doc);

/// Full invocation: parse, run, write report and CSV, return the exit status.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bloch::cli
