// Command-line driver: computations from symfun and demchar, verification
// sweeps from demchar and qrep, streamed as JSON lines, CSV, or text.
#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lzb::cli {

enum class Format { Json, Csv, Text };

struct RunConfig {
    int trunc = 8;
    int K = 3;
    int max_rank = 3;
    std::optional<Format> format;  // unset: json for verification, text for computations
    int jobs = 1;
    std::string output;  // empty: standard output

    /// Throws std::invalid_argument when a bound is not positive.
    void validate() const;
};

Format parse_format(const std::string& s);
std::string format_name(Format f);

/// Defaults overlaid with the JSON file named by LZB_CONFIG, when set.
RunConfig load_config(const std::optional<std::string>& env_path);

/// One verification outcome, already flattened for output.
struct CaseReport {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> fields;
    long checks = 0;
    bool pass = true;
    std::string detail_json;  // first mismatch or failure, "" when passing
    std::string detail_text;
};

struct Case {
    std::vector<std::pair<std::string, std::string>> key;
    std::function<CaseReport()> run;
};

/// Runs the cases on `jobs` workers and calls emit in case order as soon as
/// every earlier case has finished. Output does not depend on `jobs`.
void run_cases(const std::vector<Case>& cases, int jobs, const std::function<void(const CaseReport&)>& emit);

std::string report_json(const CaseReport& r);
std::string report_csv_header(const CaseReport& r);
std::string report_csv_row(const CaseReport& r);
std::string report_text(const CaseReport& r);

/// Runs one command line (without the program name). Returns 0 when every
/// verification passes, 1 on a mismatch, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lzb::cli
