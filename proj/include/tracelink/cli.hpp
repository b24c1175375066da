#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tracelink/pipeline.hpp"
#include "tracelink/report.hpp"

namespace tracelink::cli {

enum class OutputFormat { Tsv, Json, Markdown };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline const std::vector<double> kPresetFilters = {0.0, 0.05, 0.2, 0.25};

struct RunConfig {
    std::filesystem::path high_path;
    std::filesystem::path low_path;
    std::optional<std::filesystem::path> answer_path;
    std::optional<std::filesystem::path> stop_list_path;
    std::vector<MetricId> metrics;
    std::vector<double> filters;
    bool stemming = true;
    bool swap = false;
    OutputFormat format = OutputFormat::Tsv;
    /// Output directory; standard output when unset.
    std::optional<std::filesystem::path> out_dir;
};

/// Writes the RTM and, with an answer set, eval.json and trace_report.txt.
int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err);

/// One comparison table per filter, one row per metric.
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Re-scores a stored RTM TSV; prints the JSON evaluation report.
int cmd_eval(const std::filesystem::path& rtm_path, const std::filesystem::path& answer_path,
             const std::optional<std::filesystem::path>& out_dir, std::ostream& out, std::ostream& err);

/// Metric x filter grid. Metrics run concurrently; row order follows `metrics`.
SweepReport run_sweep(const TraceEngine& engine, const AnswerSet& answers, const std::vector<MetricId>& metrics,
                      const std::vector<double>& filters, Direction direction,
                      std::optional<ReferenceDataset> dataset);

/// Parses argv and dispatches to a subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tracelink::cli
