#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tracelink/evaluate.hpp"
#include "tracelink/reference.hpp"
#include "tracelink/retrieval.hpp"

namespace tracelink {

// Requirements traceability matrix (RTM) as TSV:
//   high_id<TAB>low_id<TAB>similarity   (header, then one row per link)
// Similarities carry six decimal places.
inline constexpr std::string_view kRtmHeader = "high_id\tlow_id\tsimilarity";

void write_rtm_tsv(std::ostream& os, const CandidateLinkList& links);
void write_rtm_json(std::ostream& os, const CandidateLinkList& links);
void write_rtm_markdown(std::ostream& os, const CandidateLinkList& links);

/// Parses an RTM TSV; malformed rows raise InputError with the line number.
std::vector<CandidateLink> parse_rtm_tsv(std::string_view content, std::string_view origin = "<memory>");

/// {metric, filter, relevant_retrieved, retrieved, relevant_total,
///  recall_pct, precision_pct}; metric and filter are null when unknown.
nlohmann::json eval_report_json(const EvalResult& result, std::optional<MetricId> metric,
                                std::optional<double> filter);

void write_trace_report(std::ostream& os, const TraceReport& report);

/// Shortest decimal spelling of a threshold ("0", "0.05", "0.2").
std::string format_threshold(double threshold);

struct SweepRow {
    MetricId metric = MetricId::BaselineIdf;
    EvalResult result;
    std::optional<ReferenceResult> reference;
    bool best_recall = false;
    bool best_precision = false;
};

struct SweepTable {
    double filter = 0.0;
    std::vector<SweepRow> rows;
};

struct SweepReport {
    std::optional<ReferenceDataset> dataset;
    std::vector<SweepTable> tables;
};

/// Sets best_recall / best_precision on every row holding the table maximum.
void mark_best(SweepTable& table);

void write_sweep_markdown(std::ostream& os, const SweepReport& report);
void write_sweep_tsv(std::ostream& os, const SweepReport& report);
nlohmann::json sweep_json(const SweepReport& report);

}  // namespace tracelink
