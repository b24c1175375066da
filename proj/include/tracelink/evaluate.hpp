#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tracelink/corpus.hpp"
#include "tracelink/retrieval.hpp"

namespace tracelink {

struct EvalResult {
    std::size_t relevant_retrieved = 0;
    std::size_t retrieved = 0;
    std::size_t relevant_total = 0;
    double recall_pct = 0.0;
    /// Zero when nothing was retrieved.
    double precision_pct = 0.0;

    bool operator==(const EvalResult&) const = default;
};

/// Scores links against the answer set with set semantics over (high, low)
/// pairs. Throws std::invalid_argument for an empty answer set.
EvalResult evaluate_links(const CandidateLinkList& links, const AnswerSet& answers);
EvalResult evaluate_links(const std::vector<CandidateLink>& links, const AnswerSet& answers);

struct TraceReport {
    std::vector<std::string> childless_high;
    std::vector<std::string> orphan_low;
};

TraceReport traceability_analysis(const CandidateLinkList& links, const ArtifactSet& high, const ArtifactSet& low);

/// One-decimal display rounding used by every report.
std::string format_pct(double pct);

}  // namespace tracelink
