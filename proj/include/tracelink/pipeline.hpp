#pragma once

#include "tracelink/corpus.hpp"
#include "tracelink/preprocess.hpp"
#include "tracelink/retrieval.hpp"
#include "tracelink/weighting.hpp"

namespace tracelink {

/// Preprocessed corpus plus its frequency statistics and per-metric weight
/// cache. Immutable after construction apart from the internal cache.
class TraceEngine {
public:
    TraceEngine(ArtifactSet high, ArtifactSet low, const StopList& stop, const PreprocessOptions& options = {});

    TraceEngine(const TraceEngine&) = delete;
    TraceEngine& operator=(const TraceEngine&) = delete;

    const PreprocessedCorpus& corpus() const { return corpus_; }
    const ArtifactSet& high() const { return corpus_.high; }
    const ArtifactSet& low() const { return corpus_.low; }
    const Vocabulary& vocabulary() const { return corpus_.vocabulary; }
    const TermDocStats& stats() const { return stats_; }
    const GlobalWeights& weights(MetricId metric) const { return cache_.get(metric); }

    /// Unfiltered candidate links for one metric.
    CandidateLinkList links(MetricId metric, Direction direction = Direction::HighToLow) const;

private:
    PreprocessedCorpus corpus_;
    TermDocStats stats_;
    WeightCache cache_;
};

}  // namespace tracelink
