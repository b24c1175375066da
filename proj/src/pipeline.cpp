#include "tracelink/pipeline.hpp"

#include <utility>

namespace tracelink {

TraceEngine::TraceEngine(ArtifactSet high, ArtifactSet low, const StopList& stop, const PreprocessOptions& options)
    : corpus_(preprocess_corpus(std::move(high), std::move(low), stop, options)),
      stats_(term_document_stats(corpus_.high, corpus_.low, corpus_.vocabulary)),
      cache_(stats_) {}

CandidateLinkList TraceEngine::links(MetricId metric, Direction direction) const {
    return generate_links(corpus_.high, corpus_.low, corpus_.vocabulary, cache_.get(metric), direction);
}

}  // namespace tracelink
