#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tracelink/corpus.hpp"
#include "tracelink/preprocess.hpp"
#include "tracelink/weighting.hpp"

namespace tracelink {

/// Sparse term-weight vector; entries sorted by term index, no explicit zeros.
struct DocVector {
    std::string doc_id;
    std::vector<std::pair<std::uint32_t, double>> weights;

    double norm() const;
    /// Weight of a term, zero when absent.
    double weight(std::uint32_t term) const;
};

/// w_i = tf_i(doc) * g_i. With BaselineIdf weights this is plain TF-IDF.
DocVector build_vector(const ArtifactDoc& doc, const Vocabulary& vocab, const GlobalWeights& gw);

/// Cosine of the angle between two vectors; 0 when either has zero norm.
/// Clamped to [-1, 1].
double cosine_similarity(const DocVector& a, const DocVector& b);

struct CandidateLink {
    std::string high_id;
    std::string low_id;
    double similarity = 0.0;

    bool operator==(const CandidateLink&) const = default;
};

inline constexpr double kUnfiltered = -std::numeric_limits<double>::infinity();

/// Query direction. HighToLow uses high-level artifacts as queries.
enum class Direction { HighToLow, LowToHigh };

/// Ranked candidate links. Links are grouped by query artifact (in query-set
/// order) and sorted by similarity descending within each group, ties broken
/// by the other id ascending. Every link's similarity is > filter.
struct CandidateLinkList {
    MetricId metric = MetricId::BaselineIdf;
    double filter = kUnfiltered;
    Direction direction = Direction::HighToLow;
    std::vector<CandidateLink> links;
};

/// Scores the full high x low grid and keeps every nonzero similarity.
CandidateLinkList generate_links(const ArtifactSet& high, const ArtifactSet& low, const Vocabulary& vocab,
                                 const GlobalWeights& gw, Direction direction = Direction::HighToLow);

/// Keeps links with similarity strictly greater than `threshold`.
CandidateLinkList apply_filter(const CandidateLinkList& links, double threshold);

}  // namespace tracelink
