#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tracelink/corpus.hpp"
#include "tracelink/preprocess.hpp"

namespace tracelink {

/// Global term-weighting schemes. Declaration order is the reporting order.
enum class MetricId {
    BaselineIdf,            // log2(N / df_i)
    CorpusTF,               // sum_j tf_ij
    LoggedTF,               // sum_j ln(tf_ij + 1)
    DocTF,                  // max_j tf_ij
    DocTermCounts,          // sum_j tf_ij / T_j
    DocMaxFreq,             // sum_j tf_ij / P_j
    DocMaxFreqMinusAvg,     // sum_j tf_ij / P_j - (sum_j tf_ij) / N
    CorpusMaxFreq,          // sum_j tf_ij / P_c
    CorpusMaxFreqMinusAvg,  // sum_j tf_ij / P_c - (sum_j tf_ij) / N
    TfIdfSum,               // (sum_j tf_ij) * N / n_i
    LoggedIdf,              // (sum_j tf_ij) * ln(N / n_i)
};

inline constexpr std::array<MetricId, 11> kAllMetrics = {
    MetricId::BaselineIdf,   MetricId::CorpusTF,           MetricId::LoggedTF,
    MetricId::DocTF,         MetricId::DocTermCounts,      MetricId::DocMaxFreq,
    MetricId::DocMaxFreqMinusAvg, MetricId::CorpusMaxFreq, MetricId::CorpusMaxFreqMinusAvg,
    MetricId::TfIdfSum,      MetricId::LoggedIdf,
};

/// CLI name, e.g. "doc-term-counts".
std::string_view metric_name(MetricId id);
/// Human-readable name used in comparison tables.
std::string_view metric_title(MetricId id);
std::optional<MetricId> parse_metric(std::string_view name);

/// True for the two "minus average" metrics, whose weights may be negative.
bool metric_allows_negative(MetricId id);

struct Posting {
    std::uint32_t doc = 0;
    std::uint32_t count = 0;

    bool operator==(const Posting&) const = default;
};

/// Sparse term x document frequencies over the combined corpus.
/// Documents are numbered high set first, then low set, in set order.
struct TermDocStats {
    /// tf[i] lists the documents containing term i, by ascending doc index.
    std::vector<std::vector<Posting>> tf;
    std::vector<std::uint32_t> doc_term_count;  // T_j
    std::vector<std::uint32_t> doc_max_freq;    // P_j
    std::uint32_t corpus_max_freq = 0;          // P_c
    std::vector<std::uint32_t> doc_freq;        // n_i == df_i
    std::size_t corpus_size = 0;                // N

    std::size_t term_count() const { return tf.size(); }
    /// Sum of tf_ij over all documents.
    std::uint64_t total_frequency(std::size_t term) const;
};

/// Throws std::logic_error if a token is missing from `vocab`.
TermDocStats term_document_stats(const ArtifactSet& high, const ArtifactSet& low, const Vocabulary& vocab);

struct GlobalWeights {
    MetricId metric = MetricId::BaselineIdf;
    std::vector<double> g;
};

/// Throws std::invalid_argument when the corpus is empty.
GlobalWeights global_weight(MetricId metric, const TermDocStats& stats);

/// Lazily computes and caches one GlobalWeights per metric. Safe for
/// concurrent readers; the stats must outlive the cache.
class WeightCache {
public:
    explicit WeightCache(const TermDocStats& stats) : stats_(&stats) {}

    const GlobalWeights& get(MetricId metric) const;
    const TermDocStats& stats() const { return *stats_; }

private:
    const TermDocStats* stats_;
    mutable std::array<std::once_flag, kAllMetrics.size()> once_;
    mutable std::array<GlobalWeights, kAllMetrics.size()> weights_;
};

}  // namespace tracelink
