#include "tracelink/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tracelink {
namespace {

struct MetricInfo {
    MetricId id;
    std::string_view name;
    std::string_view title;
};

constexpr MetricInfo kMetricInfo[] = {
    {MetricId::BaselineIdf, "baseline-idf", "TF-IDF (baseline)"},
    {MetricId::CorpusTF, "corpus-tf", "Corpus Term Frequency"},
    {MetricId::LoggedTF, "logged-tf", "Logged Term Frequency"},
    {MetricId::DocTF, "doc-tf", "Document Term Frequency"},
    {MetricId::DocTermCounts, "doc-term-counts", "Document Terms Counts"},
    {MetricId::DocMaxFreq, "doc-max-freq", "Document Maximum Frequency"},
    {MetricId::DocMaxFreqMinusAvg, "doc-max-freq-minus-avg",
     "Document Maximum Frequency and Term Average Frequency"},
    {MetricId::CorpusMaxFreq, "corpus-max-freq", "Corpus Maximum Frequency"},
    {MetricId::CorpusMaxFreqMinusAvg, "corpus-max-freq-minus-avg",
     "Corpus Maximum Frequency and Term Average Frequency"},
    {MetricId::TfIdfSum, "tf-idf-sum", "Term Frequency - Inverse Document Frequency"},
    {MetricId::LoggedIdf, "logged-idf", "Logged Inverse Document Frequency"},
};

const MetricInfo& info(MetricId id) {
    return kMetricInfo[static_cast<std::size_t>(id)];
}

}  // namespace

std::string_view metric_name(MetricId id) { return info(id).name; }
std::string_view metric_title(MetricId id) { return info(id).title; }

std::optional<MetricId> parse_metric(std::string_view name) {
    for (const auto& m : kMetricInfo) {
        if (m.name == name) return m.id;
    }
    return std::nullopt;
}

bool metric_allows_negative(MetricId id) {
    return id == MetricId::DocMaxFreqMinusAvg || id == MetricId::CorpusMaxFreqMinusAvg;
}

std::uint64_t TermDocStats::total_frequency(std::size_t term) const {
    std::uint64_t sum = 0;
    for (const auto& p : tf[term]) sum += p.count;
    return sum;
}

TermDocStats term_document_stats(const ArtifactSet& high, const ArtifactSet& low, const Vocabulary& vocab) {
    TermDocStats stats;
    stats.corpus_size = high.size() + low.size();
    stats.tf.resize(vocab.size());
    stats.doc_freq.assign(vocab.size(), 0);
    stats.doc_term_count.assign(stats.corpus_size, 0);
    stats.doc_max_freq.assign(stats.corpus_size, 0);

    std::vector<std::uint32_t> counts(vocab.size(), 0);
    std::vector<std::size_t> touched;
    std::uint32_t doc = 0;
    for (const ArtifactSet* set : {&high, &low}) {
        for (const ArtifactDoc& d : set->docs) {
            touched.clear();
            for (const auto& token : d.tokens) {
                auto idx = vocab.find(token);
                if (!idx) {
                    throw std::logic_error("token '" + token + "' of artifact '" + d.id +
                                           "' is not in the vocabulary");
                }
                if (counts[*idx]++ == 0) touched.push_back(*idx);
            }
            // Postings stay sorted by doc because docs are visited in order.
            std::uint32_t max_freq = 0;
            for (std::size_t term : touched) {
                stats.tf[term].push_back({doc, counts[term]});
                stats.doc_freq[term] += 1;
                max_freq = std::max(max_freq, counts[term]);
                counts[term] = 0;
            }
            stats.doc_term_count[doc] = static_cast<std::uint32_t>(d.tokens.size());
            stats.doc_max_freq[doc] = max_freq;
            stats.corpus_max_freq = std::max(stats.corpus_max_freq, max_freq);
            ++doc;
        }
    }
    return stats;
}

GlobalWeights global_weight(MetricId metric, const TermDocStats& stats) {
    if (stats.corpus_size == 0) {
        throw std::invalid_argument("cannot weight terms of an empty corpus");
    }
    const double n_docs = static_cast<double>(stats.corpus_size);
    const double corpus_max = static_cast<double>(stats.corpus_max_freq);

    GlobalWeights out{metric, std::vector<double>(stats.term_count(), 0.0)};
    for (std::size_t i = 0; i < stats.term_count(); ++i) {
        const auto& postings = stats.tf[i];
        const double total = static_cast<double>(stats.total_frequency(i));
        const double df = static_cast<double>(stats.doc_freq[i]);

        // Per-document normalized sums; docs with T_j == 0 or P_j == 0
        // cannot appear in a posting list, so no zero guard is needed here.
        auto sum_over = [&](auto&& per_doc) {
            double s = 0.0;
            for (const Posting& p : postings) s += per_doc(p);
            return s;
        };

        double g = 0.0;
        switch (metric) {
            case MetricId::BaselineIdf:
                g = std::log2(n_docs / df);
                break;
            case MetricId::CorpusTF:
                g = total;
                break;
            case MetricId::LoggedTF:
                g = sum_over([](const Posting& p) { return std::log(static_cast<double>(p.count) + 1.0); });
                break;
            case MetricId::DocTF:
                for (const Posting& p : postings) g = std::max(g, static_cast<double>(p.count));
                break;
            case MetricId::DocTermCounts:
                g = sum_over([&](const Posting& p) {
                    return static_cast<double>(p.count) / stats.doc_term_count[p.doc];
                });
                break;
            case MetricId::DocMaxFreq:
                g = sum_over([&](const Posting& p) {
                    return static_cast<double>(p.count) / stats.doc_max_freq[p.doc];
                });
                break;
            case MetricId::DocMaxFreqMinusAvg:
                g = sum_over([&](const Posting& p) {
                        return static_cast<double>(p.count) / stats.doc_max_freq[p.doc];
                    }) -
                    total / n_docs;
                break;
            case MetricId::CorpusMaxFreq:
                g = total / corpus_max;
                break;
            case MetricId::CorpusMaxFreqMinusAvg:
                g = total / corpus_max - total / n_docs;
                break;
            case MetricId::TfIdfSum:
                g = total * n_docs / df;
                break;
            case MetricId::LoggedIdf:
                g = total * std::log(n_docs / df);
                break;
        }
        out.g[i] = g;
    }
    return out;
}

const GlobalWeights& WeightCache::get(MetricId metric) const {
    const auto slot = static_cast<std::size_t>(metric);
    std::call_once(once_[slot], [&] { weights_[slot] = global_weight(metric, *stats_); });
    return weights_[slot];
}

}  // namespace tracelink
