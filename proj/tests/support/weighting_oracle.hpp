#pragma once

// Dense, direct-from-definition computation of every global weight. Shares
// no code with the library's sparse implementation: counts are recomputed
// from raw token lists and every sum runs over all N documents.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "tracelink/corpus.hpp"
#include "tracelink/weighting.hpp"

namespace tracelink::testing {

struct DenseCorpus {
    std::vector<std::string> terms;
    std::vector<std::vector<double>> tf;  // tf[i][j]
    std::size_t n_docs = 0;
};

inline DenseCorpus dense_corpus(const ArtifactSet& high, const ArtifactSet& low) {
    std::vector<const std::vector<std::string>*> docs;
    for (const auto& d : high.docs) docs.push_back(&d.tokens);
    for (const auto& d : low.docs) docs.push_back(&d.tokens);

    DenseCorpus dc;
    dc.n_docs = docs.size();
    for (const auto* tokens : docs) {
        for (const auto& t : *tokens) {
            if (std::find(dc.terms.begin(), dc.terms.end(), t) == dc.terms.end()) dc.terms.push_back(t);
        }
    }
    for (const auto& term : dc.terms) {
        std::vector<double> row;
        for (const auto* tokens : docs) {
            row.push_back(static_cast<double>(std::count(tokens->begin(), tokens->end(), term)));
        }
        dc.tf.push_back(row);
    }
    return dc;
}

/// term -> weight for one metric.
inline std::map<std::string, double> oracle_weights(MetricId metric, const DenseCorpus& dc) {
    const std::size_t n_terms = dc.terms.size();
    const std::size_t n = dc.n_docs;
    const double N = static_cast<double>(n);

    std::vector<double> T(n, 0.0), P(n, 0.0);
    double Pc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n_terms; ++i) {
            T[j] += dc.tf[i][j];
            P[j] = std::max(P[j], dc.tf[i][j]);
        }
        Pc = std::max(Pc, P[j]);
    }

    std::map<std::string, double> out;
    for (std::size_t i = 0; i < n_terms; ++i) {
        const auto& tf = dc.tf[i];
        double sum_tf = 0.0, sum_log = 0.0, max_tf = 0.0, sum_T = 0.0, sum_P = 0.0, sum_Pc = 0.0, df = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            sum_tf += tf[j];
            sum_log += std::log(tf[j] + 1.0);
            max_tf = std::max(max_tf, tf[j]);
            sum_T += T[j] > 0 ? tf[j] / T[j] : 0.0;
            sum_P += P[j] > 0 ? tf[j] / P[j] : 0.0;
            sum_Pc += tf[j] / Pc;
            if (tf[j] > 0) df += 1.0;
        }
        const double avg = sum_tf / N;
        double w = 0.0;
        switch (metric) {
            case MetricId::BaselineIdf: w = std::log(N / df) / std::log(2.0); break;
            case MetricId::CorpusTF: w = sum_tf; break;
            case MetricId::LoggedTF: w = sum_log; break;
            case MetricId::DocTF: w = max_tf; break;
            case MetricId::DocTermCounts: w = sum_T; break;
            case MetricId::DocMaxFreq: w = sum_P; break;
            case MetricId::DocMaxFreqMinusAvg: w = sum_P - avg; break;
            case MetricId::CorpusMaxFreq: w = sum_Pc; break;
            case MetricId::CorpusMaxFreqMinusAvg: w = sum_Pc - avg; break;
            case MetricId::TfIdfSum: w = sum_tf * N / df; break;
            case MetricId::LoggedIdf: w = sum_tf * std::log(N / df); break;
        }
        out[dc.terms[i]] = w;
    }
    return out;
}

/// Relative comparison; values below 1e-3 in magnitude compare with an absolute 1e-12 floor.
inline bool close_relative(double a, double b, double rel = 1e-9) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel * std::max(scale, 1e-3);
}

}  // namespace tracelink::testing
