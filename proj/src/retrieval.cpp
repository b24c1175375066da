#include "tracelink/retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace tracelink {

double DocVector::norm() const {
    double sq = 0.0;
    for (const auto& [term, w] : weights) sq += w * w;
    return std::sqrt(sq);
}

double DocVector::weight(std::uint32_t term) const {
    auto it = std::lower_bound(weights.begin(), weights.end(), term,
                               [](const auto& entry, std::uint32_t t) { return entry.first < t; });
    return (it != weights.end() && it->first == term) ? it->second : 0.0;
}

DocVector build_vector(const ArtifactDoc& doc, const Vocabulary& vocab, const GlobalWeights& gw) {
    std::map<std::uint32_t, std::uint32_t> tf;
    for (const auto& token : doc.tokens) {
        auto idx = vocab.find(token);
        if (!idx || *idx >= gw.g.size()) {
            throw std::logic_error("token '" + token + "' of artifact '" + doc.id +
                                   "' has no global weight");
        }
        ++tf[static_cast<std::uint32_t>(*idx)];
    }
    DocVector v{doc.id, {}};
    v.weights.reserve(tf.size());
    for (const auto& [term, count] : tf) {
        const double w = static_cast<double>(count) * gw.g[term];
        if (w != 0.0) v.weights.emplace_back(term, w);
    }
    return v;
}

namespace {

double dot(const DocVector& a, const DocVector& b) {
    double s = 0.0;
    auto ia = a.weights.begin();
    auto ib = b.weights.begin();
    while (ia != a.weights.end() && ib != b.weights.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            s += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return s;
}

double squared_norm(const DocVector& v) {
    double sq = 0.0;
    for (const auto& [term, w] : v.weights) sq += w * w;
    return sq;
}

double cosine_from_parts(double dot_product, double sq_a, double sq_b) {
    if (sq_a == 0.0 || sq_b == 0.0) return 0.0;
    const double c = dot_product / std::sqrt(sq_a * sq_b);
    return std::clamp(c, -1.0, 1.0);
}

}  // namespace

double cosine_similarity(const DocVector& a, const DocVector& b) {
    return cosine_from_parts(dot(a, b), squared_norm(a), squared_norm(b));
}

CandidateLinkList generate_links(const ArtifactSet& high, const ArtifactSet& low, const Vocabulary& vocab,
                                 const GlobalWeights& gw, Direction direction) {
    const bool forward = direction == Direction::HighToLow;
    const ArtifactSet& queries = forward ? high : low;
    const ArtifactSet& targets = forward ? low : high;

    std::vector<DocVector> target_vecs;
    std::vector<double> target_sq;
    target_vecs.reserve(targets.size());
    for (const auto& doc : targets.docs) {
        target_vecs.push_back(build_vector(doc, vocab, gw));
        target_sq.push_back(squared_norm(target_vecs.back()));
    }

    CandidateLinkList list{gw.metric, kUnfiltered, direction, {}};
    std::vector<CandidateLink> group;
    for (const auto& qdoc : queries.docs) {
        const DocVector q = build_vector(qdoc, vocab, gw);
        const double q_sq = squared_norm(q);
        group.clear();
        for (std::size_t t = 0; t < target_vecs.size(); ++t) {
            // The high-level vector is always the left operand so both
            // directions produce bit-identical scores.
            const double d = forward ? dot(q, target_vecs[t]) : dot(target_vecs[t], q);
            const double sim = forward ? cosine_from_parts(d, q_sq, target_sq[t])
                                       : cosine_from_parts(d, target_sq[t], q_sq);
            if (sim == 0.0) continue;
            if (forward) {
                group.push_back({qdoc.id, targets.docs[t].id, sim});
            } else {
                group.push_back({targets.docs[t].id, qdoc.id, sim});
            }
        }
        std::stable_sort(group.begin(), group.end(), [forward](const CandidateLink& a, const CandidateLink& b) {
            if (a.similarity != b.similarity) return a.similarity > b.similarity;
            return forward ? a.low_id < b.low_id : a.high_id < b.high_id;
        });
        list.links.insert(list.links.end(), group.begin(), group.end());
    }
    return list;
}

CandidateLinkList apply_filter(const CandidateLinkList& links, double threshold) {
    CandidateLinkList out{links.metric, threshold, links.direction, {}};
    std::copy_if(links.links.begin(), links.links.end(), std::back_inserter(out.links),
                 [threshold](const CandidateLink& l) { return l.similarity > threshold; });
    return out;
}

}  // namespace tracelink
