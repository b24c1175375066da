#include "tracelink/evaluate.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tracelink {

EvalResult evaluate_links(const std::vector<CandidateLink>& links, const AnswerSet& answers) {
    if (answers.true_links.empty()) {
        throw std::invalid_argument("cannot evaluate against an empty answer set");
    }
    std::set<TraceLinkPair> retrieved;
    for (const auto& l : links) retrieved.emplace(l.high_id, l.low_id);

    EvalResult r;
    r.retrieved = retrieved.size();
    r.relevant_total = answers.size();
    r.relevant_retrieved = static_cast<std::size_t>(std::count_if(
        retrieved.begin(), retrieved.end(), [&](const TraceLinkPair& p) { return answers.true_links.count(p) != 0; }));
    r.recall_pct = 100.0 * static_cast<double>(r.relevant_retrieved) / static_cast<double>(r.relevant_total);
    r.precision_pct = r.retrieved == 0
                          ? 0.0
                          : 100.0 * static_cast<double>(r.relevant_retrieved) / static_cast<double>(r.retrieved);
    return r;
}

EvalResult evaluate_links(const CandidateLinkList& links, const AnswerSet& answers) {
    return evaluate_links(links.links, answers);
}

TraceReport traceability_analysis(const CandidateLinkList& links, const ArtifactSet& high, const ArtifactSet& low) {
    std::set<std::string, std::less<>> linked_high;
    std::set<std::string, std::less<>> linked_low;
    for (const auto& l : links.links) {
        linked_high.insert(l.high_id);
        linked_low.insert(l.low_id);
    }
    TraceReport report;
    for (const auto& d : high.docs) {
        if (!linked_high.contains(d.id)) report.childless_high.push_back(d.id);
    }
    for (const auto& d : low.docs) {
        if (!linked_low.contains(d.id)) report.orphan_low.push_back(d.id);
    }
    std::sort(report.childless_high.begin(), report.childless_high.end());
    std::sort(report.orphan_low.begin(), report.orphan_low.end());
    return report;
}

std::string format_pct(double pct) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << pct;
    return os.str();
}

}  // namespace tracelink
