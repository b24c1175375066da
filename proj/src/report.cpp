#include "tracelink/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace tracelink {
namespace {

std::string format_similarity(double s) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << s;
    return os.str();
}

nlohmann::json filter_json(double filter) {
    return std::isfinite(filter) ? nlohmann::json(filter) : nlohmann::json(nullptr);
}

}  // namespace

void write_rtm_tsv(std::ostream& os, const CandidateLinkList& links) {
    os << kRtmHeader << '\n';
    for (const auto& l : links.links) {
        os << l.high_id << '\t' << l.low_id << '\t' << format_similarity(l.similarity) << '\n';
    }
}

void write_rtm_json(std::ostream& os, const CandidateLinkList& links) {
    nlohmann::json j;
    j["metric"] = metric_name(links.metric);
    j["filter"] = filter_json(links.filter);
    j["direction"] = links.direction == Direction::HighToLow ? "high-to-low" : "low-to-high";
    j["links"] = nlohmann::json::array();
    for (const auto& l : links.links) {
        j["links"].push_back({{"high_id", l.high_id}, {"low_id", l.low_id}, {"similarity", l.similarity}});
    }
    os << j.dump(2) << '\n';
}

void write_rtm_markdown(std::ostream& os, const CandidateLinkList& links) {
    os << "| High | Low | Similarity |\n|---|---|---|\n";
    for (const auto& l : links.links) {
        os << "| " << l.high_id << " | " << l.low_id << " | " << format_similarity(l.similarity) << " |\n";
    }
}

std::vector<CandidateLink> parse_rtm_tsv(std::string_view content, std::string_view origin) {
    std::vector<CandidateLink> links;
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool seen_header = false;
    while (start < content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        auto fail = [&](const std::string& what) {
            return InputError(std::string(origin) + ":" + std::to_string(line_no) + ": " + what);
        };
        if (!seen_header) {
            if (line != kRtmHeader) throw fail("expected RTM header 'high_id<TAB>low_id<TAB>similarity'");
            seen_header = true;
            continue;
        }
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos) {
            throw fail("expected three tab-separated fields");
        }
        std::string_view high = line.substr(0, t1);
        std::string_view low = line.substr(t1 + 1, t2 - t1 - 1);
        std::string_view sim_text = line.substr(t2 + 1);
        if (!is_valid_id(high) || !is_valid_id(low)) throw fail("invalid artifact id");

        double sim = 0.0;
        auto [ptr, ec] = std::from_chars(sim_text.data(), sim_text.data() + sim_text.size(), sim);
        if (ec != std::errc() || ptr != sim_text.data() + sim_text.size() || !std::isfinite(sim)) {
            throw fail("invalid similarity '" + std::string(sim_text) + "'");
        }
        links.push_back({std::string(high), std::string(low), sim});
    }
    if (!seen_header) {
        throw InputError(std::string(origin) + ": missing RTM header");
    }
    return links;
}

nlohmann::json eval_report_json(const EvalResult& r, std::optional<MetricId> metric, std::optional<double> filter) {
    nlohmann::json j;
    j["metric"] = metric ? nlohmann::json(metric_name(*metric)) : nlohmann::json(nullptr);
    j["filter"] = filter ? filter_json(*filter) : nlohmann::json(nullptr);
    j["relevant_retrieved"] = r.relevant_retrieved;
    j["retrieved"] = r.retrieved;
    j["relevant_total"] = r.relevant_total;
    j["recall_pct"] = r.recall_pct;
    j["precision_pct"] = r.precision_pct;
    return j;
}

void write_trace_report(std::ostream& os, const TraceReport& report) {
    os << "CHILDLESS HIGH:\n";
    for (const auto& id : report.childless_high) os << id << '\n';
    os << "\nORPHAN LOW:\n";
    for (const auto& id : report.orphan_low) os << id << '\n';
}

std::string format_threshold(double threshold) {
    std::ostringstream os;
    os << threshold;
    return os.str();
}

void mark_best(SweepTable& table) {
    if (table.rows.empty()) return;
    double best_r = table.rows.front().result.recall_pct;
    double best_p = table.rows.front().result.precision_pct;
    for (const auto& row : table.rows) {
        best_r = std::max(best_r, row.result.recall_pct);
        best_p = std::max(best_p, row.result.precision_pct);
    }
    for (auto& row : table.rows) {
        row.best_recall = row.result.recall_pct == best_r;
        row.best_precision = row.result.precision_pct == best_p;
    }
}

void write_sweep_markdown(std::ostream& os, const SweepReport& report) {
    bool any_reference = false;
    for (const auto& table : report.tables) {
        const bool with_ref = std::any_of(table.rows.begin(), table.rows.end(),
                                          [](const SweepRow& r) { return r.reference.has_value(); });
        any_reference = any_reference || with_ref;

        os << "### ";
        if (report.dataset) os << dataset_name(*report.dataset) << ", ";
        os << "filter " << format_threshold(table.filter) << "\n\n";
        os << "| Term Weighting | Recall | Precision |";
        if (with_ref) os << " Reference Recall | Reference Precision |";
        os << '\n' << (with_ref ? "|---|---|---|---|---|\n" : "|---|---|---|\n");
        for (const auto& row : table.rows) {
            os << "| " << metric_title(row.metric) << " | " << format_pct(row.result.recall_pct)
               << (row.best_recall ? "*" : "") << " | " << format_pct(row.result.precision_pct)
               << (row.best_precision ? "*" : "") << " |";
            if (with_ref) {
                if (row.reference) {
                    os << ' ' << format_pct(row.reference->recall_pct) << " | "
                       << format_pct(row.reference->precision_pct) << " |";
                } else {
                    os << " - | - |";
                }
            }
            os << '\n';
        }
        os << '\n';
    }
    os << "\\* best value. Precision of an empty retrieval is reported as 0.0.\n";
    if (any_reference) {
        os << "Reference columns are published results for this dataset; the TF-IDF (baseline) reference is "
              "the published XML-format TF-IDF baseline. Differences are expected because stop list, "
              "tokenizer and tf normalization of the published runs are unknown.\n";
    }
}

void write_sweep_tsv(std::ostream& os, const SweepReport& report) {
    os << "filter\tmetric\trecall_pct\tprecision_pct\trelevant_retrieved\tretrieved\trelevant_total\n";
    for (const auto& table : report.tables) {
        for (const auto& row : table.rows) {
            os << format_threshold(table.filter) << '\t' << metric_name(row.metric) << '\t'
               << format_pct(row.result.recall_pct) << '\t' << format_pct(row.result.precision_pct) << '\t'
               << row.result.relevant_retrieved << '\t' << row.result.retrieved << '\t'
               << row.result.relevant_total << '\n';
        }
    }
}

nlohmann::json sweep_json(const SweepReport& report) {
    nlohmann::json j;
    j["dataset"] = report.dataset ? nlohmann::json(dataset_name(*report.dataset)) : nlohmann::json(nullptr);
    j["tables"] = nlohmann::json::array();
    for (const auto& table : report.tables) {
        nlohmann::json t;
        t["filter"] = table.filter;
        t["rows"] = nlohmann::json::array();
        for (const auto& row : table.rows) {
            nlohmann::json r = eval_report_json(row.result, row.metric, table.filter);
            r["title"] = metric_title(row.metric);
            r["best_recall"] = row.best_recall;
            r["best_precision"] = row.best_precision;
            if (row.reference) {
                r["reference"] = {{"recall_pct", row.reference->recall_pct},
                                  {"precision_pct", row.reference->precision_pct}};
            } else {
                r["reference"] = nullptr;
            }
            t["rows"].push_back(std::move(r));
        }
        j["tables"].push_back(std::move(t));
    }
    return j;
}

}  // namespace tracelink
