#include "tracelink/cli.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

namespace tracelink::cli {
namespace fs = std::filesystem;

namespace {

// Flag values that parse but make no sense; reported with exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::ofstream open_output(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream os(dir / name, std::ios::binary);
    if (!os) throw InputError("cannot write " + (dir / name).string());
    return os;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string_view extension(OutputFormat f) {
    switch (f) {
        case OutputFormat::Tsv: return "tsv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Markdown: return "md";
    }
    return "tsv";
}

struct LoadedInputs {
    ArtifactSet high;
    ArtifactSet low;
    std::optional<AnswerSet> answers;
    StopList stop;
};

LoadedInputs load_inputs(const RunConfig& config, std::ostream& err) {
    LoadedInputs in{load_artifacts(config.high_path, Level::High), load_artifacts(config.low_path, Level::Low),
                    std::nullopt, config.stop_list_path ? load_stop_list(*config.stop_list_path) : default_stop_list()};
    if (config.answer_path) {
        in.answers = load_answer_set(*config.answer_path);
        const DatasetManifest m = validate_dataset(in.high, in.low, *in.answers);
        for (const auto& id : m.unresolved_answer_ids) {
            err << "warning: answer set references unknown artifact '" << id << "'\n";
        }
    }
    return in;
}

void print_warnings(const TraceEngine& engine, std::ostream& err) {
    for (const auto& w : engine.corpus().warnings) err << "warning: " << w << '\n';
}

void write_rtm(std::ostream& os, const CandidateLinkList& links, OutputFormat format) {
    switch (format) {
        case OutputFormat::Tsv: write_rtm_tsv(os, links); break;
        case OutputFormat::Json: write_rtm_json(os, links); break;
        case OutputFormat::Markdown: write_rtm_markdown(os, links); break;
    }
}

std::vector<MetricId> parse_metric_list(const std::string& spec) {
    std::vector<MetricId> metrics;
    std::stringstream ss(spec);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name == "all") {
            metrics.assign(kAllMetrics.begin(), kAllMetrics.end());
            continue;
        }
        auto id = parse_metric(name);
        if (!id) throw UsageError("unknown metric '" + name + "'");
        if (std::find(metrics.begin(), metrics.end(), *id) == metrics.end()) metrics.push_back(*id);
    }
    if (metrics.empty()) throw UsageError("no metric given");
    return metrics;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace

int cmd_trace(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (config.metrics.size() != 1) throw UsageError("trace takes exactly one metric");
        if (config.filters.size() != 1) throw UsageError("trace takes exactly one filter");
        const MetricId metric = config.metrics.front();
        const double filter = config.filters.front();

        LoadedInputs in = load_inputs(config, err);
        const TraceEngine engine(std::move(in.high), std::move(in.low), in.stop, {config.stemming});
        print_warnings(engine, err);

        const auto direction = config.swap ? Direction::LowToHigh : Direction::HighToLow;
        const CandidateLinkList links = apply_filter(engine.links(metric, direction), filter);

        if (config.out_dir) {
            auto os = open_output(*config.out_dir, "rtm." + std::string(extension(config.format)));
            write_rtm(os, links, config.format);
        } else {
            write_rtm(out, links, config.format);
        }

        if (in.answers) {
            const EvalResult result = evaluate_links(links, *in.answers);
            const std::string eval = eval_report_json(result, metric, filter).dump(2) + "\n";
            const TraceReport report = traceability_analysis(links, engine.high(), engine.low());
            if (config.out_dir) {
                open_output(*config.out_dir, "eval.json") << eval;
                auto os = open_output(*config.out_dir, "trace_report.txt");
                write_trace_report(os, report);
            } else {
                err << eval;
                write_trace_report(err, report);
            }
        }
        return kExitOk;
    });
}

SweepReport run_sweep(const TraceEngine& engine, const AnswerSet& answers, const std::vector<MetricId>& metrics,
                      const std::vector<double>& filters, Direction direction,
                      std::optional<ReferenceDataset> dataset) {
    std::vector<std::future<std::vector<EvalResult>>> jobs;
    jobs.reserve(metrics.size());
    for (MetricId metric : metrics) {
        jobs.push_back(std::async(std::launch::async, [&, metric] {
            const CandidateLinkList all = engine.links(metric, direction);
            std::vector<EvalResult> per_filter;
            for (double f : filters) per_filter.push_back(evaluate_links(apply_filter(all, f), answers));
            return per_filter;
        }));
    }
    std::vector<std::vector<EvalResult>> results;
    for (auto& job : jobs) results.push_back(job.get());

    SweepReport report{dataset, {}};
    for (std::size_t f = 0; f < filters.size(); ++f) {
        SweepTable table{filters[f], {}};
        for (std::size_t m = 0; m < metrics.size(); ++m) {
            SweepRow row{metrics[m], results[m][f], std::nullopt, false, false};
            if (dataset) row.reference = reference_result(*dataset, metrics[m], filters[f]);
            table.rows.push_back(row);
        }
        mark_best(table);
        report.tables.push_back(std::move(table));
    }
    return report;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!config.answer_path) throw UsageError("sweep requires --answers");
        if (config.metrics.empty()) throw UsageError("no metric given");
        if (config.filters.empty()) throw UsageError("no filter given");

        LoadedInputs in = load_inputs(config, err);
        const DatasetManifest manifest = validate_dataset(in.high, in.low, *in.answers);
        const TraceEngine engine(std::move(in.high), std::move(in.low), in.stop, {config.stemming});
        print_warnings(engine, err);

        const auto direction = config.swap ? Direction::LowToHigh : Direction::HighToLow;
        const SweepReport report =
            run_sweep(engine, *in.answers, config.metrics, config.filters, direction, identify_dataset(manifest));

        auto emit = [&](std::ostream& os, OutputFormat f) {
            switch (f) {
                case OutputFormat::Markdown: write_sweep_markdown(os, report); break;
                case OutputFormat::Json: os << sweep_json(report).dump(2) << '\n'; break;
                case OutputFormat::Tsv: write_sweep_tsv(os, report); break;
            }
        };
        if (config.out_dir) {
            auto md = open_output(*config.out_dir, "sweep.md");
            emit(md, OutputFormat::Markdown);
            auto js = open_output(*config.out_dir, "sweep.json");
            emit(js, OutputFormat::Json);
            if (config.format == OutputFormat::Tsv) {
                auto tsv = open_output(*config.out_dir, "sweep.tsv");
                emit(tsv, OutputFormat::Tsv);
            }
        } else {
            emit(out, config.format);
        }
        return kExitOk;
    });
}

int cmd_eval(const fs::path& rtm_path, const fs::path& answer_path, const std::optional<fs::path>& out_dir,
             std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto links = parse_rtm_tsv(read_text(rtm_path), rtm_path.string());
        const AnswerSet answers = load_answer_set(answer_path);
        const std::string report = eval_report_json(evaluate_links(links, answers), std::nullopt, std::nullopt).dump(2);
        out << report << '\n';
        if (out_dir) open_output(*out_dir, "eval.json") << report << '\n';
        return kExitOk;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Recover candidate trace links between high- and low-level software artifacts."};
    app.name("tracelink");
    app.require_subcommand(1);

    RunConfig config;
    std::string metric_spec;
    std::vector<double> filters;
    bool no_stem = false;
    std::string format_name;
    std::string high, low, answers, stoplist, out_dir, rtm;

    const std::map<std::string, OutputFormat> formats = {
        {"tsv", OutputFormat::Tsv}, {"json", OutputFormat::Json}, {"md", OutputFormat::Markdown}};

    auto add_pipeline_options = [&](CLI::App* cmd, bool answers_required) {
        cmd->add_option("--high", high, "High-level artifacts (directory of .txt files or TSV)")->required();
        cmd->add_option("--low", low, "Low-level artifacts (directory of .txt files or TSV)")->required();
        auto* a = cmd->add_option("--answers", answers, "Answer-set file");
        if (answers_required) a->required();
        cmd->add_option("--stoplist", stoplist, "Stop-list file (one word per line)");
        cmd->add_option("--filter,--filters", filters, "Similarity threshold(s), comma separated")->delimiter(',');
        cmd->add_flag("--no-stem", no_stem, "Disable Porter stemming");
        cmd->add_flag("--swap", config.swap, "Use low-level artifacts as queries");
        cmd->add_option("--out", out_dir, "Output directory (default: standard output)");
    };

    auto* trace = app.add_subcommand("trace", "Generate a candidate link list for one metric and filter");
    add_pipeline_options(trace, false);
    trace->add_option("--metric", metric_spec, "Weighting metric")->default_str("baseline-idf");
    trace->add_option("--format", format_name, "tsv, json or md")->check(CLI::IsMember({"tsv", "json", "md"}));

    auto* sweep = app.add_subcommand("sweep", "Evaluate every metric at every filter");
    add_pipeline_options(sweep, true);
    sweep->add_option("--metric", metric_spec, "Metric, comma-separated metrics, or 'all'")->default_str("all");
    sweep->add_option("--format", format_name, "md, json or tsv")->check(CLI::IsMember({"tsv", "json", "md"}));

    auto* eval = app.add_subcommand("eval", "Re-score a stored RTM against an answer set");
    eval->add_option("--rtm", rtm, "RTM TSV file")->required();
    eval->add_option("--answers", answers, "Answer-set file")->required();
    eval->add_option("--out", out_dir, "Also write eval.json to this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    if (eval->parsed()) {
        return cmd_eval(rtm, answers, out_dir.empty() ? std::nullopt : std::optional<fs::path>(out_dir), out, err);
    }

    const bool is_trace = trace->parsed();
    try {
        config.metrics = parse_metric_list(metric_spec.empty() ? (is_trace ? "baseline-idf" : "all") : metric_spec);
        if (filters.empty()) filters = is_trace ? std::vector<double>{0.0} : kPresetFilters;
        for (double f : filters) {
            if (!std::isfinite(f)) throw UsageError("filters must be finite");
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << (is_trace ? trace : sweep)->help();
        return kExitUsage;
    }
    config.filters = filters;
    config.high_path = high;
    config.low_path = low;
    if (!answers.empty()) config.answer_path = answers;
    if (!stoplist.empty()) config.stop_list_path = stoplist;
    if (!out_dir.empty()) config.out_dir = out_dir;
    config.stemming = !no_stem;
    if (format_name.empty()) format_name = is_trace ? "tsv" : "md";
    config.format = formats.at(format_name);

    return is_trace ? cmd_trace(config, out, err) : cmd_sweep(config, out, err);
}

}  // namespace tracelink::cli
