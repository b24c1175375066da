#pragma once

#include <optional>
#include <string_view>

#include "tracelink/corpus.hpp"
#include "tracelink/weighting.hpp"

namespace tracelink {

/// Public datasets with published recall/precision results.
enum class ReferenceDataset { Modis, Cm1 };

std::string_view dataset_name(ReferenceDataset dataset);

/// Recognizes a dataset by its artifact and true-link counts.
std::optional<ReferenceDataset> identify_dataset(const DatasetManifest& manifest);

struct ReferenceResult {
    double recall_pct = 0.0;
    double precision_pct = 0.0;
};

/// Published result for (dataset, metric, filter), if one exists. The
/// BaselineIdf entry is the XML-format TF-IDF baseline those results were
/// compared against, not a run of this engine's baseline.
std::optional<ReferenceResult> reference_result(ReferenceDataset dataset, MetricId metric, double filter);

}  // namespace tracelink
