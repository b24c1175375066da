#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tracelink {

/// Raised for any malformed or unreadable input file.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Level { High, Low };

std::string_view to_string(Level level);

/// One requirement or design element.
struct ArtifactDoc {
    std::string id;
    Level level = Level::High;
    std::string raw_text;
    /// Processed terms; empty until preprocessing runs.
    std::vector<std::string> tokens;
};

/// Documents of one level, ordered by id (byte order).
struct ArtifactSet {
    Level level = Level::High;
    std::vector<ArtifactDoc> docs;

    std::size_t size() const { return docs.size(); }
    bool empty() const { return docs.empty(); }
    bool contains(std::string_view id) const;
    std::vector<std::string> ids() const;
};

using TraceLinkPair = std::pair<std::string, std::string>;  // (high_id, low_id)

struct AnswerSet {
    std::set<TraceLinkPair> true_links;

    std::size_t size() const { return true_links.size(); }
    bool contains(const std::string& high_id, const std::string& low_id) const {
        return true_links.count({high_id, low_id}) != 0;
    }
};

struct DatasetManifest {
    std::size_t high_count = 0;
    std::size_t low_count = 0;
    std::size_t true_link_count = 0;
    /// Sorted, unique ids named by the answer set but absent from the artifacts.
    std::vector<std::string> unresolved_answer_ids;

    bool operator==(const DatasetManifest&) const = default;
};

/// Loads a directory of `<id>.txt` files or a single `id<TAB>text` TSV file.
ArtifactSet load_artifacts(const std::filesystem::path& path, Level level);

/// Parses the pair form (`high<TAB>low`) or the grouped form
/// (`high: low low ...`). The two forms cannot be mixed in one file.
AnswerSet load_answer_set(const std::filesystem::path& path);

/// In-memory variants of the loaders. `origin` only labels error messages.
ArtifactSet parse_artifact_tsv(std::string_view content, Level level,
                               std::string_view origin = "<memory>");
AnswerSet parse_answer_set(std::string_view content, std::string_view origin = "<memory>");

DatasetManifest validate_dataset(const ArtifactSet& high, const ArtifactSet& low,
                                 const AnswerSet& answers);

bool is_valid_utf8(std::string_view bytes);
bool is_valid_id(std::string_view id);

}  // namespace tracelink
