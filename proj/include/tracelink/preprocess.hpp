#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tracelink/corpus.hpp"

namespace tracelink {

struct StopList {
    std::set<std::string, std::less<>> words;

    bool contains(std::string_view word) const { return words.find(word) != words.end(); }
};

/// Built-in English stop list (short SMART-style list, version 1).
const StopList& default_stop_list();

/// One word per line, `#` comments; entries are lowercased on load.
StopList load_stop_list(const std::filesystem::path& path);
StopList parse_stop_list(std::string_view content, std::string_view origin = "<memory>");

/// Terms shared by both artifact levels, in first-appearance order.
class Vocabulary {
public:
    /// Returns the index of `term`, inserting it at the end if new.
    std::size_t add(std::string_view term);
    std::optional<std::size_t> find(std::string_view term) const;

    const std::vector<std::string>& terms() const { return terms_; }
    const std::string& term(std::size_t i) const { return terms_.at(i); }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Lowercases, splits on every non-letter and keeps fragments of length >= 2.
/// Only ASCII letters count as alphabetic.
std::vector<std::string> tokenize(std::string_view text);

std::vector<std::string> remove_stop_words(const std::vector<std::string>& tokens, const StopList& stop);

/// Porter (1980) suffix-stripping stemmer. Expects a lowercase word.
std::string porter_stem(std::string_view word);

struct PreprocessOptions {
    bool stem = true;
};

struct PreprocessedCorpus {
    ArtifactSet high;
    ArtifactSet low;
    Vocabulary vocabulary;
    /// One entry per document left without tokens.
    std::vector<std::string> warnings;
};

PreprocessedCorpus preprocess_corpus(ArtifactSet high, ArtifactSet low, const StopList& stop,
                                     const PreprocessOptions& options = {});

}  // namespace tracelink
