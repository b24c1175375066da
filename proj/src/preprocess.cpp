#include "tracelink/preprocess.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <utility>

namespace tracelink {
namespace {

// Stop list v1: short English function-word list in the style of the SMART
// system list. Changing it changes retrieval results, so bump the version.
constexpr std::string_view kDefaultStopWords[] = {
    "a",       "about",   "above",   "after",   "again",   "against", "all",     "also",
    "am",      "an",      "and",     "any",     "are",     "as",      "at",      "be",
    "because", "been",    "before",  "being",   "below",   "between", "both",    "but",
    "by",      "can",     "could",   "did",     "do",      "does",    "doing",   "down",
    "during",  "each",    "either",  "etc",     "few",     "for",     "from",    "further",
    "had",     "has",     "have",    "having",  "he",      "her",     "here",    "hers",
    "him",     "his",     "how",     "however", "i",       "if",      "in",      "into",
    "is",      "it",      "its",     "itself",  "just",    "may",     "me",      "might",
    "more",    "most",    "must",    "my",      "no",      "nor",     "not",     "of",
    "off",     "on",      "once",    "only",    "or",      "other",   "our",     "ours",
    "out",     "over",    "own",     "same",    "she",     "should",  "so",      "some",
    "such",    "than",    "that",    "the",     "their",   "theirs",  "them",    "then",
    "there",   "these",   "they",    "this",    "those",   "through", "to",      "too",
    "under",   "until",   "up",      "upon",    "very",    "via",     "was",     "we",
    "were",    "what",    "when",    "where",   "which",   "while",   "who",     "whom",
    "why",     "will",    "with",    "within",  "would",   "you",     "your",    "yours",
};

bool is_ascii_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

const StopList& default_stop_list() {
    static const StopList list = [] {
        StopList l;
        for (auto w : kDefaultStopWords) l.words.emplace(w);
        return l;
    }();
    return list;
}

StopList parse_stop_list(std::string_view content, std::string_view origin) {
    StopList list;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(start, end - start);
        ++line_no;
        start = end + 1;

        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;
        if (line.find_first_of(" \t") != std::string_view::npos) {
            throw InputError(std::string(origin) + ":" + std::to_string(line_no) +
                             ": stop-list entries must be single words");
        }
        std::string word(line);
        std::transform(word.begin(), word.end(), word.begin(), ascii_lower);
        list.words.insert(std::move(word));
    }
    return list;
}

StopList load_stop_list(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open stop list " + path.string());
    }
    std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_stop_list(content, path.string());
}

std::size_t Vocabulary::add(std::string_view term) {
    auto [it, inserted] = index_.try_emplace(std::string(term), terms_.size());
    if (inserted) terms_.emplace_back(term);
    return it->second;
}

std::optional<std::size_t> Vocabulary::find(std::string_view term) const {
    auto it = index_.find(std::string(term));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.size() >= 2) tokens.push_back(current);
        current.clear();
    };
    for (char c : text) {
        if (is_ascii_alpha(c)) {
            current.push_back(ascii_lower(c));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::vector<std::string> remove_stop_words(const std::vector<std::string>& tokens, const StopList& stop) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(kept),
                 [&](const std::string& t) { return !stop.contains(t); });
    return kept;
}

PreprocessedCorpus preprocess_corpus(ArtifactSet high, ArtifactSet low, const StopList& stop,
                                     const PreprocessOptions& options) {
    PreprocessedCorpus out{std::move(high), std::move(low), {}, {}};
    for (ArtifactSet* set : {&out.high, &out.low}) {
        for (ArtifactDoc& doc : set->docs) {
            doc.tokens = remove_stop_words(tokenize(doc.raw_text), stop);
            if (options.stem) {
                for (auto& t : doc.tokens) t = porter_stem(t);
            }
            for (const auto& t : doc.tokens) out.vocabulary.add(t);
            if (doc.tokens.empty()) {
                out.warnings.push_back(std::string(to_string(doc.level)) + "-level artifact '" + doc.id +
                                       "' has no terms after preprocessing");
            }
        }
    }
    return out;
}

}  // namespace tracelink
