#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tracelink/corpus.hpp"
#include "tracelink/preprocess.hpp"

namespace tracelink::testing {

inline std::filesystem::path data_dir() { return TRACELINK_TEST_DATA; }

inline ArtifactDoc make_doc(std::string id, Level level, std::vector<std::string> tokens) {
    std::string raw;
    for (const auto& t : tokens) raw += t + " ";
    return ArtifactDoc{std::move(id), level, std::move(raw), std::move(tokens)};
}

/// Tokenized corpus: two artifact sets plus a vocabulary built in
/// first-appearance order.
struct TokenCorpus {
    ArtifactSet high{Level::High, {}};
    ArtifactSet low{Level::Low, {}};
    Vocabulary vocab;
};

inline Vocabulary vocabulary_of(const ArtifactSet& high, const ArtifactSet& low) {
    Vocabulary v;
    for (const auto* set : {&high, &low}) {
        for (const auto& d : set->docs) {
            for (const auto& t : d.tokens) v.add(t);
        }
    }
    return v;
}

/// H1:[sensor,data]  L1:[sensor,sensor,log]  L2:[data,log]
inline TokenCorpus corpus_e1() {
    TokenCorpus c;
    c.high.docs.push_back(make_doc("H1", Level::High, {"sensor", "data"}));
    c.low.docs.push_back(make_doc("L1", Level::Low, {"sensor", "sensor", "log"}));
    c.low.docs.push_back(make_doc("L2", Level::Low, {"data", "log"}));
    c.vocab = vocabulary_of(c.high, c.low);
    return c;
}

inline std::string random_term(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(2, 7);
    std::uniform_int_distribution<int> letter(0, 25);
    std::string s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + letter(rng)));
    return s;
}

/// Random small corpus: 2..10 docs (at least one per level), up to 30
/// distinct terms, integer tf in [0, 9]. Empty documents occur occasionally.
inline TokenCorpus random_corpus(std::mt19937_64& rng, std::size_t max_docs = 10, std::size_t max_terms = 30,
                                 int max_tf = 9) {
    std::uniform_int_distribution<std::size_t> n_docs_dist(2, max_docs);
    std::uniform_int_distribution<std::size_t> n_terms_dist(1, max_terms);
    const std::size_t n_docs = n_docs_dist(rng);
    const std::size_t n_terms = n_terms_dist(rng);

    std::vector<std::string> terms;
    while (terms.size() < n_terms) {
        std::string t = random_term(rng);
        if (std::find(terms.begin(), terms.end(), t) == terms.end()) terms.push_back(t);
    }

    std::uniform_int_distribution<std::size_t> split_dist(1, n_docs - 1);
    const std::size_t n_high = split_dist(rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> tf_dist(1, max_tf);
    const double density = 0.15 + 0.6 * unit(rng);

    TokenCorpus c;
    for (std::size_t j = 0; j < n_docs; ++j) {
        std::vector<std::string> tokens;
        if (unit(rng) > 0.08) {
            for (const auto& t : terms) {
                if (unit(rng) < density) {
                    const int tf = tf_dist(rng);
                    for (int k = 0; k < tf; ++k) tokens.push_back(t);
                }
            }
            std::shuffle(tokens.begin(), tokens.end(), rng);
        }
        const bool is_high = j < n_high;
        std::string id = (is_high ? "H" : "L") + std::to_string(j);
        auto& set = is_high ? c.high : c.low;
        set.docs.push_back(make_doc(std::move(id), is_high ? Level::High : Level::Low, std::move(tokens)));
    }
    c.vocab = vocabulary_of(c.high, c.low);
    return c;
}

/// Writes `content` to `path`, creating parent directories.
inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << content;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("tracelink_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace tracelink::testing
