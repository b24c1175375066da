#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "tracelink/preprocess.hpp"

namespace tracelink {
namespace {

using Tokens = std::vector<std::string>;

TEST(Tokenize, Examples) {
    EXPECT_EQ(tokenize("The system shall log."), (Tokens{"the", "system", "shall", "log"}));
    EXPECT_EQ(tokenize("CM-1 I/O"), (Tokens{"cm"}));
    EXPECT_EQ(tokenize(""), Tokens{});
    EXPECT_EQ(tokenize("a b c"), Tokens{});
    EXPECT_EQ(tokenize("MODIS2Level1B"), (Tokens{"modis", "level"}));
    EXPECT_EQ(tokenize("caf\xC3\xA9s"), (Tokens{"caf"}));
}

TEST(Tokenize, OutputIsLowercaseAlphabeticLengthTwoOrMore) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int trial = 0; trial < 200; ++trial) {
        std::string text;
        for (int i = 0; i < 80; ++i) text.push_back(static_cast<char>(byte(rng)));
        for (const auto& t : tokenize(text)) {
            ASSERT_GE(t.size(), 2u);
            for (char c : t) ASSERT_TRUE(c >= 'a' && c <= 'z') << t;
        }
    }
}

TEST(StopWords, Examples) {
    StopList stop{{"the", "of"}};
    EXPECT_EQ(remove_stop_words({"the", "system", "of", "record"}, stop), (Tokens{"system", "record"}));
    EXPECT_EQ(remove_stop_words({}, stop), Tokens{});
    EXPECT_EQ(remove_stop_words({"alpha"}, StopList{}), (Tokens{"alpha"}));
}

TEST(StopWords, Idempotent) {
    const Tokens tokens = tokenize("The status of the instrument is reported to the ground system by the software");
    const StopList& stop = default_stop_list();
    const Tokens once = remove_stop_words(tokens, stop);
    EXPECT_EQ(remove_stop_words(once, stop), once);
}

TEST(StopWords, DefaultListShape) {
    const StopList& stop = default_stop_list();
    EXPECT_GE(stop.words.size(), 100u);
    EXPECT_LE(stop.words.size(), 140u);
    EXPECT_TRUE(stop.contains("the"));
    EXPECT_TRUE(stop.contains("of"));
    EXPECT_FALSE(stop.contains("shall"));
    for (const auto& w : stop.words) {
        for (char c : w) EXPECT_TRUE(c >= 'a' && c <= 'z') << w;
    }
}

TEST(StopWords, ParseFileLowercasesAndSkipsComments) {
    StopList s = parse_stop_list("# custom\nThe\n  OF \r\n\nshall\n");
    EXPECT_EQ(s.words, (std::set<std::string, std::less<>>{"of", "shall", "the"}));
    EXPECT_THROW(parse_stop_list("two words\n"), InputError);
    EXPECT_THROW(load_stop_list("/nonexistent/stop.txt"), InputError);
}

TEST(Vocabulary, FirstAppearanceOrderWithoutRepetition) {
    Vocabulary v;
    EXPECT_EQ(v.add("b"), 0u);
    EXPECT_EQ(v.add("a"), 1u);
    EXPECT_EQ(v.add("b"), 0u);
    EXPECT_EQ(v.terms(), (Tokens{"b", "a"}));
    EXPECT_EQ(v.find("a"), 1u);
    EXPECT_FALSE(v.find("c").has_value());
}

ArtifactSet one_doc(std::string id, Level level, std::string text) {
    return ArtifactSet{level, {ArtifactDoc{std::move(id), level, std::move(text), {}}}};
}

TEST(PreprocessCorpus, SharedVocabularyAcrossLevels) {
    auto out = preprocess_corpus(one_doc("H1", Level::High, "sensor data"),
                                 one_doc("L1", Level::Low, "sensors sense data"), StopList{});
    EXPECT_EQ(out.vocabulary.terms(), (Tokens{"sensor", "data", "sens"}));
    EXPECT_EQ(out.high.docs[0].tokens, (Tokens{"sensor", "data"}));
    EXPECT_EQ(out.low.docs[0].tokens, (Tokens{"sensor", "sens", "data"}));
    EXPECT_TRUE(out.warnings.empty());
}

TEST(PreprocessCorpus, EmptyDocsKeptWithWarning) {
    auto out = preprocess_corpus(one_doc("H1", Level::High, "the of"), one_doc("L1", Level::Low, "1 2 3"),
                                 default_stop_list());
    EXPECT_TRUE(out.vocabulary.empty());
    EXPECT_EQ(out.high.size(), 1u);
    EXPECT_EQ(out.low.size(), 1u);
    ASSERT_EQ(out.warnings.size(), 2u);
    EXPECT_NE(out.warnings[0].find("H1"), std::string::npos);
}

TEST(PreprocessCorpus, StemmingCanBeDisabled) {
    auto out = preprocess_corpus(one_doc("H1", Level::High, "sensors logging"), one_doc("L1", Level::Low, "logs"),
                                 StopList{}, PreprocessOptions{false});
    EXPECT_EQ(out.vocabulary.terms(), (Tokens{"sensors", "logging", "logs"}));
}

TEST(PreprocessCorpus, VocabularyCoversEveryStemExactlyOnce) {
    auto out = preprocess_corpus(
        one_doc("H1", Level::High, "The instrument shall calibrate the detectors and report calibration status."),
        one_doc("L1", Level::Low, "Calibration of detectors is reported; the instrument status is logged."),
        default_stop_list());
    std::set<std::string> seen;
    for (const auto* set : {&out.high, &out.low}) {
        for (const auto& d : set->docs) seen.insert(d.tokens.begin(), d.tokens.end());
    }
    EXPECT_EQ(seen.size(), out.vocabulary.size());
    for (const auto& t : seen) EXPECT_TRUE(out.vocabulary.find(t).has_value()) << t;
}

}  // namespace
}  // namespace tracelink
