#include "tracelink/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>

namespace tracelink {
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string at_line(std::string_view origin, std::size_t line_no) {
    std::ostringstream os;
    os << origin << ":" << line_no;
    return os.str();
}

// Splits on '\n' and drops a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view content) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j])) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

void finish_set(ArtifactSet& set, std::string_view origin) {
    if (set.docs.empty()) {
        throw InputError(std::string(origin) + ": no artifacts found");
    }
    std::sort(set.docs.begin(), set.docs.end(),
              [](const ArtifactDoc& a, const ArtifactDoc& b) { return a.id < b.id; });
    auto dup = std::adjacent_find(set.docs.begin(), set.docs.end(),
                                  [](const ArtifactDoc& a, const ArtifactDoc& b) { return a.id == b.id; });
    if (dup != set.docs.end()) {
        throw InputError(std::string(origin) + ": duplicate artifact id '" + dup->id + "'");
    }
}

ArtifactSet load_directory(const fs::path& dir, Level level) {
    ArtifactSet set{level, {}};
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
            files.push_back(entry.path());
        }
    }
    for (const auto& file : files) {
        std::string id = file.stem().string();
        if (!is_valid_id(id)) {
            throw InputError(file.string() + ": invalid artifact id '" + id + "'");
        }
        std::string text = read_file(file);
        if (!is_valid_utf8(text)) {
            throw InputError(file.string() + ": not valid UTF-8");
        }
        set.docs.push_back({std::move(id), level, std::move(text), {}});
    }
    finish_set(set, dir.string());
    return set;
}

}  // namespace

std::string_view to_string(Level level) {
    return level == Level::High ? "high" : "low";
}

bool ArtifactSet::contains(std::string_view id) const {
    return std::any_of(docs.begin(), docs.end(), [&](const ArtifactDoc& d) { return d.id == id; });
}

std::vector<std::string> ArtifactSet::ids() const {
    std::vector<std::string> out;
    out.reserve(docs.size());
    for (const auto& d : docs) out.push_back(d.id);
    return out;
}

bool is_valid_id(std::string_view id) {
    return !id.empty() && std::none_of(id.begin(), id.end(), is_space);
}

bool is_valid_utf8(std::string_view bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const auto c = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        std::uint32_t cp = 0;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (std::size_t k = 1; k < len; ++k) {
            const auto cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        // Overlong forms, surrogates, and out-of-range code points.
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
            (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
            return false;
        }
        i += len;
    }
    return true;
}

ArtifactSet parse_artifact_tsv(std::string_view content, Level level, std::string_view origin) {
    if (!is_valid_utf8(content)) {
        throw InputError(std::string(origin) + ": not valid UTF-8");
    }
    ArtifactSet set{level, {}};
    const auto lines = split_lines(content);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        std::string_view line = lines[n];
        if (trim(line).empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw InputError(at_line(origin, n + 1) + ": expected 'id<TAB>text'");
        }
        std::string_view id = line.substr(0, tab);
        if (!is_valid_id(id)) {
            throw InputError(at_line(origin, n + 1) + ": invalid artifact id '" + std::string(id) + "'");
        }
        set.docs.push_back({std::string(id), level, std::string(line.substr(tab + 1)), {}});
    }
    finish_set(set, origin);
    return set;
}

ArtifactSet load_artifacts(const fs::path& path, Level level) {
    std::error_code ec;
    if (!fs::exists(path, ec)) {
        throw InputError(path.string() + ": no such file or directory");
    }
    if (fs::is_directory(path, ec)) {
        return load_directory(path, level);
    }
    return parse_artifact_tsv(read_file(path), level, path.string());
}

AnswerSet parse_answer_set(std::string_view content, std::string_view origin) {
    if (!is_valid_utf8(content)) {
        throw InputError(std::string(origin) + ": not valid UTF-8");
    }
    enum class Form { Unknown, Pair, Grouped };
    Form form = Form::Unknown;
    AnswerSet answers;

    const auto lines = split_lines(content);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        std::string_view line = trim(lines[n]);
        if (line.empty() || line.front() == '#') continue;

        const Form this_form = line.find(':') != std::string_view::npos ? Form::Grouped : Form::Pair;
        if (form != Form::Unknown && form != this_form) {
            throw InputError(at_line(origin, n + 1) + ": pair and grouped forms are mixed");
        }
        form = this_form;

        if (this_form == Form::Pair) {
            const auto tab = line.find('\t');
            if (tab == std::string_view::npos) {
                throw InputError(at_line(origin, n + 1) + ": expected 'high<TAB>low' or 'high: low ...'");
            }
            std::string_view high = trim(line.substr(0, tab));
            std::string_view low = trim(line.substr(tab + 1));
            if (!is_valid_id(high) || !is_valid_id(low)) {
                throw InputError(at_line(origin, n + 1) + ": malformed pair");
            }
            answers.true_links.emplace(std::string(high), std::string(low));
        } else {
            const auto colon = line.find(':');
            std::string_view high = trim(line.substr(0, colon));
            if (!is_valid_id(high)) {
                throw InputError(at_line(origin, n + 1) + ": malformed high-level id");
            }
            for (std::string_view low : split_whitespace(line.substr(colon + 1))) {
                answers.true_links.emplace(std::string(high), std::string(low));
            }
        }
    }
    if (answers.true_links.empty()) {
        throw InputError(std::string(origin) + ": answer set contains no links");
    }
    return answers;
}

AnswerSet load_answer_set(const fs::path& path) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        throw InputError(path.string() + ": no such file");
    }
    return parse_answer_set(read_file(path), path.string());
}

DatasetManifest validate_dataset(const ArtifactSet& high, const ArtifactSet& low, const AnswerSet& answers) {
    DatasetManifest manifest;
    manifest.high_count = high.size();
    manifest.low_count = low.size();
    manifest.true_link_count = answers.size();

    std::set<std::string> unresolved;
    for (const auto& [h, l] : answers.true_links) {
        if (!high.contains(h)) unresolved.insert(h);
        if (!low.contains(l)) unresolved.insert(l);
    }
    manifest.unresolved_answer_ids.assign(unresolved.begin(), unresolved.end());
    return manifest;
}

}  // namespace tracelink
