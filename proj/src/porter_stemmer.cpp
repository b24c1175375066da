// Porter stemmer, following the reference C implementation distributed by
// M. F. Porter. That version differs from the 1980 article in two step-2
// rules ("bli" -> "ble" instead of "abli" -> "able", plus "logi" -> "log");
// the published vocabulary/output pair was generated with these rules.

#include <string>
#include <string_view>

#include "tracelink/preprocess.hpp"

namespace tracelink {
namespace {

class PorterStemmer {
public:
    explicit PorterStemmer(std::string_view word) : b_(word), k_(static_cast<int>(word.size()) - 1) {}

    std::string run() {
        if (k_ <= 1) return b_;
        step1ab();
        if (k_ > 0) {
            step1c();
            step2();
            step3();
            step4();
            step5();
        }
        return b_.substr(0, static_cast<std::size_t>(k_ + 1));
    }

private:
    char at(int i) const { return b_[static_cast<std::size_t>(i)]; }

    bool cons(int i) const {
        switch (at(i)) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !cons(i - 1);
            default:
                return true;
        }
    }

    // Number of VC sequences in b[0..j].
    int m() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j_) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j_) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j_) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j_; ++i) {
            if (!cons(i)) return true;
        }
        return false;
    }

    bool double_cons(int i) const {
        return i >= 1 && at(i) == at(i - 1) && cons(i);
    }

    // consonant-vowel-consonant ending at i, where the last is not w, x or y.
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        const char ch = at(i);
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        const int len = static_cast<int>(s.size());
        if (len > k_ + 1) return false;
        if (std::string_view(b_).substr(static_cast<std::size_t>(k_ - len + 1), s.size()) != s) return false;
        j_ = k_ - len;
        return true;
    }

    void set_to(std::string_view s) {
        b_.replace(static_cast<std::size_t>(j_ + 1), std::string::npos, s);
        k_ = j_ + static_cast<int>(s.size());
    }

    void replace_if_measured(std::string_view s) {
        if (m() > 0) set_to(s);
    }

    // Plurals and -ed / -ing.
    void step1ab() {
        if (at(k_) == 's') {
            if (ends("sses")) {
                k_ -= 2;
            } else if (ends("ies")) {
                set_to("i");
            } else if (at(k_ - 1) != 's') {
                --k_;
            }
        }
        if (ends("eed")) {
            if (m() > 0) --k_;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k_ = j_;
            b_.resize(static_cast<std::size_t>(k_ + 1));
            if (ends("at")) {
                set_to("ate");
            } else if (ends("bl")) {
                set_to("ble");
            } else if (ends("iz")) {
                set_to("ize");
            } else if (double_cons(k_)) {
                --k_;
                const char ch = at(k_);
                if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
            } else if (m() == 1 && cvc(k_)) {
                set_to("e");
            }
        }
        b_.resize(static_cast<std::size_t>(k_ + 1));
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b_[static_cast<std::size_t>(k_)] = 'i';
    }

    bool try_rule(std::string_view suffix, std::string_view replacement) {
        if (!ends(suffix)) return false;
        replace_if_measured(replacement);
        return true;
    }

    void step2() {
        switch (at(k_ - 1)) {
            case 'a':
                try_rule("ational", "ate") || try_rule("tional", "tion");
                break;
            case 'c':
                try_rule("enci", "ence") || try_rule("anci", "ance");
                break;
            case 'e':
                try_rule("izer", "ize");
                break;
            case 'l':
                try_rule("bli", "ble") || try_rule("alli", "al") || try_rule("entli", "ent") ||
                    try_rule("eli", "e") || try_rule("ousli", "ous");
                break;
            case 'o':
                try_rule("ization", "ize") || try_rule("ation", "ate") || try_rule("ator", "ate");
                break;
            case 's':
                try_rule("alism", "al") || try_rule("iveness", "ive") || try_rule("fulness", "ful") ||
                    try_rule("ousness", "ous");
                break;
            case 't':
                try_rule("aliti", "al") || try_rule("iviti", "ive") || try_rule("biliti", "ble");
                break;
            case 'g':
                try_rule("logi", "log");
                break;
            default:
                break;
        }
        b_.resize(static_cast<std::size_t>(k_ + 1));
    }

    void step3() {
        switch (at(k_)) {
            case 'e':
                try_rule("icate", "ic") || try_rule("ative", "") || try_rule("alize", "al");
                break;
            case 'i':
                try_rule("iciti", "ic");
                break;
            case 'l':
                try_rule("ical", "ic") || try_rule("ful", "");
                break;
            case 's':
                try_rule("ness", "");
                break;
            default:
                break;
        }
        b_.resize(static_cast<std::size_t>(k_ + 1));
    }

    // Strips -ant, -ence etc. in context <c>vcvc<v>.
    void step4() {
        bool matched = false;
        switch (at(k_ - 1)) {
            case 'a':
                matched = ends("al");
                break;
            case 'c':
                matched = ends("ance") || ends("ence");
                break;
            case 'e':
                matched = ends("er");
                break;
            case 'i':
                matched = ends("ic");
                break;
            case 'l':
                matched = ends("able") || ends("ible");
                break;
            case 'n':
                matched = ends("ant") || ends("ement") || ends("ment") || ends("ent");
                break;
            case 'o':
                matched = (ends("ion") && j_ >= 0 && (at(j_) == 's' || at(j_) == 't')) || ends("ou");
                break;
            case 's':
                matched = ends("ism");
                break;
            case 't':
                matched = ends("ate") || ends("iti");
                break;
            case 'u':
                matched = ends("ous");
                break;
            case 'v':
                matched = ends("ive");
                break;
            case 'z':
                matched = ends("ize");
                break;
            default:
                break;
        }
        if (matched && m() > 1) k_ = j_;
        b_.resize(static_cast<std::size_t>(k_ + 1));
    }

    // Removes a final -e and reduces -ll to -l when the measure allows.
    void step5() {
        j_ = k_;
        if (at(k_) == 'e') {
            const int a = m();
            if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
        }
        if (at(k_) == 'l' && double_cons(k_) && m() > 1) --k_;
        b_.resize(static_cast<std::size_t>(k_ + 1));
    }

    std::string b_;
    int k_;
    int j_ = 0;
};

}  // namespace

std::string porter_stem(std::string_view word) {
    return PorterStemmer(word).run();
}

}  // namespace tracelink
