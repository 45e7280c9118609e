#pragma once

#include <compare>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace rookrank {

// Immutable word over the alphabet {1, ..., n}. Letters are 1-based
// throughout; the unranking steps build new words rather than mutating.
class Word {
public:
    Word(int alphabet_size, std::vector<int> letters)
        : alphabet_size_(alphabet_size), letters_(std::move(letters)) {
        if (alphabet_size_ < 1) throw std::invalid_argument("Word: alphabet size must be positive");
        for (int l : letters_)
            if (l < 1 || l > alphabet_size_)
                throw std::invalid_argument("Word: letter " + std::to_string(l) +
                                            " outside [1, " + std::to_string(alphabet_size_) + "]");
    }

    static Word empty(int alphabet_size) { return Word(alphabet_size, {}); }

    int alphabet_size() const { return alphabet_size_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool is_empty() const { return letters_.empty(); }

    // 0-based position, 1-based letter value.
    int operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }

    const std::vector<int>& letters() const { return letters_; }

    friend bool operator==(const Word& a, const Word& b) = default;

private:
    int alphabet_size_;
    std::vector<int> letters_;
};

inline bool is_prefix(const Word& alpha, const Word& w) {
    if (alpha.alphabet_size() != w.alphabet_size())
        throw std::invalid_argument("is_prefix: alphabet mismatch");
    if (alpha.size() > w.size()) return false;
    for (int i = 0; i < alpha.size(); ++i)
        if (alpha[i] != w[i]) return false;
    return true;
}

// Lexicographic order: decided at the first differing position; a proper
// prefix comes before its extensions.
inline std::strong_ordering lex_compare(const Word& a, const Word& b) {
    if (a.alphabet_size() != b.alphabet_size())
        throw std::invalid_argument("lex_compare: alphabet mismatch");
    const int common = std::min(a.size(), b.size());
    for (int i = 0; i < common; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.size() == b.size()) return std::strong_ordering::equal;
    return a.size() < b.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

// The earliest word of the same length after alpha.
inline Word increment_last(const Word& alpha) {
    if (alpha.is_empty()) throw std::invalid_argument("increment_last: empty word");
    if (alpha[alpha.size() - 1] == alpha.alphabet_size())
        throw index_out_of_range("increment_last: last letter is already the alphabet maximum");
    std::vector<int> letters = alpha.letters();
    ++letters.back();
    return Word(alpha.alphabet_size(), std::move(letters));
}

// The earliest proper extension of alpha.
inline Word append_one(const Word& alpha) {
    if (alpha.size() >= alpha.alphabet_size())
        throw index_out_of_range("append_one: word already at full length");
    std::vector<int> letters = alpha.letters();
    letters.push_back(1);
    return Word(alpha.alphabet_size(), std::move(letters));
}

// Wire format: letters in decimal separated by single spaces, e.g. "2 5 4 8".
inline std::string to_text(const Word& w) {
    std::string out;
    for (int i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

inline Word parse_word(int alphabet_size, const std::string& text) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_word: bad letter '" + token + "'");
        }
        if (used != token.size()) throw std::invalid_argument("parse_word: bad letter '" + token + "'");
        letters.push_back(value);
    }
    return Word(alphabet_size, std::move(letters));
}

}  // namespace rookrank
