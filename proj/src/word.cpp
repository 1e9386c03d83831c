#include "ybx/word.hpp"

#include <stdexcept>

namespace ybx {

const char* alphabet_prefix(Alphabet a) {
    switch (a) {
        case Alphabet::X: return "x";
        case Alphabet::Y: return "y";
        case Alphabet::W: return "w";
        case Alphabet::Z: return "z";
        case Alphabet::T: return "t";
        case Alphabet::Theta: return "th";
    }
    return "?";
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> out;
    out.reserve(size() + rhs.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > size()) throw std::out_of_range("Word::subword");
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::size_t Word::find(const Word& pattern) const {
    if (pattern.empty() || pattern.size() > size()) return static_cast<std::size_t>(-1);
    for (std::size_t p = 0; p + pattern.size() <= size(); ++p) {
        bool hit = true;
        for (std::size_t k = 0; k < pattern.size(); ++k) {
            if (letters_[p + k] != pattern[k]) { hit = false; break; }
        }
        if (hit) return p;
    }
    return static_cast<std::size_t>(-1);
}

std::string Word::str() const {
    if (empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) out += '.';
        out += alphabet_prefix(letters_[i].alphabet);
        out += std::to_string(letters_[i].index);
    }
    return out;
}

std::strong_ordering deg_lex_compare(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() <=> v.size();
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto c = u[i] <=> v[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

Word word_power(Letter l, std::size_t count) {
    return Word(std::vector<Letter>(count, l));
}

Word make_word(Alphabet a, const std::vector<int>& indices) {
    std::vector<Letter> ls;
    ls.reserve(indices.size());
    for (int i : indices) ls.push_back(Letter{a, i});
    return Word(std::move(ls));
}

} // namespace ybx
