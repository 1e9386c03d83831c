#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ybx {

// Disjoint generator families. Letters are totally ordered by
// (alphabet, index); a single presentation normally stays inside one
// alphabet, while tensor-style constructions deliberately mix two or more
// as ordered blocks.
enum class Alphabet : std::uint8_t { X = 0, Y, W, Z, T, Theta };

const char* alphabet_prefix(Alphabet a);

struct Letter {
    Alphabet alphabet = Alphabet::X;
    int index = 1; // 1-based, matching all I/O

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter xgen(int i) { return Letter{Alphabet::X, i}; }
inline Letter ygen(int i) { return Letter{Alphabet::Y, i}; }
inline Letter wgen(int i) { return Letter{Alphabet::W, i}; }
inline Letter zgen(int i) { return Letter{Alphabet::Z, i}; }
inline Letter tgen(int i) { return Letter{Alphabet::T, i}; }
inline Letter thgen(int i) { return Letter{Alphabet::Theta, i}; }

/// A monomial in the free monoid: a flat sequence of letters.
/// The empty word is the unit 1.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}
    Word(std::initializer_list<Letter> ls) : letters_(ls) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    Word operator*(const Word& rhs) const;
    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix(std::size_t len) const { return subword(size() - len, len); }
    void push_back(Letter l) { letters_.push_back(l); }

    /// First position where `pattern` occurs as a factor, or npos.
    std::size_t find(const Word& pattern) const;

    friend bool operator==(const Word&, const Word&) = default;

    std::string str() const;

private:
    std::vector<Letter> letters_;
};

/// Degree-lexicographic comparison: shorter words first, equal lengths
/// letter-by-letter. This is the one term order used everywhere.
std::strong_ordering deg_lex_compare(const Word& u, const Word& v);

inline bool deg_lex_less(const Word& u, const Word& v) {
    return deg_lex_compare(u, v) == std::strong_ordering::less;
}

/// The canonical order on words is deg-lex.
inline bool operator<(const Word& u, const Word& v) { return deg_lex_less(u, v); }

struct DegLexLess {
    bool operator()(const Word& u, const Word& v) const { return deg_lex_less(u, v); }
};
struct DegLexGreater {
    bool operator()(const Word& u, const Word& v) const { return deg_lex_less(v, u); }
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (const Letter& l : w.letters()) {
            h ^= (static_cast<std::size_t>(l.alphabet) << 24) ^ static_cast<std::size_t>(l.index);
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Word of `count` copies of `l`.
Word word_power(Letter l, std::size_t count);

/// Single-alphabet helper: x_{i1}...x_{ik} from 1-based indices.
Word make_word(Alphabet a, const std::vector<int>& indices);

} // namespace ybx
