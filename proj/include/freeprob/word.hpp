#ifndef FREEPROB_WORD_HPP
#define FREEPROB_WORD_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace freeprob
{

// A finite sequence of letters from {1..s}. Words index the coefficients of
// non-commutative series; ordering is by length first, then lexicographic.
class Word
{
public:
    Word() = default;
    Word(std::initializer_list<int> letters) : letters_(letters) {}
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    std::span<const int> letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    // Largest letter, 0 for the empty word.
    int max_letter() const noexcept;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<int> letters_;
};

// "[1,2,1]"
std::string to_string(const Word& w);

// Throws ValidationError unless every letter lies in 1..s.
void check_letters(const Word& w, int s);

// The subword at the given 1-based, strictly increasing positions.
Word restrict_word(const Word& w, std::span<const int> positions);

// Concatenation.
Word operator+(const Word& a, const Word& b);

// All words of exactly `length` letters over {1..s}, lexicographic.
std::vector<Word> words_of_length(int s, int length);

// All words with 1 <= |w| <= maxdeg, by length then lexicographic.
std::vector<Word> all_words(int s, int maxdeg);

// Dense graded-lex numbering of the non-empty words of length <= maxdeg.
class WordIndexer
{
public:
    WordIndexer(int s, int maxdeg);

    std::size_t size() const noexcept { return offsets_.back(); }
    std::size_t rank(const Word& w) const;
    // Rank of the subword of `w` at the 1-based positions `positions`.
    std::size_t rank(std::span<const int> letters, std::span<const int> positions) const;
    Word word(std::size_t rank) const;

private:
    int s_;
    int maxdeg_;
    std::vector<std::size_t> offsets_; // offsets_[L] = index of first word of length L
};

} // namespace freeprob

#endif
