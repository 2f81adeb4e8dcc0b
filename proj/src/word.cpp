#include <freeprob/word.hpp>

#include <algorithm>

#include <freeprob/errors.hpp>

namespace freeprob
{

int Word::max_letter() const noexcept
{
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::strong_ordering operator<=>(const Word& a, const Word& b)
{
    if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Word& w)
{
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(w[i]);
    }
    return out + "]";
}

void check_letters(const Word& w, int s)
{
    for (int letter : w) {
        if (letter < 1 || letter > s) {
            throw ValidationError("letter " + std::to_string(letter) + " of word " + to_string(w)
                                  + " outside alphabet 1.." + std::to_string(s));
        }
    }
}

Word restrict_word(const Word& w, std::span<const int> positions)
{
    std::vector<int> out;
    out.reserve(positions.size());
    int previous = 0;
    for (int p : positions) {
        if (p <= previous || p > static_cast<int>(w.size())) {
            throw ValidationError("invalid restriction positions for word " + to_string(w));
        }
        out.push_back(w[static_cast<std::size_t>(p - 1)]);
        previous = p;
    }
    return Word(std::move(out));
}

Word operator+(const Word& a, const Word& b)
{
    std::vector<int> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return Word(std::move(out));
}

std::vector<Word> words_of_length(int s, int length)
{
    std::vector<Word> out;
    if (length <= 0 || s <= 0) {
        return out;
    }
    std::vector<int> letters(static_cast<std::size_t>(length), 1);
    while (true) {
        out.emplace_back(letters);
        int i = length - 1;
        while (i >= 0 && letters[static_cast<std::size_t>(i)] == s) {
            letters[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) {
            break;
        }
        ++letters[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<Word> all_words(int s, int maxdeg)
{
    std::vector<Word> out;
    for (int len = 1; len <= maxdeg; ++len) {
        auto layer = words_of_length(s, len);
        out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    return out;
}

WordIndexer::WordIndexer(int s, int maxdeg) : s_(s), maxdeg_(maxdeg), offsets_(static_cast<std::size_t>(maxdeg) + 2, 0)
{
    std::size_t layer = 1;
    offsets_[1] = 0;
    for (int len = 1; len <= maxdeg; ++len) {
        layer *= static_cast<std::size_t>(s);
        offsets_[static_cast<std::size_t>(len) + 1] = offsets_[static_cast<std::size_t>(len)] + layer;
    }
}

std::size_t WordIndexer::rank(const Word& w) const
{
    std::size_t r = 0;
    for (int letter : w) {
        r = r * static_cast<std::size_t>(s_) + static_cast<std::size_t>(letter - 1);
    }
    return offsets_[w.size()] + r;
}

std::size_t WordIndexer::rank(std::span<const int> letters, std::span<const int> positions) const
{
    std::size_t r = 0;
    for (int p : positions) {
        r = r * static_cast<std::size_t>(s_) + static_cast<std::size_t>(letters[static_cast<std::size_t>(p - 1)] - 1);
    }
    return offsets_[positions.size()] + r;
}

Word WordIndexer::word(std::size_t rank) const
{
    std::size_t len = 1;
    while (len <= static_cast<std::size_t>(maxdeg_) && rank >= offsets_[len + 1]) {
        ++len;
    }
    std::size_t r = rank - offsets_[len];
    std::vector<int> letters(len);
    for (std::size_t i = len; i-- > 0;) {
        letters[i] = static_cast<int>(r % static_cast<std::size_t>(s_)) + 1;
        r /= static_cast<std::size_t>(s_);
    }
    return Word(std::move(letters));
}

} // namespace freeprob
