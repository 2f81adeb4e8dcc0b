#ifndef FREEPROB_SERIES_HPP
#define FREEPROB_SERIES_HPP

#include <map>

#include <freeprob/ncpart.hpp>
#include <freeprob/rational.hpp>
#include <freeprob/word.hpp>

namespace freeprob
{

// Truncated power series without constant term in s non-commuting
// variables: coefficients f_w for 1 <= |w| <= maxdeg. Storage is sparse;
// absent words are zero and zeros are never stored.
class NCSeries
{
public:
    NCSeries(int s, int maxdeg);

    // z_1 + ... + z_s, the unit of the boxed convolution.
    static NCSeries unit(int s, int maxdeg);

    int alphabet_size() const noexcept { return s_; }
    int max_degree() const noexcept { return maxdeg_; }

    // f_w; zero when absent. Throws ValidationError for an out-of-range word.
    Rational coeff(const Word& w) const;
    void set(const Word& w, Rational value);
    NCSeries& add_to(const Word& w, const Rational& value);

    // Non-zero terms, ordered by length then lexicographically.
    const std::map<Word, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    friend bool operator==(const NCSeries&, const NCSeries&) = default;

private:
    void check_word(const Word& w) const;

    int s_;
    int maxdeg_;
    std::map<Word, Rational> terms_;
};

// Coefficient-wise sum; the result is truncated at min(maxdeg).
NCSeries add(const NCSeries& f, const NCSeries& g);
NCSeries subtract(const NCSeries& f, const NCSeries& g);
NCSeries scale(const Rational& c, const NCSeries& f);
// Non-commutative Cauchy product: (fg)_w = sum over w = w1 w2 of f_w1 g_w2.
NCSeries cauchy_mul(const NCSeries& f, const NCSeries& g);
NCSeries truncate(const NCSeries& f, int maxdeg);

inline NCSeries operator+(const NCSeries& f, const NCSeries& g) { return add(f, g); }
inline NCSeries operator-(const NCSeries& f, const NCSeries& g) { return subtract(f, g); }
inline NCSeries operator*(const Rational& c, const NCSeries& f) { return scale(c, f); }
inline NCSeries operator*(const NCSeries& f, const NCSeries& g) { return cauchy_mul(f, g); }

inline Rational coeff(const NCSeries& f, const Word& w) { return f.coeff(w); }

// X_{w,pi}(f): the product over the blocks V of pi of f at w|V.
Rational eval_block_functional(const NCSeries& f, const Word& w, const NCPartition& p);

// Throws AlphabetMismatch when the alphabets differ.
void require_same_alphabet(const NCSeries& f, const NCSeries& g, const char* what);
// Throws AlphabetMismatch unless both alphabet and truncation agree.
void require_same_shape(const NCSeries& f, const NCSeries& g, const char* what);

} // namespace freeprob

#endif
