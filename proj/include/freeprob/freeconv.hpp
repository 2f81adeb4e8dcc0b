#ifndef FREEPROB_FREECONV_HPP
#define FREEPROB_FREECONV_HPP

#include <span>
#include <utility>

#include <freeprob/series.hpp>

namespace freeprob
{

// A series whose first-order coefficients are all units. Unipotent elements
// have every first-order coefficient equal to 1.
class GroupElement
{
public:
    // Throws NotInvertible if some first-order coefficient vanishes.
    explicit GroupElement(NCSeries f);

    const NCSeries& series() const noexcept { return series_; }
    bool is_unipotent() const noexcept { return unipotent_; }

private:
    NCSeries series_;
    bool unipotent_;
};

bool is_group_element(const NCSeries& f);
bool is_unipotent_element(const NCSeries& f);

// (f [*] g)_w = sum over pi in NC(|w|) of X_{w,pi}(f) X_{w,K(pi)}(g).
// `jobs` > 1 splits the words of each length across threads; the result does
// not depend on it.
NCSeries box_conv(const NCSeries& f, const NCSeries& g, unsigned jobs = 1);

// Two-sided inverse for the boxed convolution, solved degree by degree.
NCSeries box_inverse(const NCSeries& f);
GroupElement box_inverse(const GroupElement& f);

// All coefficients 1: the moment series of the identity.
NCSeries zeta(int s, int maxdeg);
// The boxed-convolution inverse of zeta.
NCSeries moeb(int s, int maxdeg);

// R [*] Zeta and M [*] Moeb.
NCSeries moments_from_cumulants(const NCSeries& r);
NCSeries cumulants_from_moments(const NCSeries& m);

// Free additive / multiplicative convolution in moment coordinates.
NCSeries addv(const NCSeries& f, const NCSeries& g);
NCSeries mulv(const NCSeries& f, const NCSeries& g);

// Cumulant series of the union of two free s-tuples over letters 1..2s:
// letters 1..s carry f, letters s+1..2s carry g, mixed words vanish.
NCSeries join_free(const NCSeries& f, const NCSeries& g);

// Sum of kappa_pi[a_{w1},...,a_{wn}] over pi in NC(n) with pi v sigma = 1_n,
// where sigma is the interval partition given by `cuts` and the cumulants are
// read from r.
Rational grouped_cumulants(const NCSeries& r, const Word& w, std::span<const int> cuts);
// The word is (1, 2, ..., n), n = cuts.back(); r needs at least n letters.
Rational grouped_cumulants(const NCSeries& r, std::span<const int> cuts);

// f [*] g [*] f^-1 [*] g^-1
NCSeries commutator(const NCSeries& f, const NCSeries& g);

struct TorusFactor
{
    NCSeries torus;     // first-order part of f
    NCSeries unipotent; // torus^-1 [*] f
};

// f = torus [*] unipotent.
TorusFactor torus_factor(const NCSeries& f);

} // namespace freeprob

#endif
