#ifndef FREEPROB_FIXTURES_HPP
#define FREEPROB_FIXTURES_HPP

#include <cstdint>
#include <random>

#include <freeprob/onedim.hpp>
#include <freeprob/series.hpp>

namespace freeprob
{

// Seeded random inputs for property checks. Coefficients are small
// rationals p/q with p in [-9, 9] and q in [1, 4]; the same seed always
// yields the same sequence.
class FixtureGenerator
{
public:
    explicit FixtureGenerator(std::uint64_t seed) : engine_(seed) {}

    Rational small_rational();
    Rational nonzero_rational();

    // Every coefficient drawn independently (zeros possible).
    NCSeries series(int s, int maxdeg);
    // Non-zero first-order coefficients.
    NCSeries group_element(int s, int maxdeg);
    // First-order coefficients equal to 1.
    NCSeries unipotent(int s, int maxdeg);
    // Unipotent with h_w = 0 for 2 <= |w| <= j.
    NCSeries unipotent_vanishing_through(int s, int maxdeg, int j);
    // First-order terms only, all non-zero.
    NCSeries torus(int s, int maxdeg);

    PowerSeries1 power_series(int maxdeg);

private:
    std::mt19937_64 engine_;
};

} // namespace freeprob

#endif
