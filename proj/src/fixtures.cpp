#include <freeprob/fixtures.hpp>

namespace freeprob
{

Rational FixtureGenerator::small_rational()
{
    std::uniform_int_distribution<int> numerator(-9, 9);
    std::uniform_int_distribution<int> denominator(1, 4);
    const int p = numerator(engine_);
    const int q = denominator(engine_);
    return Rational(p, q);
}

Rational FixtureGenerator::nonzero_rational()
{
    for (;;) {
        auto r = small_rational();
        if (!r.is_zero()) {
            return r;
        }
    }
}

NCSeries FixtureGenerator::series(int s, int maxdeg)
{
    NCSeries f(s, maxdeg);
    for (const auto& w : all_words(s, maxdeg)) {
        f.set(w, small_rational());
    }
    return f;
}

NCSeries FixtureGenerator::group_element(int s, int maxdeg)
{
    NCSeries f(s, maxdeg);
    for (const auto& w : all_words(s, maxdeg)) {
        f.set(w, w.size() == 1 ? nonzero_rational() : small_rational());
    }
    return f;
}

NCSeries FixtureGenerator::unipotent(int s, int maxdeg)
{
    return unipotent_vanishing_through(s, maxdeg, 1);
}

NCSeries FixtureGenerator::unipotent_vanishing_through(int s, int maxdeg, int j)
{
    NCSeries f(s, maxdeg);
    for (const auto& w : all_words(s, maxdeg)) {
        const int len = static_cast<int>(w.size());
        if (len == 1) {
            f.set(w, Rational(1));
        } else if (len > j) {
            f.set(w, small_rational());
        }
    }
    return f;
}

NCSeries FixtureGenerator::torus(int s, int maxdeg)
{
    NCSeries t(s, maxdeg);
    for (int i = 1; i <= s; ++i) {
        t.set(Word{i}, nonzero_rational());
    }
    return t;
}

PowerSeries1 FixtureGenerator::power_series(int maxdeg)
{
    PowerSeries1 p(maxdeg);
    for (int k = 0; k <= maxdeg; ++k) {
        p.set(k, small_rational());
    }
    return p;
}

} // namespace freeprob
