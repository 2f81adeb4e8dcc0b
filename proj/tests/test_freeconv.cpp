#include <doctest.h>

#include <freeprob/errors.hpp>
#include <freeprob/fixtures.hpp>
#include <freeprob/freeconv.hpp>

#include "oracles.hpp"

using namespace freeprob;

namespace
{

NCSeries one_letter(std::initializer_list<long> coeffs, int maxdeg)
{
    NCSeries f(1, maxdeg);
    int k = 1;
    for (long c : coeffs) {
        f.set(Word(std::vector<int>(static_cast<std::size_t>(k), 1)), Rational(c));
        ++k;
    }
    return f;
}

std::vector<Rational> one_letter_coeffs(const NCSeries& f)
{
    std::vector<Rational> out;
    for (int k = 1; k <= f.max_degree(); ++k) {
        out.push_back(f.coeff(Word(std::vector<int>(static_cast<std::size_t>(k), 1))));
    }
    return out;
}

std::vector<Rational> ints(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

} // namespace

TEST_CASE("box_conv agrees with the brute-force definition")
{
    FixtureGenerator gen(21);
    for (int s = 1; s <= 2; ++s) {
        const auto f = gen.series(s, 4);
        const auto g = gen.series(s, 4);
        const auto fg = box_conv(f, g);
        for (const auto& w : all_words(s, 4)) {
            CHECK(fg.coeff(w) == oracle::box_coefficient(f, g, w));
        }
    }
}

TEST_CASE("box_conv examples")
{
    const auto f = one_letter({1, 1}, 3);
    CHECK(one_letter_coeffs(box_conv(f, f)) ==
          std::vector<Rational>{oracle::box_coefficient(f, f, Word{1}), oracle::box_coefficient(f, f, Word{1, 1}),
                                oracle::box_coefficient(f, f, Word{1, 1, 1})});
    // frozen oracle values
    CHECK(one_letter_coeffs(box_conv(f, f)) == ints({1, 2, 3}));
    CHECK(one_letter_coeffs(box_conv(zeta(1, 4), zeta(1, 4))) == ints({1, 2, 5, 14}));
    FixtureGenerator gen(3);
    const auto h = gen.series(2, 4);
    CHECK(box_conv(NCSeries::unit(2, 4), h) == h);
    CHECK(box_conv(h, NCSeries::unit(2, 4)) == h);
    CHECK_THROWS_AS(box_conv(h, NCSeries(3, 4)), AlphabetMismatch);
    CHECK_THROWS_AS(box_conv(h, NCSeries(2, 3)), AlphabetMismatch);
}

TEST_CASE("box_conv is associative, commutative only for one letter")
{
    FixtureGenerator gen(4);
    for (int i = 0; i < 5; ++i) {
        const auto f = gen.series(2, 5);
        const auto g = gen.series(2, 5);
        const auto h = gen.series(2, 5);
        CHECK(box_conv(box_conv(f, g), h) == box_conv(f, box_conv(g, h)));
        const auto a = gen.series(1, 8);
        const auto b = gen.series(1, 8);
        CHECK(box_conv(a, b) == box_conv(b, a));
    }
    NCSeries f = NCSeries::unit(2, 3);
    NCSeries g = NCSeries::unit(2, 3);
    f.set(Word{2, 1}, Rational(1));
    g.set(Word{1, 2}, Rational(1));
    const Word aba{1, 2, 1};
    CHECK(box_conv(f, g).coeff(aba) == 0);
    CHECK(box_conv(g, f).coeff(aba) == 1);
}

TEST_CASE("box_conv is not distributive")
{
    const auto u = NCSeries::unit(1, 3);
    const auto z = zeta(1, 3);
    CHECK_FALSE(box_conv(u + u, z) == box_conv(u, z) + box_conv(u, z));
}

TEST_CASE("job count does not change the result")
{
    FixtureGenerator gen(8);
    const auto f = gen.series(3, 5);
    const auto g = gen.series(3, 5);
    const auto one = box_conv(f, g, 1);
    CHECK(box_conv(f, g, 2) == one);
    CHECK(box_conv(f, g, 7) == one);
}

TEST_CASE("box_inverse")
{
    CHECK(box_inverse(NCSeries::unit(2, 4)) == NCSeries::unit(2, 4));
    FixtureGenerator gen(5);
    for (int i = 0; i < 5; ++i) {
        const auto f = gen.group_element(2, 5);
        const auto h = box_inverse(f);
        CHECK(box_conv(f, h) == NCSeries::unit(2, 5));
        CHECK(box_conv(h, f) == NCSeries::unit(2, 5));
        CHECK(h.coeff(Word{1}) == 1 / f.coeff(Word{1}));
        CHECK(h.coeff(Word{2}) == 1 / f.coeff(Word{2}));
        const auto p = gen.unipotent(2, 4);
        const auto q = box_inverse(p);
        for (const auto& w : words_of_length(2, 2)) {
            CHECK(q.coeff(w) == -p.coeff(w));
        }
    }
    NCSeries bad = NCSeries::unit(2, 3);
    bad.set(Word{2}, Rational(0));
    CHECK_THROWS_AS(box_inverse(bad), NotInvertible);
    CHECK_THROWS_AS(GroupElement{bad}, NotInvertible);
    const GroupElement u(gen.unipotent(2, 3));
    CHECK(u.is_unipotent());
    CHECK(box_inverse(u).is_unipotent());
}

TEST_CASE("zeta and moeb")
{
    CHECK(one_letter_coeffs(zeta(1, 5)) == ints({1, 1, 1, 1, 1}));
    // signed Catalan numbers, frozen from the Lagrange-inversion oracle
    CHECK(one_letter_coeffs(moeb(1, 5)) == ints({1, -1, 2, -5, 14}));
    const auto m = moeb(2, 4);
    CHECK(box_conv(m, zeta(2, 4)) == NCSeries::unit(2, 4));
    CHECK(box_conv(zeta(2, 4), m) == NCSeries::unit(2, 4));
    CHECK(m.coeff(Word{1, 2, 1}) == 2);
    CHECK(m.coeff(Word{2, 2, 1, 2}) == -5);
}

TEST_CASE("moments and cumulants")
{
    CHECK(moments_from_cumulants(NCSeries::unit(2, 4)) == zeta(2, 4));
    FixtureGenerator gen(6);
    for (int i = 0; i < 4; ++i) {
        const auto r = gen.series(2, 4);
        const auto m = moments_from_cumulants(r);
        for (const auto& w : all_words(2, 4)) {
            CHECK(m.coeff(w) == oracle::moment_from_cumulants(r, w));
        }
        CHECK(cumulants_from_moments(m) == r);
        const auto x = gen.series(2, 4);
        CHECK(moments_from_cumulants(cumulants_from_moments(x)) == x);
    }
    const auto m = gen.series(1, 2);
    const auto r = cumulants_from_moments(m);
    const Rational m1 = m.coeff(Word{1});
    const Rational m2 = m.coeff(Word{1, 1});
    CHECK(r.coeff(Word{1, 1}) == m2 - m1 * m1);
}

TEST_CASE("addv and mulv")
{
    FixtureGenerator gen(7);
    for (int i = 0; i < 4; ++i) {
        const auto m = gen.series(2, 4);
        const auto k = gen.series(2, 4);
        CHECK(addv(m, NCSeries(2, 4)) == m);
        CHECK(mulv(zeta(2, 4), m) == m);
        CHECK(mulv(m, zeta(2, 4)) == m);
        const auto ra = gen.series(2, 4);
        const auto rb = gen.series(2, 4);
        CHECK(addv(moments_from_cumulants(ra), moments_from_cumulants(rb)) == moments_from_cumulants(ra + rb));
        CHECK(mulv(moments_from_cumulants(ra), moments_from_cumulants(rb)) ==
              moments_from_cumulants(box_conv(ra, rb)));
        CHECK(addv(m, k) == addv(k, m));
    }
}

TEST_CASE("join_free")
{
    CHECK(join_free(NCSeries::unit(2, 3), NCSeries::unit(2, 3)) == NCSeries::unit(4, 3));
    FixtureGenerator gen(9);
    const auto f = gen.series(2, 3);
    const auto g = gen.series(2, 3);
    const auto j = join_free(f, g);
    CHECK(j.alphabet_size() == 4);
    CHECK(j.coeff(Word{1, 2}) == f.coeff(Word{1, 2}));
    CHECK(j.coeff(Word{4, 3, 3}) == g.coeff(Word{2, 1, 1}));
    CHECK(j.coeff(Word{1, 3}) == 0);
    CHECK(j.coeff(Word{4, 2, 4}) == 0);
    // free a, b with unit-free cumulants: phi(a b) = phi(a) phi(b),
    // phi(a b a) = phi(a^2) phi(b)
    const auto m = moments_from_cumulants(join_free(gen.series(1, 3), gen.series(1, 3)));
    CHECK(m.coeff(Word{1, 2}) == m.coeff(Word{1}) * m.coeff(Word{2}));
    CHECK(m.coeff(Word{1, 2, 1}) == m.coeff(Word{1, 1}) * m.coeff(Word{2}));
    CHECK(m.coeff(Word{2, 1, 2}) == m.coeff(Word{2, 2}) * m.coeff(Word{1}));
    CHECK_THROWS_AS(join_free(f, NCSeries(3, 3)), AlphabetMismatch);
}

TEST_CASE("grouped cumulants")
{
    FixtureGenerator gen(10);
    const auto r = gen.series(4, 4);
    const Word w{1, 2, 3, 4};
    const std::vector<int> whole{4};
    const std::vector<int> singles{1, 2, 3, 4};
    CHECK(grouped_cumulants(r, whole) == moments_from_cumulants(r).coeff(w));
    CHECK(grouped_cumulants(r, singles) == r.coeff(w));
    const std::vector<int> bad{2, 2, 4};
    CHECK_THROWS_AS(grouped_cumulants(r, bad), ValidationError);
    CHECK_THROWS_AS(grouped_cumulants(gen.series(2, 4), whole), ValidationError);

    // products of free pairs: kappa_n[a1 b1, ..., an bn] is the boxed convolution
    const auto f = gen.series(2, 6);
    const auto g = gen.series(2, 6);
    const auto joined = join_free(f, g);
    const auto fg = box_conv(truncate(f, 3), truncate(g, 3));
    for (const auto& v : all_words(2, 3)) {
        std::vector<int> letters;
        std::vector<int> cuts;
        for (std::size_t k = 0; k < v.size(); ++k) {
            letters.push_back(v[k]);
            letters.push_back(v[k] + 2);
            cuts.push_back(static_cast<int>(2 * k + 2));
        }
        CHECK(grouped_cumulants(joined, Word(letters), cuts) == fg.coeff(v));
    }
}

TEST_CASE("commutators and torus factorization")
{
    FixtureGenerator gen(12);
    const auto f = gen.group_element(2, 4);
    CHECK(commutator(f, NCSeries::unit(2, 4)) == NCSeries::unit(2, 4));
    for (int i = 0; i < 3; ++i) {
        const auto c = commutator(gen.unipotent(2, 4), gen.unipotent(2, 4));
        CHECK(c.coeff(Word{1}) == 1);
        for (const auto& w : words_of_length(2, 2)) {
            CHECK(c.coeff(w) == 0);
        }
    }
    auto g = gen.unipotent(2, 4);
    g.set(Word{1}, Rational(2));
    g.set(Word{2}, Rational(2));
    const auto [t, p] = torus_factor(g);
    CHECK(t.coeff(Word{1}) == 2);
    CHECK(t.terms().size() == 2);
    CHECK(is_unipotent_element(p));
    CHECK(box_conv(t, p) == g);
    CHECK(box_conv(p, t) == g);
    CHECK(is_group_element(g));
    CHECK_FALSE(is_unipotent_element(g));
}

TEST_CASE("vanishing subgroups are normal and additive one degree up")
{
    FixtureGenerator gen(13);
    for (int j = 1; j <= 3; ++j) {
        const auto h = gen.unipotent_vanishing_through(2, 5, j);
        const auto k = gen.unipotent_vanishing_through(2, 5, j);
        const auto f = gen.unipotent(2, 5);
        const auto conj = box_conv(box_conv(f, h), box_inverse(f));
        const auto hk = box_conv(h, k);
        for (const auto& w : all_words(2, j + 1)) {
            if (w.size() >= 2 && static_cast<int>(w.size()) <= j) {
                CHECK(conj.coeff(w) == 0);
            }
            if (static_cast<int>(w.size()) == j + 1) {
                CHECK(hk.coeff(w) == h.coeff(w) + k.coeff(w));
            }
        }
    }
}
