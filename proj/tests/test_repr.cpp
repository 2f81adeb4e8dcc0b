#include <doctest.h>

#include <freeprob/errors.hpp>
#include <freeprob/fixtures.hpp>
#include <freeprob/freeconv.hpp>
#include <freeprob/onedim.hpp>
#include <freeprob/repr.hpp>

using namespace freeprob;

namespace
{

RationalMatrix inverse(const RationalMatrix& m)
{
    // exact Gauss-Jordan elimination
    const auto n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index pivot = c;
        while (a(pivot, c) == 0) {
            ++pivot;
        }
        a.row(c).swap(a.row(pivot));
        inv.row(c).swap(inv.row(pivot));
        const Rational d = a(c, c);
        a.row(c) /= d;
        inv.row(c) /= d;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r != c && a(r, c) != 0) {
                const Rational k = a(r, c);
                a.row(r) -= k * a.row(c);
                inv.row(r) -= k * inv.row(c);
            }
        }
    }
    return inv;
}

} // namespace

TEST_CASE("monomial bases")
{
    const auto b = MonomialBasis::reduced(2, 3, 2);
    CHECK(b[0].is_one());
    // 1, four Xbar_{ij}, eight Xbar_{ijk}, ten products Xbar_{ij} Xbar_{kl}
    CHECK(b.size() == 23);
    for (std::size_t i = 1; i < b.size(); ++i) {
        CHECK(b[i - 1].weighted_degree() <= b[i].weighted_degree());
        CHECK(b.index_of(b[i]) == i);
    }
    CHECK(b.keys()[1] == "Xbar[1,1]");
    CHECK_FALSE(b.index_of(Monomial::generator(Word{1, 1}, 3)).has_value());
    const auto f = MonomialBasis::full(2, 4, 3);
    CHECK_FALSE(f[0].is_one());
    for (const auto& m : f.monomials()) {
        CHECK(m.letter_length() <= 4);
        CHECK(m.weighted_degree() <= 3);
    }
    CHECK(MonomialBasis::reduced(2, 4, 3).size() == 91);
    CHECK(f.size() == 88);
}

TEST_CASE("build_rep basics")
{
    const auto id = build_rep(NCSeries::unit(2, 4), 3);
    CHECK(is_identity(id));
    CHECK(id.rows() == 91);
    FixtureGenerator gen(41);
    const auto f = gen.unipotent(2, 4);
    const auto m = build_rep(f, 3);
    const auto basis = MonomialBasis::reduced(2, 4, 3);
    for (const auto& w : all_words(2, 4)) {
        if (w.size() >= 2) {
            const auto j = basis.index_of(Monomial::generator(w));
            REQUIRE(j.has_value());
            CHECK(m(0, static_cast<Eigen::Index>(*j)) == f.coeff(w));
        }
    }
    CHECK(build_rep(f) == m);
    CHECK(build_rep(f, 3, 4) == m);
    CHECK_THROWS_AS(build_rep(gen.group_element(2, 4), 3), DomainError);
}

TEST_CASE("build_rep is a faithful unipotent homomorphism")
{
    FixtureGenerator gen(42);
    for (int i = 0; i < 3; ++i) {
        const auto f = gen.unipotent(2, 4);
        const auto g = gen.unipotent(2, 4);
        const auto mf = build_rep(f, 3);
        const auto mg = build_rep(g, 3);
        CHECK(build_rep(box_conv(f, g), 3) == multiply(mf, mg));
        CHECK(is_upper_triangular(mf));
        CHECK(certify_unipotent(mf));
        CHECK(certify_triangular(mf, MonomialBasis::reduced(2, 4, 3)));
        const auto k = nilpotency_index(mf);
        REQUIRE(k.has_value());
        CHECK(*k <= 4);
        CHECK(build_rep(box_inverse(f), 3) == inverse(mf));
    }
}

TEST_CASE("certificates")
{
    RationalMatrix m = RationalMatrix::Identity(3, 3);
    CHECK(certify_unipotent(m));
    CHECK(nilpotency_index(m) == 1);
    m(0, 2) = 5;
    CHECK(certify_unipotent(m));
    CHECK(nilpotency_index(m) == 2);
    m(2, 1) = 1;
    CHECK_FALSE(is_upper_triangular(m));
    m(1, 1) = 2;
    CHECK_FALSE(certify_unipotent(m));
    CHECK_FALSE(nilpotency_index(m).has_value());
    CHECK_FALSE(certify_triangular(m, MonomialBasis::reduced(2, 2, 1)));
}

TEST_CASE("torus representation and S-transform")
{
    const auto basis = MonomialBasis::full(2, 3, 2);
    CHECK(is_identity(build_torus_rep(NCSeries::unit(2, 3), basis)));
    NCSeries t(2, 3);
    t.set(Word{1}, Rational(2));
    t.set(Word{2}, Rational(3));
    const auto d = build_torus_rep(t, basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Rational expected(1);
        for (const auto& [w, e] : basis[i].factors()) {
            for (int letter : w) {
                for (int k = 0; k < e; ++k) {
                    expected *= t.coeff(Word{letter});
                }
            }
        }
        const auto ii = static_cast<Eigen::Index>(i);
        CHECK(d(ii, ii) == expected);
    }
    NCSeries bad(2, 3);
    bad.set(Word{1}, Rational(2));
    CHECK_THROWS_AS(build_torus_rep(bad, basis), NotInvertible);

    FixtureGenerator gen(43);
    for (int i = 0; i < 3; ++i) {
        const auto f = gen.group_element(2, 4);
        const auto g = gen.group_element(2, 4);
        const auto sf = s_transform(f, 3);
        CHECK(s_transform(box_conv(f, g), 3) == multiply(sf, s_transform(g, 3)));
        CHECK(is_upper_triangular(sf));
        CHECK(sf == right_translation(f, MonomialBasis::full(2, 4, 3)));
    }
}

TEST_CASE("one-letter S matrix")
{
    const auto a = NCSeries::unit(1, 5);
    const auto m = one_dim_s_matrix(a);
    CHECK(is_identity(m));
    FixtureGenerator gen(44);
    for (int i = 0; i < 3; ++i) {
        const auto x = gen.unipotent(1, 5);
        const auto y = gen.unipotent(1, 5);
        const auto mx = one_dim_s_matrix(x);
        const auto my = one_dim_s_matrix(y);
        CHECK(certify_unipotent(mx));
        const auto mxy = one_dim_s_matrix(box_conv(x, y));
        for (Eigen::Index c = 1; c < mx.cols(); ++c) {
            CHECK(mxy(0, c) == mx(0, c) + my(0, c));
        }
        CHECK(mxy == multiply(mx, my));
    }
    CHECK_THROWS_AS(one_dim_s_matrix(gen.group_element(2, 3)), AlphabetMismatch);
    NCSeries two(1, 3);
    two.set(Word{1}, Rational(2));
    CHECK_THROWS_AS(one_dim_s_matrix(two), DomainError);
}
