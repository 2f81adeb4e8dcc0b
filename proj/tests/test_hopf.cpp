#include <doctest.h>

#include <freeprob/errors.hpp>
#include <freeprob/fixtures.hpp>
#include <freeprob/freeconv.hpp>
#include <freeprob/hopf.hpp>

using namespace freeprob;

namespace
{

const CoordRing kFull{2, 5, Variant::full};
const CoordRing kReduced{2, 5, Variant::reduced};

} // namespace

TEST_CASE("monomials")
{
    auto m = Monomial::generator(Word{1, 2}, 2) * Monomial::generator(Word{1}, -1);
    CHECK(m.exponent(Word{1, 2}) == 2);
    CHECK(m.exponent(Word{1}) == -1);
    CHECK(m.weighted_degree() == 2);
    CHECK(m.degree() == 1);
    m *= Monomial::generator(Word{1}, 1);
    CHECK(m == Monomial::generator(Word{1, 2}, 2));
    CHECK(to_string(m, Variant::full) == "X[1,2]^2");
    CHECK(to_string(Monomial(), Variant::full) == "1");
}

TEST_CASE("polynomial arithmetic normalizes Laurent generators")
{
    const auto x = CoordPoly::generator(kFull, Word{1});
    const auto xi = CoordPoly::inverse_generator(kFull, 1);
    CHECK(x * xi == CoordPoly::constant(kFull, Rational(1)));
    CHECK(CoordPoly::generator(kReduced, Word{2}) == CoordPoly::constant(kReduced, Rational(1)));
    CHECK(CoordPoly::inverse_generator(kReduced, 1) == CoordPoly::constant(kReduced, Rational(1)));
    const auto y = CoordPoly::generator(kFull, Word{2, 1});
    CHECK(to_string(pow(x + y, 2)) == "2*X[1]*X[2,1] + X[1]^2 + X[2,1]^2");
    CHECK((y - y).is_zero());
}

TEST_CASE("coproduct expansions")
{
    CHECK(to_string(coproduct(kFull, Word{1})) == "X[1] (x) X[1]");
    CHECK(to_string(coproduct(kFull, Word{1, 2})) == "X[1]*X[2] (x) X[1,2] + X[1,2] (x) X[1]*X[2]");
    CHECK(to_string(coproduct(kFull, Word{1, 2, 2})) ==
          "X[1]*X[2]^2 (x) X[1,2,2] + X[1]*X[2,2] (x) X[2]*X[1,2] + X[2]*X[1,2] (x) X[1]*X[2,2] + "
          "X[2]*X[1,2] (x) X[2]*X[1,2] + X[1,2,2] (x) X[1]*X[2]^2");
    CHECK(coproduct(kFull, Word{1, 2, 1, 2}).size() == 14);
    CHECK_THROWS_AS(coproduct(CoordRing{2, 3, Variant::full}, Word{1, 2, 1, 2}), ValidationError);
}

TEST_CASE("counit")
{
    CHECK(counit(CoordPoly::generator(kFull, Word{1})) == 1);
    CHECK(counit(CoordPoly::generator(kFull, Word{1, 2})) == 0);
    const auto p = CoordPoly::generator(kFull, Word{1}) * CoordPoly::generator(kFull, Word{2, 1, 2}) +
                   CoordPoly::constant(kFull, Rational(3));
    CHECK(counit(p) == 3);
}

TEST_CASE("antipode")
{
    CHECK(to_string(antipode(kFull, Word{2})) == "X[2]^-1");
    CHECK(to_string(antipode(kFull, Word{1, 2})) == "-X[1]^-2*X[2]^-2*X[1,2]");
    CHECK(to_string(antipode(kReduced, Word{1, 2})) == "-Xbar[1,2]");
    CHECK(to_string(antipode(kReduced, Word{1, 1, 1})) == "3*Xbar[1,1]^2 - Xbar[1,1,1]");
}

TEST_CASE("Hopf axioms on generators")
{
    for (const auto& ring : {CoordRing{2, 4, Variant::full}, CoordRing{2, 4, Variant::reduced}}) {
        for (const auto& w : all_words(2, 4)) {
            if (ring.variant == Variant::reduced && w.size() < 2) {
                continue;
            }
            const auto x = CoordPoly::generator(ring, w);
            const auto d = coproduct(x);
            CHECK(coproduct_on_leg(d, 0) == coproduct_on_leg(d, 1));
            CHECK(counit_contract(d, 0) == x);
            CHECK(counit_contract(d, 1) == x);
            const auto unit = CoordPoly::constant(ring, counit(x));
            CHECK(multiply(antipode_on_leg(d, 0)) == unit);
            CHECK(multiply(antipode_on_leg(d, 1)) == unit);
        }
    }
}

TEST_CASE("duality with the group")
{
    FixtureGenerator gen(31);
    const CoordRing ring{2, 4, Variant::full};
    for (int i = 0; i < 3; ++i) {
        const auto f = gen.group_element(2, 4);
        const auto g = gen.group_element(2, 4);
        const auto fg = box_conv(f, g);
        const auto fi = box_inverse(f);
        for (const auto& w : all_words(2, 4)) {
            CHECK(evaluate(coproduct(ring, w), f, g) == fg.coeff(w));
            CHECK(evaluate(antipode(ring, w), f) == fi.coeff(w));
        }
    }
    const auto f = gen.group_element(2, 4);
    CHECK_THROWS_AS(evaluate(CoordPoly::generator(CoordRing{2, 4, Variant::reduced}, Word{1, 2}), f), DomainError);
}

TEST_CASE("reduced coproduct")
{
    CHECK(to_string(reduced_coproduct(2, 3, Word{1, 2})) == "1 (x) Xbar[1,2] + Xbar[1,2] (x) 1");
    const auto d = reduced_coproduct(3, 3, Word{1, 2, 3});
    CHECK(d.size() == 5);
    CHECK(to_string(d) == "1 (x) Xbar[1,2,3] + Xbar[1,2] (x) Xbar[2,3] + Xbar[1,3] (x) Xbar[1,2] + "
                          "Xbar[2,3] (x) Xbar[1,3] + Xbar[1,2,3] (x) 1");
    CHECK_THROWS_AS(reduced_coproduct(2, 3, Word{1}), ValidationError);
    for (const auto& w : all_words(2, 5)) {
        if (w.size() < 2) {
            continue;
        }
        const auto t = reduced_coproduct(2, 5, w);
        for (const auto& [key, c] : t.terms()) {
            CHECK(key[0].weighted_degree() + key[1].weighted_degree() == static_cast<int>(w.size()) - 1);
        }
        CHECK(formal_group_law(2, 5, w) == t);
    }
}

TEST_CASE("bilinear forms and the bracket")
{
    CHECK(bilinear_part(2, 3, Word{1, 2}).is_zero());
    CHECK(to_string(bilinear_part(3, 3, Word{1, 2, 3})) ==
          "Xbar[1,2] (x) Xbar[2,3] + Xbar[1,3] (x) Xbar[1,2] + Xbar[2,3] (x) Xbar[1,3]");
    CHECK(bilinear_part(3, 4, Word{1, 2, 3, 1}).size() == 8);
    const auto b = lie_bracket(2, 3, Word{1, 2}, Word{2, 1});
    CHECK(b == std::map<Word, Rational>{{Word{1, 2, 1}, Rational(1)}, {Word{2, 1, 2}, Rational(-1)}});
    CHECK(lie_bracket(2, 3, Word{2, 1}, Word{1, 2}) ==
          std::map<Word, Rational>{{Word{1, 2, 1}, Rational(-1)}, {Word{2, 1, 2}, Rational(1)}});
    CHECK(lie_bracket(2, 3, Word{1, 2}, Word{1, 2}).empty());
    for (int a = 2; a <= 6; ++a) {
        for (int c = 2; a + c - 1 <= 6; ++c) {
            CHECK(lie_bracket(1, 6, Word(std::vector<int>(a, 1)), Word(std::vector<int>(c, 1))).empty());
        }
    }
}
