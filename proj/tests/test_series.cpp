#include <doctest.h>

#include <freeprob/errors.hpp>
#include <freeprob/fixtures.hpp>
#include <freeprob/series.hpp>

using namespace freeprob;

TEST_CASE("rational parsing is canonical")
{
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(parse_rational("-4/8")) == "-1/2");
    CHECK(to_string(parse_rational("6/3")) == "2");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1.5"), ValidationError);
}

TEST_CASE("words")
{
    const Word w{1, 2, 1};
    CHECK(to_string(w) == "[1,2,1]");
    CHECK(w.max_letter() == 2);
    CHECK(Word{2} < Word{1, 1});
    CHECK(Word{1, 2} < Word{2, 1});
    const std::vector<int> second{2};
    CHECK(restrict_word(w, second) == Word{2});
    const std::vector<int> all{1, 2, 3};
    CHECK(restrict_word(w, all) == w);
    const Word seven{1, 2, 3, 4, 5, 6, 7};
    const std::vector<int> v{1, 3, 4, 7};
    CHECK(restrict_word(seven, v) == Word{1, 3, 4, 7});
    const std::vector<int> out_of_range{4};
    CHECK_THROWS_AS(restrict_word(w, out_of_range), ValidationError);
    const std::vector<int> unordered{2, 1};
    CHECK_THROWS_AS(restrict_word(w, unordered), ValidationError);
    CHECK(Word{1} + Word{2, 2} == Word{1, 2, 2});
    CHECK(all_words(2, 3).size() == 14);
    CHECK(words_of_length(3, 2).size() == 9);
    CHECK_THROWS_AS(check_letters(Word{0}, 2), ValidationError);
    CHECK_THROWS_AS(check_letters(Word{3}, 2), ValidationError);
}

TEST_CASE("word indexer ranks all words densely")
{
    const WordIndexer index(3, 4);
    const auto words = all_words(3, 4);
    REQUIRE(index.size() == words.size());
    for (std::size_t r = 0; r < words.size(); ++r) {
        CHECK(index.rank(words[r]) == r);
        CHECK(index.word(r) == words[r]);
    }
    const Word w{3, 1, 2, 2};
    const std::vector<int> pos{2, 4};
    CHECK(index.word(index.rank(w.letters(), pos)) == Word{1, 2});
}

TEST_CASE("series storage and validation")
{
    NCSeries f(2, 3);
    f.set(Word{1, 2}, Rational(3));
    f.set(Word{2}, Rational(0));
    CHECK(f.terms().size() == 1);
    CHECK(f.coeff(Word{1, 2}) == 3);
    CHECK(coeff(NCSeries::unit(2, 3), Word{1}) == 1);
    CHECK(coeff(NCSeries::unit(2, 3), Word{2, 1}) == 0);
    CHECK_THROWS_AS(f.coeff(Word{1, 1, 1, 1}), ValidationError);
    CHECK_THROWS_AS(f.set(Word{3}, Rational(1)), ValidationError);
    CHECK_THROWS_AS(f.coeff(Word{}), ValidationError);
    CHECK_THROWS_AS(NCSeries(0, 3), ValidationError);
    CHECK_THROWS_AS(NCSeries(2, 0), ValidationError);
}

TEST_CASE("add, scale, truncation")
{
    NCSeries z1(2, 3);
    z1.set(Word{1}, Rational(1));
    CHECK(z1 + NCSeries(2, 3) == z1);
    CHECK((z1 + z1).coeff(Word{1}) == 2);
    NCSeries f(2, 3);
    f.set(Word{1}, Rational(1));
    f.set(Word{2, 1}, Rational(3));
    const auto g = scale(Rational(2), f);
    CHECK(g.coeff(Word{1}) == 2);
    CHECK(g.coeff(Word{2, 1}) == 6);
    CHECK(scale(Rational(0), f).is_zero());
    CHECK(scale(Rational(1), f) == f);
    CHECK((f - f).is_zero());
    NCSeries longer(2, 5);
    longer.set(Word{1, 1, 1, 1}, Rational(1));
    CHECK((f + longer).max_degree() == 3);
    CHECK_THROWS_AS(f + NCSeries(3, 3), AlphabetMismatch);
}

TEST_CASE("Cauchy product")
{
    NCSeries z1(2, 3);
    z1.set(Word{1}, Rational(1));
    NCSeries z2(2, 3);
    z2.set(Word{2}, Rational(1));
    CHECK((z1 * z2).terms().size() == 1);
    CHECK((z1 * z2).coeff(Word{1, 2}) == 1);
    CHECK_FALSE(z1 * z2 == z2 * z1);
    NCSeries p(1, 4);
    p.set(Word{1}, Rational(1));
    p.set(Word{1, 1}, Rational(1));
    const auto sq = p * p;
    CHECK(sq.coeff(Word{1}) == 0);
    CHECK(sq.coeff(Word{1, 1}) == 1);
    CHECK(sq.coeff(Word{1, 1, 1}) == 2);
    CHECK(sq.coeff(Word{1, 1, 1, 1}) == 1);
}

TEST_CASE("Cauchy product: associativity, distributivity, truncation coherence")
{
    FixtureGenerator gen(11);
    for (int s = 1; s <= 3; ++s) {
        const int n = s == 3 ? 4 : 6;
        for (int i = 0; i < 4; ++i) {
            const auto f = gen.series(s, n);
            const auto g = gen.series(s, n);
            const auto h = gen.series(s, n);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK((f + g) * h == f * h + g * h);
            const int d = n - 2;
            CHECK(truncate(f * g, d) == truncate(f, d) * truncate(g, d));
            CHECK(truncate(f + g, d) == truncate(f, d) + truncate(g, d));
            CHECK(truncate(scale(Rational(3, 2), f), d) == scale(Rational(3, 2), truncate(f, d)));
        }
    }
}

TEST_CASE("block functional")
{
    FixtureGenerator gen(5);
    const auto f = gen.series(3, 4);
    const Word w{1, 3, 2, 2};
    CHECK(eval_block_functional(f, w, NCPartition::one(4)) == f.coeff(w));
    CHECK(eval_block_functional(f, w, NCPartition::zero(4)) ==
          f.coeff(Word{1}) * f.coeff(Word{3}) * f.coeff(Word{2}) * f.coeff(Word{2}));
    const NCPartition p(4, {{1, 4}, {2, 3}});
    CHECK(eval_block_functional(f, w, p) == f.coeff(Word{1, 2}) * f.coeff(Word{3, 2}));
    CHECK_THROWS_AS(eval_block_functional(f, Word{1, 2}, p), ValidationError);
    CHECK_THROWS_AS(eval_block_functional(f, Word{1, 2, 3, 1, 2}, NCPartition::one(5)), ValidationError);
}

TEST_CASE("block functional on the seven-letter example")
{
    NCSeries f(7, 7);
    for (const auto& u : std::vector<Word>{{1, 7}, {2, 3, 5}, {4}, {6}}) {
        f.set(u, Rational(static_cast<long>(u.size()) + 1));
    }
    const Word w{1, 2, 3, 4, 5, 6, 7};
    const NCPartition p(7, {{1, 7}, {2, 3, 5}, {4}, {6}});
    CHECK(eval_block_functional(f, w, p) == 3 * 4 * 2 * 2);
}

TEST_CASE("block functional is not additive but depends only on subwords")
{
    NCSeries u = NCSeries::unit(1, 2);
    const Word w{1, 1};
    const auto zero = NCPartition::zero(2);
    CHECK(eval_block_functional(u + u, w, zero) == 4);
    CHECK(eval_block_functional(u, w, zero) + eval_block_functional(u, w, zero) == 2);

    FixtureGenerator gen(9);
    auto f = gen.series(2, 4);
    const Word v{1, 2, 1};
    auto g = f;
    g.set(Word{2, 2}, Rational(99));
    g.set(Word{2, 1, 1, 2}, Rational(-7));
    for (const auto& p : enumerate_nc(3)) {
        CHECK(eval_block_functional(f, v, p) == eval_block_functional(g, v, p));
    }
}
