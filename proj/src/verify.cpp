#include <freeprob/verify.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <freeprob/errors.hpp>
#include <freeprob/fixtures.hpp>
#include <freeprob/freeconv.hpp>
#include <freeprob/hopf.hpp>
#include <freeprob/onedim.hpp>
#include <freeprob/repr.hpp>

namespace freeprob
{

namespace
{

struct Outcome
{
    bool ok;
    std::string detail;
};

Outcome holds(bool ok, std::string detail = {})
{
    return {ok, std::move(detail)};
}

template <class Pred>
Outcome over_fixtures(int count, Pred pred)
{
    int good = 0;
    for (int i = 0; i < count; ++i) {
        if (pred()) {
            ++good;
        }
    }
    return {good == count, std::to_string(good) + "/" + std::to_string(count) + " fixtures"};
}

class Suite
{
public:
    Suite(std::string name, std::vector<CheckResult>& out) : name_(std::move(name)), out_(out) {}

    template <class Fn>
    void check(const std::string& name, Fn&& fn)
    {
        CheckResult r{name_, name, false, {}};
        try {
            auto o = fn();
            r.passed = o.ok;
            r.detail = std::move(o.detail);
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out_.push_back(std::move(r));
    }

private:
    std::string name_;
    std::vector<CheckResult>& out_;
};

long long catalan(int n)
{
    long long c = 1;
    for (int k = 0; k < n; ++k) {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    return c;
}

// Every block of p lies inside a block of q.
bool refines(const NCPartition& p, const NCPartition& q)
{
    const auto labels = q.labels();
    for (const auto& block : p.blocks()) {
        for (int x : block) {
            if (labels[static_cast<std::size_t>(x - 1)] != labels[static_cast<std::size_t>(block.front() - 1)]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int> interleaved_word(const Word& w, int s)
{
    std::vector<int> u;
    for (int letter : w) {
        u.push_back(letter);
        u.push_back(letter + s);
    }
    return u;
}

// ---------------------------------------------------------------- nc

void suite_nc(const VerifyOptions& o, std::vector<CheckResult>& out)
{
    Suite suite("nc", out);
    const int top = std::clamp(o.maxdeg, 4, 8);
    suite.check("catalan counts n<=" + std::to_string(top), [&] {
        for (int n = 1; n <= top; ++n) {
            if (static_cast<long long>(enumerate_nc(n).size()) != catalan(n)) {
                return holds(false, "n=" + std::to_string(n));
            }
        }
        return holds(true);
    });
    suite.check("kreweras is a bijection with |p|+|K(p)|=n+1", [&] {
        for (int n = 1; n <= top; ++n) {
            const auto& table = nc_table(n);
            std::vector<bool> hit(table.partitions.size(), false);
            for (std::size_t k = 0; k < table.partitions.size(); ++k) {
                hit[table.kreweras_index[k]] = true;
                const auto& p = table.partitions[k];
                if (p.block_count() + table.partitions[table.kreweras_index[k]].block_count() !=
                    static_cast<std::size_t>(n + 1)) {
                    return holds(false, "block count at n=" + std::to_string(n));
                }
            }
            if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
                return holds(false, "not onto at n=" + std::to_string(n));
            }
        }
        return holds(true);
    });
    suite.check("K^2 is the cyclic shift by -1", [&] {
        for (int n = 1; n <= top; ++n) {
            for (const auto& p : nc_table(n).partitions) {
                if (!(kreweras(kreweras(p)) == cyclic_shift(p, -1))) {
                    return holds(false, to_string(p));
                }
            }
        }
        return holds(true);
    });
    const int small = std::min(top, 6);
    suite.check("kreweras reverses refinement", [&] {
        for (int n = 1; n <= small; ++n) {
            const auto& ps = nc_table(n).partitions;
            for (const auto& p : ps) {
                for (const auto& q : ps) {
                    if (refines(p, q) && !refines(kreweras(q), kreweras(p))) {
                        return holds(false, to_string(p) + " <= " + to_string(q));
                    }
                }
            }
        }
        return holds(true);
    });
    suite.check("join is the least non-crossing upper bound", [&] {
        for (int n = 1; n <= std::min(top, 5); ++n) {
            const auto& ps = nc_table(n).partitions;
            for (const auto& p : ps) {
                for (const auto& q : ps) {
                    const auto j = nc_join(p, q);
                    if (!(j == nc_join(q, p)) || !refines(p, j) || !refines(q, j)) {
                        return holds(false, to_string(p) + " v " + to_string(q));
                    }
                    for (const auto& r : ps) {
                        if (refines(p, r) && refines(q, r) && !refines(j, r)) {
                            return holds(false, "not least: " + to_string(p) + " v " + to_string(q));
                        }
                    }
                }
            }
        }
        return holds(true);
    });
    suite.check("interval partitions", [&] {
        const std::vector<int> cuts{1, 3, top};
        const auto p = interval_partition(top, cuts);
        return holds(p.block_count() == 3 && p.blocks()[1] == Block{2, 3});
    });
}

// ---------------------------------------------------------------- group

void suite_group(const VerifyOptions& o, std::vector<CheckResult>& out)
{
    Suite suite("group", out);
    FixtureGenerator gen(o.seed);
    const int s = o.s;
    const int n = o.maxdeg;
    const auto unit = NCSeries::unit(s, n);
    suite.check("two-sided unit", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.series(s, n);
            return box_conv(unit, f, o.jobs) == f && box_conv(f, unit, o.jobs) == f;
        });
    });
    suite.check("associativity", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.series(s, n);
            const auto g = gen.series(s, n);
            const auto h = gen.series(s, n);
            return box_conv(box_conv(f, g, o.jobs), h, o.jobs) == box_conv(f, box_conv(g, h, o.jobs), o.jobs);
        });
    });
    suite.check("two-sided inverse", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.group_element(s, n);
            const auto h = box_inverse(f);
            return box_conv(f, h, o.jobs) == unit && box_conv(h, f, o.jobs) == unit;
        });
    });
    suite.check("closure and first-order inverse", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.group_element(s, n);
            const auto g = gen.group_element(s, n);
            const auto h = box_inverse(f);
            for (int i = 1; i <= s; ++i) {
                if (h.coeff(Word{i}) != 1 / f.coeff(Word{i})) {
                    return false;
                }
            }
            return is_group_element(box_conv(f, g, o.jobs));
        });
    });
    suite.check("result independent of job count", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.series(s, n);
            const auto g = gen.series(s, n);
            return box_conv(f, g, 1) == box_conv(f, g, 4);
        });
    });
}

// ---------------------------------------------------------------- nonprops

void suite_nonprops(const VerifyOptions& o, std::vector<CheckResult>& out)
{
    Suite suite("nonprops", out);
    FixtureGenerator gen(o.seed);
    const int s = o.s;
    const int n = o.maxdeg;
    suite.check("boxed convolution is not distributive", [&] {
        const auto u = NCSeries::unit(s, n);
        const auto z = zeta(s, n);
        return holds(!(box_conv(u + u, z) == box_conv(u, z) + box_conv(u, z)));
    });
    suite.check("one letter: commutative", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.series(1, n);
            const auto g = gen.series(1, n);
            return box_conv(f, g) == box_conv(g, f);
        });
    });
    suite.check("two letters: non-commutative witness", [&] {
        if (n < 3) {
            return holds(true, "skipped below maxdeg 3");
        }
        const int t = std::max(s, 2);
        NCSeries f(t, 3);
        NCSeries g(t, 3);
        f.set(Word{1}, Rational(1));
        f.set(Word{2}, Rational(1));
        f.set(Word{2, 1}, Rational(1));
        g.set(Word{1}, Rational(1));
        g.set(Word{2}, Rational(1));
        g.set(Word{1, 2}, Rational(1));
        // on aba the split a|ba of f meets ab|a of g in one order only
        const Word aba{1, 2, 1};
        const auto fg = box_conv(f, g);
        const auto gf = box_conv(g, f);
        return holds(fg.coeff(aba) != gf.coeff(aba),
                     "at [1,2,1]: " + to_string(fg.coeff(aba)) + " vs " + to_string(gf.coeff(aba)));
    });
    suite.check("block functional is not additive", [&] {
        const auto u = NCSeries::unit(s, n);
        const Word w{1, 1};
        const auto zero = NCPartition::zero(2);
        return holds(eval_block_functional(u + u, w, zero) !=
                     eval_block_functional(u, w, zero) + eval_block_functional(u, w, zero));
    });
    suite.check("Cauchy product associative and distributive", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.series(s, n);
            const auto g = gen.series(s, n);
            const auto h = gen.series(s, n);
            return (f * g) * h == f * (g * h) && f * (g + h) == f * g + f * h;
        });
    });
}

// ---------------------------------------------------------------- momcum

void suite_momcum(const VerifyOptions& o, std::vector<CheckResult>& out)
{
    Suite suite("momcum", out);
    FixtureGenerator gen(o.seed);
    const int s = o.s;
    const int n = o.maxdeg;
    suite.check("Moeb inverts Zeta", [&] {
        const auto u = NCSeries::unit(s, n);
        return holds(box_conv(moeb(s, n), zeta(s, n)) == u && box_conv(zeta(s, n), moeb(s, n)) == u);
    });
    suite.check("unit cumulants give Zeta moments", [&] {
        return holds(moments_from_cumulants(NCSeries::unit(s, n)) == zeta(s, n));
    });
    suite.check("moment/cumulant round trip", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto r = gen.series(s, n);
            return cumulants_from_moments(moments_from_cumulants(r)) == r &&
                   moments_from_cumulants(cumulants_from_moments(r)) == r;
        });
    });
    suite.check("transport of + to addv", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto a = gen.series(s, n);
            const auto b = gen.series(s, n);
            return moments_from_cumulants(a + b) == addv(moments_from_cumulants(a), moments_from_cumulants(b));
        });
    });
    suite.check("transport of boxed convolution to mulv", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto a = gen.series(s, n);
            const auto b = gen.series(s, n);
            return moments_from_cumulants(box_conv(a, b)) ==
                   mulv(moments_from_cumulants(a), moments_from_cumulants(b));
        });
    });
    suite.check("neutral elements of addv and mulv", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto m = gen.series(s, n);
            return addv(m, NCSeries(s, n)) == m && mulv(zeta(s, n), m) == m && mulv(m, zeta(s, n)) == m;
        });
    });
}

// ---------------------------------------------------------------- freeness

void suite_freeness(const VerifyOptions& o, std::vector<CheckResult>& out)
{
    Suite suite("freeness", out);
    FixtureGenerator gen(o.seed);
    const int s = o.s;
    const int n = std::min(o.maxdeg, 4);
    suite.check("mixed cumulants of a free union vanish", [&] {
        const auto r = join_free(gen.series(s, n), gen.series(s, n));
        for (const auto& [w, c] : r.terms()) {
            const bool low = std::all_of(w.begin(), w.end(), [&](int x) { return x <= s; });
            const bool high = std::all_of(w.begin(), w.end(), [&](int x) { return x > s; });
            if (!low && !high) {
                return holds(false, to_string(w));
            }
        }
        return holds(true);
    });
    suite.check("boxed convolution equals grouped cumulants of a free union (maxdeg " + std::to_string(n) + ")",
                [&] {
                    return over_fixtures(std::max(1, o.fixtures / 2), [&] {
                        // interleaved words have length 2|w|, so the joined
                        // series is built at twice the degree
                        const auto f = gen.series(s, 2 * n);
                        const auto g = gen.series(s, 2 * n);
                        const auto r = join_free(f, g);
                        const auto fg = box_conv(truncate(f, n), truncate(g, n));
                        for (const auto& w : all_words(s, n)) {
                            std::vector<int> cuts;
                            for (std::size_t k = 1; k <= w.size(); ++k) {
                                cuts.push_back(static_cast<int>(2 * k));
                            }
                            if (grouped_cumulants(r, Word(interleaved_word(w, s)), cuts) != fg.coeff(w)) {
                                return false;
                            }
                        }
                        return true;
                    });
                });
    suite.check("grouped cumulants: extreme groupings", [&] {
        const int len = std::min(n, s);
        if (len < 2) {
            return holds(true, "needs s >= 2");
        }
        const auto r = gen.series(s, n);
        std::vector<int> all{len};
        std::vector<int> singles;
        for (int k = 1; k <= len; ++k) {
            singles.push_back(k);
        }
        std::vector<int> letters(singles);
        const Word w(letters);
        return holds(grouped_cumulants(r, all) == moments_from_cumulants(r).coeff(w) &&
                     grouped_cumulants(r, singles) == r.coeff(w));
    });
}

// ---------------------------------------------------------------- hopf

void suite_hopf(const VerifyOptions& o, std::vector<CheckResult>& out)
{
    Suite suite("hopf", out);
    FixtureGenerator gen(o.seed);
    const int s = o.s;
    const int n = std::min(o.maxdeg, 5);
    const CoordRing full{s, n, Variant::full};
    const CoordRing reduced{s, n, Variant::reduced};
    const auto words = all_words(s, n);
    suite.check("coassociativity (|w| <= " + std::to_string(n) + ")", [&] {
        for (const auto& w : words) {
            const auto d = coproduct(full, w);
            if (!(coproduct_on_leg(d, 0) == coproduct_on_leg(d, 1))) {
                return holds(false, to_string(w));
            }
        }
        return holds(true, std::to_string(words.size()) + " generators");
    });
    suite.check("counit law", [&] {
        for (const auto& w : words) {
            const auto x = CoordPoly::generator(full, w);
            const auto d = coproduct(x);
            if (!(counit_contract(d, 0) == x) || !(counit_contract(d, 1) == x)) {
                return holds(false, to_string(w));
            }
        }
        return holds(true);
    });
    suite.check("antipode law", [&] {
        for (const auto& w : words) {
            const auto x = CoordPoly::generator(full, w);
            const auto d = coproduct(x);
            const auto e = CoordPoly::constant(full, counit(x));
            if (!(multiply(antipode_on_leg(d, 0)) == e) || !(multiply(antipode_on_leg(d, 1)) == e)) {
                return holds(false, to_string(w));
            }
        }
        return holds(true);
    });
    suite.check("coproduct dual to boxed convolution", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.group_element(s, n);
            const auto g = gen.group_element(s, n);
            const auto fg = box_conv(f, g);
            return std::all_of(words.begin(), words.end(),
                               [&](const Word& w) { return evaluate(coproduct(full, w), f, g) == fg.coeff(w); });
        });
    });
    suite.check("antipode dual to the inverse", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.group_element(s, n);
            const auto h = box_inverse(f);
            return std::all_of(words.begin(), words.end(),
                               [&](const Word& w) { return evaluate(antipode(full, w), f) == h.coeff(w); });
        });
    });
    suite.check("reduced coproduct is graded", [&] {
        for (const auto& w : words) {
            if (w.size() < 2) {
                continue;
            }
            const auto d = reduced_coproduct(s, n, w);
            for (const auto& [key, c] : d.terms()) {
                if (key[0].weighted_degree() + key[1].weighted_degree() != static_cast<int>(w.size()) - 1) {
                    return holds(false, to_string(w));
                }
            }
        }
        return holds(true);
    });
    suite.check("reduced counit law and primitive degree-2 generators", [&] {
        for (const auto& w : words) {
            if (w.size() < 2) {
                continue;
            }
            const auto x = CoordPoly::generator(reduced, w);
            const auto d = coproduct(x);
            if (!(counit_contract(d, 0) == x) || !(counit_contract(d, 1) == x)) {
                return holds(false, to_string(w));
            }
            if (w.size() == 2) {
                const auto one = CoordPoly::constant(reduced, Rational(1));
                auto primitive = tensor(x, one);
                primitive += tensor(one, x);
                if (!(d == primitive)) {
                    return holds(false, "not primitive: " + to_string(w));
                }
            }
        }
        return holds(true);
    });
    suite.check("lie bracket antisymmetric, zero for one letter", [&] {
        const int m = std::min(n, 5);
        for (const auto& w : all_words(1, m)) {
            for (const auto& v : all_words(1, m)) {
                if (w.size() >= 2 && v.size() >= 2 && !lie_bracket(1, m, w, v).empty()) {
                    return holds(false, to_string(w) + "," + to_string(v));
                }
            }
        }
        if (s >= 2 && n >= 3) {
            const auto b = lie_bracket(s, n, Word{1, 2}, Word{2, 1});
            auto c = lie_bracket(s, n, Word{2, 1}, Word{1, 2});
            for (auto& entry : c) {
                entry.second = -entry.second;
            }
            if (b.empty() || b != c) {
                return holds(false, "two-letter bracket");
            }
        }
        return holds(true);
    });
}

// ---------------------------------------------------------------- structure

void suite_structure(const VerifyOptions& o, std::vector<CheckResult>& out)
{
    Suite suite("structure", out);
    FixtureGenerator gen(o.seed);
    const int s = o.s;
    const int n = o.maxdeg;
    suite.check("normality of the vanishing subgroups", [&] {
        return over_fixtures(o.fixtures, [&] {
            for (int j = 2; j < n; ++j) {
                const auto f = gen.unipotent(s, n);
                const auto h = gen.unipotent_vanishing_through(s, n, j);
                const auto c = box_conv(box_conv(f, h), box_inverse(f));
                for (const auto& [w, x] : c.terms()) {
                    if (w.size() >= 2 && static_cast<int>(w.size()) <= j) {
                        return false;
                    }
                }
            }
            return true;
        });
    });
    suite.check("additivity one degree above the vanishing range", [&] {
        return over_fixtures(o.fixtures, [&] {
            for (int j = 1; j < n; ++j) {
                const auto f = gen.unipotent_vanishing_through(s, n, j);
                const auto g = gen.unipotent_vanishing_through(s, n, j);
                const auto fg = box_conv(f, g);
                for (const auto& w : words_of_length(s, j + 1)) {
                    if (fg.coeff(w) != f.coeff(w) + g.coeff(w)) {
                        return false;
                    }
                }
            }
            return true;
        });
    });
    suite.check("commutators of unipotents vanish through degree 2", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto c = commutator(gen.unipotent(s, n), gen.unipotent(s, n));
            for (const auto& [w, x] : c.terms()) {
                if (w.size() == 2 || (w.size() == 1 && x != 1)) {
                    return false;
                }
            }
            return commutator(gen.group_element(s, n), NCSeries::unit(s, n)) == NCSeries::unit(s, n);
        });
    });
    suite.check("torus factorization recomposes", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.group_element(s, n);
            const auto [t, p] = torus_factor(f);
            return box_conv(t, p) == f && is_unipotent_element(p);
        });
    });
    suite.check("torus elements are central", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto t = gen.torus(s, n);
            const auto f = gen.group_element(s, n);
            return box_conv(t, f) == box_conv(f, t);
        });
    });
}

// ---------------------------------------------------------------- repr

void suite_repr(const VerifyOptions& o, std::vector<CheckResult>& out)
{
    Suite suite("repr", out);
    FixtureGenerator gen(o.seed);
    const int s = o.s;
    const int n = std::min(o.maxdeg, 4);
    const int D = n - 1;
    const auto basis = MonomialBasis::reduced(s, n, D);
    const int count = std::max(1, o.fixtures / 2);
    suite.check("unit acts as identity (dim " + std::to_string(basis.size()) + ")",
                [&] { return holds(is_identity(build_rep(NCSeries::unit(s, n), D, o.jobs))); });
    suite.check("homomorphism", [&] {
        return over_fixtures(count, [&] {
            const auto f = gen.unipotent(s, n);
            const auto g = gen.unipotent(s, n);
            return multiply(build_rep(f, D, o.jobs), build_rep(g, D, o.jobs)) ==
                   build_rep(box_conv(f, g), D, o.jobs);
        });
    });
    suite.check("coefficients recovered from the constant row", [&] {
        return over_fixtures(count, [&] {
            const auto f = gen.unipotent(s, n);
            const auto m = build_rep(f, D, o.jobs);
            for (const auto& w : all_words(s, n)) {
                if (w.size() < 2 || static_cast<int>(w.size()) - 1 > D) {
                    continue;
                }
                const auto j = basis.index_of(Monomial::generator(w));
                if (!j || m(0, static_cast<Eigen::Index>(*j)) != f.coeff(w)) {
                    return false;
                }
            }
            return true;
        });
    });
    suite.check("triangular and unipotent with index <= D+1", [&] {
        return over_fixtures(count, [&] {
            const auto m = build_rep(gen.unipotent(s, n), D, o.jobs);
            const auto k = nilpotency_index(m);
            return certify_triangular(m, basis) && certify_unipotent(m) && k && *k <= D + 1;
        });
    });
    suite.check("inverse maps to the matrix inverse", [&] {
        return over_fixtures(count, [&] {
            const auto f = gen.unipotent(s, n);
            return is_identity(multiply(build_rep(f, D, o.jobs), build_rep(box_inverse(f), D, o.jobs)));
        });
    });
    suite.check("S-transform: homomorphism, triangular, torus diagonal", [&] {
        return over_fixtures(count, [&] {
            const auto f = gen.group_element(s, n);
            const auto g = gen.group_element(s, n);
            const auto sf = s_transform(f, D, o.jobs);
            const auto fb = MonomialBasis::full(s, n, D);
            const auto [t, p] = torus_factor(f);
            const auto torus = build_torus_rep(t, fb);
            for (Eigen::Index i = 0; i < sf.rows(); ++i) {
                if (sf(i, i) != torus(i, i)) {
                    return false;
                }
            }
            return is_upper_triangular(sf) && multiply(sf, s_transform(g, D, o.jobs)) == s_transform(box_conv(f, g), D, o.jobs);
        });
    });
    suite.check("one-letter S matrix is multiplicative", [&] {
        const int m = std::max(o.maxdeg, 2);
        return over_fixtures(count, [&] {
            const auto a = gen.unipotent(1, m);
            const auto b = gen.unipotent(1, m);
            const auto ma = one_dim_s_matrix(a);
            return certify_unipotent(ma) && multiply(ma, one_dim_s_matrix(b)) == one_dim_s_matrix(box_conv(a, b));
        });
    });
}

// ---------------------------------------------------------------- onedim

void suite_onedim(const VerifyOptions& o, std::vector<CheckResult>& out)
{
    Suite suite("onedim", out);
    FixtureGenerator gen(o.seed);
    const int n = std::max(o.maxdeg, 3);
    const auto z = zeta(1, n);
    suite.check("compositional inverse is two-sided and involutive", [&] {
        return over_fixtures(o.fixtures, [&] {
            auto f = to_power_series(gen.group_element(1, n));
            const auto h = comp_inverse(f);
            const auto id = PowerSeries1::identity(n);
            return compose(f, h) == id && compose(h, f) == id && comp_inverse(h) == f;
        });
    });
    suite.check("F-transform is multiplicative", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto a = gen.group_element(1, n);
            const auto b = gen.group_element(1, n);
            return f_transform(box_conv(a, b)) == f_transform(a) * f_transform(b);
        });
    });
    suite.check("S_V-transform is multiplicative and S_V(f [*] Zeta) = F(f)", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto a = gen.group_element(1, n);
            const auto b = gen.group_element(1, n);
            const auto ma = box_conv(a, z);
            const auto mb = box_conv(b, z);
            return s_v_transform(mulv(ma, mb)) == s_v_transform(ma) * s_v_transform(mb) &&
                   s_v_transform(ma) == f_transform(a);
        });
    });
    suite.check("inverse relation between cumulant and moment series", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto r = gen.group_element(1, n);
            const auto m = to_power_series(box_conv(r, z));
            PowerSeries1 one_plus_z(n);
            one_plus_z.set(0, Rational(1));
            one_plus_z.set(1, Rational(1));
            return comp_inverse(to_power_series(r)) == one_plus_z * comp_inverse(m);
        });
    });
    suite.check("LOG additive, EXP inverse", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto a = gen.unipotent(1, n);
            const auto b = gen.unipotent(1, n);
            const auto t = gen.power_series(n - 2);
            return log_morphism(box_conv(a, b)) == log_morphism(a) + log_morphism(b) &&
                   exp_morphism(log_morphism(a)) == a && log_morphism(exp_morphism(t)) == t;
        });
    });
    suite.check("diagram: LOG = dlog S_V(- [*] Zeta) = id(LOG_V(- [*] Zeta) [*] Moeb)", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto a = gen.unipotent(1, n);
            const auto l = log_morphism(a);
            const auto lv = log_v(box_conv(a, z));
            return l == log_derivative(s_v_transform(box_conv(a, z))) &&
                   l == shift_down(box_conv(lv, moeb(1, lv.max_degree())));
        });
    });
    suite.check("diagram: EXP_V(m [*] Zeta) = EXP(id m) [*] Zeta and R_V inverts [*] Zeta", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto m = gen.series(1, n);
            const auto lhs = exp_v(box_conv(m, z));
            const auto e = exp_morphism(shift_down(m));
            return lhs == box_conv(e, zeta(1, e.max_degree())) && r_v(box_conv(m, z)) == to_power_series(m) &&
                   to_nc_series(r_v(m)) == cumulants_from_moments(m);
        });
    });
    suite.check("EXP_V: exponential law, inverse LOG_V, product formula", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto x = gen.series(1, n);
            const auto y = gen.series(1, n);
            const auto ma = box_conv(gen.unipotent(1, n), z);
            const auto mb = box_conv(gen.unipotent(1, n), z);
            return exp_v(addv(x, y)) == mulv(exp_v(x), exp_v(y)) && log_v(exp_v(x)) == x && exp_v(log_v(ma)) == ma &&
                   mulv(ma, mb) == exp_v(addv(log_v(ma), log_v(mb)));
        });
    });
    suite.check("EXP_V(0) = Zeta", [&] { return holds(exp_v(NCSeries(1, n)) == zeta(1, n + 1)); });
}

// ---------------------------------------------------------------- symm

void suite_symm(const VerifyOptions& o, std::vector<CheckResult>& out)
{
    Suite suite("symm", out);
    FixtureGenerator gen(o.seed);
    const int n = std::clamp(o.maxdeg, 2, 7);
    const auto h = symm_coordinates(n);
    suite.check("h_n homogeneous of weighted degree n with Catalan leading term", [&] {
        for (std::size_t k = 0; k < h.size(); ++k) {
            const int deg = static_cast<int>(k) + 1;
            for (const auto& [m, c] : h[k].terms()) {
                if (m.weighted_degree() != deg) {
                    return holds(false, "h" + std::to_string(deg));
                }
            }
            const auto lead = Monomial::generator(Word{1, 1}, deg);
            const auto c = h[k].coeff(lead);
            if (abs(c) != catalan(deg) || (c < 0) != (deg % 2 == 1)) {
                return holds(false, "leading coefficient of h" + std::to_string(deg));
            }
        }
        return holds(true, std::to_string(h.size()) + " coordinates");
    });
    suite.check("evaluation matches the F-transform", [&] {
        return over_fixtures(o.fixtures, [&] {
            const auto f = gen.unipotent(1, n);
            const auto F = f_transform(f);
            for (std::size_t k = 0; k < h.size(); ++k) {
                if (evaluate(h[k], f) != F.coeff(static_cast<int>(k) + 1)) {
                    return false;
                }
            }
            return true;
        });
    });
}

using SuiteFn = void (*)(const VerifyOptions&, std::vector<CheckResult>&);

const std::map<std::string, SuiteFn, std::less<>>& suite_table()
{
    static const std::map<std::string, SuiteFn, std::less<>> table{
        {"nc", suite_nc},           {"group", suite_group},         {"nonprops", suite_nonprops},
        {"momcum", suite_momcum},   {"freeness", suite_freeness},   {"hopf", suite_hopf},
        {"structure", suite_structure}, {"repr", suite_repr},       {"onedim", suite_onedim},
        {"symm", suite_symm},
    };
    return table;
}

void check_options(const VerifyOptions& o)
{
    if (o.s < 1 || o.s > 4) {
        throw ValidationError("verify: s must lie in 1..4");
    }
    if (o.maxdeg < 2 || o.maxdeg > 8) {
        throw ValidationError("verify: maxdeg must lie in 2..8");
    }
    if (o.fixtures < 1) {
        throw ValidationError("verify: need at least one fixture");
    }
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"nc",        "group", "nonprops", "momcum", "freeness",
                                                "hopf",      "structure", "repr", "onedim", "symm"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view name, const VerifyOptions& options)
{
    check_options(options);
    const auto& table = suite_table();
    auto it = table.find(name);
    if (it == table.end()) {
        throw ValidationError("unknown verification suite '" + std::string(name) + "'");
    }
    std::vector<CheckResult> out;
    it->second(options, out);
    return out;
}

std::vector<CheckResult> run_all(const VerifyOptions& options)
{
    std::vector<CheckResult> out;
    for (const auto& name : suite_names()) {
        auto part = run_suite(name, options);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results)
{
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string format_table(const std::vector<CheckResult>& results)
{
    std::size_t suite_width = 5;
    std::size_t name_width = 5;
    for (const auto& r : results) {
        suite_width = std::max(suite_width, r.suite.size());
        name_width = std::max(name_width, r.name.size());
    }
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed ? "PASS  " : "FAIL  ") << r.suite << std::string(suite_width - r.suite.size() + 2, ' ')
           << r.name;
        if (!r.detail.empty()) {
            os << std::string(name_width - r.name.size() + 2, ' ') << r.detail;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace freeprob
