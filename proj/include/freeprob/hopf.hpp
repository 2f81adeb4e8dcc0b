#ifndef FREEPROB_HOPF_HPP
#define FREEPROB_HOPF_HPP

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <freeprob/errors.hpp>
#include <freeprob/ncpart.hpp>
#include <freeprob/series.hpp>

namespace freeprob
{

// full: generators X_w for 1 <= |w| <= maxdeg, with X_i invertible.
// reduced: generators Xbar_w for |w| >= 2; Xbar_i is identified with 1.
enum class Variant { full, reduced };

struct CoordRing
{
    int s = 1;
    int maxdeg = 1;
    Variant variant = Variant::full;

    friend bool operator==(const CoordRing&, const CoordRing&) = default;
};

// Product of generator powers, kept sorted by word with non-zero exponents.
// Negative exponents only occur on first-order generators of the full ring.
class Monomial
{
public:
    using Factor = std::pair<Word, int>;

    Monomial() = default;
    static Monomial generator(const Word& w, int exponent = 1);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    int exponent(const Word& w) const;

    // Sum over factors of exponent * (|w| - 1).
    int weighted_degree() const;
    // Sum of exponents.
    int degree() const;
    // Sum of exponent * |w|.
    int letter_length() const;

    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

class CoordPoly
{
public:
    explicit CoordPoly(CoordRing ring);

    static CoordPoly constant(CoordRing ring, Rational c);
    // X_w; in the reduced ring a first-order generator is the constant 1.
    static CoordPoly generator(CoordRing ring, const Word& w);
    // X_i^-1; the constant 1 in the reduced ring.
    static CoordPoly inverse_generator(CoordRing ring, int letter);
    static CoordPoly monomial(CoordRing ring, Monomial m, Rational c = Rational(1));

    const CoordRing& ring() const noexcept { return ring_; }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;

    CoordPoly& add_term(const Monomial& m, const Rational& c);
    CoordPoly& operator+=(const CoordPoly& other);
    CoordPoly& operator-=(const CoordPoly& other);
    CoordPoly& operator*=(const CoordPoly& other);
    CoordPoly& operator*=(const Rational& c);

    friend bool operator==(const CoordPoly&, const CoordPoly&) = default;

private:
    CoordRing ring_;
    std::map<Monomial, Rational> terms_;
};

CoordPoly operator+(CoordPoly a, const CoordPoly& b);
CoordPoly operator-(CoordPoly a, const CoordPoly& b);
CoordPoly operator*(CoordPoly a, const CoordPoly& b);
CoordPoly operator*(const Rational& c, CoordPoly a);
CoordPoly pow(const CoordPoly& p, int e);

// Sums of N-fold tensors of monomials.
template <std::size_t N>
class Tensor
{
public:
    using Key = std::array<Monomial, N>;

    explicit Tensor(CoordRing ring) : ring_(ring) {}

    const CoordRing& ring() const noexcept { return ring_; }
    const std::map<Key, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Tensor& add_term(const Key& key, const Rational& c)
    {
        if (c.is_zero()) {
            return *this;
        }
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
        return *this;
    }

    Tensor& operator+=(const Tensor& other)
    {
        require_ring(other);
        for (const auto& [k, c] : other.terms_) {
            add_term(k, c);
        }
        return *this;
    }

    friend Tensor operator*(const Tensor& a, const Tensor& b)
    {
        a.require_ring(b);
        Tensor out(a.ring_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                Key k;
                for (std::size_t i = 0; i < N; ++i) {
                    k[i] = ka[i] * kb[i];
                }
                out.add_term(k, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    void require_ring(const Tensor& other) const
    {
        if (!(ring_ == other.ring_)) {
            throw AlphabetMismatch("tensor: coordinate rings differ");
        }
    }

    CoordRing ring_;
    std::map<Key, Rational> terms_;
};

using TensorPoly = Tensor<2>;

TensorPoly tensor(const CoordPoly& a, const CoordPoly& b);

// X_{w,pi}: the product of X_{w|V} over the blocks V of pi (first-order
// factors dropped in the reduced ring).
Monomial block_monomial(const Word& w, const NCPartition& p, Variant v);

// Delta(X_w) = sum over pi in NC(|w|) of X_{w,pi} (x) X_{w,K(pi)}.
TensorPoly coproduct(CoordRing ring, const Word& w);
// Delta extended as an algebra map.
TensorPoly coproduct(const CoordPoly& p);
// Delta applied to one leg (0-based) of a tensor.
template <std::size_t N>
Tensor<N + 1> coproduct_on_leg(const Tensor<N>& t, std::size_t leg);

// eps(X_i) = 1, eps(X_w) = 0 for |w| >= 2, extended as an algebra map.
Rational counit(const CoordPoly& p);
// Applies eps to leg `leg` of a 2-tensor and returns the other leg.
CoordPoly counit_contract(const TensorPoly& t, std::size_t leg);

// The recursive antipode on a generator; memoized.
CoordPoly antipode(CoordRing ring, const Word& w);
CoordPoly antipode(const CoordPoly& p);
// S applied to one leg of a 2-tensor.
TensorPoly antipode_on_leg(const TensorPoly& t, std::size_t leg);

// The multiplication map a (x) b -> ab.
CoordPoly multiply(const TensorPoly& t);

// Coproduct in the reduced ring; requires |w| >= 2.
TensorPoly reduced_coproduct(int s, int maxdeg, const Word& w);
// F_w(X, Y): the reduced coproduct read as a series in two sets of
// variables (left leg X, right leg Y).
TensorPoly formal_group_law(int s, int maxdeg, const Word& w);
// Terms of F_w that are linear in both X and Y.
TensorPoly bilinear_part(int s, int maxdeg, const Word& w);
// Structure constants of [Xbar_w, Xbar_v]: for each u with |u| = |w|+|v|-1,
// the coefficient of Xbar_w (x) Ybar_v in B_u minus that of Xbar_v (x) Ybar_w.
// Zero entries are omitted.
std::map<Word, Rational> lie_bracket(int s, int maxdeg, const Word& w, const Word& v);

// Substitutes X_w = f_w (and X_i^-1 = 1/f_i).
Rational evaluate(const CoordPoly& p, const NCSeries& f);
Rational evaluate(const TensorPoly& t, const NCSeries& f, const NCSeries& g);

std::string to_string(const Monomial& m, Variant v);
std::string to_string(const CoordPoly& p);
std::string to_string(const TensorPoly& t);

} // namespace freeprob

#endif
