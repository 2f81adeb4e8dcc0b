#ifndef FREEPROB_REPR_HPP
#define FREEPROB_REPR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <freeprob/hopf.hpp>
#include <freeprob/series.hpp>

namespace freeprob
{

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// An ordered monomial basis of a finite-dimensional slice of the coordinate
// ring, sorted by weighted degree and then by monomial key. Right
// translation by a group element maps each slice into itself.
class MonomialBasis
{
public:
    // Monomials in Xbar_w (2 <= |w| <= maxdeg) of weighted degree <= D,
    // starting with the constant 1.
    static MonomialBasis reduced(int s, int maxdeg, int D);
    // Non-constant monomials in X_w (1 <= |w| <= maxdeg) with non-negative
    // exponents, total letter length <= maxdeg and weighted degree <= D.
    static MonomialBasis full(int s, int maxdeg, int D);

    const CoordRing& ring() const noexcept { return ring_; }
    int degree_bound() const noexcept { return bound_; }
    std::size_t size() const noexcept { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    std::optional<std::size_t> index_of(const Monomial& m) const;
    // Canonical text of each basis element, in order.
    std::vector<std::string> keys() const;

private:
    MonomialBasis(CoordRing ring, int bound, std::vector<Monomial> monomials);

    CoordRing ring_;
    int bound_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> index_;
};

// Matrix of p -> p(. [*] f) on the basis; column j is the image of basis
// element j, so M(f [*] g) = M(f) M(g). The reduced basis needs f unipotent.
RationalMatrix right_translation(const NCSeries& f, const MonomialBasis& basis, unsigned jobs = 1);

// right_translation on the reduced basis of weighted degree <= D
// (D = maxdeg - 1 when D < 0 is passed).
RationalMatrix build_rep(const NCSeries& f, int D = -1, unsigned jobs = 1);

// The diagonal action of a torus element t (first-order terms only, all
// non-zero): each basis monomial is scaled by the product of t_i over its
// letters.
RationalMatrix build_torus_rep(const NCSeries& t, const MonomialBasis& basis);

// build_torus_rep(t) * right_translation(p) on the full basis of weighted
// degree <= D, where f = t [*] p (D = maxdeg - 1 when D < 0).
RationalMatrix s_transform(const NCSeries& f, int D = -1, unsigned jobs = 1);

// Smallest k >= 1 with (M - I)^k = 0, if k <= dim.
std::optional<int> nilpotency_index(const RationalMatrix& m);
// (M - I)^dim = 0.
bool certify_unipotent(const RationalMatrix& m);
// Square, sized like the basis, and zero below the diagonal.
bool certify_triangular(const RationalMatrix& m, const MonomialBasis& basis);
bool is_upper_triangular(const RationalMatrix& m);

// Exact product that skips zero entries.
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
bool is_identity(const RationalMatrix& m);
bool is_zero_matrix(const RationalMatrix& m);

// For a one-letter cumulant series a with a_1 = 1: the maxdeg x maxdeg
// matrix with first row (1, c_0, ..., c_{maxdeg-2}), where c are the
// coefficients of d/dz log S_V(a [*] Zeta), and identity elsewhere.
RationalMatrix one_dim_s_matrix(const NCSeries& a);

} // namespace freeprob

#endif
