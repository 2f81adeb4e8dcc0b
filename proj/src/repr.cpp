#include <freeprob/repr.hpp>

#include <algorithm>
#include <stdexcept>

#include <freeprob/errors.hpp>
#include <freeprob/freeconv.hpp>
#include <freeprob/onedim.hpp>

#include "parallel.hpp"

namespace freeprob
{

namespace
{

// Multisets over `generators` (from index `start` on) within the budgets.
void collect(const std::vector<Word>& generators, std::size_t start, int weight_left, int length_left,
             Monomial current, std::vector<Monomial>& out)
{
    for (std::size_t g = start; g < generators.size(); ++g) {
        const int weight = static_cast<int>(generators[g].size()) - 1;
        const int length = static_cast<int>(generators[g].size());
        if (weight > weight_left || length > length_left) {
            continue;
        }
        Monomial next = current * Monomial::generator(generators[g]);
        out.push_back(next);
        collect(generators, g, weight_left - weight, length_left - length, next, out);
    }
}

void sort_basis(std::vector<Monomial>& ms)
{
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
        const int da = a.weighted_degree();
        const int db = b.weighted_degree();
        return da != db ? da < db : a < b;
    });
}

void check_shape(int s, int maxdeg, int D)
{
    if (s < 1 || maxdeg < 1) {
        throw ValidationError("basis needs s >= 1 and maxdeg >= 1");
    }
    if (D < 0) {
        throw ValidationError("degree bound must be non-negative");
    }
}

int resolve_bound(const NCSeries& f, int D)
{
    if (D < 0) {
        D = f.max_degree() - 1;
    }
    if (D < 1) {
        throw ValidationError("representation needs a degree bound D >= 1 (maxdeg >= 2)");
    }
    return D;
}

} // namespace

MonomialBasis::MonomialBasis(CoordRing ring, int bound, std::vector<Monomial> monomials)
    : ring_(ring), bound_(bound), monomials_(std::move(monomials))
{
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        index_.emplace(monomials_[i], i);
    }
}

MonomialBasis MonomialBasis::reduced(int s, int maxdeg, int D)
{
    check_shape(s, maxdeg, D);
    std::vector<Word> generators;
    for (int len = 2; len <= maxdeg; ++len) {
        for (auto& w : words_of_length(s, len)) {
            generators.push_back(std::move(w));
        }
    }
    std::vector<Monomial> ms{Monomial{}};
    // Letter length is unconstrained here; the weight budget bounds the size.
    collect(generators, 0, D, D * maxdeg + maxdeg, Monomial{}, ms);
    sort_basis(ms);
    return MonomialBasis(CoordRing{s, maxdeg, Variant::reduced}, D, std::move(ms));
}

MonomialBasis MonomialBasis::full(int s, int maxdeg, int D)
{
    check_shape(s, maxdeg, D);
    std::vector<Word> generators = all_words(s, maxdeg);
    std::vector<Monomial> ms;
    collect(generators, 0, D, maxdeg, Monomial{}, ms);
    sort_basis(ms);
    return MonomialBasis(CoordRing{s, maxdeg, Variant::full}, D, std::move(ms));
}

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<std::string> MonomialBasis::keys() const
{
    std::vector<std::string> out;
    out.reserve(monomials_.size());
    for (const auto& m : monomials_) {
        out.push_back(to_string(m, ring_.variant));
    }
    return out;
}

RationalMatrix right_translation(const NCSeries& f, const MonomialBasis& basis, unsigned jobs)
{
    const auto& ring = basis.ring();
    if (f.alphabet_size() != ring.s || f.max_degree() != ring.maxdeg) {
        throw AlphabetMismatch("right_translation: series shape differs from the basis");
    }
    if (ring.variant == Variant::reduced && !is_unipotent_element(f)) {
        throw DomainError("the reduced representation needs first-order coefficients equal to 1");
    }

    // Images of the generators: X_w -> sum over pi of X_{w,pi} f_{w,K(pi)}.
    std::map<Word, CoordPoly> images;
    for (const auto& m : basis.monomials()) {
        for (const auto& [w, e] : m.factors()) {
            if (images.contains(w)) {
                continue;
            }
            const auto& table = nc_table(static_cast<int>(w.size()));
            CoordPoly image(ring);
            for (std::size_t k = 0; k < table.partitions.size(); ++k) {
                const auto value = eval_block_functional(f, w, table.partitions[table.kreweras_index[k]]);
                if (!value.is_zero()) {
                    image.add_term(block_monomial(w, table.partitions[k], ring.variant), value);
                }
            }
            images.emplace(w, std::move(image));
        }
    }

    const auto n = static_cast<Eigen::Index>(basis.size());
    RationalMatrix out = RationalMatrix::Zero(n, n);
    detail::parallel_range(0, basis.size(), jobs, [&](std::size_t j) {
        auto image = CoordPoly::constant(ring, Rational(1));
        for (const auto& [w, e] : basis[j].factors()) {
            image *= pow(images.at(w), e);
        }
        for (const auto& [m, c] : image.terms()) {
            const auto i = basis.index_of(m);
            if (!i) {
                throw std::logic_error("right_translation: basis is not invariant");
            }
            out(static_cast<Eigen::Index>(*i), static_cast<Eigen::Index>(j)) = c;
        }
    });
    return out;
}

RationalMatrix build_rep(const NCSeries& f, int D, unsigned jobs)
{
    if (!is_unipotent_element(f)) {
        throw DomainError("build_rep needs first-order coefficients equal to 1");
    }
    D = resolve_bound(f, D);
    return right_translation(f, MonomialBasis::reduced(f.alphabet_size(), f.max_degree(), D), jobs);
}

RationalMatrix build_torus_rep(const NCSeries& t, const MonomialBasis& basis)
{
    if (t.alphabet_size() != basis.ring().s) {
        throw AlphabetMismatch("build_torus_rep: alphabet differs from the basis");
    }
    for (const auto& [w, c] : t.terms()) {
        if (w.size() > 1) {
            throw DomainError("build_torus_rep: torus elements have first-order terms only");
        }
    }
    if (!is_group_element(t)) {
        throw NotInvertible("build_torus_rep: a character vanishes");
    }
    const auto n = static_cast<Eigen::Index>(basis.size());
    RationalMatrix out = RationalMatrix::Zero(n, n);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Rational character(1);
        for (const auto& [w, e] : basis[j].factors()) {
            for (int letter : w) {
                for (int k = 0; k < e; ++k) {
                    character *= t.coeff(Word{letter});
                }
            }
        }
        out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = character;
    }
    return out;
}

RationalMatrix s_transform(const NCSeries& f, int D, unsigned jobs)
{
    D = resolve_bound(f, D);
    const auto [t, p] = torus_factor(f);
    const auto basis = MonomialBasis::full(f.alphabet_size(), f.max_degree(), D);
    return multiply(build_torus_rep(t, basis), right_translation(p, basis, jobs));
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw ValidationError("multiply: inner dimensions differ");
    }
    RationalMatrix out = RationalMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
        for (Eigen::Index k = 0; k < b.rows(); ++k) {
            const auto& bkj = b(k, j);
            if (bkj.is_zero()) {
                continue;
            }
            for (Eigen::Index i = 0; i < a.rows(); ++i) {
                if (!a(i, k).is_zero()) {
                    out(i, j) += a(i, k) * bkj;
                }
            }
        }
    }
    return out;
}

bool is_zero_matrix(const RationalMatrix& m)
{
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!m(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool is_identity(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) {
        return false;
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (m(i, j) != (i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<int> nilpotency_index(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw ValidationError("nilpotency_index: matrix is not square");
    }
    const RationalMatrix n = m - RationalMatrix::Identity(m.rows(), m.cols());
    RationalMatrix power = n;
    for (int k = 1; k <= std::max<int>(1, static_cast<int>(m.rows())); ++k) {
        if (is_zero_matrix(power)) {
            return k;
        }
        power = multiply(power, n);
    }
    return std::nullopt;
}

bool certify_unipotent(const RationalMatrix& m)
{
    return m.rows() == m.cols() && nilpotency_index(m).has_value();
}

bool is_upper_triangular(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) {
        return false;
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = j + 1; i < m.rows(); ++i) {
            if (!m(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool certify_triangular(const RationalMatrix& m, const MonomialBasis& basis)
{
    return m.rows() == static_cast<Eigen::Index>(basis.size()) && is_upper_triangular(m);
}

RationalMatrix one_dim_s_matrix(const NCSeries& a)
{
    if (a.alphabet_size() != 1) {
        throw AlphabetMismatch("one_dim_s_matrix needs a one-letter series");
    }
    if (a.coeff(Word{1}) != 1) {
        throw DomainError("one_dim_s_matrix needs first coefficient 1");
    }
    if (a.max_degree() < 2) {
        throw ValidationError("one_dim_s_matrix needs maxdeg >= 2");
    }
    const int n = a.max_degree();
    const auto tail = log_derivative(s_v_transform(box_conv(a, zeta(1, n))));
    RationalMatrix out = RationalMatrix::Identity(n, n);
    for (int k = 1; k < n; ++k) {
        out(0, k) = tail.coeff(k - 1);
    }
    return out;
}

} // namespace freeprob
