#include <freeprob/freeconv.hpp>

#include <algorithm>

#include <freeprob/errors.hpp>

#include "parallel.hpp"

namespace freeprob
{

namespace
{

std::vector<Rational> densify(const NCSeries& f, const WordIndexer& index)
{
    std::vector<Rational> dense(index.size());
    for (const auto& [w, c] : f.terms()) {
        dense[index.rank(w)] = c;
    }
    return dense;
}

NCSeries sparsify(int s, int maxdeg, const std::vector<Rational>& dense, const WordIndexer& index)
{
    NCSeries out(s, maxdeg);
    for (std::size_t r = 0; r < dense.size(); ++r) {
        if (!dense[r].is_zero()) {
            out.set(index.word(r), dense[r]);
        }
    }
    return out;
}

// Product over the blocks of `p` of coefficients at the restricted words.
Rational block_product(const NCPartition& p, std::span<const int> letters, const std::vector<Rational>& coeffs,
                       const WordIndexer& index)
{
    Rational product(1);
    for (const auto& block : p.blocks()) {
        const auto& c = coeffs[index.rank(letters, block)];
        if (c.is_zero()) {
            return Rational(0);
        }
        product *= c;
    }
    return product;
}

Rational convolve_word(std::span<const int> letters, const NCTable& table, const std::vector<Rational>& f,
                       const std::vector<Rational>& g, const WordIndexer& index)
{
    Rational sum(0);
    for (std::size_t k = 0; k < table.partitions.size(); ++k) {
        Rational left = block_product(table.partitions[k], letters, f, index);
        if (left.is_zero()) {
            continue;
        }
        Rational right = block_product(table.partitions[table.kreweras_index[k]], letters, g, index);
        if (!right.is_zero()) {
            sum += left * right;
        }
    }
    return sum;
}

} // namespace

bool is_group_element(const NCSeries& f)
{
    for (int i = 1; i <= f.alphabet_size(); ++i) {
        if (f.coeff(Word{i}).is_zero()) {
            return false;
        }
    }
    return true;
}

bool is_unipotent_element(const NCSeries& f)
{
    for (int i = 1; i <= f.alphabet_size(); ++i) {
        if (f.coeff(Word{i}) != 1) {
            return false;
        }
    }
    return true;
}

GroupElement::GroupElement(NCSeries f) : series_(std::move(f)), unipotent_(false)
{
    if (!is_group_element(series_)) {
        throw NotInvertible("series has a vanishing first-order coefficient");
    }
    unipotent_ = is_unipotent_element(series_);
}

NCSeries box_conv(const NCSeries& f, const NCSeries& g, unsigned jobs)
{
    require_same_shape(f, g, "box_conv");
    const int s = f.alphabet_size();
    const int n = f.max_degree();
    const WordIndexer index(s, n);
    const auto fd = densify(f, index);
    const auto gd = densify(g, index);
    std::vector<Rational> out(index.size());
    std::size_t begin = 0;
    for (int len = 1; len <= n; ++len) {
        const auto& table = nc_table(len);
        std::size_t layer = 1;
        for (int k = 0; k < len; ++k) {
            layer *= static_cast<std::size_t>(s);
        }
        detail::parallel_range(begin, begin + layer, jobs, [&](std::size_t r) {
            const Word w = index.word(r);
            out[r] = convolve_word(w.letters(), table, fd, gd, index);
        });
        begin += layer;
    }
    return sparsify(s, n, out, index);
}

NCSeries box_inverse(const NCSeries& f)
{
    if (!is_group_element(f)) {
        throw NotInvertible("box_inverse: a first-order coefficient is zero");
    }
    const int s = f.alphabet_size();
    const int n = f.max_degree();
    const WordIndexer index(s, n);
    const auto fd = densify(f, index);
    std::vector<Rational> h(index.size());
    for (int i = 1; i <= s; ++i) {
        const auto r = index.rank(Word{i});
        h[r] = 1 / fd[r];
    }
    std::size_t r = static_cast<std::size_t>(s);
    for (int len = 2; len <= n; ++len) {
        const auto& table = nc_table(len);
        const std::size_t layer_end = index.rank(Word(std::vector<int>(static_cast<std::size_t>(len), s))) + 1;
        for (; r < layer_end; ++r) {
            const Word w = index.word(r);
            // (f [*] h)_w = 0; the pi = 0_n term carries h_w times the
            // product of first-order coefficients of f.
            Rational rest(0);
            for (std::size_t k = 0; k < table.partitions.size(); ++k) {
                if (k == table.zero_index) {
                    continue;
                }
                Rational left = block_product(table.partitions[k], w.letters(), fd, index);
                if (left.is_zero()) {
                    continue;
                }
                rest += left * block_product(table.partitions[table.kreweras_index[k]], w.letters(), h, index);
            }
            Rational diagonal(1);
            for (int letter : w) {
                diagonal *= fd[index.rank(Word{letter})];
            }
            h[r] = -rest / diagonal;
        }
    }
    return sparsify(s, n, h, index);
}

GroupElement box_inverse(const GroupElement& f)
{
    return GroupElement(box_inverse(f.series()));
}

NCSeries zeta(int s, int maxdeg)
{
    NCSeries out(s, maxdeg);
    for (const auto& w : all_words(s, maxdeg)) {
        out.set(w, Rational(1));
    }
    return out;
}

NCSeries moeb(int s, int maxdeg)
{
    return box_inverse(zeta(s, maxdeg));
}

NCSeries moments_from_cumulants(const NCSeries& r)
{
    return box_conv(r, zeta(r.alphabet_size(), r.max_degree()));
}

NCSeries cumulants_from_moments(const NCSeries& m)
{
    return box_conv(m, moeb(m.alphabet_size(), m.max_degree()));
}

NCSeries addv(const NCSeries& f, const NCSeries& g)
{
    require_same_shape(f, g, "addv");
    const auto mu = moeb(f.alphabet_size(), f.max_degree());
    return box_conv(box_conv(f, mu) + box_conv(g, mu), zeta(f.alphabet_size(), f.max_degree()));
}

NCSeries mulv(const NCSeries& f, const NCSeries& g)
{
    require_same_shape(f, g, "mulv");
    return box_conv(box_conv(f, moeb(f.alphabet_size(), f.max_degree())), g);
}

NCSeries join_free(const NCSeries& f, const NCSeries& g)
{
    require_same_shape(f, g, "join_free");
    const int s = f.alphabet_size();
    NCSeries out(2 * s, f.max_degree());
    for (const auto& [w, c] : f.terms()) {
        out.set(w, c);
    }
    for (const auto& [w, c] : g.terms()) {
        std::vector<int> shifted(w.begin(), w.end());
        for (int& letter : shifted) {
            letter += s;
        }
        out.set(Word(std::move(shifted)), c);
    }
    return out;
}

Rational grouped_cumulants(const NCSeries& r, const Word& w, std::span<const int> cuts)
{
    const int n = static_cast<int>(w.size());
    const auto sigma = interval_partition(n, cuts);
    const auto one = NCPartition::one(n);
    Rational sum(0);
    for (const auto& p : nc_table(n).partitions) {
        if (nc_join(p, sigma) == one) {
            sum += eval_block_functional(r, w, p);
        }
    }
    return sum;
}

Rational grouped_cumulants(const NCSeries& r, std::span<const int> cuts)
{
    if (cuts.empty()) {
        throw ValidationError("grouped_cumulants: empty cuts");
    }
    const int n = cuts.back();
    if (n < 1 || r.alphabet_size() < n) {
        throw ValidationError("grouped_cumulants: the word (1..n) needs at least n letters");
    }
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        letters[static_cast<std::size_t>(i)] = i + 1;
    }
    return grouped_cumulants(r, Word(std::move(letters)), cuts);
}

NCSeries commutator(const NCSeries& f, const NCSeries& g)
{
    require_same_shape(f, g, "commutator");
    return box_conv(box_conv(box_conv(f, g), box_inverse(f)), box_inverse(g));
}

TorusFactor torus_factor(const NCSeries& f)
{
    if (!is_group_element(f)) {
        throw NotInvertible("torus_factor: a first-order coefficient is zero");
    }
    NCSeries torus(f.alphabet_size(), f.max_degree());
    for (int i = 1; i <= f.alphabet_size(); ++i) {
        torus.set(Word{i}, f.coeff(Word{i}));
    }
    auto unipotent = box_conv(box_inverse(torus), f);
    return {std::move(torus), std::move(unipotent)};
}

} // namespace freeprob
