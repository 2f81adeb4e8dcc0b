#include <freeprob/series.hpp>

#include <algorithm>

#include <freeprob/errors.hpp>

namespace freeprob
{

NCSeries::NCSeries(int s, int maxdeg) : s_(s), maxdeg_(maxdeg)
{
    if (s < 1) {
        throw ValidationError("alphabet size must be >= 1");
    }
    if (maxdeg < 1) {
        throw ValidationError("truncation degree must be >= 1");
    }
}

NCSeries NCSeries::unit(int s, int maxdeg)
{
    NCSeries out(s, maxdeg);
    for (int i = 1; i <= s; ++i) {
        out.set(Word{i}, Rational(1));
    }
    return out;
}

void NCSeries::check_word(const Word& w) const
{
    if (w.empty() || static_cast<int>(w.size()) > maxdeg_) {
        throw ValidationError("word " + to_string(w) + " outside 1 <= |w| <= " + std::to_string(maxdeg_));
    }
    check_letters(w, s_);
}

Rational NCSeries::coeff(const Word& w) const
{
    check_word(w);
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCSeries::set(const Word& w, Rational value)
{
    check_word(w);
    if (value.is_zero()) {
        terms_.erase(w);
    } else {
        terms_.insert_or_assign(w, std::move(value));
    }
}

NCSeries& NCSeries::add_to(const Word& w, const Rational& value)
{
    check_word(w);
    if (value.is_zero()) {
        return *this;
    }
    auto [it, inserted] = terms_.try_emplace(w, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
    return *this;
}

void require_same_alphabet(const NCSeries& f, const NCSeries& g, const char* what)
{
    if (f.alphabet_size() != g.alphabet_size()) {
        throw AlphabetMismatch(std::string(what) + ": alphabet sizes differ (" + std::to_string(f.alphabet_size())
                               + " vs " + std::to_string(g.alphabet_size()) + ")");
    }
}

void require_same_shape(const NCSeries& f, const NCSeries& g, const char* what)
{
    require_same_alphabet(f, g, what);
    if (f.max_degree() != g.max_degree()) {
        throw AlphabetMismatch(std::string(what) + ": truncation degrees differ (" + std::to_string(f.max_degree())
                               + " vs " + std::to_string(g.max_degree()) + ")");
    }
}

NCSeries truncate(const NCSeries& f, int maxdeg)
{
    NCSeries out(f.alphabet_size(), maxdeg);
    for (const auto& [w, c] : f.terms()) {
        if (static_cast<int>(w.size()) <= maxdeg) {
            out.set(w, c);
        }
    }
    return out;
}

NCSeries add(const NCSeries& f, const NCSeries& g)
{
    require_same_alphabet(f, g, "add");
    NCSeries out = truncate(f, std::min(f.max_degree(), g.max_degree()));
    for (const auto& [w, c] : g.terms()) {
        if (static_cast<int>(w.size()) <= out.max_degree()) {
            out.add_to(w, c);
        }
    }
    return out;
}

NCSeries subtract(const NCSeries& f, const NCSeries& g)
{
    return add(f, scale(Rational(-1), g));
}

NCSeries scale(const Rational& c, const NCSeries& f)
{
    NCSeries out(f.alphabet_size(), f.max_degree());
    if (c.is_zero()) {
        return out;
    }
    for (const auto& [w, v] : f.terms()) {
        out.set(w, c * v);
    }
    return out;
}

NCSeries cauchy_mul(const NCSeries& f, const NCSeries& g)
{
    require_same_alphabet(f, g, "cauchy_mul");
    NCSeries out(f.alphabet_size(), std::min(f.max_degree(), g.max_degree()));
    for (const auto& [u, a] : f.terms()) {
        for (const auto& [v, b] : g.terms()) {
            if (static_cast<int>(u.size() + v.size()) > out.max_degree()) {
                // g's terms are ordered by length; longer ones overflow too.
                break;
            }
            out.add_to(u + v, a * b);
        }
    }
    return out;
}

Rational eval_block_functional(const NCSeries& f, const Word& w, const NCPartition& p)
{
    if (p.ground_size() != static_cast<int>(w.size())) {
        throw ValidationError("partition of {1.." + std::to_string(p.ground_size()) + "} does not match word "
                              + to_string(w));
    }
    if (w.empty() || static_cast<int>(w.size()) > f.max_degree()) {
        throw ValidationError("word " + to_string(w) + " exceeds the truncation degree");
    }
    check_letters(w, f.alphabet_size());
    Rational product(1);
    for (const auto& block : p.blocks()) {
        product *= f.coeff(restrict_word(w, block));
        if (product.is_zero()) {
            break;
        }
    }
    return product;
}

} // namespace freeprob
