#ifndef FREEPROB_SERIES1_HPP
#define FREEPROB_SERIES1_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

// Truncated one-variable power series as coefficient vectors (index =
// degree) over a commutative scalar type T with +, - and *. The caller
// supplies zero and one, so the same routines serve exact rationals and
// symbolic coordinate polynomials.
namespace freeprob::series1
{

template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b, int n, const T& zero)
{
    std::vector<T> out(static_cast<std::size_t>(n + 1), zero);
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= n; ++i) {
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// f(g(z)) mod z^{n+1}; g[0] is assumed to vanish.
template <class T>
std::vector<T> compose(const std::vector<T>& f, const std::vector<T>& g, int n, const T& zero, const T& one)
{
    std::vector<T> out(static_cast<std::size_t>(n + 1), zero);
    std::vector<T> power(static_cast<std::size_t>(n + 1), zero);
    power[0] = one;
    const int top = std::min<int>(n, static_cast<int>(f.size()) - 1);
    for (int k = 0; k <= top; ++k) {
        if (k > 0) {
            power = mul(power, g, n, zero);
        }
        for (int i = k; i <= n; ++i) {
            out[static_cast<std::size_t>(i)] += f[static_cast<std::size_t>(k)] * power[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

// h with f(h(z)) = z mod z^{n+1}, given f[0] = 0 and inv_f1 = 1/f[1].
// Degree by degree: with h_k still zero, [z^k] f(h) collects everything
// except f_1 h_k.
template <class T>
std::vector<T> comp_inverse(const std::vector<T>& f, int n, const T& inv_f1, const T& zero, const T& one)
{
    std::vector<T> h(static_cast<std::size_t>(n + 1), zero);
    if (n >= 1) {
        h[1] = inv_f1;
    }
    for (int k = 2; k <= n; ++k) {
        const auto partial = compose(f, h, k, zero, one);
        h[static_cast<std::size_t>(k)] = zero - partial[static_cast<std::size_t>(k)] * inv_f1;
    }
    return h;
}

} // namespace freeprob::series1

#endif
