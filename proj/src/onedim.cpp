#include <freeprob/onedim.hpp>

#include <algorithm>

#include <freeprob/errors.hpp>
#include <freeprob/freeconv.hpp>
#include <freeprob/series1.hpp>

namespace freeprob
{

namespace
{

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

void require_one_letter(const NCSeries& f, const char* what)
{
    if (f.alphabet_size() != 1) {
        throw AlphabetMismatch(std::string(what) + " needs a one-letter series");
    }
}

} // namespace

PowerSeries1::PowerSeries1(int maxdeg)
{
    if (maxdeg < 0) {
        throw ValidationError("power series degree must be non-negative");
    }
    coeffs_.assign(idx(maxdeg + 1), Rational(0));
}

PowerSeries1::PowerSeries1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw ValidationError("power series needs at least a constant coefficient");
    }
}

PowerSeries1 PowerSeries1::constant(int maxdeg, Rational c)
{
    PowerSeries1 p(maxdeg);
    p.coeffs_[0] = std::move(c);
    return p;
}

PowerSeries1 PowerSeries1::identity(int maxdeg)
{
    if (maxdeg < 1) {
        throw ValidationError("z needs maxdeg >= 1");
    }
    PowerSeries1 p(maxdeg);
    p.coeffs_[1] = 1;
    return p;
}

Rational PowerSeries1::coeff(int k) const
{
    if (k < 0) {
        throw ValidationError("negative degree");
    }
    return k <= max_degree() ? coeffs_[idx(k)] : Rational(0);
}

void PowerSeries1::set(int k, Rational value)
{
    if (k < 0 || k > max_degree()) {
        throw ValidationError("degree " + std::to_string(k) + " is outside the truncation");
    }
    coeffs_[idx(k)] = std::move(value);
}

PowerSeries1 operator+(const PowerSeries1& a, const PowerSeries1& b)
{
    PowerSeries1 out(std::min(a.max_degree(), b.max_degree()));
    for (int k = 0; k <= out.max_degree(); ++k) {
        out.set(k, a.coeff(k) + b.coeff(k));
    }
    return out;
}

PowerSeries1 operator-(const PowerSeries1& a, const PowerSeries1& b)
{
    return a + Rational(-1) * b;
}

PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b)
{
    const int n = std::min(a.max_degree(), b.max_degree());
    return PowerSeries1(series1::mul(a.coeffs(), b.coeffs(), n, Rational(0)));
}

PowerSeries1 operator*(const Rational& c, const PowerSeries1& a)
{
    auto coeffs = a.coeffs();
    for (auto& x : coeffs) {
        x *= c;
    }
    return PowerSeries1(std::move(coeffs));
}

PowerSeries1 truncate(const PowerSeries1& a, int maxdeg)
{
    PowerSeries1 out(maxdeg);
    for (int k = 0; k <= maxdeg; ++k) {
        out.set(k, a.coeff(k));
    }
    return out;
}

PowerSeries1 derivative(const PowerSeries1& a)
{
    PowerSeries1 out(std::max(a.max_degree() - 1, 0));
    for (int k = 1; k <= a.max_degree(); ++k) {
        out.set(k - 1, k * a.coeff(k));
    }
    return out;
}

PowerSeries1 integral(const PowerSeries1& a)
{
    PowerSeries1 out(a.max_degree() + 1);
    for (int k = 0; k <= a.max_degree(); ++k) {
        out.set(k + 1, a.coeff(k) / (k + 1));
    }
    return out;
}

PowerSeries1 reciprocal(const PowerSeries1& a)
{
    if (a.coeff(0).is_zero()) {
        throw NotInvertible("reciprocal: vanishing constant term");
    }
    const int n = a.max_degree();
    const Rational inv0 = 1 / a.coeff(0);
    PowerSeries1 r(n);
    r.set(0, inv0);
    for (int k = 1; k <= n; ++k) {
        Rational sum(0);
        for (int j = 1; j <= k; ++j) {
            sum += a.coeff(j) * r.coeff(k - j);
        }
        r.set(k, -sum * inv0);
    }
    return r;
}

PowerSeries1 log_derivative(const PowerSeries1& a)
{
    if (a.coeff(0) != 1) {
        throw DomainError("log needs constant term 1");
    }
    return derivative(a) * reciprocal(a);
}

PowerSeries1 log(const PowerSeries1& a)
{
    if (a.max_degree() == 0) {
        if (a.coeff(0) != 1) {
            throw DomainError("log needs constant term 1");
        }
        return PowerSeries1(0);
    }
    return integral(log_derivative(a));
}

PowerSeries1 exp(const PowerSeries1& a)
{
    if (!a.coeff(0).is_zero()) {
        throw DomainError("exp needs constant term 0");
    }
    // e' = a' e, so k e_k = sum_{j=1}^k j a_j e_{k-j}.
    const int n = a.max_degree();
    PowerSeries1 e(n);
    e.set(0, Rational(1));
    for (int k = 1; k <= n; ++k) {
        Rational sum(0);
        for (int j = 1; j <= k; ++j) {
            sum += j * a.coeff(j) * e.coeff(k - j);
        }
        e.set(k, sum / k);
    }
    return e;
}

PowerSeries1 compose(const PowerSeries1& f, const PowerSeries1& g)
{
    if (!g.coeff(0).is_zero()) {
        throw DomainError("compose: the inner series must have no constant term");
    }
    const int n = std::min(f.max_degree(), g.max_degree());
    return PowerSeries1(series1::compose(f.coeffs(), g.coeffs(), n, Rational(0), Rational(1)));
}

PowerSeries1 comp_inverse(const PowerSeries1& f)
{
    if (!f.coeff(0).is_zero()) {
        throw DomainError("comp_inverse: constant term must vanish");
    }
    if (f.max_degree() < 1 || f.coeff(1).is_zero()) {
        throw NotInvertible("comp_inverse: linear coefficient must be invertible");
    }
    return PowerSeries1(
        series1::comp_inverse(f.coeffs(), f.max_degree(), Rational(1 / f.coeff(1)), Rational(0), Rational(1)));
}

PowerSeries1 to_power_series(const NCSeries& f)
{
    require_one_letter(f, "to_power_series");
    PowerSeries1 out(f.max_degree());
    for (const auto& [w, c] : f.terms()) {
        out.set(static_cast<int>(w.size()), c);
    }
    return out;
}

NCSeries to_nc_series(const PowerSeries1& a)
{
    if (!a.coeff(0).is_zero()) {
        throw DomainError("to_nc_series: constant term must vanish");
    }
    if (a.max_degree() < 1) {
        throw ValidationError("to_nc_series: degree must be at least 1");
    }
    NCSeries out(1, a.max_degree());
    for (int k = 1; k <= a.max_degree(); ++k) {
        out.set(Word(std::vector<int>(idx(k), 1)), a.coeff(k));
    }
    return out;
}

PowerSeries1 shift_down(const NCSeries& x)
{
    require_one_letter(x, "shift_down");
    PowerSeries1 out(x.max_degree() - 1);
    for (int k = 0; k < x.max_degree(); ++k) {
        out.set(k, x.coeff(Word(std::vector<int>(idx(k + 1), 1))));
    }
    return out;
}

NCSeries shift_up(const PowerSeries1& a)
{
    NCSeries out(1, a.max_degree() + 1);
    for (int k = 0; k <= a.max_degree(); ++k) {
        out.set(Word(std::vector<int>(idx(k + 1), 1)), a.coeff(k));
    }
    return out;
}

PowerSeries1 f_transform(const PowerSeries1& f)
{
    const auto inv = comp_inverse(f);
    PowerSeries1 out(f.max_degree() - 1);
    for (int k = 0; k < f.max_degree(); ++k) {
        out.set(k, inv.coeff(k + 1));
    }
    return out;
}

PowerSeries1 f_transform(const NCSeries& f)
{
    return f_transform(to_power_series(f));
}

PowerSeries1 s_v_transform(const NCSeries& m)
{
    const auto inv_over_z = f_transform(m);
    PowerSeries1 one_plus_z(inv_over_z.max_degree());
    one_plus_z.set(0, Rational(1));
    if (inv_over_z.max_degree() >= 1) {
        one_plus_z.set(1, Rational(1));
    }
    return one_plus_z * inv_over_z;
}

PowerSeries1 log_morphism(const NCSeries& f)
{
    require_one_letter(f, "log_morphism");
    if (f.coeff(Word{1}) != 1) {
        throw DomainError("log_morphism needs a unipotent series (f_1 = 1)");
    }
    if (f.max_degree() < 2) {
        throw ValidationError("log_morphism needs maxdeg >= 2");
    }
    return log_derivative(f_transform(f));
}

NCSeries exp_morphism(const PowerSeries1& t)
{
    const auto e = exp(integral(t));
    PowerSeries1 z_times(e.max_degree() + 1);
    for (int k = 0; k <= e.max_degree(); ++k) {
        z_times.set(k + 1, e.coeff(k));
    }
    return to_nc_series(comp_inverse(z_times));
}

PowerSeries1 r_v(const NCSeries& m)
{
    require_one_letter(m, "r_v");
    return to_power_series(box_conv(m, moeb(1, m.max_degree())));
}

NCSeries exp_v(const NCSeries& m)
{
    require_one_letter(m, "exp_v");
    const auto f = exp_morphism(shift_down(box_conv(m, moeb(1, m.max_degree()))));
    return box_conv(f, zeta(1, f.max_degree()));
}

NCSeries log_v(const NCSeries& m)
{
    require_one_letter(m, "log_v");
    if (m.coeff(Word{1}) != 1) {
        throw DomainError("log_v needs first moment 1");
    }
    if (m.max_degree() < 2) {
        throw ValidationError("log_v needs maxdeg >= 2");
    }
    const auto x = shift_up(log_morphism(box_conv(m, moeb(1, m.max_degree()))));
    return box_conv(x, zeta(1, x.max_degree()));
}

std::vector<CoordPoly> symm_coordinates(int maxdeg)
{
    if (maxdeg < 2) {
        throw ValidationError("symm_coordinates needs maxdeg >= 2");
    }
    const CoordRing ring{1, maxdeg, Variant::reduced};
    const auto zero = CoordPoly(ring);
    const auto one = CoordPoly::constant(ring, Rational(1));
    std::vector<CoordPoly> universal(idx(maxdeg + 1), zero);
    universal[1] = one;
    for (int j = 2; j <= maxdeg; ++j) {
        universal[idx(j)] = CoordPoly::generator(ring, Word(std::vector<int>(idx(j), 1)));
    }
    const auto inverse = series1::comp_inverse(universal, maxdeg, one, zero, one);
    return {inverse.begin() + 2, inverse.end()};
}

} // namespace freeprob
