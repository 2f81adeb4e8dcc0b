#ifndef FREEPROB_ONEDIM_HPP
#define FREEPROB_ONEDIM_HPP

#include <vector>

#include <freeprob/hopf.hpp>
#include <freeprob/series.hpp>

namespace freeprob
{

// a_0 + a_1 z + ... + a_maxdeg z^maxdeg. Constant terms are allowed.
class PowerSeries1
{
public:
    explicit PowerSeries1(int maxdeg);
    // maxdeg = coeffs.size() - 1; coeffs must be non-empty.
    explicit PowerSeries1(std::vector<Rational> coeffs);

    static PowerSeries1 constant(int maxdeg, Rational c);
    // z (needs maxdeg >= 1).
    static PowerSeries1 identity(int maxdeg);

    int max_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    // Zero above max_degree().
    Rational coeff(int k) const;
    void set(int k, Rational value);

    friend bool operator==(const PowerSeries1&, const PowerSeries1&) = default;

private:
    std::vector<Rational> coeffs_;
};

// Binary operations truncate at the smaller degree.
PowerSeries1 operator+(const PowerSeries1& a, const PowerSeries1& b);
PowerSeries1 operator-(const PowerSeries1& a, const PowerSeries1& b);
PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b);
PowerSeries1 operator*(const Rational& c, const PowerSeries1& a);
PowerSeries1 truncate(const PowerSeries1& a, int maxdeg);

// d/dz, one degree lower (a constant stays a zero constant).
PowerSeries1 derivative(const PowerSeries1& a);
// Antiderivative with constant 0, one degree higher.
PowerSeries1 integral(const PowerSeries1& a);
// 1/a; needs a_0 != 0.
PowerSeries1 reciprocal(const PowerSeries1& a);
// log a; needs a_0 = 1.
PowerSeries1 log(const PowerSeries1& a);
// exp a; needs a_0 = 0.
PowerSeries1 exp(const PowerSeries1& a);
// a'/a, the logarithmic derivative; needs a_0 = 1.
PowerSeries1 log_derivative(const PowerSeries1& a);

// f(g(z)); needs g_0 = 0.
PowerSeries1 compose(const PowerSeries1& f, const PowerSeries1& g);
// h with f(h(z)) = h(f(z)) = z; needs f_0 = 0 and f_1 != 0.
PowerSeries1 comp_inverse(const PowerSeries1& f);

// Coefficient-wise identification of a one-letter NCSeries with z R[[z]].
PowerSeries1 to_power_series(const NCSeries& f);
// Needs a_0 = 0 and maxdeg >= 1.
NCSeries to_nc_series(const PowerSeries1& a);

// sum_{k>=1} x_k z^k  ->  sum_{k>=0} x_{k+1} z^k, and back.
PowerSeries1 shift_down(const NCSeries& x);
NCSeries shift_up(const PowerSeries1& a);

// f^{-1}(z)/z, one degree below f.
PowerSeries1 f_transform(const NCSeries& f);
PowerSeries1 f_transform(const PowerSeries1& f);
// ((1+z)/z) m^{-1}(z), one degree below m.
PowerSeries1 s_v_transform(const NCSeries& m);

// d/dz log f_transform(f) for f with f_1 = 1; two degrees below f.
PowerSeries1 log_morphism(const NCSeries& f);
// The inverse of log_morphism: integrate, exponentiate, multiply by z and
// invert compositionally. A series of degree d yields level d + 2.
NCSeries exp_morphism(const PowerSeries1& t);

// m [*] Moeb_1 as a series in z.
PowerSeries1 r_v(const NCSeries& m);
// exp_morphism(shift_down(m [*] Moeb)) [*] Zeta, one level above m.
NCSeries exp_v(const NCSeries& m);
// shift_up(log_morphism(m [*] Moeb)) [*] Zeta, one level below m; needs m_1 = 1.
NCSeries log_v(const NCSeries& m);

// h_1..h_{maxdeg-1}: h_n is the coefficient of z^{n+1} in the compositional
// inverse of z + sum_{j=2}^{maxdeg} Xbar_{(1^j)} z^j, with coefficients in
// the reduced one-letter coordinate ring.
std::vector<CoordPoly> symm_coordinates(int maxdeg);

} // namespace freeprob

#endif
