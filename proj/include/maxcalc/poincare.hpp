#ifndef MAXCALC_POINCARE_HPP
#define MAXCALC_POINCARE_HPP

#include <array>
#include <vector>

#include "maxcalc/poly.hpp"

namespace maxcalc {

// Poincare polynomial: degree -> nonnegative count, canonical sparse form
// (no zero entries, so equal polynomials compare structurally equal).
class GradedDims {
public:
    GradedDims() = default;                       // the zero polynomial
    explicit GradedDims(const Poly& p);           // validates counts/degrees >= 0
    GradedDims(std::initializer_list<std::pair<int, Int>> terms);

    const Poly& poly() const { return p_; }
    Int coeff(int degree) const { return p_.coeff(degree); }
    int degree() const { return p_.degree(); }
    bool is_zero() const { return p_.is_zero(); }
    bool is_palindromic() const { return p_.is_palindromic(); }
    std::string str() const { return p_.str(); }

    bool operator==(const GradedDims& o) const { return p_ == o.p_; }
    bool operator!=(const GradedDims& o) const { return p_ != o.p_; }

private:
    Poly p_;
};

GradedDims add(const GradedDims& a, const GradedDims& b);
GradedDims mul(const GradedDims& a, const GradedDims& b);
GradedDims shift(const GradedDims& a, int k);
Int total(const GradedDims& a); // evaluation at t = 1

// Ordinary binomial coefficient, exact.
Int binomial(int n, int k);

// Gaussian binomial [n choose k] as a polynomial in t^step (step 1 or 2).
// Coefficients are palindromic and sum to binomial(n, k).
GradedDims qbinomial(int k, int n, int step);

// 1 + t^2 + ... + t^{2r}: Poincare polynomial of complex projective r-space.
GradedDims projective_space_poly(int r, int step = 2);

// Truncated two-variable series: coefficient of q^n is a Poincare polynomial
// in t; everything beyond q^q_trunc is dropped. Truncation is explicit state;
// multiplying series of unequal truncation truncates to the minimum.
class BigradedSeries {
public:
    explicit BigradedSeries(int q_trunc);
    static BigradedSeries one(int q_trunc);

    int q_trunc() const { return q_trunc_; }
    const GradedDims& coeff(int q_exp) const;
    void set_coeff(int q_exp, GradedDims g);

    bool operator==(const BigradedSeries& o) const;

private:
    int q_trunc_;
    std::vector<GradedDims> coeffs_; // index = q exponent, size q_trunc_+1
};

BigradedSeries mul(const BigradedSeries& a, const BigradedSeries& b);

// Generating series for the Betti numbers of punctual Hilbert schemes of a
// surface with Betti numbers (b0..b4):
//   prod_{m>=1} (1+t^{2m-1}q^m)^{b1} (1+t^{2m+1}q^m)^{b3}
//             / [(1-t^{2m-2}q^m)^{b0} (1-t^{2m}q^m)^{b2} (1-t^{2m+2}q^m)^{b4}]
// expanded exactly modulo q^{q_trunc+1}.
BigradedSeries goettsche_series(const std::array<Int, 5>& b, int q_trunc);

// Coefficient of q^n in the series above.
GradedDims goettsche_coefficient(const std::array<Int, 5>& b, int n);

// Poincare polynomial of the moduli space of stable rank-2 odd-degree bundles
// on a genus-g curve:
//   (1+t)^{2g} * ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4)),
// an exact quotient of top degree 2(4(g-1)+1). Throws InternalError if the
// division leaves a remainder (it never does for g >= 2).
GradedDims curve_moduli_poincare_rank2(int g);

} // namespace maxcalc

#endif
