#ifndef MAXCALC_POLY_HPP
#define MAXCALC_POLY_HPP

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace maxcalc {

using Int = boost::multiprecision::cpp_int;

// Sparse univariate polynomial over Z in canonical form: the coefficient map
// never stores zeros, so equality is structural equality. Immutable-style
// API: every operation returns a new value.
class Poly {
public:
    Poly() = default;
    explicit Poly(Int constant);
    static Poly term(Int coeff, int degree);

    const std::map<int, Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const; // -1 for the zero polynomial
    Int coeff(int degree) const;
    Int sum_of_coeffs() const; // evaluation at 1

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly shifted(int k) const; // multiply by t^k, k >= 0
    Poly pow(int e) const;     // e >= 0

    // Exact division: throws InternalError if the remainder is nonzero or a
    // leading-coefficient division is not exact.
    Poly div_exact(const Poly& divisor) const;

    bool is_palindromic() const; // coeff(d) == coeff(degree()-d) for all d
    bool all_coeffs_nonnegative() const;

    // "1 + 2t^2 + t^4" with ascending degrees; "0" for the zero polynomial.
    std::string str() const;

    void set(int degree, Int value); // canonicalizing single-entry write

private:
    std::map<int, Int> c_;
};

} // namespace maxcalc

#endif
