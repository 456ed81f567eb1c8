// Test-only oracles, coded independently of the engine's polynomial and
// series types: dense vectors of big integers throughout, so a bug in the
// sparse representation cannot hide itself.
#ifndef MAXCALC_TESTS_ORACLES_HPP
#define MAXCALC_TESTS_ORACLES_HPP

#include <array>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracles {

using BigInt = boost::multiprecision::cpp_int;
using Dense = std::vector<BigInt>; // Dense[i] = coefficient of t^i

// Poincare polynomial of the moduli space of rank-n, degree-d stable bundles
// over a genus-g curve, gcd(n,d)=1, via the Harder-Narasimhan/Atiyah-Bott
// recursion on truncated power series. Implemented for n = 1 and n = 2.
// Returns the dense coefficient list (the recursion yields a polynomial; the
// function checks that coefficients vanish beyond its degree).
Dense hn_recursion_poincare(int n, int d, int g);

// Coefficient of q^n in the Goettsche product for a surface with Betti
// numbers (b0..b4), via a fully expanded dense two-variable truncated
// product. Returns coefficients in t.
Dense goettsche_bruteforce(const std::array<long long, 5>& b, int n);

// Number of partitions of n.
BigInt partition_count(int n);

// Gaussian binomial [n choose k] at step s, by enumerating all 0/1-strings
// with k ones among n slots and counting inversions.
Dense qbinomial_enumerate(int k, int n, int step);

} // namespace oracles

#endif
