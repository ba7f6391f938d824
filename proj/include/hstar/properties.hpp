#pragma once

#include <optional>
#include <vector>

#include "hstar/int_polynomial.hpp"
#include "hstar/rat_polynomial.hpp"

namespace hstar {

// f is palindromic of (formal) degree d when coeff(i) == coeff(d-i) for all
// 0 <= i <= d; coefficients beyond deg(f) read as zero. Requires d >= deg(f).
bool is_palindromic(const IntPolynomial& f, int d);

// a_0 <= a_1 <= ... <= a_k >= ... >= a_deg for some k.
bool is_unimodal(const IntPolynomial& f);

// a_i^2 >= a_{i-1} a_{i+1} for all interior i. Only defined here for
// polynomials with nonnegative coefficients; throws otherwise.
bool is_log_concave(const IntPolynomial& f);

// Unique gamma vector with f(x) = sum_i gamma_i x^i (1+x)^(d-2i), solved
// top-down from the unitriangular system. Returns nullopt when f is not
// palindromic of degree d (no such decomposition exists). Requires d >= deg(f).
std::optional<std::vector<Int>> gamma_decompose(const IntPolynomial& f, int d);

// Palindromic, and every gamma_i >= 0.
bool is_gamma_positive(const IntPolynomial& f, int d);

// (x+1)^d * g(4x/(x+1)^2), expanded exactly: sum_i g_i 4^i x^i (x+1)^(d-2i).
// Requires 2*deg(g) <= d. Note the 4^i scaling: gamma_decompose of the result
// returns 4^i * g_i.
IntPolynomial gamma_expand(const IntPolynomial& g, int d);

// Rational-coefficient variant for averaged formulas; the expanded polynomial
// must come out integral, otherwise internal_error is thrown.
IntPolynomial gamma_expand(const RatPolynomial& g, int d);

// Number of distinct real roots, by Sturm's theorem over exact rationals.
int count_distinct_real_roots(const IntPolynomial& f);

// Number of real roots counted with multiplicity (squarefree decomposition
// via repeated gcd, then Sturm per multiplicity layer).
int count_real_roots(const IntPolynomial& f);

// True iff all complex roots of f are real, i.e. count_real_roots(f) == deg f.
// Requires f nonzero; constants are vacuously real-rooted.
bool is_real_rooted(const IntPolynomial& f);

// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient (gcd(f, 0) = normalized f).
IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g);

// Exact quotient f / g; throws internal_error if the division is not exact
// over the integers.
IntPolynomial poly_div_exact(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace hstar
