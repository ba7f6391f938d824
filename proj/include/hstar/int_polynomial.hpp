#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hstar/numbers.hpp"

namespace hstar {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeff(i) is the coefficient of x^i. Trailing zeros are trimmed, so the
/// zero polynomial has an empty coefficient vector and degree() == -1.
/// Values are immutable after construction; all operations return new values.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(Int c);
    static IntPolynomial one() { return constant(1); }
    // c * x^k
    static IntPolynomial monomial(Int c, int k);
    // (x + 1)^d
    static IntPolynomial binomial_power(int d);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    // Coefficient of x^i; 0 beyond the degree.
    Int coeff(int i) const;
    const Int& leading() const;

    Int operator()(const Int& x) const;
    Rat operator()(const Rat& x) const;
    Int sum_of_coeffs() const { return (*this)(Int(1)); }

    IntPolynomial operator+(const IntPolynomial& g) const;
    IntPolynomial operator-(const IntPolynomial& g) const;
    IntPolynomial operator*(const IntPolynomial& g) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const Int& c) const;
    bool operator==(const IntPolynomial& g) const { return coeffs_ == g.coeffs_; }
    bool operator!=(const IntPolynomial& g) const { return !(*this == g); }

    IntPolynomial shifted_up(int k) const;  // multiply by x^k
    IntPolynomial derivative() const;

    bool has_nonnegative_coeffs() const;

    std::string str() const;  // e.g. "1 + 4*x + x^2"

private:
    void trim();
    std::vector<Int> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g);
// f^e for e >= 0.
IntPolynomial poly_pow(const IntPolynomial& f, int e);

}  // namespace hstar
