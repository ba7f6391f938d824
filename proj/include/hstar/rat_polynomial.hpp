#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hstar/int_polynomial.hpp"
#include "hstar/numbers.hpp"

namespace hstar {

/// Dense univariate polynomial over the rationals (GMP mpq, always in lowest
/// terms with positive denominators). Used for Ehrhart polynomials in the
/// dilation variable and for exact averaged formulas before the integrality
/// of the result is asserted.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rat> coeffs);
    explicit RatPolynomial(const IntPolynomial& f);

    static RatPolynomial constant(Rat c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const;
    const Rat& leading() const;

    Rat operator()(const Rat& x) const;

    RatPolynomial operator+(const RatPolynomial& g) const;
    RatPolynomial operator-(const RatPolynomial& g) const;
    RatPolynomial operator*(const RatPolynomial& g) const;
    RatPolynomial operator*(const Rat& c) const;
    bool operator==(const RatPolynomial& g) const { return coeffs_ == g.coeffs_; }
    bool operator!=(const RatPolynomial& g) const { return !(*this == g); }

    // p(a*x + b), exact.
    RatPolynomial compose_linear(const Rat& a, const Rat& b) const;

    // Returns the polynomial as an IntPolynomial if every coefficient is an
    // integer, std::nullopt otherwise.
    std::optional<IntPolynomial> as_integer() const;

    std::string str() const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Unique polynomial of degree < points.size() through (x_i, y_i); the x_i
// must be pairwise distinct.
RatPolynomial lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace hstar
