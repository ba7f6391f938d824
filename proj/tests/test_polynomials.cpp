#include <doctest.h>

#include "hstar/int_polynomial.hpp"
#include "hstar/rat_polynomial.hpp"
#include "hstar/errors.hpp"

using namespace hstar;

TEST_CASE("polynomial multiplication") {
    IntPolynomial one_plus_x{1, 1};
    CHECK(one_plus_x * one_plus_x == IntPolynomial{1, 2, 1});
    CHECK(poly_mul(IntPolynomial{1, 4, 1}, one_plus_x) == IntPolynomial{1, 5, 5, 1});

    IntPolynomial f{3, 0, -2, 7};
    CHECK(f * IntPolynomial::one() == f);
    CHECK(f * IntPolynomial::zero() == IntPolynomial::zero());
    CHECK((f * IntPolynomial{0, 1}) == f.shifted_up(1));
}

TEST_CASE("trimming and degree") {
    IntPolynomial f(std::vector<Int>{Int(1), Int(2), Int(0), Int(0)});
    CHECK(f.degree() == 1);
    CHECK(IntPolynomial::zero().degree() == -1);
    CHECK(IntPolynomial::zero().is_zero());
    CHECK(IntPolynomial{0}.is_zero());
    CHECK(IntPolynomial::binomial_power(3) == IntPolynomial{1, 3, 3, 1});
}

TEST_CASE("evaluation matches coefficient sum at 1") {
    IntPolynomial f{1, 4, 1};
    CHECK(f(Int(1)) == 6);
    CHECK(f.sum_of_coeffs() == 6);
    CHECK(f(Int(2)) == 13);
    CHECK(f(Rat(1, 2)) == Rat(13, 4));
}

TEST_CASE("arithmetic identities") {
    IntPolynomial f{2, -1, 5};
    IntPolynomial g{0, 3, 1, -4};
    CHECK(f + g - g == f);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    CHECK((-f) * (-g) == f * g);
    CHECK(f.derivative() == IntPolynomial{-1, 10});
}

TEST_CASE("rational polynomials and interpolation") {
    // counts of the unit square: L(m) = (m+1)^2
    std::vector<std::pair<Rat, Rat>> pts{{Rat(0), Rat(1)}, {Rat(1), Rat(4)}, {Rat(2), Rat(9)}};
    RatPolynomial p = lagrange_interpolate(pts);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rat(1));
    CHECK(p.coeff(1) == Rat(2));
    CHECK(p.coeff(2) == Rat(1));
    CHECK(p(Rat(5)) == Rat(36));

    auto as_int = p.as_integer();
    REQUIRE(as_int.has_value());
    CHECK(*as_int == IntPolynomial{1, 2, 1});
    CHECK(!(p * Rat(1, 2)).as_integer().has_value());
}

TEST_CASE("linear composition") {
    RatPolynomial p(IntPolynomial{1, 2, 1});  // (1+x)^2
    RatPolynomial q = p.compose_linear(Rat(-1), Rat(-1));  // (1 + (-x-1))^2 = x^2
    CHECK(q == RatPolynomial(IntPolynomial{0, 0, 1}));
}

TEST_CASE("string form") {
    CHECK(IntPolynomial{1, 4, 1}.str() == "1 + 4*x + x^2");
    CHECK(IntPolynomial{0, -2}.str() == "-2*x");
    CHECK(IntPolynomial::zero().str() == "0");
}
