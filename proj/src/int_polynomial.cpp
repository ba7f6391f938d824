#include "hstar/int_polynomial.hpp"

#include <sstream>

#include "hstar/errors.hpp"

namespace hstar {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial f;
    f.coeffs_.push_back(std::move(c));
    f.trim();
    return f;
}

IntPolynomial IntPolynomial::monomial(Int c, int k) {
    if (k < 0) throw invalid_argument_error("monomial: negative exponent");
    IntPolynomial f;
    f.coeffs_.assign(static_cast<size_t>(k) + 1, Int(0));
    f.coeffs_[k] = std::move(c);
    f.trim();
    return f;
}

IntPolynomial IntPolynomial::binomial_power(int d) {
    if (d < 0) throw invalid_argument_error("binomial_power: negative degree");
    std::vector<Int> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[i] = binomial(d, i);
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[i];
}

const Int& IntPolynomial::leading() const {
    if (is_zero()) throw invalid_argument_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Int IntPolynomial::operator()(const Int& x) const {
    Int r = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        r *= x;
        r += coeffs_[i];
    }
    return r;
}

Rat IntPolynomial::operator()(const Rat& x) const {
    Rat r = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        r *= x;
        r += Rat(coeffs_[i]);
    }
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& g) const {
    std::vector<Int> c(std::max(coeffs_.size(), g.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < g.coeffs_.size(); ++i) c[i] += g.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& g) const {
    std::vector<Int> c(std::max(coeffs_.size(), g.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < g.coeffs_.size(); ++i) c[i] -= g.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& g) const {
    if (is_zero() || g.is_zero()) return IntPolynomial();
    std::vector<Int> c(coeffs_.size() + g.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < g.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * g.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& k) const {
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * k;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted_up(int k) const {
    if (k < 0) throw invalid_argument_error("shifted_up: negative shift");
    if (is_zero()) return IntPolynomial();
    std::vector<Int> c(coeffs_.size() + static_cast<size_t>(k), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<Int> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
    return IntPolynomial(std::move(c));
}

bool IntPolynomial::has_nonnegative_coeffs() const {
    for (const Int& c : coeffs_)
        if (sgn(c) < 0) return false;
    return true;
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        Int a = coeffs_[i];
        if (first) {
            if (sgn(a) < 0) os << "-";
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        Int mag = abs(a);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g) { return f * g; }

IntPolynomial poly_pow(const IntPolynomial& f, int e) {
    if (e < 0) throw invalid_argument_error("poly_pow: negative exponent");
    IntPolynomial r = IntPolynomial::one();
    for (int i = 0; i < e; ++i) r = r * f;
    return r;
}

}  // namespace hstar
