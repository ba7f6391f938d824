#include "hstar/rat_polynomial.hpp"

#include <sstream>

#include "hstar/errors.hpp"

namespace hstar {

RatPolynomial::RatPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (Rat& c : coeffs_) c.canonicalize();
    trim();
}

RatPolynomial::RatPolynomial(const IntPolynomial& f) {
    coeffs_.reserve(f.coeffs().size());
    for (const Int& c : f.coeffs()) coeffs_.emplace_back(c);
}

RatPolynomial RatPolynomial::constant(Rat c) {
    RatPolynomial f;
    f.coeffs_.push_back(std::move(c));
    f.trim();
    return f;
}

void RatPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat RatPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

const Rat& RatPolynomial::leading() const {
    if (is_zero()) throw invalid_argument_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rat RatPolynomial::operator()(const Rat& x) const {
    Rat r = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        r *= x;
        r += coeffs_[i];
    }
    return r;
}

RatPolynomial RatPolynomial::operator+(const RatPolynomial& g) const {
    std::vector<Rat> c(std::max(coeffs_.size(), g.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < g.coeffs_.size(); ++i) c[i] += g.coeffs_[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator-(const RatPolynomial& g) const {
    std::vector<Rat> c(std::max(coeffs_.size(), g.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < g.coeffs_.size(); ++i) c[i] -= g.coeffs_[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const RatPolynomial& g) const {
    if (is_zero() || g.is_zero()) return RatPolynomial();
    std::vector<Rat> c(coeffs_.size() + g.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < g.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * g.coeffs_[j];
    }
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::operator*(const Rat& k) const {
    std::vector<Rat> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * k;
    return RatPolynomial(std::move(c));
}

RatPolynomial RatPolynomial::compose_linear(const Rat& a, const Rat& b) const {
    // Horner with the substitution x -> a*t + b.
    RatPolynomial lin(std::vector<Rat>{b, a});
    RatPolynomial r;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        r = r * lin + RatPolynomial::constant(coeffs_[i]);
    }
    return r;
}

std::optional<IntPolynomial> RatPolynomial::as_integer() const {
    std::vector<Int> c;
    c.reserve(coeffs_.size());
    for (const Rat& q : coeffs_) {
        if (q.get_den() != 1) return std::nullopt;
        c.push_back(q.get_num());
    }
    return IntPolynomial(std::move(c));
}

std::string RatPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << " + ";
        os << coeffs_[i].get_str();
        if (i >= 1) os << "*x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

RatPolynomial lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    const size_t n = points.size();
    if (n == 0) throw invalid_argument_error("lagrange_interpolate: no points");
    RatPolynomial result;
    for (size_t i = 0; i < n; ++i) {
        RatPolynomial basis = RatPolynomial::constant(Rat(1));
        Rat denom = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // (x - x_j)
            basis = basis * RatPolynomial(std::vector<Rat>{-points[j].first, Rat(1)});
            denom *= points[i].first - points[j].first;
        }
        if (sgn(denom) == 0) throw invalid_argument_error("lagrange_interpolate: repeated x value");
        result = result + basis * (points[i].second / denom);
    }
    return result;
}

}  // namespace hstar
