#include "hstar/numbers.hpp"

#include "hstar/errors.hpp"

namespace hstar {

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw invalid_argument_error("dot: length mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw invalid_argument_error("vec_sub: length mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

void make_primitive(Vec& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sgn(g) == 0 || g == 1) return;
    for (Int& x : v) x /= g;
}

void make_primitive(Vec& v, Int& b) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
    if (sgn(g) == 0 || g == 1) return;
    for (Int& x : v) x /= g;
    b /= g;
}

bool is_zero_vec(const Vec& v) {
    for (const Int& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace hstar
