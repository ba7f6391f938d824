#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hstar {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals from GMP. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow2(unsigned long e) {
    Int r = 1;
    r <<= e;
    return r;
}

Int dot(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);

// Divides by the gcd of the entries; the zero vector is left unchanged.
void make_primitive(Vec& v);
// Same, but the sign convention is taken from the vector `v` itself being
// scaled together with a trailing value `b` (used for inequality rows).
void make_primitive(Vec& v, Int& b);

bool is_zero_vec(const Vec& v);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

}  // namespace hstar
