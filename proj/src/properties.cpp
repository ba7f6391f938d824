#include "hstar/properties.hpp"

#include "hstar/errors.hpp"

namespace hstar {

bool is_palindromic(const IntPolynomial& f, int d) {
    if (d < f.degree()) throw invalid_argument_error("is_palindromic: d below degree of f");
    if (d < 0) throw invalid_argument_error("is_palindromic: negative degree");
    for (int i = 0; 2 * i <= d; ++i) {
        if (f.coeff(i) != f.coeff(d - i)) return false;
    }
    return true;
}

bool is_unimodal(const IntPolynomial& f) {
    const auto& c = f.coeffs();
    size_t i = 1;
    while (i < c.size() && c[i - 1] <= c[i]) ++i;
    while (i < c.size() && c[i - 1] >= c[i]) ++i;
    return i >= c.size();
}

bool is_log_concave(const IntPolynomial& f) {
    if (!f.has_nonnegative_coeffs())
        throw invalid_argument_error("is_log_concave: negative coefficient unsupported");
    const auto& c = f.coeffs();
    for (size_t i = 1; i + 1 < c.size(); ++i) {
        if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
    }
    return true;
}

std::optional<std::vector<Int>> gamma_decompose(const IntPolynomial& f, int d) {
    if (d < f.degree()) throw invalid_argument_error("gamma_decompose: d below degree of f");
    if (!is_palindromic(f, d)) return std::nullopt;
    std::vector<Int> gamma;
    IntPolynomial rest = f;
    for (int i = 0; 2 * i <= d; ++i) {
        Int gi = rest.coeff(i);
        gamma.push_back(gi);
        if (sgn(gi) != 0) {
            rest = rest - IntPolynomial::binomial_power(d - 2 * i).shifted_up(i) * gi;
        }
    }
    if (!rest.is_zero())
        throw internal_error("gamma_decompose: nonzero remainder on palindromic input");
    return gamma;
}

bool is_gamma_positive(const IntPolynomial& f, int d) {
    auto g = gamma_decompose(f, d);
    if (!g) return false;
    for (const Int& gi : *g)
        if (sgn(gi) < 0) return false;
    return true;
}

IntPolynomial gamma_expand(const IntPolynomial& g, int d) {
    if (d < 0) throw invalid_argument_error("gamma_expand: negative degree");
    if (2 * g.degree() > d) throw invalid_argument_error("gamma_expand: 2*deg(g) exceeds d");
    IntPolynomial result;
    for (int i = 0; i <= g.degree(); ++i) {
        if (sgn(g.coeff(i)) == 0) continue;
        Int c = g.coeff(i) * pow_int(Int(4), i);
        result = result + IntPolynomial::binomial_power(d - 2 * i).shifted_up(i) * c;
    }
    if (g.is_zero()) return IntPolynomial();
    return result;
}

IntPolynomial gamma_expand(const RatPolynomial& g, int d) {
    if (d < 0) throw invalid_argument_error("gamma_expand: negative degree");
    if (2 * g.degree() > d) throw invalid_argument_error("gamma_expand: 2*deg(g) exceeds d");
    RatPolynomial result;
    for (int i = 0; i <= g.degree(); ++i) {
        if (sgn(g.coeff(i)) == 0) continue;
        Rat c = g.coeff(i) * Rat(pow_int(Int(4), i));
        result = result + RatPolynomial(IntPolynomial::binomial_power(d - 2 * i).shifted_up(i)) * c;
    }
    auto f = result.as_integer();
    if (!f) throw internal_error("gamma_expand: averaged polynomial is not integral");
    return *f;
}

namespace {

// Primitive part with positive leading coefficient.
IntPolynomial normalize_primitive(const IntPolynomial& f) {
    if (f.is_zero()) return f;
    Vec c = f.coeffs();
    make_primitive(c);
    IntPolynomial g{std::move(c)};
    if (sgn(g.leading()) < 0) return -g;
    return g;
}

// Remainder of f mod g over Q, cleared to a primitive integer polynomial with
// the sign of the true rational remainder's leading coefficient preserved.
IntPolynomial rat_mod_primitive(const IntPolynomial& f, const IntPolynomial& g) {
    RatPolynomial r(f);
    const RatPolynomial gq(g);
    const Rat lg(g.leading());
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Rat q = r.leading() / lg;
        int shift = r.degree() - g.degree();
        std::vector<Rat> mono(static_cast<size_t>(shift) + 1, Rat(0));
        mono[shift] = q;
        r = r - gq * RatPolynomial(std::move(mono));
    }
    if (r.is_zero()) return IntPolynomial();
    // Clear denominators with a positive factor so all signs are preserved.
    Int lcm = 1;
    for (const Rat& q : r.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    Vec c(r.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) {
        Rat s = r.coeffs()[i] * Rat(lcm);
        c[i] = s.get_num();
    }
    make_primitive(c);
    return IntPolynomial(std::move(c));
}

// Sign variations in the Sturm sequence of s at -infinity minus +infinity,
// i.e. the number of distinct real roots of the squarefree polynomial s.
int sturm_count(const IntPolynomial& s) {
    if (s.degree() <= 0) return 0;
    std::vector<IntPolynomial> seq;
    seq.push_back(s);
    seq.push_back(s.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        IntPolynomial r = rat_mod_primitive(seq[seq.size() - 2], seq.back());
        seq.push_back(-r);
    }
    if (seq.back().is_zero()) seq.pop_back();

    auto variations = [&](bool at_minus_inf) {
        int count = 0, prev = 0;
        for (const IntPolynomial& p : seq) {
            int sg = sgn(p.leading());
            if (at_minus_inf && p.degree() % 2 == 1) sg = -sg;
            if (sg != 0 && prev != 0 && sg != prev) ++count;
            if (sg != 0) prev = sg;
        }
        return count;
    };
    return variations(true) - variations(false);
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g) {
    IntPolynomial a = normalize_primitive(f);
    IntPolynomial b = normalize_primitive(g);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = rat_mod_primitive(a, b);
        a = std::move(b);
        b = normalize_primitive(r);
    }
    return normalize_primitive(a);
}

IntPolynomial poly_div_exact(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw invalid_argument_error("poly_div_exact: division by zero");
    if (f.is_zero()) return IntPolynomial();
    RatPolynomial r(f);
    const RatPolynomial gq(g);
    const Rat lg(g.leading());
    std::vector<Rat> q(static_cast<size_t>(std::max(0, f.degree() - g.degree())) + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Rat c = r.leading() / lg;
        int shift = r.degree() - g.degree();
        q[shift] = c;
        std::vector<Rat> mono(static_cast<size_t>(shift) + 1, Rat(0));
        mono[shift] = c;
        r = r - gq * RatPolynomial(std::move(mono));
    }
    if (!r.is_zero()) throw internal_error("poly_div_exact: division not exact");
    auto qi = RatPolynomial(std::move(q)).as_integer();
    if (!qi) throw internal_error("poly_div_exact: quotient not integral");
    return *qi;
}

int count_distinct_real_roots(const IntPolynomial& f) {
    if (f.is_zero()) throw invalid_argument_error("count_distinct_real_roots: zero polynomial");
    if (f.degree() == 0) return 0;
    IntPolynomial s = poly_div_exact(normalize_primitive(f), poly_gcd(f, f.derivative()));
    return sturm_count(s);
}

int count_real_roots(const IntPolynomial& f) {
    if (f.is_zero()) throw invalid_argument_error("count_real_roots: zero polynomial");
    if (f.degree() == 0) return 0;
    // Squarefree decomposition by the repeated-gcd chain: with
    // g_0 = f, g_{k+1} = gcd(g_k, g_k'), the quotient g_k / g_{k+1} is the
    // product of all factors of multiplicity > k, so summing its distinct
    // real roots over k counts real roots with multiplicity.
    int total = 0;
    IntPolynomial g = normalize_primitive(f);
    while (g.degree() > 0) {
        IntPolynomial h = poly_gcd(g, g.derivative());
        total += sturm_count(poly_div_exact(g, h));
        g = std::move(h);
    }
    return total;
}

bool is_real_rooted(const IntPolynomial& f) {
    if (f.is_zero()) throw invalid_argument_error("is_real_rooted: zero polynomial");
    return count_real_roots(f) == f.degree();
}

}  // namespace hstar
