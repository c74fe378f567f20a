#ifndef STDIV_RATIONAL_HPP
#define STDIV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace stdiv {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "a", "a/b", and "-a/b"; canonicalizes.
inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat pow_rat(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    Rat b = exp > 0 ? base : Rat(1) / base;
    unsigned long n = exp > 0 ? exp : -exp;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Multiplicity of the prime p in q (negative for denominators). q must be nonzero.
inline long ord_p(const Rat& q, const Int& p) {
    if (q == 0) throw std::domain_error("ord_p(0) undefined");
    long v = 0;
    Int n = q.get_num();
    Int d = q.get_den();
    Int r, quot;
    while (true) {
        mpz_fdiv_qr(quot.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = quot;
        ++v;
    }
    while (true) {
        mpz_fdiv_qr(quot.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        d = quot;
        --v;
    }
    return v;
}

inline bool is_prime(const Int& p) {
    return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

// Exact square root over Q, when it exists.
inline std::optional<Rat> sqrt_rat(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rat(0);
    Int n = q.get_num(), d = q.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

inline Rat harmonic(long n) {
    if (n < 0) throw std::domain_error("harmonic of negative index");
    Rat h(0);
    for (long i = 1; i <= n; ++i) h += Rat(1, i);
    return h;
}

inline Rat binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

inline Rat factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative index");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

}  // namespace stdiv

#endif
