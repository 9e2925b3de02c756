#pragma once

#include <gmpxx.h>

#include <string>

#include "crystal/error.hpp"

namespace crystal {

// Arbitrary-precision integers and rationals. mpq_class is kept canonical by
// GMP (lowest terms, positive denominator), which matches the Rational
// contract exactly; everything else in this header is parsing, printing and
// the few number-theoretic helpers the rest of the library needs.
using Int = mpz_class;
using Rational = mpq_class;

inline int sign(const Int& n) { return sgn(n); }
inline int sign(const Rational& q) { return sgn(q); }

inline Int abs_int(const Int& n) { return abs(n); }

Int int_from_string(const std::string& s);
std::string int_to_string(const Int& n);

// Accepts "p" or "p/q" with optional leading minus; rejects everything else.
Rational rational_from_string(const std::string& s);

// Always "p/q" with q > 0, e.g. "3/1", "-5/2". Round-trips bit-exactly.
std::string rational_to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Int& num, const Int& den) {
    require(sgn(den) != 0, "DivisionByZero", "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Truncated integer square root.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool fits_long(const Int& n) { return n.fits_slong_p(); }

// Largest squarefree divisor d of n with n/d a perfect square, by trial
// division. Errors with NonPositive unless n >= 1.
Int squarefree_part(const Int& n);

} // namespace crystal
