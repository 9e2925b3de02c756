#pragma once

#include <string>

#include "crystal/rational.hpp"

namespace crystal {

// Element a + b*sqrt(-d) of an imaginary quadratic field Q(sqrt(-d)).
// Canonical form: d is a positive squarefree integer, and d == 1 whenever
// b == 0, so plain rationals embed into any field. Construction rewrites a
// non-squarefree radicand, e.g. sqrt(-12) becomes 2*sqrt(-3).
struct QuadFieldElem {
    Rational a;
    Rational b;
    Int d = 1;

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    bool operator==(const QuadFieldElem& o) const { return a == o.a && b == o.b && d == o.d; }
};

QuadFieldElem make_quad(const Rational& a, const Rational& b, const Int& d);
inline QuadFieldElem make_quad(long a, long b, long d) {
    return make_quad(make_rational(a), make_rational(b), Int(d));
}
inline QuadFieldElem quad_rational(const Rational& a) { return QuadFieldElem{a, Rational(0), Int(1)}; }

// Field operations. Mixing two irrational elements with different d raises
// MixedFields; rationals are compatible with everything.
QuadFieldElem quad_add(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem quad_sub(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem quad_mul(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem quad_div(const QuadFieldElem& x, const QuadFieldElem& y); // DivisionByZero
QuadFieldElem quad_neg(const QuadFieldElem& x);
QuadFieldElem quad_conj(const QuadFieldElem& x);

// |x|^2 = a^2 + d*b^2, exact.
Rational quad_norm_sq(const QuadFieldElem& x);

inline QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y) { return quad_add(x, y); }
inline QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y) { return quad_sub(x, y); }
inline QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y) { return quad_mul(x, y); }
inline QuadFieldElem operator-(const QuadFieldElem& x) { return quad_neg(x); }

// Exact sign of the real number p + q*sqrt(d), d >= 1, without any floating
// point: by case analysis on the signs of p and q, comparing p^2 against
// q^2*d when they disagree. Returns -1, 0 or +1. Note d = 1 makes exact
// cancellation possible; irrational sqrt(d) cancels only at p = q = 0.
int quad_sign_real(const Rational& p, const Rational& q, const Int& d);

std::string quad_to_string(const QuadFieldElem& x); // debug/text output, e.g. "1/2 + 3/2*sqrt(-3)"

} // namespace crystal
