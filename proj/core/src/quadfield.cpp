#include "crystal/quadfield.hpp"

#include "crystal/error.hpp"

namespace crystal {

QuadFieldElem make_quad(const Rational& a, const Rational& b, const Int& d) {
    require(sgn(d) > 0, "NonPositive", "field parameter d must be >= 1, got " + int_to_string(d));
    if (sgn(b) == 0) return QuadFieldElem{a, Rational(0), Int(1)};
    Int d0 = squarefree_part(d);
    if (d0 == d) return QuadFieldElem{a, b, d};
    Int s = isqrt(d / d0); // exact: d / d0 is a perfect square
    return QuadFieldElem{a, b * Rational(s), d0};
}

namespace {

// Common field for a binary operation; rationals adopt the other side's d.
Int merged_d(const QuadFieldElem& x, const QuadFieldElem& y) {
    if (x.is_rational()) return y.d;
    if (y.is_rational()) return x.d;
    require(x.d == y.d, "MixedFields",
            "cannot combine sqrt(-" + int_to_string(x.d) + ") with sqrt(-" + int_to_string(y.d) + ")");
    return x.d;
}

QuadFieldElem normalized(Rational a, Rational b, Int d) {
    if (sgn(b) == 0) return QuadFieldElem{std::move(a), Rational(0), Int(1)};
    return QuadFieldElem{std::move(a), std::move(b), std::move(d)};
}

} // namespace

QuadFieldElem quad_add(const QuadFieldElem& x, const QuadFieldElem& y) {
    return normalized(x.a + y.a, x.b + y.b, merged_d(x, y));
}

QuadFieldElem quad_sub(const QuadFieldElem& x, const QuadFieldElem& y) {
    return normalized(x.a - y.a, x.b - y.b, merged_d(x, y));
}

QuadFieldElem quad_mul(const QuadFieldElem& x, const QuadFieldElem& y) {
    Int d = merged_d(x, y);
    Rational a = x.a * y.a - x.b * y.b * Rational(d);
    Rational b = x.a * y.b + x.b * y.a;
    return normalized(std::move(a), std::move(b), std::move(d));
}

QuadFieldElem quad_neg(const QuadFieldElem& x) { return QuadFieldElem{-x.a, -x.b, x.d}; }

QuadFieldElem quad_conj(const QuadFieldElem& x) { return normalized(x.a, -x.b, x.d); }

Rational quad_norm_sq(const QuadFieldElem& x) { return x.a * x.a + x.b * x.b * Rational(x.d); }

QuadFieldElem quad_div(const QuadFieldElem& x, const QuadFieldElem& y) {
    require(!y.is_zero(), "DivisionByZero", "division by zero field element");
    Int d = merged_d(x, y);
    Rational n = quad_norm_sq(y);
    // x / y = x * conj(y) / |y|^2
    Rational a = (x.a * y.a + x.b * y.b * Rational(d)) / n;
    Rational b = (x.b * y.a - x.a * y.b) / n;
    return normalized(std::move(a), std::move(b), std::move(d));
}

int quad_sign_real(const Rational& p, const Rational& q, const Int& d) {
    require(sgn(d) > 0, "NonPositive", "quad_sign_real needs d >= 1");
    int sp = sgn(p), sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: |p| vs |q|*sqrt(d) decides, i.e. p^2 vs q^2*d
    Rational lhs = p * p;
    Rational rhs = q * q * Rational(d);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0; // only possible when sqrt(d) is rational (d = 1)
    return c > 0 ? sp : sq;
}

std::string quad_to_string(const QuadFieldElem& x) {
    if (x.is_rational()) return rational_to_string(x.a);
    std::string s;
    if (sgn(x.a) != 0) s = rational_to_string(x.a) + (sgn(x.b) > 0 ? " + " : " - ");
    else if (sgn(x.b) < 0) s = "-";
    Rational ab = abs(x.b);
    if (ab != 1) s += rational_to_string(ab) + "*";
    s += "sqrt(-" + int_to_string(x.d) + ")";
    return s;
}

} // namespace crystal
