#include <cmath>
#include <random>

#include "doctest.h"

#include "crystal/error.hpp"
#include "crystal/quadfield.hpp"

using namespace crystal;

namespace {

Rational rnd_rational(std::mt19937_64& rng) {
    return make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
}

QuadFieldElem rnd_elem(std::mt19937_64& rng, long d) {
    return make_quad(rnd_rational(rng), rnd_rational(rng), Int(d));
}

const long kRadicands[] = {1, 2, 3, 5, 6, 7, 11, 15};

} // namespace

TEST_CASE("construction canonicalizes the radicand") {
    QuadFieldElem x = make_quad(make_rational(1), make_rational(1), Int(12));
    CHECK(x.d == 3);
    CHECK(x.b == make_rational(2)); // sqrt(-12) = 2*sqrt(-3)
    QuadFieldElem y = make_quad(make_rational(5), make_rational(0), Int(7));
    CHECK(y.d == 1); // rationals always carry d = 1
    CHECK(make_quad(make_rational(0), make_rational(1), Int(50)).d == 2);
}

TEST_CASE("field axioms hold on random samples") {
    std::mt19937_64 rng(31);
    const QuadFieldElem one = make_quad(1, 0, 1);
    for (int t = 0; t < 2500; ++t) {
        long d = kRadicands[rng() % 8];
        QuadFieldElem x = rnd_elem(rng, d), y = rnd_elem(rng, d), z = rnd_elem(rng, d);
        CHECK(quad_add(x, y) == quad_add(y, x));
        CHECK(quad_mul(x, y) == quad_mul(y, x));
        CHECK(quad_add(quad_add(x, y), z) == quad_add(x, quad_add(y, z)));
        CHECK(quad_mul(quad_mul(x, y), z) == quad_mul(x, quad_mul(y, z)));
        CHECK(quad_mul(x, quad_add(y, z)) == quad_add(quad_mul(x, y), quad_mul(x, z)));
        CHECK(quad_sub(x, x).is_zero());
        CHECK(quad_add(x, quad_neg(x)).is_zero());
        CHECK(quad_mul(x, one) == x);
        if (!x.is_zero()) {
            CHECK(quad_div(quad_mul(x, y), x) == y);
            CHECK(quad_mul(x, quad_div(one, x)) == one);
        }
        // conjugation is a ring automorphism, norm is multiplicative
        CHECK(quad_conj(quad_mul(x, y)) == quad_mul(quad_conj(x), quad_conj(y)));
        CHECK(quad_conj(quad_add(x, y)) == quad_add(quad_conj(x), quad_conj(y)));
        CHECK(quad_norm_sq(quad_mul(x, y)) == quad_norm_sq(x) * quad_norm_sq(y));
        CHECK(quad_norm_sq(x) == quad_mul(x, quad_conj(x)).a);
        CHECK(quad_mul(x, quad_conj(x)).is_rational());
    }
}

TEST_CASE("rationals embed into any field") {
    QuadFieldElem r = quad_rational(make_rational(3, 2));
    QuadFieldElem x = make_quad(1, 1, 5);
    CHECK(quad_mul(r, x).d == 5);
    CHECK(quad_add(r, x).d == 5);
    CHECK_THROWS_AS(quad_add(make_quad(0, 1, 3), make_quad(0, 1, 5)), Error);
    CHECK_THROWS_AS(quad_mul(make_quad(1, 1, 2), make_quad(1, 1, 7)), Error);
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(quad_div(make_quad(1, 0, 1), make_quad(0, 0, 1)), Error);
}

TEST_CASE("real sign predicate agrees with floating point away from zero") {
    std::mt19937_64 rng(32);
    int checked = 0;
    for (int t = 0; t < 10000; ++t) {
        long d = kRadicands[rng() % 8];
        Rational p = rnd_rational(rng), q = rnd_rational(rng);
        int s = quad_sign_real(p, q, Int(d));
        double approx = p.get_d() + q.get_d() * std::sqrt(static_cast<double>(d));
        double scale = std::fabs(p.get_d()) + std::fabs(q.get_d()) * std::sqrt(static_cast<double>(d));
        if (std::fabs(approx) > 1e-9 * (scale + 1)) {
            CHECK(s == (approx > 0 ? 1 : -1));
            ++checked;
        }
    }
    CHECK(checked > 9000); // the comparison must not be vacuous
}

TEST_CASE("real sign predicate detects exact cancellation") {
    // p + q*sqrt(d) = 0 has rational solutions only for square d
    std::mt19937_64 rng(33);
    for (int t = 0; t < 200; ++t) {
        Rational q = rnd_rational(rng);
        CHECK(quad_sign_real(-q, q, Int(1)) == 0);
        long k = static_cast<long>(rng() % 10) + 1;
        CHECK(quad_sign_real(make_rational(-3 * k), make_rational(k), Int(9)) == 0);
        if (sgn(q) != 0) CHECK(quad_sign_real(-q, q, Int(2)) != 0);
    }
    CHECK(quad_sign_real(make_rational(0), make_rational(0), Int(5)) == 0);
    // tight nonzero cases: 665857/470832 is a hair above sqrt(2)
    CHECK(quad_sign_real(make_rational(-665857, 470832), make_rational(1), Int(2)) < 0);
    CHECK(quad_sign_real(make_rational(665857, 470832), make_rational(-1), Int(2)) > 0);
}

TEST_CASE("string form") {
    CHECK(quad_to_string(make_quad(make_rational(1, 2), make_rational(3, 2), Int(3))) ==
          "1/2 + 3/2*sqrt(-3)");
}
