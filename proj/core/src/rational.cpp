#include "crystal/rational.hpp"

#include <cctype>

namespace crystal {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Int int_from_string(const std::string& s) {
    require(valid_integer_token(s), "ParseError", "not an integer: '" + s + "'");
    return Int(s, 10);
}

std::string int_to_string(const Int& n) { return n.get_str(10); }

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        Rational q(int_from_string(s));
        return q;
    }
    Int num = int_from_string(s.substr(0, slash));
    std::string den_tok = s.substr(slash + 1);
    require(valid_integer_token(den_tok) && den_tok[0] != '-',
            "ParseError", "denominator must be a positive integer: '" + s + "'");
    Int den = int_from_string(den_tok);
    require(sgn(den) != 0, "ParseError", "zero denominator: '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Int squarefree_part(const Int& n) {
    require(sgn(n) > 0, "NonPositive", "squarefree_part needs n >= 1, got " + int_to_string(n));
    Int rest = n;
    Int result = 1;
    // peel small primes first, then odd trial divisors
    auto peel = [&](const Int& p) {
        unsigned long exp = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++exp;
        }
        if (exp % 2 == 1) result *= p;
    };
    peel(Int(2));
    for (Int p = 3; p * p <= rest; p += 2) peel(p);
    if (rest > 1) result *= rest; // leftover prime
    return result;
}

} // namespace crystal
