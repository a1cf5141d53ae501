// Exact rational scalars. All arithmetic is GMP-backed; values are kept in
// canonical form (reduced, positive denominator, 0 == 0/1) by mpq_class.
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polystab {

using Rational = mpq_class;
using BigInt = mpz_class;
using RatVec = std::vector<Rational>;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// num/den reduced with den > 0.
Rational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p", "-p", "p/q" (q > 0 after normalization). Throws ParseError.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string to_string(const Rational& q);

bool is_canonical(const Rational& q);

// Round-half-even decimal rendering with `digits` significant digits,
// plain notation (no exponent). Matches the certificate's approx fields.
std::string to_decimal_string(const Rational& q, int digits);

// Convenience for tests and construction from small literals.
inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) { return make_rational(BigInt(n), BigInt(d)); }

RatVec rat_vec(std::initializer_list<long> entries);

}  // namespace polystab
