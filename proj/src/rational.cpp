#include "polystab/rational.hpp"

#include <cctype>

namespace polystab {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(text);
            return Rational(n);
        }
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        return make_rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_canonical(const Rational& q) {
    if (q.get_den() <= 0) return false;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    if (q.get_num() == 0) return q.get_den() == 1;
    return g == 1;
}

namespace {

// round-half-even of num/den for den > 0
BigInt div_round_half_even(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    BigInt twice = 2 * r;
    if (twice > den) return q + 1;
    if (twice < den) return q;
    return (q % 2 == 0) ? q : q + 1;  // tie: to even
}

}  // namespace

std::string to_decimal_string(const Rational& q, int digits) {
    if (digits < 1) digits = 1;
    if (q == 0) return "0";
    bool neg = q < 0;
    Rational a = neg ? Rational(-q) : q;

    // exponent e with 10^e <= a < 10^(e+1)
    int e = 0;
    Rational scaled = a;
    while (scaled >= 10) { scaled /= 10; ++e; }
    while (scaled < 1) { scaled *= 10; --e; }

    // mantissa = round(a * 10^(digits-1-e)) as an integer with `digits` digits
    int shift = digits - 1 - e;
    BigInt num = a.get_num(), den = a.get_den();
    if (shift >= 0) {
        BigInt p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= p10;
    } else {
        BigInt p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        den *= p10;
    }
    BigInt mant = div_round_half_even(num, den);
    std::string m = mant.get_str();
    if (static_cast<int>(m.size()) > digits) {  // rounding carried to an extra digit
        ++e;
        m.pop_back();  // mantissa became 10^digits, drop the trailing zero
    }

    std::string out;
    if (e >= digits - 1) {
        out = m + std::string(e - digits + 1, '0');
    } else if (e >= 0) {
        out = m.substr(0, e + 1) + "." + m.substr(e + 1);
    } else {
        out = "0." + std::string(-e - 1, '0') + m;
    }
    // strip trailing zeros after a decimal point (but keep integers as-is)
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

RatVec rat_vec(std::initializer_list<long> entries) {
    RatVec v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

}  // namespace polystab
