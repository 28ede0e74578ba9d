#include "schur/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace schur {

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

std::string decimal_string(const Rational& q, int sig_digits) {
    if (sig_digits < 1) throw std::invalid_argument("sig_digits must be >= 1");
    if (q == 0) return "0";
    const bool negative = q < 0;
    Rational a = negative ? Rational(-q) : q;

    // Decimal exponent e with 10^e <= a < 10^(e+1).
    long e = 0;
    Rational ten(10);
    while (a >= ten) { a /= 10; ++e; }
    while (a < 1) { a *= 10; --e; }

    // Round a * 10^(sig_digits-1) to the nearest integer (half away from 0).
    BigInt scaled;
    {
        Rational s = a;
        for (int i = 1; i < sig_digits; ++i) s *= 10;
        BigInt num = s.get_num(), den = s.get_den();
        BigInt twice = 2 * num + den;  // round(num/den) = floor((2num+den)/(2den))
        mpz_fdiv_q(scaled.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * den).get_mpz_t());
    }
    std::string digits = scaled.get_str();
    if (static_cast<int>(digits.size()) > sig_digits) {
        // Rounding carried over (e.g. 9.99... -> 10.0...).
        digits.pop_back();
        ++e;
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    std::string out;
    if (e >= -4 && e < sig_digits) {
        if (e >= 0) {
            if (static_cast<long>(digits.size()) <= e + 1) {
                out = digits + std::string(e + 1 - digits.size(), '0');
            } else {
                out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
            }
        } else {
            out = "0." + std::string(-e - 1, '0') + digits;
        }
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(e);
    }
    return negative ? "-" + out : out;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s.find('/') != std::string::npos) {
        Rational q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        q.canonicalize();
        return q;
    }
    // Decimal form, optional exponent.
    std::string t = s;
    long exp10 = 0;
    auto epos = t.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::strtol(t.c_str() + epos + 1, nullptr, 10);
        t = t.substr(0, epos);
    }
    bool neg = false;
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = (t[i++] == '-');
    std::string digits;
    long frac = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < t.size(); ++i) {
        if (t[i] == '.') {
            if (seen_dot) throw std::invalid_argument("bad rational: " + s);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(t[i]))) {
            digits += t[i];
            if (seen_dot) ++frac;
            seen_digit = true;
        } else {
            throw std::invalid_argument("bad rational: " + s);
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad rational: " + s);
    BigInt num(digits.empty() ? "0" : digits, 10);  // explicit base: leading zeros are not octal
    if (neg) num = -num;
    Rational q(num);
    long shift = exp10 - frac;
    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0) q *= Rational(p10); else q /= Rational(p10);
    q.canonicalize();
    return q;
}

}  // namespace schur
