#include "poly/rational.hpp"

#include "common/error.hpp"

#include <cctype>

namespace aligator {

Rational make_rational(long num, long den) {
    if (den == 0) throw Error(ErrorKind::Structural, diag::kDivisionByZero, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorKind::Structural, diag::kDivisionByZero, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error(ErrorKind::Syntax, diag::kSyntax, "empty number");
    auto bad = [&] { return Error(ErrorKind::Syntax, diag::kSyntax, "malformed number '" + s + "'"); };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::Syntax, diag::kDivisionByZero, "zero denominator in '" + s + "'");
        return num / den;
    }

    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
    std::string digits;
    std::size_t fraction_digits = 0;
    bool seen_point = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++fraction_digits;
        } else {
            throw bad();
        }
    }
    if (digits.empty()) throw bad();
    BigInt num(digits, 10);
    BigInt den = 1;
    for (std::size_t k = 0; k < fraction_digits; ++k) den *= 10;
    Rational q = make_rational(num, den);
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const BigInt& z) { return z.get_str(10); }

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw Error(ErrorKind::Structural, diag::kDivisionByZero, "0 to a negative power");
        return Rational(1) / pow(q, -e);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return make_rational(num, den);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace aligator
