#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "monoweyl/errors.hpp"

namespace monoweyl {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// no operation ever rounds.
class Rational {
public:
    Rational() = default;
    Rational(int n) : v_(n) {}                   // NOLINT: implicit by design
    Rational(long long n) : v_(n) {}             // NOLINT
    Rational(const BigInt& n) : v_(n) {}         // NOLINT
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    /// Nonnegative integer (a valid natural-mode exponent).
    bool is_natural() const { return is_integer() && v_ >= 0; }

    /// Value as a machine integer; requires is_integer() and a value in range.
    long long as_int() const {
        if (!is_integer()) throw Error("not an integer: " + str());
        return static_cast<long long>(numerator());
    }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Integer powers; negative exponents require a nonzero base.
    Rational pow(long long e) const {
        if (e == 0) return Rational(1);
        if (is_zero() && e < 0) throw Error("zero to a negative power");
        Rational base = e > 0 ? *this : Rational(1) / *this;
        long long n = e > 0 ? e : -e;
        Rational acc(1);
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        os << v_;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    boost::multiprecision::cpp_rational v_;
};

/// gcd on rationals: the positive generator of the group a·Z + b·Z.
/// For reduced fractions gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2).
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b < 0 ? -b : b;
    if (b.is_zero()) return a < 0 ? -a : a;
    BigInt num = boost::multiprecision::gcd(boost::multiprecision::abs(a.numerator()),
                                            boost::multiprecision::abs(b.numerator()));
    BigInt den = boost::multiprecision::lcm(a.denominator(), b.denominator());
    return Rational(num, den);
}

/// Falling factorial x(x-1)...(x-k+1); the empty product for k = 0.
inline Rational falling_factorial(const Rational& x, int k) {
    Rational acc(1);
    for (int t = 0; t < k; ++t) acc *= x - Rational(t);
    return acc;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt acc = 1;
    for (int t = 1; t <= k; ++t) {
        acc *= n - k + t;
        acc /= t;
    }
    return acc;
}

inline BigInt factorial(int n) {
    BigInt acc = 1;
    for (int t = 2; t <= n; ++t) acc *= t;
    return acc;
}

inline Rational Rational::parse(std::string_view text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos)
        throw SyntaxError("empty number", 0);
    std::string_view body = text.substr(begin, end - begin + 1);

    auto parse_int = [&](std::string_view s, std::size_t at) -> BigInt {
        bool neg = false;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            neg = s[0] == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) throw SyntaxError("malformed number", at);
        for (char c : s)
            if (c < '0' || c > '9') throw SyntaxError("malformed number", at);
        BigInt v(std::string(s));
        return neg ? -v : v;
    };

    std::size_t slash = body.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(body, begin));
    BigInt num = parse_int(body.substr(0, slash), begin);
    BigInt den = parse_int(body.substr(slash + 1), begin + slash + 1);
    if (den == 0) throw SyntaxError("zero denominator", begin + slash + 1);
    return Rational(num, den);
}

}  // namespace monoweyl
