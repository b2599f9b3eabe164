#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "liegeo/bigint.hpp"

namespace liegeo {

// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    static Rational from_string(std::string_view s);  // "p" or "p/q"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int signum() const { return num_.signum(); }
    Rational abs() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    double to_double() const;
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;  // > 0, gcd(|num|, den) == 1
    void normalize();
};

}  // namespace liegeo
