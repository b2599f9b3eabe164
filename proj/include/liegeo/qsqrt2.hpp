#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "liegeo/rational.hpp"

namespace liegeo {

// Element of the field Q(sqrt 2): value = a + b*sqrt(2) with rational a, b.
// The representation is unique because sqrt(2) is irrational, so equality,
// signs and zero tests are exact.
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long long n) : a_(n) {}
    QSqrt2(Rational a) : a_(std::move(a)) {}
    QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    int signum() const;
    QSqrt2 abs() const { return signum() < 0 ? -*this : *this; }
    QSqrt2 conjugate() const { return QSqrt2(a_, -b_); }
    Rational field_norm() const { return a_ * a_ - Rational(2) * b_ * b_; }

    QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }
    friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.a_ * y.a_ + Rational(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y);
    QSqrt2 inverse() const;
    QSqrt2& operator+=(const QSqrt2& o) { return *this = *this + o; }
    QSqrt2& operator-=(const QSqrt2& o) { return *this = *this - o; }
    QSqrt2& operator*=(const QSqrt2& o) { return *this = *this * o; }
    QSqrt2& operator/=(const QSqrt2& o) { return *this = *this / o; }

    friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
        return (x - y).signum() <=> 0;
    }

    // Exact square root within the field, when one exists.
    static std::optional<QSqrt2> sqrt(const QSqrt2& q);

    double to_double() const;
    std::string to_string() const;

private:
    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QSqrt2& q);

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace liegeo
