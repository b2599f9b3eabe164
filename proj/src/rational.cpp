#include "liegeo/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace liegeo {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.signum() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!(g == BigInt(1))) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

double Rational::to_double() const {
    auto n64 = num_.to_int64();
    auto d64 = den_.to_int64();
    if (n64 && d64) return static_cast<double>(*n64) / static_cast<double>(*d64);
    auto [q, r] = BigInt::divmod(num_.shifted_left(64), den_);
    (void)r;
    return std::ldexp(q.to_double(), -64);
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace liegeo
