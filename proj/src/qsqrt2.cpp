#include "liegeo/qsqrt2.hpp"

#include <cmath>
#include <stdexcept>

namespace liegeo {

int QSqrt2::signum() const {
    int sa = a_.signum(), sb = b_.signum();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: compare a^2 against 2 b^2. The field norm cannot vanish
    // here because sqrt(2) is irrational.
    return sa * field_norm().signum();
}

QSqrt2 QSqrt2::inverse() const {
    if (is_zero()) throw std::domain_error("QSqrt2: division by zero");
    Rational n = field_norm();
    return QSqrt2(a_ / n, -b_ / n);
}

QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) { return x * y.inverse(); }

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.signum() < 0) return std::nullopt;
    BigInt sn = BigInt::isqrt(r.num());
    if (!(sn * sn == r.num())) return std::nullopt;
    BigInt sd = BigInt::isqrt(r.den());
    if (!(sd * sd == r.den())) return std::nullopt;
    return Rational(sn, sd);
}

std::optional<QSqrt2> QSqrt2::sqrt(const QSqrt2& q) {
    if (q.signum() < 0) return std::nullopt;
    if (q.is_zero()) return QSqrt2();
    // Want (c + d sqrt2)^2 = a + b sqrt2, i.e. c^2 + 2 d^2 = a and 2cd = b.
    if (q.b_.is_zero()) {
        if (auto c = rational_sqrt(q.a_)) return QSqrt2(*c, Rational(0));
        if (auto d = rational_sqrt(q.a_ / Rational(2))) return QSqrt2(Rational(0), *d);
        return std::nullopt;
    }
    // (a^2 - 2 b^2) = (c^2 - 2 d^2)^2 must be a rational square.
    auto t = rational_sqrt(q.field_norm());
    if (!t) return std::nullopt;
    const Rational half(1, 2);
    for (const Rational& c2 : {(q.a_ + *t) * half, (q.a_ - *t) * half}) {
        if (c2.signum() <= 0) continue;
        auto c = rational_sqrt(c2);
        if (!c) continue;
        Rational d = q.b_ / (Rational(2) * *c);
        QSqrt2 root(*c, d);
        if (root * root == q) return root.signum() >= 0 ? root : -root;
    }
    return std::nullopt;
}

double QSqrt2::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(2.0);
}

std::string QSqrt2::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string s;
    if (!a_.is_zero()) s = a_.to_string();
    if (!s.empty()) s += b_.signum() < 0 ? " - " : " + ";
    else if (b_.signum() < 0) s += "-";
    Rational bb = b_.abs();
    if (!(bb == Rational(1))) s += bb.to_string() + "*";
    s += "sqrt2";
    return s;
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& q) { return os << q.to_string(); }

}  // namespace liegeo
