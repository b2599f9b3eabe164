#include "liegeo/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liegeo {

namespace {

using Limbs = std::vector<uint32_t>;

void trim(Limbs& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int cmp_mag(const Limbs& a, const Limbs& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Limbs add_mag(const Limbs& a, const Limbs& b) {
    Limbs r(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    trim(r);
    return r;
}

Limbs sub_mag(const Limbs& a, const Limbs& b) {  // requires a >= b
    Limbs r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        int64_t s = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    trim(r);
    return r;
}

Limbs mul_mag(const Limbs& a, const Limbs& b) {
    if (a.empty() || b.empty()) return {};
    Limbs r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    trim(r);
    return r;
}

size_t bit_length(const Limbs& a) {
    if (a.empty()) return 0;
    size_t n = (a.size() - 1) * 32;
    uint32_t top = a.back();
    while (top) {
        ++n;
        top >>= 1;
    }
    return n;
}

bool get_bit(const Limbs& a, size_t i) {
    size_t limb = i / 32;
    return limb < a.size() && ((a[limb] >> (i % 32)) & 1u);
}

void shl1_or(Limbs& a, bool bit) {  // a = 2a + bit
    uint32_t carry = bit ? 1u : 0u;
    for (auto& w : a) {
        uint32_t next = w >> 31;
        w = (w << 1) | carry;
        carry = next;
    }
    if (carry) a.push_back(carry);
}

// Schoolbook binary long division; sizes here are tiny so this is plenty.
std::pair<Limbs, Limbs> divmod_mag(const Limbs& a, const Limbs& b) {
    if (cmp_mag(a, b) < 0) return {{}, a};
    size_t n = bit_length(a);
    Limbs q((n + 31) / 32, 0), rem;
    for (size_t i = n; i-- > 0;) {
        shl1_or(rem, get_bit(a, i));
        if (cmp_mag(rem, b) >= 0) {
            rem = sub_mag(rem, b);
            q[i / 32] |= (1u << (i % 32));
        }
    }
    trim(q);
    trim(rem);
    return {q, rem};
}

std::pair<Limbs, uint32_t> divmod_small(const Limbs& a, uint32_t d) {
    Limbs q(a.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    trim(q);
    return {q, static_cast<uint32_t>(rem)};
}

}  // namespace

BigInt BigInt::make(int sign, std::vector<uint32_t> mag) {
    BigInt r;
    trim(mag);
    r.mag_ = std::move(mag);
    r.sign_ = r.mag_.empty() ? 0 : sign;
    return r;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow on LLONG_MIN
    uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    mag_.push_back(static_cast<uint32_t>(u));
    if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

BigInt BigInt::from_string(std::string_view s) {
    int sign = 1;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    Limbs mag;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        mag = mul_mag(mag, {10u});
        mag = add_mag(mag, {static_cast<uint32_t>(s[i] - '0')});
    }
    return make(sign, std::move(mag));
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) return BigInt::make(a.sign_, add_mag(a.mag_, b.mag_));
    int c = cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) return BigInt::make(a.sign_, sub_mag(a.mag_, b.mag_));
    return BigInt::make(b.sign_, sub_mag(b.mag_, a.mag_));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    return BigInt::make(a.sign_ * b.sign_, mul_mag(a.mag_, b.mag_));
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) return {BigInt(), BigInt()};
    auto [q, r] = divmod_mag(a.mag_, b.mag_);
    return {make(a.sign_ * b.sign_, std::move(q)), make(a.sign_, std::move(r))};
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

BigInt BigInt::isqrt(const BigInt& n) {
    if (n.sign_ < 0) throw std::domain_error("BigInt: isqrt of negative");
    if (n.sign_ == 0) return BigInt();
    BigInt x;
    size_t top = (bit_length(n.mag_) + 1) / 2;
    for (size_t i = top + 1; i-- > 0;) {
        BigInt c = x + BigInt(1).shifted_left(static_cast<unsigned>(i));
        if (c * c <= n) x = c;
    }
    return x;
}

BigInt BigInt::shifted_left(unsigned bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    Limbs r(mag_.size() + bits / 32 + 1, 0);
    unsigned limb_off = bits / 32, bit_off = bits % 32;
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(mag_[i]) << bit_off;
        r[i + limb_off] |= static_cast<uint32_t>(v);
        r[i + limb_off + 1] |= static_cast<uint32_t>(v >> 32);
    }
    return make(sign_, std::move(r));
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

double BigInt::to_double() const {
    double r = 0.0;
    for (size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -r : r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    Limbs cur = mag_;
    std::string digits;
    while (!cur.empty()) {
        auto [q, r] = divmod_small(cur, 1000000000u);
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + r % 10));
            r /= 10;
        }
        cur = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::optional<long long> BigInt::to_int64() const {
    if (mag_.size() > 2) return std::nullopt;
    uint64_t u = 0;
    if (!mag_.empty()) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<uint64_t>(mag_[1]) << 32;
    if (sign_ >= 0) {
        if (u > static_cast<uint64_t>(INT64_MAX)) return std::nullopt;
        return static_cast<long long>(u);
    }
    if (u > static_cast<uint64_t>(INT64_MAX) + 1) return std::nullopt;
    return static_cast<long long>(-static_cast<unsigned long long>(u));
}

}  // namespace liegeo
