#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liegeo {

// Arbitrary-size signed integer, little-endian 32-bit limbs.
// Exact scalars are built on this so long product chains never overflow.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Quotient truncated toward zero; remainder carries the dividend's sign.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    BigInt operator/(const BigInt& o) const { return divmod(*this, o).first; }
    BigInt operator%(const BigInt& o) const { return divmod(*this, o).second; }

    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative
    static BigInt isqrt(const BigInt& n);                  // floor sqrt, n >= 0

    BigInt shifted_left(unsigned bits) const;

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    double to_double() const;
    std::string to_string() const;
    std::optional<long long> to_int64() const;

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // normalized: no high zero limbs, empty iff zero

    static BigInt make(int sign, std::vector<uint32_t> mag);
};

}  // namespace liegeo
