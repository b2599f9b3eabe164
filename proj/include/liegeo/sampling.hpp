#pragma once

#include <cstdint>
#include <random>

namespace liegeo {

// Seeded RNG wrapper. Every randomized check takes an explicit 64-bit seed so
// reports are reproducible byte for byte.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng_);
    }
    long long uniform_int(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng_);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace liegeo
