#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace wlnn {

/// Seedable random source used for parameter sampling, weight init, and
/// epoch shuffling. Wraps std::mt19937_64 but maps to doubles and bounded
/// ints itself, so draws are reproducible across platforms and standard
/// library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [a, b).
    double uniform(double a, double b) { return a + (b - a) * unit(); }

    /// Uniform integer in [0, n); Lemire multiply-shift reduction.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace wlnn
