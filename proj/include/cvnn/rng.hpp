#pragma once

#include <cstdint>
#include <random>

#include "cvnn/complex.hpp"

namespace cvnn {

// Deterministic seeded generator. mt19937_64 is fully specified by the
// standard; doubles are derived from the raw 64-bit stream directly
// (std distributions are implementation-defined and would break
// cross-platform reproducibility).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    std::size_t index(std::size_t n) {
        // modulo bias is negligible for the small n used here
        return static_cast<std::size_t>(gen_() % n);
    }

    // uniform over the closed disc |z| <= radius, by rejection from the square
    Complex in_disc(double radius) {
        for (;;) {
            const double x = uniform(-radius, radius);
            const double y = uniform(-radius, radius);
            if (x * x + y * y <= radius * radius) return {x, y};
        }
    }

    // standard normal via Box-Muller on the deterministic uniform stream
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * M_PI * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace cvnn
