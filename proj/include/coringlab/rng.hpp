#pragma once

#include <cstdint>

#include "coringlab/matrix.hpp"

namespace coringlab {

// splitmix64 stream; fixed algorithm so seeded runs are reproducible across
// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound is tiny here so bias handling
    // is cheap insurance.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t limit = ~0ull - (~0ull % bound + 1) % bound;
        std::uint64_t v = next();
        while (v > limit) v = next();
        return v % bound;
    }

    std::uint32_t scalar(std::uint32_t p) { return static_cast<std::uint32_t>(below(p)); }

    Matrix matrix(std::size_t rows, std::size_t cols, std::uint32_t p) {
        Matrix m(rows, cols, p);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar(p);
        return m;
    }

    Matrix row(std::size_t n, std::uint32_t p) { return matrix(1, n, p); }

    Matrix nonzero_row(std::size_t n, std::uint32_t p) {
        Matrix v = row(n, p);
        while (v.is_zero()) v = row(n, p);
        return v;
    }

private:
    std::uint64_t state_;
};

} // namespace coringlab
