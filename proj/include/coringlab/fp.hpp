#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coringlab {

// Scalars of the prime field F_p, kept reduced to [0, p).  p stays <= 251 so
// products fit comfortably in 64 bits long before reduction.
struct Scalar {
    std::uint32_t value = 0;
    std::uint32_t p = 2;

    Scalar() = default;
    Scalar(std::uint32_t v, std::uint32_t prime) : value(v % prime), p(prime) {}

    friend bool operator==(const Scalar&, const Scalar&) = default;
};

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void check_prime(std::uint32_t p) {
    if (p < 2 || p > 251 || !is_prime(p))
        throw std::invalid_argument("field characteristic must be a prime <= 251, got " + std::to_string(p));
}

inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return (a + b) % p;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return (a + p - b % p) % p;
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
    return (p - a % p) % p;
}

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t fp_pow(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1u) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1u;
    }
    return r;
}

// Fermat inverse; p is prime throughout the workbench.
inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return fp_pow(a, p - 2, p);
}

inline Scalar operator+(Scalar a, Scalar b) { return {fp_add(a.value, b.value, a.p), a.p}; }
inline Scalar operator-(Scalar a, Scalar b) { return {fp_sub(a.value, b.value, a.p), a.p}; }
inline Scalar operator*(Scalar a, Scalar b) { return {fp_mul(a.value, b.value, a.p), a.p}; }
inline Scalar operator-(Scalar a) { return {fp_neg(a.value, a.p), a.p}; }

} // namespace coringlab
