#pragma once

#include <cstdint>
#include <stdexcept>

namespace mubforge {

inline bool is_prime(long v) {
    if (v < 2) return false;
    for (long f = 2; f * f <= v; ++f)
        if (v % f == 0) return false;
    return true;
}

inline long smallest_prime_factor(long v) {
    if (v < 2) throw std::domain_error("smallest_prime_factor: argument < 2");
    for (long f = 2; f * f <= v; ++f)
        if (v % f == 0) return f;
    return v;
}

inline long int_pow(long base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1L << 40) / (base > 1 ? base : 2)) throw std::overflow_error("int_pow: overflow");
        r *= base;
    }
    return r;
}

// Floor square root; exact_sqrt reports whether v is a perfect square.
inline long isqrt_floor(long v) {
    if (v < 0) throw std::domain_error("isqrt_floor: negative");
    long r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline bool exact_sqrt(long v, long& root) {
    root = isqrt_floor(v);
    return root * root == v;
}

// Writes v = p^n with p prime; false if v is not a prime power.
inline bool prime_power_split(long v, long& p, int& n) {
    if (v < 2) return false;
    p = smallest_prime_factor(v);
    n = 0;
    while (v % p == 0) { v /= p; ++n; }
    return v == 1;
}

// Inverse of a modulo prime m (0 < a < m).
inline long mod_inverse(long a, long m) {
    a %= m;
    if (a < 0) a += m;
    if (a == 0) throw std::domain_error("mod_inverse: zero argument");
    long r = 1, b = a;
    for (long e = m - 2; e > 0; e >>= 1) {  // Fermat: a^(m-2) mod m
        if (e & 1) r = r * b % m;
        b = b * b % m;
    }
    return r;
}

// Nonnegative residue of v modulo m.
inline long mod_reduce(long v, long m) {
    v %= m;
    return v < 0 ? v + m : v;
}

}  // namespace mubforge
