#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

namespace mubforge {

// Exact rational scalar; GMP keeps numerators/denominators arbitrary precision.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_num_str(const Rat& r) { return r.get_num().get_str(); }
inline std::string rat_den_str(const Rat& r) { return r.get_den().get_str(); }

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

// Removes all factors p from v (v != 0); returns the exponent removed.
inline int remove_prime_factor(Int& v, long p) {
    int e = 0;
    while (v != 0 && mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++e;
    }
    return e;
}

// Exact square root of a nonnegative rational, allowing one leftover factor sqrt(p):
// returns (r, odd) with sqrt(x) = r * p^(odd/2), or nullopt if no such exact form exists.
inline std::optional<std::pair<Rat, bool>> sqrt_with_prime_part(const Rat& x, long p) {
    if (x < 0) return std::nullopt;
    if (x == 0) return std::make_pair(Rat(0), false);
    Int num = x.get_num(), den = x.get_den();
    int v = remove_prime_factor(num, p) - remove_prime_factor(den, p);
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    Int pk;
    // p^v = p^(2*half + odd) with half = floor(v/2); fold p^half into the rational part
    long half = (v >= 0 ? v / 2 : -((-v + 1) / 2));
    bool odd = (v % 2 + 2) % 2 == 1;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(half >= 0 ? half : -half));
    if (half >= 0) r *= Rat(pk);
    else r /= Rat(pk);
    return std::make_pair(r, odd);
}

inline double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace mubforge
