#pragma once

#include <complex>
#include <vector>

#include "mubforge/rational.hpp"

namespace mubforge {

/**
 * Exact scalar of the form (sum_j c_j zeta_m^j) / sqrt(d)^k with rational c_j.
 *
 * m is 4 (p = 2, so that i is available) or an odd prime p, where d = p^n.
 * Canonical form: k in {0,1} (k = 0 whenever d is a perfect square, since sqrt(d)
 * is then an integer); for prime m the top coefficient c_{m-1} is folded away via
 * 1 + zeta + ... + zeta^{m-1} = 0; for m = 4, zeta^2 = -1 folds c_2, c_3 into c_0, c_1.
 * Equality compares canonical forms; operands of equal value share scale parity on
 * every library path (all identities here are scale-homogeneous).
 */
class CycloScalar {
    friend class CycloAccumulator;

public:
    static CycloScalar zero(long m, long d);
    static CycloScalar one(long m, long d) { return from_rational(Rat(1), m, d); }
    static CycloScalar from_rational(const Rat& r, long m, long d);
    // zeta_m^e (e reduced mod m)
    static CycloScalar root_of_unity(long m, long d, long e);
    // (1/sqrt(d))^k
    static CycloScalar inv_sqrt_d(long m, long d, int k = 1);
    // i (only meaningful for m = 4)
    static CycloScalar imaginary_unit(long d) { return root_of_unity(4, d, 1); }

    long conductor() const { return m_; }
    long ambient_dim() const { return d_; }
    int scale_k() const { return k_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // value as a rational; throws std::domain_error unless is_rational()
    Rat rational_value() const;

    CycloScalar operator-() const;
    CycloScalar operator+(const CycloScalar& o) const;
    CycloScalar operator-(const CycloScalar& o) const { return *this + (-o); }
    CycloScalar operator*(const CycloScalar& o) const;
    CycloScalar operator/(const CycloScalar& o) const { return *this * o.inverse(); }
    CycloScalar scaled(const Rat& r) const;

    CycloScalar conjugate() const;
    // multiplicative inverse via the Galois norm; throws std::domain_error on zero
    CycloScalar inverse() const;
    // Galois automorphism zeta -> zeta^j, gcd(j, m) = 1; fixes the sqrt(d) scale
    CycloScalar galois(long j) const;

    bool operator==(const CycloScalar& o) const;
    bool operator!=(const CycloScalar& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;

private:
    CycloScalar(long m, long d, int k, std::vector<Rat> c);
    void canonicalize();
    void check_same_ring(const CycloScalar& o) const;

    long m_;  // conductor
    long d_;  // ambient dimension p^n
    int k_;   // scale exponent: value carries 1/sqrt(d)^k
    std::vector<Rat> c_;
};

// Exact square root of a nonnegative rational-valued scalar; the result may pick up
// one factor sqrt(p) (representable as a rational times 1/sqrt(d) when n is odd).
// Throws std::domain_error when no exact representation exists.
CycloScalar sqrt_rational(const CycloScalar& x);

/**
 * Multiply-accumulate buffer for long sums of scalars: terms land in a raw
 * coefficient vector, in place, and the sum canonicalizes once in take(). The scale
 * parity rule matches operator+ (zero terms adapt, mismatched parity throws).
 * Inner products and matrix products run through this to avoid building a fresh
 * canonical scalar per term.
 */
class CycloAccumulator {
public:
    CycloAccumulator(long m, long d);

    void add(const CycloScalar& x);
    void add_product(const CycloScalar& a, const CycloScalar& b);
    void add_conj_product(const CycloScalar& a, const CycloScalar& b);  // conj(a) * b

    CycloScalar take() const;  // canonical value of the sum so far

private:
    // Pins or checks the sum's parity for a nonzero term of raw scale k_raw and
    // returns the rational factor folding k_raw down to that parity (1/d per pair).
    Rat term_scale(int k_raw);

    long m_, d_;
    int k_ = 0;
    bool seeded_ = false;  // parity is pinned by the first nonzero term
    std::vector<Rat> c_;
};

}  // namespace mubforge
