#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mubforge/cyclotomic.hpp"

namespace mubforge {

class FieldElement;

/**
 * Immutable description of GF(p^n): the reduction modulus, the full power table of a
 * fixed primitive element alpha, and the Jacobi logarithm table
 * L with alpha^k + alpha^q = alpha^(k + L(q-k)), L(m) undefined where 1 + alpha^m = 0.
 *
 * The modulus is the lexicographically smallest monic primitive polynomial
 * (coefficients constant-first), except for the pinned choices
 * GF(4): 1+t+t^2, GF(8): 1+t+t^3, GF(9): 2+t+t^2.
 * Cheap to copy (shared immutable state).
 */
class FieldSpec {
public:
    static FieldSpec build(long p, int n, long bound = 1024);

    long p() const;
    int n() const;
    long d() const;  // p^n
    const std::vector<int>& modulus() const;  // length n+1, constant-first, monic

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement alpha() const;
    FieldElement from_power(long k) const;             // alpha^k, k reduced mod d-1
    FieldElement from_coeffs(std::vector<int> c) const;  // c_0 + c_1 t + ...
    FieldElement from_scalar(long c) const;            // image of c mod p

    // L(m) for m in 0..d-2; nullopt marks the undefined entry (1 + alpha^m = 0)
    const std::vector<std::optional<long>>& jacobi_table() const;

    bool operator==(const FieldSpec& o) const;
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

private:
    struct Data;
    explicit FieldSpec(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
    friend class FieldElement;
};

/** Element of GF(p^n); stores both the power index and the coefficient vector. */
class FieldElement {
public:
    const FieldSpec& field() const { return spec_; }
    bool is_zero() const { return power_ < 0; }
    // exponent k with this = alpha^k (0 <= k < d-1); nullopt for zero
    std::optional<long> power() const;
    const std::vector<int>& coeffs() const { return coeffs_; }

    FieldElement operator+(const FieldElement& o) const;  // coefficient-vector path
    FieldElement operator-() const;
    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }
    FieldElement operator*(const FieldElement& o) const;
    FieldElement frobenius() const;  // a^p
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    FieldElement(FieldSpec spec, long power, std::vector<int> coeffs);
    FieldSpec spec_;
    long power_;  // -1 encodes zero
    std::vector<int> coeffs_;
    friend class FieldSpec;
    friend FieldElement add_via_jacobi(const FieldElement&, const FieldElement&);
};

// Field addition through the Jacobi logarithm table (power indices only); agrees with
// the coefficient-vector path everywhere and is cross-checked against it in debug builds.
FieldElement add_via_jacobi(const FieldElement& a, const FieldElement& b);

// tr(a) = a + a^p + ... + a^(p^(n-1)), always in the prime subfield; returned in 0..p-1.
long field_trace(const FieldElement& a);

// chi(a) = zeta_p^tr(a) for odd p, (-1)^tr(a) for p = 2, as an exact scalar whose
// ambient dimension is d (conductor p, or 4 when p = 2).
CycloScalar additive_character(const FieldElement& a);

/** Ordered basis of GF(p^n) over Z_p with precomputed digit-solving data. */
class FieldBasis {
public:
    enum class Kind { Polynomial, Normal };

    // {1, t, t^2, ..., t^(n-1)}
    static FieldBasis polynomial(const FieldSpec& spec);
    // {beta, beta^p, ..., beta^(p^(n-1))} for beta = alpha^k with the smallest k
    // making the set linearly independent
    static FieldBasis normal(const FieldSpec& spec);

    Kind kind() const { return kind_; }
    const FieldSpec& field() const { return spec_; }
    const std::vector<FieldElement>& generators() const { return gens_; }

    // digits c with a = sum_l c_l * generators[l]; exact, each in 0..p-1
    std::vector<int> expand(const FieldElement& a) const;

private:
    FieldBasis(Kind kind, FieldSpec spec, std::vector<FieldElement> gens);
    Kind kind_;
    FieldSpec spec_;
    std::vector<FieldElement> gens_;
    std::vector<std::vector<long>> solve_;  // inverse of the generator matrix mod p
};

}  // namespace mubforge
