#pragma once

#include <optional>
#include <vector>

#include "mubforge/cyclotomic.hpp"

namespace mubforge {

/** Column vector with exact cyclotomic entries (all entries share one ring). */
class CVector {
public:
    CVector(long dim, long m, long d);
    explicit CVector(std::vector<CycloScalar> entries);

    long dim() const { return dim_; }
    long conductor() const { return m_; }
    long ambient_dim() const { return d_; }
    const CycloScalar& operator[](long i) const { return e_.at(i); }
    void set(long i, const CycloScalar& v);

    bool is_zero() const;
    CVector operator+(const CVector& o) const;
    CVector operator-(const CVector& o) const;
    CVector scaled(const CycloScalar& s) const;
    bool operator==(const CVector& o) const;
    bool operator!=(const CVector& o) const { return !(*this == o); }

private:
    long dim_, m_, d_;
    std::vector<CycloScalar> e_;
};

// <u|w> = sum_i conj(u_i) w_i
CycloScalar inner(const CVector& u, const CVector& w);

// Rescales v by a unit phase so its first nonzero entry becomes a positive rational
// times a nonnegative power of 1/sqrt(d); exact, idempotent. Throws on the zero vector
// or when the required |entry| has no exact representation.
CVector phase_canonicalized(const CVector& v);

/** Dense square matrix with exact cyclotomic entries, row-major. */
class CMatrix {
public:
    CMatrix(long dim, long m, long d);  // zero matrix
    static CMatrix identity(long dim, long m, long d);

    long dim() const { return dim_; }
    long conductor() const { return m_; }
    long ambient_dim() const { return d_; }
    const CycloScalar& at(long i, long j) const { return e_.at(i * dim_ + j); }
    void set(long i, long j, const CycloScalar& v);

    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix scaled(const CycloScalar& s) const;
    CMatrix adjoint() const;
    CycloScalar trace() const;
    CVector apply(const CVector& v) const;
    CVector column(long j) const;

    bool operator==(const CMatrix& o) const;
    bool operator!=(const CMatrix& o) const { return !(*this == o); }
    bool is_unitary() const;
    bool is_identity() const;

private:
    long dim_, m_, d_;
    std::vector<CycloScalar> e_;
};

// Kronecker product; the left factor supplies the most significant index block.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

bool commutes(const CMatrix& a, const CMatrix& b);
CMatrix commutator(const CMatrix& a, const CMatrix& b);  // AB - BA

// Tr(A B-dagger) without forming the product.
CycloScalar trace_inner(const CMatrix& a, const CMatrix& b);

// The unique root of unity lambda with A = lambda * B (found from the first nonzero
// entry of B), or nullopt when no such phase exists.
std::optional<CycloScalar> equal_up_to_phase(const CMatrix& a, const CMatrix& b);

// B with B[perm[i]][perm[j]] = A[i][j] (basis relabeling by the permutation perm).
CMatrix permuted(const CMatrix& a, const std::vector<long>& perm);

}  // namespace mubforge
