#include "mubforge/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace mubforge {

namespace {

void check_same_shape(long da, long ma, long dda, long db, long mb, long ddb) {
    if (da != db) throw std::invalid_argument("matrix: dimension mismatch");
    if (ma != mb || dda != ddb) throw std::invalid_argument("matrix: ring mismatch");
}

}  // namespace

CVector::CVector(long dim, long m, long d)
    : dim_(dim), m_(m), d_(d), e_(dim, CycloScalar::zero(m, d)) {
    if (dim < 1) throw std::invalid_argument("vector: dimension must be positive");
}

CVector::CVector(std::vector<CycloScalar> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw std::invalid_argument("vector: no entries");
    dim_ = static_cast<long>(e_.size());
    m_ = e_[0].conductor();
    d_ = e_[0].ambient_dim();
    for (const auto& x : e_)
        if (x.conductor() != m_ || x.ambient_dim() != d_)
            throw std::invalid_argument("vector: ring mismatch among entries");
}

void CVector::set(long i, const CycloScalar& v) {
    if (v.conductor() != m_ || v.ambient_dim() != d_)
        throw std::invalid_argument("vector: ring mismatch");
    e_.at(i) = v;
}

bool CVector::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

CVector CVector::operator+(const CVector& o) const {
    check_same_shape(dim_, m_, d_, o.dim_, o.m_, o.d_);
    CVector r = *this;
    for (long i = 0; i < dim_; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

CVector CVector::operator-(const CVector& o) const {
    check_same_shape(dim_, m_, d_, o.dim_, o.m_, o.d_);
    CVector r = *this;
    for (long i = 0; i < dim_; ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

CVector CVector::scaled(const CycloScalar& s) const {
    CVector r = *this;
    for (long i = 0; i < dim_; ++i) r.e_[i] = e_[i] * s;
    return r;
}

bool CVector::operator==(const CVector& o) const {
    check_same_shape(dim_, m_, d_, o.dim_, o.m_, o.d_);
    for (long i = 0; i < dim_; ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

CycloScalar inner(const CVector& u, const CVector& w) {
    if (u.dim() != w.dim()) throw std::invalid_argument("inner: dimension mismatch");
    CycloAccumulator acc(u.conductor(), u.ambient_dim());
    for (long i = 0; i < u.dim(); ++i) acc.add_conj_product(u[i], w[i]);
    return acc.take();
}

CVector phase_canonicalized(const CVector& v) {
    long lead = -1;
    for (long i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) { lead = i; break; }
    if (lead < 0) throw std::domain_error("phase_canonicalized: zero vector");
    const CycloScalar& e = v[lead];
    CycloScalar mag = sqrt_rational(e * e.conjugate());
    // lambda = conj(e)/|e| is a unit; the lead entry becomes |e| >= 0
    CycloScalar lambda = e.conjugate() * mag.inverse();
    return v.scaled(lambda);
}

CMatrix::CMatrix(long dim, long m, long d)
    : dim_(dim), m_(m), d_(d), e_(dim * dim, CycloScalar::zero(m, d)) {
    if (dim < 1) throw std::invalid_argument("matrix: dimension must be positive");
}

CMatrix CMatrix::identity(long dim, long m, long d) {
    CMatrix r(dim, m, d);
    for (long i = 0; i < dim; ++i) r.set(i, i, CycloScalar::one(m, d));
    return r;
}

void CMatrix::set(long i, long j, const CycloScalar& v) {
    if (v.conductor() != m_ || v.ambient_dim() != d_)
        throw std::invalid_argument("matrix: ring mismatch");
    e_.at(i * dim_ + j) = v;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    check_same_shape(dim_, m_, d_, o.dim_, o.m_, o.d_);
    CMatrix r(dim_, m_, d_);
    std::vector<CycloAccumulator> row(dim_, CycloAccumulator(m_, d_));
    for (long i = 0; i < dim_; ++i) {
        std::fill(row.begin(), row.end(), CycloAccumulator(m_, d_));
        for (long k = 0; k < dim_; ++k) {
            const CycloScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (long j = 0; j < dim_; ++j) {
                const CycloScalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                row[j].add_product(a, b);
            }
        }
        for (long j = 0; j < dim_; ++j) r.e_[i * dim_ + j] = row[j].take();
    }
    return r;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    check_same_shape(dim_, m_, d_, o.dim_, o.m_, o.d_);
    CMatrix r = *this;
    for (long i = 0; i < dim_ * dim_; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    check_same_shape(dim_, m_, d_, o.dim_, o.m_, o.d_);
    CMatrix r = *this;
    for (long i = 0; i < dim_ * dim_; ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

CMatrix CMatrix::scaled(const CycloScalar& s) const {
    CMatrix r = *this;
    for (auto& x : r.e_) x = x * s;
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(dim_, m_, d_);
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) r.set(j, i, at(i, j).conjugate());
    return r;
}

CycloScalar CMatrix::trace() const {
    CycloScalar acc = CycloScalar::zero(m_, d_);
    for (long i = 0; i < dim_; ++i) acc = acc + at(i, i);
    return acc;
}

CVector CMatrix::apply(const CVector& v) const {
    if (v.dim() != dim_) throw std::invalid_argument("apply: dimension mismatch");
    CVector r(dim_, m_, d_);
    for (long i = 0; i < dim_; ++i) {
        CycloAccumulator acc(m_, d_);
        for (long j = 0; j < dim_; ++j) {
            const CycloScalar& a = at(i, j);
            if (a.is_zero()) continue;
            acc.add_product(a, v[j]);
        }
        r.set(i, acc.take());
    }
    return r;
}

CVector CMatrix::column(long j) const {
    CVector r(dim_, m_, d_);
    for (long i = 0; i < dim_; ++i) r.set(i, at(i, j));
    return r;
}

bool CMatrix::operator==(const CMatrix& o) const {
    check_same_shape(dim_, m_, d_, o.dim_, o.m_, o.d_);
    for (long i = 0; i < dim_ * dim_; ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool CMatrix::is_unitary() const { return (*this * adjoint()).is_identity(); }

bool CMatrix::is_identity() const {
    for (long i = 0; i < dim_; ++i)
        for (long j = 0; j < dim_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    if (a.conductor() != b.conductor() || a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("tensor: ring mismatch");
    long da = a.dim(), db = b.dim();
    CMatrix r(da * db, a.conductor(), a.ambient_dim());
    for (long i = 0; i < da; ++i)
        for (long j = 0; j < da; ++j) {
            const CycloScalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (long k = 0; k < db; ++k)
                for (long l = 0; l < db; ++l) {
                    const CycloScalar& bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    r.set(i * db + k, j * db + l, aij * bkl);
                }
        }
    return r;
}

bool commutes(const CMatrix& a, const CMatrix& b) { return a * b == b * a; }

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

CycloScalar trace_inner(const CMatrix& a, const CMatrix& b) {
    check_same_shape(a.dim(), a.conductor(), a.ambient_dim(), b.dim(), b.conductor(),
                     b.ambient_dim());
    CycloAccumulator acc(a.conductor(), a.ambient_dim());
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < a.dim(); ++j) {
            const CycloScalar& x = a.at(i, j);
            if (x.is_zero()) continue;
            acc.add_conj_product(b.at(i, j), x);  // x * conj(y)
        }
    return acc.take();
}

std::optional<CycloScalar> equal_up_to_phase(const CMatrix& a, const CMatrix& b) {
    check_same_shape(a.dim(), a.conductor(), a.ambient_dim(), b.dim(), b.conductor(),
                     b.ambient_dim());
    long n = a.dim();
    std::optional<CycloScalar> lambda;
    for (long i = 0; i < n && !lambda; ++i)
        for (long j = 0; j < n && !lambda; ++j)
            if (!b.at(i, j).is_zero()) lambda = a.at(i, j) * b.at(i, j).inverse();
    if (!lambda) {  // B = 0: only A = 0 matches, with trivial phase
        CMatrix zero(n, a.conductor(), a.ambient_dim());
        if (a == zero) return CycloScalar::one(a.conductor(), a.ambient_dim());
        return std::nullopt;
    }
    if (!((*lambda) * lambda->conjugate()).is_one()) return std::nullopt;
    if (a == b.scaled(*lambda)) return lambda;
    return std::nullopt;
}

CMatrix permuted(const CMatrix& a, const std::vector<long>& perm) {
    if (static_cast<long>(perm.size()) != a.dim())
        throw std::invalid_argument("permuted: permutation size mismatch");
    CMatrix r(a.dim(), a.conductor(), a.ambient_dim());
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < a.dim(); ++j) r.set(perm.at(i), perm.at(j), a.at(i, j));
    return r;
}

}  // namespace mubforge
