#include "mubforge/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "mubforge/numeric.hpp"

namespace mubforge {

namespace {

void check_ring_params(long m, long d) {
    long p;
    int n;
    if (!prime_power_split(d, p, n))
        throw std::invalid_argument("CycloScalar: ambient dimension must be a prime power");
    long want = (p == 2) ? 4 : p;
    if (m != want)
        throw std::invalid_argument("CycloScalar: conductor does not match ambient characteristic");
}

}  // namespace

CycloScalar::CycloScalar(long m, long d, int k, std::vector<Rat> c)
    : m_(m), d_(d), k_(k), c_(std::move(c)) {
    check_ring_params(m_, d_);
    if (static_cast<long>(c_.size()) != m_)
        throw std::invalid_argument("CycloScalar: coefficient count must equal conductor");
    canonicalize();
}

CycloScalar CycloScalar::zero(long m, long d) {
    return CycloScalar(m, d, 0, std::vector<Rat>(m, Rat(0)));
}

CycloScalar CycloScalar::from_rational(const Rat& r, long m, long d) {
    std::vector<Rat> c(m, Rat(0));
    c[0] = r;
    return CycloScalar(m, d, 0, std::move(c));
}

CycloScalar CycloScalar::root_of_unity(long m, long d, long e) {
    std::vector<Rat> c(m, Rat(0));
    c[mod_reduce(e, m)] = 1;
    return CycloScalar(m, d, 0, std::move(c));
}

CycloScalar CycloScalar::inv_sqrt_d(long m, long d, int k) {
    if (k < 0) throw std::invalid_argument("CycloScalar: negative scale");
    std::vector<Rat> c(m, Rat(0));
    c[0] = 1;
    return CycloScalar(m, d, k, std::move(c));
}

void CycloScalar::canonicalize() {
    if (m_ == 4) {
        c_[0] -= c_[2];  // zeta^2 = -1
        c_[1] -= c_[3];
        c_[2] = 0;
        c_[3] = 0;
    } else if (c_[m_ - 1] != 0) {
        Rat t = c_[m_ - 1];  // zeta^(m-1) = -(1 + zeta + ... + zeta^(m-2))
        for (long j = 0; j < m_; ++j) c_[j] -= t;
    }
    bool all_zero = true;
    for (const Rat& x : c_)
        if (x != 0) { all_zero = false; break; }
    if (all_zero) {
        k_ = 0;
        return;
    }
    while (k_ >= 2) {
        for (Rat& x : c_) x /= static_cast<long>(d_);
        k_ -= 2;
    }
    long root;
    if (k_ == 1 && exact_sqrt(d_, root)) {
        for (Rat& x : c_) x /= root;
        k_ = 0;
    }
}

void CycloScalar::check_same_ring(const CycloScalar& o) const {
    if (m_ != o.m_ || d_ != o.d_)
        throw std::invalid_argument("CycloScalar: mixed conductor or ambient dimension");
}

bool CycloScalar::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloScalar::is_rational() const {
    if (k_ != 0) return false;
    for (long j = 1; j < m_; ++j)
        if (c_[j] != 0) return false;
    return true;
}

bool CycloScalar::is_one() const { return is_rational() && c_[0] == 1; }

Rat CycloScalar::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycloScalar: value is not rational");
    return c_[0];
}

CycloScalar CycloScalar::operator-() const {
    std::vector<Rat> c = c_;
    for (Rat& x : c) x = -x;
    return CycloScalar(m_, d_, k_, std::move(c));
}

CycloScalar CycloScalar::operator+(const CycloScalar& o) const {
    check_same_ring(o);
    if (k_ == o.k_) {
        std::vector<Rat> c = c_;
        for (long j = 0; j < m_; ++j) c[j] += o.c_[j];
        return CycloScalar(m_, d_, k_, std::move(c));
    }
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // k differs by parity and d is not a square: 1 and 1/sqrt(d) span different cosets
    throw std::invalid_argument("CycloScalar: scale parity mismatch in addition");
}

CycloScalar CycloScalar::operator*(const CycloScalar& o) const {
    check_same_ring(o);
    std::vector<Rat> c(m_, Rat(0));
    for (long a = 0; a < m_; ++a) {
        if (c_[a] == 0) continue;
        for (long b = 0; b < m_; ++b) {
            if (o.c_[b] == 0) continue;
            c[(a + b) % m_] += c_[a] * o.c_[b];
        }
    }
    return CycloScalar(m_, d_, k_ + o.k_, std::move(c));
}

CycloScalar CycloScalar::scaled(const Rat& r) const {
    std::vector<Rat> c = c_;
    for (Rat& x : c) x *= r;
    return CycloScalar(m_, d_, k_, std::move(c));
}

CycloScalar CycloScalar::galois(long j) const {
    j = mod_reduce(j, m_);
    if (std::gcd(j, m_) != 1) throw std::invalid_argument("CycloScalar: galois index not a unit");
    std::vector<Rat> c(m_, Rat(0));
    for (long a = 0; a < m_; ++a) c[a * j % m_] += c_[a];
    return CycloScalar(m_, d_, k_, std::move(c));
}

CycloScalar CycloScalar::conjugate() const { return galois(m_ - 1); }

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw std::domain_error("CycloScalar: inverse of zero");
    // 1/w = (prod of the other Galois conjugates) / Norm(w), Norm(w) rational
    CycloScalar w(m_, d_, 0, c_);
    CycloScalar u = CycloScalar::one(m_, d_);
    for (long j = 2; j < m_; ++j) {
        if (std::gcd(j, m_) != 1) continue;
        u = u * w.galois(j);
    }
    CycloScalar norm = w * u;
    if (!norm.is_rational())
        throw std::logic_error("CycloScalar: Galois norm failed to be rational");
    Rat nr = norm.rational_value();
    if (nr == 0) throw std::domain_error("CycloScalar: inverse of zero");
    // 1/(w / sqrt(d)^k) = (u / Norm) * sqrt(d)^k = (u * d^k / Norm) / sqrt(d)^k
    Rat s = Rat(1) / nr;
    for (int i = 0; i < k_; ++i) s *= static_cast<long>(d_);
    return CycloScalar(m_, d_, k_, u.scaled(s).c_);
}

bool CycloScalar::operator==(const CycloScalar& o) const {
    check_same_ring(o);
    return k_ == o.k_ && c_ == o.c_;
}

std::complex<double> CycloScalar::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (long j = 0; j < m_; ++j) {
        if (c_[j] == 0) continue;
        double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m_);
        acc += rat_to_double(c_[j]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc / std::pow(std::sqrt(static_cast<double>(d_)), k_);
}

CycloAccumulator::CycloAccumulator(long m, long d) : m_(m), d_(d), c_(m, Rat(0)) {
    check_ring_params(m, d);
}

Rat CycloAccumulator::term_scale(int k_raw) {
    Rat scale(1);
    while (k_raw >= 2) {
        scale /= static_cast<long>(d_);
        k_raw -= 2;
    }
    if (!seeded_) {
        k_ = k_raw;
        seeded_ = true;
    } else if (k_ != k_raw) {
        throw std::invalid_argument("CycloScalar: scale parity mismatch in addition");
    }
    return scale;
}

void CycloAccumulator::add(const CycloScalar& x) {
    if (x.m_ != m_ || x.d_ != d_)
        throw std::invalid_argument("CycloScalar: mixed conductor or ambient dimension");
    if (x.is_zero()) return;
    Rat scale = term_scale(x.k_);
    for (long j = 0; j < m_; ++j)
        if (x.c_[j] != 0) c_[j] += x.c_[j] * scale;
}

void CycloAccumulator::add_product(const CycloScalar& a, const CycloScalar& b) {
    if (a.m_ != m_ || a.d_ != d_ || b.m_ != m_ || b.d_ != d_)
        throw std::invalid_argument("CycloScalar: mixed conductor or ambient dimension");
    // nonzero scalars have nonzero product (the ring is an integral domain), so the
    // parity rule applies exactly when both factors are nonzero
    if (a.is_zero() || b.is_zero()) return;
    Rat scale = term_scale(a.k_ + b.k_);
    bool unscaled = scale == 1;
    for (long i = 0; i < m_; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < m_; ++j) {
            if (b.c_[j] == 0) continue;
            if (unscaled) c_[(i + j) % m_] += a.c_[i] * b.c_[j];
            else c_[(i + j) % m_] += a.c_[i] * b.c_[j] * scale;
        }
    }
}

void CycloAccumulator::add_conj_product(const CycloScalar& a, const CycloScalar& b) {
    if (a.m_ != m_ || a.d_ != d_ || b.m_ != m_ || b.d_ != d_)
        throw std::invalid_argument("CycloScalar: mixed conductor or ambient dimension");
    if (a.is_zero() || b.is_zero()) return;
    Rat scale = term_scale(a.k_ + b.k_);
    bool unscaled = scale == 1;
    for (long i = 0; i < m_; ++i) {
        if (a.c_[i] == 0) continue;
        long ci = (m_ - i) % m_;  // conjugation sends zeta^i to zeta^(m-i)
        for (long j = 0; j < m_; ++j) {
            if (b.c_[j] == 0) continue;
            if (unscaled) c_[(ci + j) % m_] += a.c_[i] * b.c_[j];
            else c_[(ci + j) % m_] += a.c_[i] * b.c_[j] * scale;
        }
    }
}

CycloScalar CycloAccumulator::take() const {
    return CycloScalar(m_, d_, seeded_ ? k_ : 0, c_);
}

CycloScalar sqrt_rational(const CycloScalar& x) {
    if (!x.is_rational()) throw std::domain_error("sqrt_rational: value is not rational");
    Rat v = x.rational_value();
    if (v < 0) throw std::domain_error("sqrt_rational: negative value");
    long d = x.ambient_dim(), p;
    int n;
    prime_power_split(d, p, n);
    auto res = sqrt_with_prime_part(v, p);
    if (!res) throw std::domain_error("sqrt_rational: no exact square root");
    auto [r, odd] = *res;
    if (!odd) return CycloScalar::from_rational(r, x.conductor(), d);
    if (n % 2 == 0) throw std::domain_error("sqrt_rational: sqrt(p) not representable");
    // sqrt(p) = sqrt(d) / p^((n-1)/2) = (d / p^((n-1)/2)) / sqrt(d)
    Rat f = r * static_cast<long>(d);
    for (int i = 0; i < (n - 1) / 2; ++i) f /= static_cast<long>(p);
    return CycloScalar::inv_sqrt_d(x.conductor(), d).scaled(f);
}

}  // namespace mubforge
