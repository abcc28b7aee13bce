#include "mubforge/finite_field.hpp"

#include <cassert>
#include <stdexcept>

#include "mubforge/numeric.hpp"

namespace mubforge {

namespace {

using Poly = std::vector<int>;  // coefficients constant-first, values in 0..p-1

int poly_deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

bool poly_is_zero(const Poly& f) { return poly_deg(f) < 0; }

// reduce f in place modulo a monic divisor
void poly_mod(Poly& f, const Poly& monic, long p) {
    int dm = poly_deg(monic);
    for (int i = poly_deg(f); i >= dm; i = poly_deg(f)) {
        int c = f[i];
        for (int j = 0; j <= dm; ++j)
            f[i - dm + j] = static_cast<int>(mod_reduce(f[i - dm + j] - static_cast<long>(c) * monic[j], p));
    }
}

bool poly_divides(const Poly& monic, Poly f, long p) {
    poly_mod(f, monic, p);
    return poly_is_zero(f);
}

// residue of theta * f modulo the monic modulus, kept at length n
Poly times_theta(const Poly& f, const Poly& modulus, long p, int n) {
    Poly t(n + 1, 0);
    for (int i = 0; i < n; ++i) t[i + 1] = f[i];
    poly_mod(t, modulus, p);
    t.resize(n);
    return t;
}

bool is_irreducible(const Poly& modulus, long p, int n) {
    if (n == 1) return true;
    Poly div;
    for (int k = 1; 2 * k <= n; ++k) {
        div.assign(k + 1, 0);
        div[k] = 1;
        // odometer over the k free coefficients
        while (true) {
            if (poly_divides(div, modulus, p)) return false;
            int i = 0;
            while (i < k && div[i] == p - 1) div[i++] = 0;
            if (i == k) break;
            ++div[i];
        }
    }
    return true;
}

long pack(const Poly& c, long p) {
    long v = 0, w = 1;
    for (int x : c) {
        v += x * w;
        w *= p;
    }
    return v;
}

}  // namespace

struct FieldSpec::Data {
    long p;
    int n;
    long d;
    std::vector<int> modulus;
    std::vector<Poly> pw;                      // pw[k] = coeffs of alpha^k, k in 0..d-2
    std::vector<long> packed_to_power;         // packed coeffs -> power; -1 marks zero
    std::vector<std::optional<long>> jacobi;   // L(m), m in 0..d-2
};

namespace {

// alpha^0..alpha^(d-2) for alpha = class of theta; empty when alpha is not primitive
std::vector<Poly> power_table(const Poly& modulus, long p, int n, long d) {
    Poly one(n, 0);
    one[0] = 1;
    std::vector<Poly> pw;
    pw.reserve(d - 1);
    pw.push_back(one);
    Poly cur = one;
    for (long k = 1; k < d - 1; ++k) {
        cur = times_theta(cur, modulus, p, n);
        if (cur == one || poly_is_zero(cur)) return {};
        pw.push_back(cur);
    }
    cur = times_theta(cur, modulus, p, n);
    if (cur != one) return {};
    return pw;
}

}  // namespace

FieldSpec FieldSpec::build(long p, int n, long bound) {
    if (!is_prime(p)) throw std::invalid_argument("build_field: p is not prime");
    if (n < 1) throw std::invalid_argument("build_field: n must be at least 1");
    long d = int_pow(p, n);
    if (d > bound) throw std::invalid_argument("build_field: p^n exceeds the configured bound");

    auto data = std::make_shared<Data>();
    data->p = p;
    data->n = n;
    data->d = d;

    // pinned moduli; otherwise the lexicographically smallest monic primitive polynomial
    std::vector<int> pinned;
    if (p == 2 && n == 2) pinned = {1, 1, 1};
    else if (p == 2 && n == 3) pinned = {1, 1, 0, 1};
    else if (p == 3 && n == 2) pinned = {2, 1, 1};

    std::vector<Poly> pw;
    if (!pinned.empty()) {
        Poly mod(pinned.begin(), pinned.end());
        if (!is_irreducible(mod, p, n)) throw std::logic_error("build_field: pinned modulus reducible");
        pw = power_table(mod, p, n, d);
        if (pw.empty()) throw std::logic_error("build_field: pinned modulus not primitive");
        data->modulus = pinned;
    } else {
        Poly mod(n + 1, 0);
        mod[n] = 1;
        while (true) {
            if (is_irreducible(mod, p, n)) {
                pw = power_table(mod, p, n, d);
                if (!pw.empty()) break;
            }
            // next candidate in lex order, constant coefficient most significant
            int i = n - 1;
            while (i >= 0 && mod[i] == p - 1) mod[i--] = 0;
            if (i < 0) throw std::logic_error("build_field: no primitive modulus found");
            ++mod[i];
        }
        data->modulus.assign(mod.begin(), mod.end());
    }

    data->pw = std::move(pw);
    data->packed_to_power.assign(d, -9);
    data->packed_to_power[0] = -1;  // the zero element
    for (long k = 0; k < d - 1; ++k) {
        long idx = pack(data->pw[k], p);
        if (data->packed_to_power.at(idx) != -9)
            throw std::logic_error("build_field: power table is not a bijection");
        data->packed_to_power[idx] = k;
    }

    data->jacobi.resize(d - 1);
    for (long m = 0; m < d - 1; ++m) {
        Poly s = data->pw[m];
        s[0] = static_cast<int>(mod_reduce(s[0] + 1, p));  // 1 + alpha^m
        long idx = pack(s, p);
        if (idx == 0) data->jacobi[m] = std::nullopt;
        else data->jacobi[m] = data->packed_to_power[idx];
    }
    return FieldSpec(std::move(data));
}

long FieldSpec::p() const { return data_->p; }
int FieldSpec::n() const { return data_->n; }
long FieldSpec::d() const { return data_->d; }
const std::vector<int>& FieldSpec::modulus() const { return data_->modulus; }
const std::vector<std::optional<long>>& FieldSpec::jacobi_table() const { return data_->jacobi; }

bool FieldSpec::operator==(const FieldSpec& o) const {
    return data_ == o.data_ ||
           (data_->p == o.data_->p && data_->n == o.data_->n && data_->modulus == o.data_->modulus);
}

FieldElement FieldSpec::zero() const {
    return FieldElement(*this, -1, std::vector<int>(data_->n, 0));
}

FieldElement FieldSpec::one() const { return from_power(0); }
FieldElement FieldSpec::alpha() const { return from_power(1); }

FieldElement FieldSpec::from_power(long k) const {
    k = mod_reduce(k, data_->d - 1);
    return FieldElement(*this, k, data_->pw[k]);
}

FieldElement FieldSpec::from_coeffs(std::vector<int> c) const {
    if (static_cast<long>(c.size()) > data_->n)
        throw std::invalid_argument("from_coeffs: too many coefficients");
    c.resize(data_->n, 0);
    for (int& x : c) x = static_cast<int>(mod_reduce(x, data_->p));
    long power = data_->packed_to_power.at(pack(c, data_->p));
    return FieldElement(*this, power, std::move(c));
}

FieldElement FieldSpec::from_scalar(long c) const {
    std::vector<int> v(data_->n, 0);
    v[0] = static_cast<int>(mod_reduce(c, data_->p));
    return from_coeffs(std::move(v));
}

FieldElement::FieldElement(FieldSpec spec, long power, std::vector<int> coeffs)
    : spec_(std::move(spec)), power_(power), coeffs_(std::move(coeffs)) {}

std::optional<long> FieldElement::power() const {
    if (power_ < 0) return std::nullopt;
    return power_;
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("field op: elements from different fields");
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    std::vector<int> c(coeffs_.size());
    long p = spec_.p();
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<int>(mod_reduce(coeffs_[i] + o.coeffs_[i], p));
    FieldElement r = spec_.from_coeffs(std::move(c));
    assert(r == add_via_jacobi(*this, o));
    return r;
}

FieldElement FieldElement::operator-() const {
    std::vector<int> c(coeffs_.size());
    long p = spec_.p();
    for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<int>(mod_reduce(-coeffs_[i], p));
    return spec_.from_coeffs(std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    if (is_zero() || o.is_zero()) return spec_.zero();
    return spec_.from_power(power_ + o.power_);
}

FieldElement FieldElement::frobenius() const {
    if (is_zero()) return *this;
    return spec_.from_power(power_ * spec_.p());
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(*this, o);
    return power_ == o.power_ && coeffs_ == o.coeffs_;
}

FieldElement add_via_jacobi(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const FieldSpec& f = a.field();
    long period = f.d() - 1;
    long k = a.power_, q = b.power_;
    auto L = f.jacobi_table()[mod_reduce(q - k, period)];
    if (!L) return f.zero();
    return f.from_power(k + *L);
}

long field_trace(const FieldElement& a) {
    FieldElement acc = a, cur = a;
    for (int i = 1; i < a.field().n(); ++i) {
        cur = cur.frobenius();
        acc = acc + cur;
    }
    const auto& c = acc.coeffs();
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) throw std::logic_error("field_trace: value escaped the prime subfield");
    return c[0];
}

CycloScalar additive_character(const FieldElement& a) {
    long p = a.field().p(), d = a.field().d();
    long t = field_trace(a);
    if (p == 2) return CycloScalar::root_of_unity(4, d, 2 * t);
    return CycloScalar::root_of_unity(p, d, t);
}

namespace {

// inverse of the n x n matrix whose column l is gens[l] (mod p); empty when singular
std::vector<std::vector<long>> invert_mod_p(const std::vector<FieldElement>& gens, long p, int n) {
    std::vector<std::vector<long>> a(n, std::vector<long>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) a[i][l] = gens[l].coeffs()[i];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) return {};
        std::swap(a[col], a[piv]);
        long inv = mod_inverse(a[col][col], p);
        for (int j = 0; j < 2 * n; ++j) a[col][j] = a[col][j] * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            long f = a[r][col];
            for (int j = 0; j < 2 * n; ++j) a[r][j] = mod_reduce(a[r][j] - f * a[col][j], p);
        }
    }
    std::vector<std::vector<long>> inv(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

}  // namespace

FieldBasis::FieldBasis(Kind kind, FieldSpec spec, std::vector<FieldElement> gens)
    : kind_(kind), spec_(std::move(spec)), gens_(std::move(gens)) {
    solve_ = invert_mod_p(gens_, spec_.p(), spec_.n());
    if (solve_.empty()) throw std::invalid_argument("FieldBasis: generators are dependent");
}

FieldBasis FieldBasis::polynomial(const FieldSpec& spec) {
    std::vector<FieldElement> gens;
    for (int l = 0; l < spec.n(); ++l) {
        std::vector<int> c(spec.n(), 0);
        c[l] = 1;
        gens.push_back(spec.from_coeffs(std::move(c)));
    }
    return FieldBasis(Kind::Polynomial, spec, std::move(gens));
}

FieldBasis FieldBasis::normal(const FieldSpec& spec) {
    long period = spec.d() - 1;
    for (long k = 0; k < period; ++k) {
        std::vector<FieldElement> gens;
        long e = k;
        for (int l = 0; l < spec.n(); ++l) {
            gens.push_back(spec.from_power(e));
            e = mod_reduce(e * spec.p(), period);
        }
        if (!invert_mod_p(gens, spec.p(), spec.n()).empty())
            return FieldBasis(Kind::Normal, spec, std::move(gens));
    }
    throw std::logic_error("FieldBasis: no normal basis found");  // cannot happen
}

std::vector<int> FieldBasis::expand(const FieldElement& a) const {
    if (a.field() != spec_) throw std::invalid_argument("expand: element from another field");
    int n = spec_.n();
    long p = spec_.p();
    std::vector<int> digits(n, 0);
    for (int l = 0; l < n; ++l) {
        long acc = 0;
        for (int i = 0; i < n; ++i) acc += solve_[l][i] * a.coeffs()[i];
        digits[l] = static_cast<int>(mod_reduce(acc, p));
    }
    return digits;
}

}  // namespace mubforge
