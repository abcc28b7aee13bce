#include "mubforge/weyl.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "mubforge/numeric.hpp"

namespace mubforge {
namespace {

// zeta_d^e for odd d, (-1)^e for d = 2, in the scalar ring of dimension d
CycloScalar unit_pow(long d, long e) {
    if (d == 2) return CycloScalar::root_of_unity(4, 2, 2 * mod_reduce(e, 2));
    return CycloScalar::root_of_unity(d, d, mod_reduce(e, d));
}

void require_prime(long d) {
    if (!is_prime(d)) throw std::invalid_argument("dimension must be prime");
}

}  // namespace

long scalar_conductor(long d) {
    return d % 2 == 0 ? 4 : smallest_prime_factor(d);
}

std::string OperatorLabel::to_string(long d) const {
    switch (kind) {
        case Kind::PrimeZ:
            return a == 1 ? "Z" : "Z^" + std::to_string(a);
        case Kind::PrimeXZ: {
            std::string base;
            if (a == 0) {
                base = "X";
            } else if (d == 2 && a == 1) {
                base = "Y";
            } else if (a == 1) {
                base = "XZ";
            } else {
                base = "XZ^" + std::to_string(a);
            }
            if (b == 1) return base;
            if (base.size() == 1) return base + "^" + std::to_string(b);
            return "(" + base + ")^" + std::to_string(b);
        }
        case Kind::Zq:
            return "Z_" + std::to_string(a);
        case Kind::Xq:
            return "X_" + std::to_string(a);
        case Kind::XqZr:
            return "X_" + std::to_string(a) + "Z_" + std::to_string(b);
    }
    throw std::logic_error("unreachable");
}

std::string ClassId::to_string() const {
    switch (kind) {
        case Kind::Diagonal:
            return "diagonal";
        case Kind::Shift:
            return "shift";
        case Kind::Mixed:
            return "mixed:" + std::to_string(r);
    }
    throw std::logic_error("unreachable");
}

CMatrix prime_shift(long d) {
    require_prime(d);
    long m = scalar_conductor(d);
    CMatrix x(d, m, d);
    for (long n = 0; n < d; ++n) x.set((n + 1) % d, n, CycloScalar::one(m, d));
    return x;
}

CMatrix prime_clock(long d) {
    require_prime(d);
    CMatrix z(d, scalar_conductor(d), d);
    for (long n = 0; n < d; ++n) z.set(n, n, unit_pow(d, n));
    return z;
}

CMatrix prime_fourier(long d) {
    require_prime(d);
    long m = scalar_conductor(d);
    CycloScalar s = CycloScalar::inv_sqrt_d(m, d);
    CMatrix f(d, m, d);
    for (long n = 0; n < d; ++n)
        for (long k = 0; k < d; ++k) f.set(n, k, unit_pow(d, n * k) * s);
    return f;
}

CMatrix prime_phase(long d) {
    require_prime(d);
    long m = scalar_conductor(d);
    CMatrix v(d, m, d);
    if (d == 2) {
        v.set(0, 0, CycloScalar::one(m, d));
        v.set(1, 1, -CycloScalar::imaginary_unit(d));
        return v;
    }
    // omega^(-(n^2 - n)(d+1)/2); n^2 - n is even, (d+1)/2 an integer
    for (long n = 0; n < d; ++n) {
        long e = mod_reduce(-(n * n - n) / 2 * (d + 1), d);
        v.set(n, n, unit_pow(d, e));
    }
    return v;
}

std::vector<CommutingClass> prime_classes(long d) {
    require_prime(d);
    std::vector<CommutingClass> classes;

    CMatrix z = prime_clock(d);
    CommutingClass diag{ClassId{ClassId::Kind::Diagonal, 0}, {}};
    CMatrix zp = z;
    for (long k = 1; k < d; ++k) {
        diag.members.push_back({OperatorLabel{OperatorLabel::Kind::PrimeZ, k, 0}, zp});
        zp = zp * z;
    }
    classes.push_back(std::move(diag));

    CMatrix x = prime_shift(d);
    for (long m = 0; m < d; ++m) {
        CMatrix base = x;
        CMatrix zm = CMatrix::identity(d, scalar_conductor(d), d);
        for (long j = 0; j < m; ++j) zm = zm * z;
        base = x * zm;
        if (d == 2 && m == 1) base = base.scaled(CycloScalar::imaginary_unit(d));  // Y = iXZ
        CommutingClass cls{ClassId{ClassId::Kind::Mixed, m}, {}};
        CMatrix bp = base;
        for (long k = 1; k < d; ++k) {
            cls.members.push_back({OperatorLabel{OperatorLabel::Kind::PrimeXZ, m, k}, bp});
            bp = bp * base;
        }
        classes.push_back(std::move(cls));
    }

    auto bad = verify_class_structure(classes, d);
    if (!bad.empty()) throw std::logic_error("class verification failed: " + bad.front());
    return classes;
}

long power_position(const FieldElement& a) {
    if (a.is_zero()) return 0;
    long k = *a.power();
    return k == 0 ? a.field().d() - 1 : k;
}

FieldElement element_at_position(const FieldSpec& spec, long pos) {
    if (pos < 0 || pos >= spec.d()) throw std::out_of_range("position out of range");
    if (pos == 0) return spec.zero();
    return spec.from_power(pos);  // pos = d-1 reduces to alpha^0 = 1
}

CMatrix field_clock(const FieldSpec& spec, long q) {
    long d = spec.d(), m = scalar_conductor(d);
    CMatrix z(d, m, d);
    z.set(0, 0, CycloScalar::one(m, d));
    for (long j = 1; j < d; ++j) z.set(j, j, additive_character(spec.from_power(q + j)));
    return z;
}

CMatrix field_shift(const FieldSpec& spec, long q) {
    long d = spec.d(), m = scalar_conductor(d);
    FieldElement step = spec.from_power(q);
    CMatrix x(d, m, d);
    for (long j = 0; j < d; ++j)
        x.set(power_position(element_at_position(spec, j) + step), j, CycloScalar::one(m, d));
    return x;
}

CMatrix field_fourier(const FieldSpec& spec) {
    long d = spec.d(), m = scalar_conductor(d);
    CycloScalar s = CycloScalar::inv_sqrt_d(m, d);
    CMatrix f(d, m, d);
    f.set(0, 0, s);
    for (long j = 1; j < d; ++j) {
        f.set(0, j, s);
        f.set(j, 0, s);
        for (long k = 1; k < d; ++k)
            f.set(j, k, additive_character(spec.from_power(j + k)) * s);
    }
    return f;
}

CMatrix field_phase(const FieldSpec& spec, long q, long r) {
    if (spec.p() == 2) throw std::invalid_argument("phase operator requires odd characteristic");
    long d = spec.d(), m = scalar_conductor(d);
    FieldElement half = spec.from_scalar(mod_inverse(2, spec.p()));
    CMatrix v(d, m, d);
    v.set(0, 0, CycloScalar::one(m, d));
    for (long k = 1; k < d; ++k) {
        FieldElement arg = half * spec.from_power(r + 2 * k - q);
        v.set(k, k, additive_character(arg).conjugate());
    }
    return v;
}

std::vector<CommutingClass> build_classes(const FieldSpec& spec) {
    if (spec.n() == 1) return prime_classes(spec.d());
    return field_classes(spec);
}

std::vector<CommutingClass> field_classes(const FieldSpec& spec) {
    long d = spec.d();
    std::vector<CommutingClass> classes;
    CommutingClass diag{ClassId{ClassId::Kind::Diagonal, 0}, {}};
    for (long q = 0; q < d - 1; ++q)
        diag.members.push_back(
            {OperatorLabel{OperatorLabel::Kind::Zq, q, 0}, field_clock(spec, q)});
    classes.push_back(std::move(diag));

    CommutingClass shift{ClassId{ClassId::Kind::Shift, 0}, {}};
    for (long q = 0; q < d - 1; ++q)
        shift.members.push_back(
            {OperatorLabel{OperatorLabel::Kind::Xq, q, 0}, field_shift(spec, q)});
    classes.push_back(std::move(shift));

    for (long r = 0; r < d - 1; ++r) {
        CommutingClass cls{ClassId{ClassId::Kind::Mixed, r}, {}};
        for (long q = 0; q < d - 1; ++q) {
            long rq = mod_reduce(q + r, d - 1);
            cls.members.push_back({OperatorLabel{OperatorLabel::Kind::XqZr, q, rq},
                                   field_shift(spec, q) * field_clock(spec, rq)});
        }
        classes.push_back(std::move(cls));
    }

    auto bad = verify_class_structure(classes, d);
    if (!bad.empty()) throw std::logic_error("class verification failed: " + bad.front());
    return classes;
}

namespace {

// M = sum_j |dest[j]><j| scale[j]: one nonzero entry per row and column.
struct PermDiag {
    std::vector<long> dest;
    std::vector<CycloScalar> scale;
};

// Every class member is a root-of-unity multiple of a permutation on each column
// (a phased permutation); members outside that shape are structural violations and
// everything downstream works on this form.
std::optional<PermDiag> phased_permutation(const CMatrix& mat) {
    long d = mat.dim();
    PermDiag pd;
    pd.dest.assign(d, -1);
    std::vector<char> row_used(d, 0);
    for (long j = 0; j < d; ++j) {
        long hit = -1;
        for (long i = 0; i < d; ++i) {
            if (mat.at(i, j).is_zero()) continue;
            if (hit >= 0) return std::nullopt;
            hit = i;
        }
        if (hit < 0 || row_used[hit]) return std::nullopt;
        row_used[hit] = 1;
        pd.dest[j] = hit;
        pd.scale.push_back(mat.at(hit, j));
    }
    return pd;
}

}  // namespace

std::vector<std::string> verify_class_structure(const std::vector<CommutingClass>& classes,
                                                long d) {
    std::vector<std::string> bad;
    long m = scalar_conductor(d);
    if ((long)classes.size() != d + 1)
        bad.push_back("expected " + std::to_string(d + 1) + " classes, got " +
                      std::to_string(classes.size()));

    std::vector<std::pair<std::string, const PermDiag*>> all;
    std::vector<std::unique_ptr<PermDiag>> storage;
    for (const auto& cls : classes) {
        std::string cid = cls.id.to_string();
        if ((long)cls.members.size() != d - 1)
            bad.push_back("class " + cid + ": expected " + std::to_string(d - 1) +
                          " members, got " + std::to_string(cls.members.size()));
        std::vector<const PermDiag*> in_class;
        for (const auto& [label, mat] : cls.members) {
            std::string who = cid + " member " + label.to_string(d);
            in_class.push_back(nullptr);
            if (mat.dim() != d) {
                bad.push_back(who + ": wrong dimension");
                continue;
            }
            auto pd = phased_permutation(mat);
            if (!pd) {
                bad.push_back(who + ": not a phased permutation");
                continue;
            }
            // unit-modulus phases on a permutation make the member exactly unitary
            bool unit = true;
            for (const CycloScalar& s : pd->scale)
                if (!(s * s.conjugate()).is_one()) { unit = false; break; }
            if (!unit) {
                bad.push_back(who + ": not unitary");
                continue;
            }
            if (mat.is_identity()) bad.push_back(who + ": is the identity");
            storage.push_back(std::make_unique<PermDiag>(std::move(*pd)));
            in_class.back() = storage.back().get();
            all.push_back({cid + "/" + label.to_string(d), storage.back().get()});
        }
        // commutation inside the class: with A = sum |s(i)><i| a_i, B = sum |t(i)><i| b_i,
        // AB = BA iff s(t(i)) = t(s(i)) and a_{t(i)} b_i = b_{s(i)} a_i for every i
        for (size_t i = 0; i < cls.members.size(); ++i)
            for (size_t j = i + 1; j < cls.members.size(); ++j) {
                const PermDiag* a = in_class[i];
                const PermDiag* b = in_class[j];
                if (!a || !b) continue;
                bool ok = true;
                for (long col = 0; col < d && ok; ++col)
                    ok = a->dest[b->dest[col]] == b->dest[a->dest[col]] &&
                         a->scale[b->dest[col]] * b->scale[col] ==
                             b->scale[a->dest[col]] * a->scale[col];
                if (!ok)
                    bad.push_back(cid + ": " + cls.members[i].first.to_string(d) +
                                  " does not commute with " +
                                  cls.members[j].first.to_string(d));
            }
    }

    // Trace orthogonality across the union: Tr(A B-dagger) picks up a term only on
    // columns where the two permutations agree. The diagonal case Tr(A A-dagger) = d
    // is the unit-modulus check above, summed over the d columns.
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            const PermDiag* a = all[i].second;
            const PermDiag* b = all[j].second;
            CycloAccumulator acc(m, d);
            bool overlap = false;
            for (long col = 0; col < d; ++col)
                if (a->dest[col] == b->dest[col]) {
                    acc.add_conj_product(b->scale[col], a->scale[col]);
                    overlap = true;
                }
            if (overlap && !acc.take().is_zero())
                bad.push_back("trace orthogonality fails for " + all[i].first + " vs " +
                              all[j].first);
        }
    return bad;
}

}  // namespace mubforge
