#include "mubforge/tensor.hpp"

#include <stdexcept>
#include <string>

#include "mubforge/numeric.hpp"

namespace mubforge {

namespace {

// zeta_m^(step * e) = omega_p^e in the ambient conductor (m = p or, for p = 2, m = 4)
long omega_step(long m, long p) { return m / p; }

// digit l of idx, most significant first: idx = sum_l digit_l * p^(n-1-l)
struct DigitSplitter {
    long p;
    std::vector<long> weights;  // p^(n-1-l)

    DigitSplitter(long p_, int n) : p(p_), weights(n) {
        long w = 1;
        for (int l = n - 1; l >= 0; --l) {
            weights[l] = w;
            w *= p;
        }
    }
    long digit(long idx, int l) const { return (idx / weights[l]) % p; }
};

void check_map_ring(const CMatrix& op, const DigitMap& map, const char* who) {
    long d = map.spec.d();
    if (op.dim() != d || op.ambient_dim() != d || op.conductor() != scalar_conductor(d))
        throw std::invalid_argument(std::string(who) + ": operator ring does not match the map");
}

std::vector<long> inverse_perm(const std::vector<long>& perm) {
    std::vector<long> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

}  // namespace

std::pair<CMatrix, CMatrix> single_qudit_paulis(long p) {
    return {prime_shift(p), prime_clock(p)};
}

DigitMap build_digit_map(const FieldSpec& spec, const FieldBasis& basis) {
    long d = spec.d(), p = spec.p();
    int n = spec.n();
    DigitSplitter split(p, n);
    std::vector<long> perm(d);
    std::vector<char> seen(d, 0);
    for (long pos = 0; pos < d; ++pos) {
        std::vector<int> digits = basis.expand(element_at_position(spec, pos));
        long idx = 0;
        for (int l = 0; l < n; ++l) idx += digits[l] * split.weights[l];
        perm[pos] = idx;
        if (seen[idx])
            throw std::logic_error("digit map: index " + std::to_string(idx) +
                                   " assigned twice");
        seen[idx] = 1;
    }
    if (perm[0] != 0) throw std::logic_error("digit map: zero element not at the zero string");
    return DigitMap{spec, basis, std::move(perm)};
}

PauliWord decompose(const CMatrix& op, const DigitMap& map) {
    check_map_ring(op, map, "decompose");
    const FieldSpec& spec = map.spec;
    long d = spec.d(), p = spec.p(), m = scalar_conductor(d);
    int n = spec.n();
    long step = omega_step(m, p);
    DigitSplitter split(p, n);

    CMatrix b = permuted(op, map.perm);
    CycloScalar one = CycloScalar::one(m, d);

    std::vector<int> a(n, 0), z(n, 0);
    auto advance = [&](std::vector<int>& t) {
        for (int l = n - 1; l >= 0; --l) {
            if (++t[l] < p) return true;
            t[l] = 0;
        }
        return false;
    };

    do {
        std::fill(z.begin(), z.end(), 0);
        do {
            // candidate entries: nonzero exactly at (row_of(j), j) with value
            // omega_p^(sum_l digit_l(j) z_l); the word's phase comes from column 0,
            // where every digit is zero and the candidate entry is 1
            auto row_of = [&](long j) {
                long i = 0;
                for (int l = 0; l < n; ++l)
                    i += ((split.digit(j, l) + a[l]) % p) * split.weights[l];
                return i;
            };
            const CycloScalar& lambda = b.at(row_of(0), 0);
            if (lambda.is_zero()) continue;
            bool ok = true;
            for (long j = 0; ok && j < d; ++j) {
                long ij = row_of(j);
                long e = 0;
                for (int l = 0; l < n; ++l) e += split.digit(j, l) * z[l];
                CycloScalar expect = lambda * CycloScalar::root_of_unity(m, d, (e % p) * step);
                for (long i = 0; i < d; ++i) {
                    const CycloScalar& have = b.at(i, j);
                    bool good = (i == ij) ? have == expect : have.is_zero();
                    if (!good) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            if (lambda * lambda.conjugate() != one)
                throw std::logic_error("decompose: matched word with non-unit phase");
            std::vector<std::pair<int, int>> factors(n);
            for (int l = 0; l < n; ++l) factors[l] = {a[l], z[l]};
            return PauliWord{p, std::move(factors), lambda};
        } while (advance(z));
    } while (advance(a));

    throw std::domain_error("decompose: operator is proportional to no Kronecker word");
}

CMatrix compose(const PauliWord& word, const DigitMap& map) {
    const FieldSpec& spec = map.spec;
    long d = spec.d(), p = spec.p(), m = scalar_conductor(d);
    int n = spec.n();
    if (word.p != p || (int)word.factors.size() != n)
        throw std::invalid_argument("compose: word shape does not match the map");
    long step = omega_step(m, p);
    DigitSplitter split(p, n);

    CMatrix c(d, m, d);
    for (long j = 0; j < d; ++j) {
        long i = 0, e = 0;
        for (int l = 0; l < n; ++l) {
            i += ((split.digit(j, l) + word.factors[l].first) % p) * split.weights[l];
            e += split.digit(j, l) * word.factors[l].second;
        }
        c.set(i, j, word.phase * CycloScalar::root_of_unity(m, d, (e % p) * step));
    }
    return permuted(c, inverse_perm(map.perm));
}

std::optional<std::vector<CMatrix>> factorization_of_F(const FieldSpec& spec,
                                                       const DigitMap& map) {
    long d = spec.d(), p = spec.p(), m = scalar_conductor(d);
    int n = spec.n();
    long step = omega_step(m, p);

    CMatrix b = permuted(field_fourier(spec), map.perm);

    // n-fold Kronecker power of the unscaled p x p Fourier grid, scaled once at the
    // end: the single 1/sqrt(p) factors have no exact home in the ambient ring, but
    // their product 1/sqrt(d) does
    CMatrix grid(p, m, d);
    for (long r = 0; r < p; ++r)
        for (long c = 0; c < p; ++c)
            grid.set(r, c, CycloScalar::root_of_unity(m, d, ((r * c) % p) * step));
    CMatrix whole = grid;
    for (int l = 1; l < n; ++l) whole = tensor(whole, grid);

    if (b != whole.scaled(CycloScalar::inv_sqrt_d(m, d))) return std::nullopt;
    return std::vector<CMatrix>(n, prime_fourier(p));
}

}  // namespace mubforge
