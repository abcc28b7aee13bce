#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mubforge/matrix.hpp"
#include "oracles.hpp"

using mubforge::CMatrix;
using mubforge::CVector;
using mubforge::CycloScalar;
using mubforge::Rat;

namespace {

CycloScalar rnd_entry(std::mt19937& rng, long m, long d) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    CycloScalar acc = CycloScalar::zero(m, d);
    for (long j = 0; j < m; ++j)
        acc = acc + CycloScalar::root_of_unity(m, d, j).scaled(Rat(coeff(rng)));
    return acc;
}

CMatrix rnd_matrix(std::mt19937& rng, long dim, long m, long d) {
    CMatrix a(dim, m, d);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) a.set(i, j, rnd_entry(rng, m, d));
    return a;
}

// 2x2 Hadamard (1/sqrt(2)) [[1,1],[1,-1]] in the d = 2 ring
CMatrix hadamard2() {
    CMatrix h(2, 4, 2);
    CycloScalar s = CycloScalar::inv_sqrt_d(4, 2);
    h.set(0, 0, s);
    h.set(0, 1, s);
    h.set(1, 0, s);
    h.set(1, 1, -s);
    return h;
}

}  // namespace

TEST_CASE("identity, trace, and product basics") {
    CMatrix id = CMatrix::identity(4, 4, 4);
    CHECK(id.is_identity());
    CHECK(id.trace() == CycloScalar::from_rational(Rat(4), 4, 4));
    CHECK(id * id == id);
    CHECK(id.is_unitary());
}

TEST_CASE("Hadamard matrix is unitary with exact scale handling") {
    CMatrix h = hadamard2();
    CHECK(h.is_unitary());
    CHECK(h * h == CMatrix::identity(2, 4, 2));
    CHECK(h.adjoint() == h);
}

TEST_CASE("adjoint and trace identities on random matrices") {
    std::mt19937 rng(42);
    for (auto [m, d] : {std::pair<long, long>{4, 4}, {3, 3}}) {
        CMatrix a = rnd_matrix(rng, d, m, d);
        CMatrix b = rnd_matrix(rng, d, m, d);
        CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
        CHECK((a * b).trace() == (b * a).trace());
        CHECK(a.adjoint().adjoint() == a);
        CHECK(mubforge::trace_inner(a, b) == (a * b.adjoint()).trace());
        CHECK(mubforge::commutator(a, b) + mubforge::commutator(b, a) == CMatrix(d, m, d));
    }
}

TEST_CASE("Kronecker product: sizes, values, mixed-product rule") {
    // Z (x) Z = diag(1,-1,-1,1) over p = 2 factors
    CMatrix z(2, 4, 4);
    z.set(0, 0, CycloScalar::one(4, 4));
    z.set(1, 1, -CycloScalar::one(4, 4));
    CMatrix zz = mubforge::tensor(z, z);
    REQUIRE(zz.dim() == 4);
    CHECK(zz.at(0, 0).is_one());
    CHECK(zz.at(1, 1) == -CycloScalar::one(4, 4));
    CHECK(zz.at(2, 2) == -CycloScalar::one(4, 4));
    CHECK(zz.at(3, 3).is_one());

    std::mt19937 rng(7);
    CMatrix a = rnd_matrix(rng, 2, 4, 4);
    CMatrix b = rnd_matrix(rng, 2, 4, 4);
    CMatrix c = rnd_matrix(rng, 2, 4, 4);
    CMatrix d = rnd_matrix(rng, 2, 4, 4);
    CHECK(mubforge::tensor(a, b) * mubforge::tensor(c, d) ==
          mubforge::tensor(a * c, b * d));
    // left factor owns the most significant index block
    CMatrix e01(2, 4, 4);
    e01.set(0, 1, CycloScalar::one(4, 4));
    CMatrix id2 = CMatrix::identity(2, 4, 4);
    CMatrix t = mubforge::tensor(e01, id2);
    CHECK(t.at(0, 2).is_one());
    CHECK(t.at(1, 3).is_one());
}

TEST_CASE("equality up to a global phase") {
    std::mt19937 rng(11);
    CMatrix a = rnd_matrix(rng, 3, 3, 3);
    auto same = mubforge::equal_up_to_phase(a, a);
    REQUIRE(same.has_value());
    CHECK(same->is_one());

    CycloScalar w = CycloScalar::root_of_unity(3, 3, 1);
    auto ph = mubforge::equal_up_to_phase(a.scaled(w), a);
    REQUIRE(ph.has_value());
    CHECK(*ph == w);

    // no unit phase relates A and 2A
    auto none = mubforge::equal_up_to_phase(a.scaled(CycloScalar::from_rational(Rat(2), 3, 3)), a);
    CHECK(!none.has_value());

    // different support
    CMatrix b = a;
    b.set(0, 0, a.at(0, 0) + CycloScalar::one(3, 3));
    CHECK(!mubforge::equal_up_to_phase(b, a).has_value());
}

TEST_CASE("permutation relabeling is a homomorphism") {
    std::mt19937 rng(13);
    CMatrix a = rnd_matrix(rng, 4, 4, 4);
    CMatrix b = rnd_matrix(rng, 4, 4, 4);
    std::vector<long> perm = {2, 0, 3, 1};
    CHECK(mubforge::permuted(a * b, perm) == mubforge::permuted(a, perm) * mubforge::permuted(b, perm));
    CHECK(mubforge::permuted(CMatrix::identity(4, 4, 4), perm).is_identity());
}

TEST_CASE("vector algebra and inner products") {
    std::mt19937 rng(17);
    CVector u(3, 3, 3), w(3, 3, 3);
    for (long i = 0; i < 3; ++i) {
        u.set(i, rnd_entry(rng, 3, 3));
        w.set(i, rnd_entry(rng, 3, 3));
    }
    CHECK(mubforge::inner(u, w).conjugate() == mubforge::inner(w, u));
    CycloScalar nu = mubforge::inner(u, u);
    CHECK(nu.is_rational());
    CHECK(nu.rational_value() >= 0);
    CHECK(mubforge::inner(u, w + u) == mubforge::inner(u, w) + nu);
    CHECK((u - u).is_zero());
}

TEST_CASE("matrix application matches column extraction") {
    std::mt19937 rng(19);
    CMatrix a = rnd_matrix(rng, 3, 3, 3);
    for (long j = 0; j < 3; ++j) {
        CVector ej(3, 3, 3);
        ej.set(j, CycloScalar::one(3, 3));
        CHECK(a.apply(ej) == a.column(j));
    }
}

TEST_CASE("global phase canonicalization") {
    // v = (i/2, 1/2): the unit rescale turns the lead entry into |i/2| = 1/2
    CVector v(2, 4, 4);
    v.set(0, CycloScalar::imaginary_unit(4).scaled(Rat(1, 2)));
    v.set(1, CycloScalar::from_rational(Rat(1, 2), 4, 4));
    CVector c = mubforge::phase_canonicalized(v);
    CHECK(c[0] == CycloScalar::from_rational(Rat(1, 2), 4, 4));
    CHECK(c[1] == CycloScalar::imaginary_unit(4).scaled(Rat(-1, 2)));
    // idempotent and norm preserving
    CHECK(mubforge::phase_canonicalized(c) == c);
    CHECK(mubforge::inner(c, c) == mubforge::inner(v, v));

    // lead entry with an irrational magnitude: v = ((1+i)/2, 0) over d = 2
    CVector s(2, 4, 2);
    s.set(0, (CycloScalar::one(4, 2) + CycloScalar::imaginary_unit(2)).scaled(Rat(1, 2)));
    s.set(1, CycloScalar::zero(4, 2));
    CVector cs = mubforge::phase_canonicalized(s);
    CHECK(cs[0] == CycloScalar::inv_sqrt_d(4, 2));  // |(1+i)/2| = 1/sqrt(2)
    CHECK(mubforge::phase_canonicalized(cs) == cs);

    CVector zero(2, 4, 2);
    CHECK_THROWS_AS(mubforge::phase_canonicalized(zero), std::domain_error);
}

TEST_CASE("shape and ring mismatches are rejected") {
    CMatrix a(2, 4, 4), b(3, 4, 4), c(2, 4, 8);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_THROWS_AS(mubforge::tensor(a, c), std::invalid_argument);
    CVector u(2, 4, 4), w(3, 4, 4);
    CHECK_THROWS_AS(mubforge::inner(u, w), std::invalid_argument);
}
