#include "mubforge/mub.hpp"

#include <stdexcept>
#include <utility>

namespace mubforge {

std::string route_name(Route r) {
    switch (r) {
        case Route::PrimeFV: return "prime_fv";
        case Route::OddCompositeVF: return "odd_composite_vf";
        case Route::EvenJointDiag: return "even_joint_diag";
    }
    throw std::logic_error("route_name: unknown route");
}

namespace {

// Normalizes v to unit length and canonical phase in one step: the first nonzero
// entry becomes sqrt(|v_lead|^2 / |v|^2), a positive scalar. Written this way so
// only that ratio needs an exact square root; |v| itself may have none (e.g. an
// unnormalized eigenvector with |v|^2 = 8 in the d = 4 ring).
CVector unit_normalized(const CVector& v) {
    long lead = -1;
    for (long i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) { lead = i; break; }
    if (lead < 0) throw std::domain_error("unit_normalized: zero vector");
    CycloScalar nsq = inner(v, v);
    const CycloScalar& e = v[lead];
    CycloScalar esq = e * e.conjugate();
    CycloScalar factor = e.conjugate() * esq.inverse() * sqrt_rational(esq * nsq.inverse());
    return v.scaled(factor);
}

std::vector<CVector> column_basis(const CMatrix& mat) {
    std::vector<CVector> vecs;
    vecs.reserve(mat.dim());
    for (long j = 0; j < mat.dim(); ++j) vecs.push_back(unit_normalized(mat.column(j)));
    return vecs;
}

Basis computational_basis(long d, long m, const ClassId& id, std::string tag) {
    return Basis{d, id, std::move(tag),
                 column_basis(CMatrix::identity(d, m, d))};
}

// Spanning subset in echelon form (pivot entries scaled to 1); exact Gaussian
// elimination over the cyclotomic field. Zero vectors in the input are dropped.
std::vector<CVector> independent_span(const std::vector<CVector>& vecs) {
    std::vector<std::pair<long, CVector>> pivots;
    for (const CVector& w : vecs) {
        CVector v = w;
        for (const auto& [pos, pvec] : pivots)
            if (!v[pos].is_zero()) v = v - pvec.scaled(v[pos]);
        long lead = -1;
        for (long i = 0; i < v.dim(); ++i)
            if (!v[i].is_zero()) { lead = i; break; }
        if (lead < 0) continue;
        pivots.push_back({lead, v.scaled(v[lead].inverse())});
    }
    std::vector<CVector> out;
    out.reserve(pivots.size());
    for (auto& [pos, pvec] : pivots) out.push_back(std::move(pvec));
    return out;
}

// Joint eigenbasis of one commuting class by sequential eigenspace refinement.
// Every member squares to c*I with c = +/-1, so its eigenvalues are two of
// {1, i, -1, -i} and (I + conj(lambda) M)/2 projects exactly onto each eigenspace.
// Vector order: eigenvalue tuples in lexicographic order, members by subscript,
// eigenvalues ordered 1, i, -1, -i.
std::vector<CVector> refined_joint_eigenbasis(const CommutingClass& cls, long d, long m) {
    CycloScalar one = CycloScalar::one(m, d);
    CycloScalar half = CycloScalar::from_rational(Rat(1, 2), m, d);
    CMatrix ident = CMatrix::identity(d, m, d);

    std::vector<std::vector<CVector>> spaces;
    {
        std::vector<CVector> full;
        for (long j = 0; j < d; ++j) full.push_back(ident.column(j));
        spaces.push_back(std::move(full));
    }

    for (const auto& [label, mat] : cls.members) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.size() != 1) { all_split = false; break; }
        if (all_split) break;

        CMatrix sq = mat * mat;
        CycloScalar c = sq.at(0, 0);
        if (sq != ident.scaled(c))
            throw std::logic_error("refinement: member " + label.to_string(d) +
                                   " does not square to a scalar");
        std::vector<long> quarter_turns;
        if (c == one) quarter_turns = {0, 2};
        else if (c == -one) quarter_turns = {1, 3};
        else
            throw std::logic_error("refinement: member " + label.to_string(d) +
                                   " squares to neither I nor -I");

        std::vector<std::vector<CVector>> next;
        for (const auto& s : spaces) {
            if (s.size() == 1) {
                next.push_back(s);
                continue;
            }
            for (long t : quarter_turns) {
                CycloScalar lam_conj = CycloScalar::root_of_unity(m, d, t).conjugate();
                std::vector<CVector> projected;
                projected.reserve(s.size());
                for (const CVector& v : s)
                    projected.push_back((v + mat.apply(v).scaled(lam_conj)).scaled(half));
                std::vector<CVector> span = independent_span(projected);
                if (!span.empty()) next.push_back(std::move(span));
            }
        }
        spaces = std::move(next);
    }

    if ((long)spaces.size() != d)
        throw std::logic_error("refinement: class " + cls.id.to_string() + " split into " +
                               std::to_string(spaces.size()) + " subspaces, expected " +
                               std::to_string(d));
    std::vector<CVector> vecs;
    vecs.reserve(d);
    for (const auto& s : spaces) {
        if (s.size() != 1)
            throw std::logic_error("refinement: class " + cls.id.to_string() +
                                   " left a subspace of dimension " +
                                   std::to_string(s.size()));
        vecs.push_back(unit_normalized(s.front()));
    }
    return vecs;
}

// Exact invariant gate run by every constructor: class pairing, joint-eigenvector
// property, orthonormality, and pairwise unbiasedness.
void verify_family_or_throw(const MubFamily& fam,
                            const std::vector<CommutingClass>& classes) {
    if (fam.bases.size() != classes.size())
        throw std::logic_error("family has " + std::to_string(fam.bases.size()) +
                               " bases for " + std::to_string(classes.size()) + " classes");
    for (size_t i = 0; i < classes.size(); ++i) {
        const Basis& b = fam.bases[i];
        if (!(b.provenance == classes[i].id))
            throw std::logic_error("basis " + std::to_string(i) + " provenance " +
                                   b.provenance.to_string() + " does not match class " +
                                   classes[i].id.to_string());
        auto errs = verify_eigenbasis(b, classes[i]);
        if (!errs.empty()) throw std::logic_error(errs.front());
    }
    auto rows = verify_unbiased(fam);
    if (!rows.empty()) {
        const OverlapViolation& r = rows.front();
        throw std::logic_error(
            "family failed exact unbiasedness: " + std::to_string(rows.size()) +
            " violations, first at basis " + std::to_string(r.basis_a) + " vector " +
            std::to_string(r.vec_i) + " vs basis " + std::to_string(r.basis_b) +
            " vector " + std::to_string(r.vec_j));
    }
}

}  // namespace

MubFamily mubs_prime(long d) {
    std::vector<CommutingClass> classes = prime_classes(d);  // rejects non-prime d
    long m = scalar_conductor(d);

    MubFamily fam{d, Route::PrimeFV, {}};
    fam.bases.push_back(computational_basis(d, m, classes[0].id,
                                            "standard vectors in natural order"));
    CMatrix vdag = prime_phase(d).adjoint();
    CMatrix rotated = prime_fourier(d);
    for (long mi = 0; mi < d; ++mi) {
        fam.bases.push_back(Basis{d, classes[1 + mi].id,
                                  "rotated Fourier columns in natural order",
                                  column_basis(rotated)});
        if (mi + 1 < d) rotated = vdag * rotated;
    }

    verify_family_or_throw(fam, classes);
    return fam;
}

MubFamily field_formula_family(const FieldSpec& spec) {
    if (spec.p() == 2)
        throw std::invalid_argument(
            "field_formula_family: even characteristic has no phase-operator formula; "
            "use the joint-diagonalization builder");
    std::vector<CommutingClass> classes = field_classes(spec);
    long d = spec.d(), m = scalar_conductor(d);

    MubFamily fam{d, Route::OddCompositeVF, {}};
    fam.bases.push_back(computational_basis(d, m, classes[0].id,
                                            "standard vectors in power order"));
    CMatrix fdag = field_fourier(spec).adjoint();
    fam.bases.push_back(Basis{d, classes[1].id, "adjoint Fourier columns in power order",
                              column_basis(fdag)});
    for (long r = 0; r < d - 1; ++r) {
        CMatrix rotated = field_phase(spec, 0, r).adjoint() * fdag;
        fam.bases.push_back(Basis{d, classes[2 + r].id,
                                  "rotated adjoint Fourier columns in power order",
                                  column_basis(rotated)});
    }

    verify_family_or_throw(fam, classes);
    return fam;
}

MubFamily mubs_odd_composite(const FieldSpec& spec) {
    if (spec.p() == 2)
        throw std::invalid_argument(
            "mubs_odd_composite: characteristic 2 routes to mubs_even_composite");
    if (spec.n() < 2)
        throw std::invalid_argument("mubs_odd_composite: prime dimensions route to mubs_prime");
    return field_formula_family(spec);
}

MubFamily mubs_even_composite(const FieldSpec& spec) {
    if (spec.p() != 2)
        throw std::invalid_argument(
            "mubs_even_composite: odd characteristic routes to mubs_odd_composite");
    if (spec.n() < 2)
        throw std::invalid_argument("mubs_even_composite: prime dimensions route to mubs_prime");
    std::vector<CommutingClass> classes = build_classes(spec);
    long d = spec.d(), m = scalar_conductor(d);

    MubFamily fam{d, Route::EvenJointDiag, {}};
    for (const CommutingClass& cls : classes)
        fam.bases.push_back(Basis{
            d, cls.id,
            "eigenvalue tuples in lexicographic order (members by subscript; 1, i, -1, -i)",
            refined_joint_eigenbasis(cls, d, m)});

    verify_family_or_throw(fam, classes);
    return fam;
}

MubFamily mubs(const FieldSpec& spec) {
    if (spec.n() == 1) return mubs_prime(spec.d());
    if (spec.p() == 2) return mubs_even_composite(spec);
    return mubs_odd_composite(spec);
}

std::vector<OverlapViolation> verify_unbiased(const MubFamily& fam) {
    std::vector<OverlapViolation> rows;
    if (fam.bases.empty()) return rows;
    long d = fam.dim;
    long m = fam.bases.front().vectors.front().conductor();
    CycloScalar one = CycloScalar::one(m, d);
    CycloScalar zero = CycloScalar::zero(m, d);
    CycloScalar inv_d = CycloScalar::from_rational(Rat(1, d), m, d);

    for (size_t a = 0; a < fam.bases.size(); ++a) {
        const auto& va = fam.bases[a].vectors;
        for (long i = 0; i < (long)va.size(); ++i)
            for (long j = i; j < (long)va.size(); ++j) {
                CycloScalar s = inner(va[i], va[j]);
                if (s == (i == j ? one : zero)) continue;
                rows.push_back({(long)a, i, (long)a, j, s * s.conjugate()});
            }
        for (size_t b = a + 1; b < fam.bases.size(); ++b) {
            const auto& vb = fam.bases[b].vectors;
            for (long i = 0; i < (long)va.size(); ++i)
                for (long j = 0; j < (long)vb.size(); ++j) {
                    CycloScalar osq = inner(va[i], vb[j]);
                    osq = osq * osq.conjugate();
                    if (osq != inv_d) rows.push_back({(long)a, i, (long)b, j, osq});
                }
        }
    }
    return rows;
}

std::vector<std::string> verify_eigenbasis(const Basis& b, const CommutingClass& cls) {
    std::vector<std::string> errs;
    long d = b.dim;
    if ((long)b.vectors.size() != d)
        errs.push_back("basis for " + cls.id.to_string() + " has " +
                       std::to_string(b.vectors.size()) + " vectors, expected " +
                       std::to_string(d));
    for (const auto& [label, mat] : cls.members) {
        for (size_t j = 0; j < b.vectors.size(); ++j) {
            const CVector& v = b.vectors[j];
            CVector w = mat.apply(v);
            long lead = -1;
            for (long i = 0; i < v.dim(); ++i)
                if (!v[i].is_zero()) { lead = i; break; }
            if (lead < 0) {
                errs.push_back("vector " + std::to_string(j) + " of the " +
                               cls.id.to_string() + " basis is zero");
                continue;
            }
            CycloScalar lam = w[lead] * v[lead].inverse();
            if (w != v.scaled(lam)) {
                errs.push_back("vector " + std::to_string(j) + " of the " +
                               cls.id.to_string() + " basis is not an eigenvector of " +
                               label.to_string(d));
                continue;
            }
            if (!(lam * lam.conjugate()).is_one())
                errs.push_back("eigenvalue of " + label.to_string(d) + " on vector " +
                               std::to_string(j) + " of the " + cls.id.to_string() +
                               " basis is not unit modulus");
        }
    }
    return errs;
}

}  // namespace mubforge
