#pragma once

#include <string>
#include <vector>

#include "mubforge/weyl.hpp"

namespace mubforge {

/** How a family was constructed. */
enum class Route { PrimeFV, OddCompositeVF, EvenJointDiag };

// "prime_fv" | "odd_composite_vf" | "even_joint_diag"
std::string route_name(Route r);

/**
 * One orthonormal basis together with the commuting class it diagonalizes.
 *
 * Invariants (enforced by the constructors in this module):
 *  - vectors are orthonormal, exactly;
 *  - every vector is an eigenvector of every member of the provenance class,
 *    with a unit-modulus eigenvalue, exactly;
 *  - every vector is phase-canonical (first nonzero entry a positive rational
 *    times a nonnegative power of 1/sqrt(d)).
 */
struct Basis {
    long dim;
    ClassId provenance;
    std::string ordering_tag;  // human-readable description of the vector order
    std::vector<CVector> vectors;
};

/** A complete family of d+1 pairwise mutually unbiased bases. */
struct MubFamily {
    long dim;
    Route route;
    std::vector<Basis> bases;  // diagonal class first, then the rest in class order
};

/** One failed orthonormality or unbiasedness check (see verify_unbiased). */
struct OverlapViolation {
    long basis_a, vec_i, basis_b, vec_j;
    CycloScalar overlap_sq;  // the offending |<u|w>|^2
};

// Full family for prime d in the natural basis: the computational basis plus the
// column bases of the phase-rotated Fourier transforms, one per mixed class.
// Throws std::invalid_argument unless d is prime; std::logic_error if any exact
// invariant check fails (construction is verified, not assumed).
MubFamily mubs_prime(long d);

// Full family for d = p^n, p odd, n >= 2, in the power-ordered basis: computational,
// Fourier-adjoint columns, and one phase-rotated Fourier-adjoint basis per mixed class.
MubFamily mubs_odd_composite(const FieldSpec& spec);

// Full family for d = 2^n, n >= 2: joint eigenbasis of each class by sequential
// exact eigenspace refinement (every member squares to +/-I, so eigenvalues lie in
// {1, i, -1, -i} and the splitting projectors (I + conj(lambda) M)/2 are exact).
MubFamily mubs_even_composite(const FieldSpec& spec);

// Route dispatcher: n = 1 -> mubs_prime, p odd -> mubs_odd_composite, p = 2 ->
// mubs_even_composite.
MubFamily mubs(const FieldSpec& spec);

// The odd-characteristic formula construction at any n >= 1 over the power-ordered
// field operators. At n >= 2 this is exactly mubs_odd_composite; the n = 1 case exists
// so the field machinery can be cross-checked against the prime route.
MubFamily field_formula_family(const FieldSpec& spec);

// Exhaustive exact check of every within-basis inner product against delta_ij and
// every cross-basis |<u|w>|^2 against 1/d. Returns one row per violated pair
// (empty on success); never throws on violations.
std::vector<OverlapViolation> verify_unbiased(const MubFamily& fam);

// Exact check that every vector of b is an eigenvector of every member of cls with a
// unit-modulus eigenvalue. Returns human-readable violation descriptions.
std::vector<std::string> verify_eigenbasis(const Basis& b, const CommutingClass& cls);

}  // namespace mubforge
