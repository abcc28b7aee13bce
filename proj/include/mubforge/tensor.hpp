#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mubforge/weyl.hpp"

namespace mubforge {

/**
 * Relabeling of the power-ordered basis by base-p digit strings: position k maps to
 * the index whose digits are the coordinates of alpha^k over the chosen field basis,
 * with the first generator's coordinate most significant (and the zero element at
 * the all-zero string). perm is a bijection with perm[0] = 0.
 */
struct DigitMap {
    FieldSpec spec;
    FieldBasis basis;
    std::vector<long> perm;  // perm[power position] = digit-string index
};

/**
 * Tensor factorization of a d = p^n operator: phase times the Kronecker product of
 * the single-qudit words X^(a_l) Z^(b_l), leftmost (most significant digit) first.
 * The phase is a root of unity.
 */
struct PauliWord {
    long p;
    std::vector<std::pair<int, int>> factors;  // (a_l, b_l), each in 0..p-1
    CycloScalar phase;
};

// The p x p generalized Pauli generators (shift X, clock Z) with Z X = omega_p X Z.
// Throws std::invalid_argument unless p is prime.
std::pair<CMatrix, CMatrix> single_qudit_paulis(long p);

// Digit relabeling for a field basis; verified bijective on construction.
DigitMap build_digit_map(const FieldSpec& spec, const FieldBasis& basis);

// Factor a power-ordered operator through the digit relabeling by exhaustive search
// over all p^(2n) exponent tuples; the match is unique (distinct words are
// trace-orthogonal). Throws std::domain_error when op is proportional to no word.
PauliWord decompose(const CMatrix& op, const DigitMap& map);

// Power-ordered matrix of a word (exact inverse of decompose).
CMatrix compose(const PauliWord& word, const DigitMap& map);

// If the digit-relabeled Fourier matrix equals the n-fold Kronecker power of the
// p x p Fourier matrix exactly, returns those n factors; nullopt otherwise.
std::optional<std::vector<CMatrix>> factorization_of_F(const FieldSpec& spec,
                                                       const DigitMap& map);

}  // namespace mubforge
