#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mubforge/finite_field.hpp"
#include "mubforge/matrix.hpp"

namespace mubforge {

/** Conductor used for exact scalars in dimension d = p^n: p for odd p, 4 for p = 2. */
long scalar_conductor(long d);

/** Name of a generalized Pauli operator as produced by the class constructions. */
struct OperatorLabel {
    enum class Kind {
        PrimeZ,   // Z^a
        PrimeXZ,  // (X Z^a)^b   (rendered Y for d = 2, a = 1)
        Zq,       // Z_a
        Xq,       // X_a
        XqZr,     // X_a Z_b
    };
    Kind kind;
    long a = 0;
    long b = 0;
    std::string to_string(long d) const;
};

/** Identifier of a commuting operator class. */
struct ClassId {
    enum class Kind { Diagonal, Shift, Mixed };
    Kind kind = Kind::Diagonal;
    long r = 0;  // mixed-class index
    std::string to_string() const;  // "diagonal" | "shift" | "mixed:<r>"
    bool operator==(const ClassId& o) const { return kind == o.kind && r == o.r; }
};

/** One commuting class: d-1 pairwise commuting unitaries with their labels. */
struct CommutingClass {
    ClassId id;
    std::vector<std::pair<OperatorLabel, CMatrix>> members;
};

// --- prime dimension, natural basis |0>, |1>, ..., |d-1> ---

CMatrix prime_shift(long d);    // X |n> = |n+1 mod d>
CMatrix prime_clock(long d);    // Z = diag(omega^n)
CMatrix prime_fourier(long d);  // F = (1/sqrt d) sum omega^(n n') |n><n'|
// V = diag(omega^(-(n^2-n)(d+1)/2)) for odd d; diag(1, -i) for d = 2
CMatrix prime_phase(long d);
// d+1 classes: {Z^k}, then {(X Z^m)^k} for m = 0..d-1 (d = 2 uses Y = iXZ)
std::vector<CommutingClass> prime_classes(long d);

// --- prime power, power-ordered basis |0>, |alpha>, |alpha^2>, ..., |alpha^(d-1)> ---

// position of an element in the power-ordered basis (zero at 0, alpha^k at k, 1 at d-1)
long power_position(const FieldElement& a);
// element sitting at a given position
FieldElement element_at_position(const FieldSpec& spec, long pos);

// Z_q = |0><0| + sum_k chi(alpha^(q+k)) |alpha^k><alpha^k|, subscripts mod d-1
CMatrix field_clock(const FieldSpec& spec, long q);
// X_q |theta> = |theta + alpha^q>
CMatrix field_shift(const FieldSpec& spec, long q);
// F = (1/sqrt d) [ |0><0| + sum |0><alpha^k| + sum |alpha^k><0|
//                  + sum chi(alpha^(k+k')) |alpha^k'><alpha^k| ]
CMatrix field_fourier(const FieldSpec& spec);
// V_q^(r) = |0><0| + sum_k conj(chi)(2^-1 alpha^(r+2k-q)) |alpha^k><alpha^k|; odd p only
CMatrix field_phase(const FieldSpec& spec, long q, long r);

// d+1 commuting classes {Z_q}, {X_q}, {X_q Z_(q+r)} for r = 0..d-2 (n >= 2);
// n = 1 routes to prime_classes. Verified on construction; throws on any violation.
std::vector<CommutingClass> build_classes(const FieldSpec& spec);
// Same class construction from the field operators at any n >= 1 (n = 1 exists so the
// power-ordered machinery can be cross-checked against the prime route). Verified on
// construction; throws on any violation.
std::vector<CommutingClass> field_classes(const FieldSpec& spec);

// Structural checks behind build_classes: member count, unitarity, commutation within
// each class, and trace orthogonality Tr(A B-dagger) = d delta across all members.
// Returns human-readable violation descriptions (empty = all good).
std::vector<std::string> verify_class_structure(const std::vector<CommutingClass>& classes,
                                                long d);

}  // namespace mubforge
