#pragma once

#include <string>
#include <vector>

#include "mubforge/matrix.hpp"
#include "mubforge/mub.hpp"
#include "mubforge/tensor.hpp"
#include "mubforge/weyl.hpp"

namespace mubforge {

// Symbolic text forms that mirror the conventional typography: roots of unity print
// as 1, -1, i, -i, ω, ω², ω̄ (the conjugate row of powers), scaled entries as ω/√3,
// diagonal matrices as diag(...), tensor words as 𝒴 ⊗ 𝒵². All emitters are
// deterministic; UTF-8 throughout.

std::string render(const CycloScalar& s);
std::string render(const CVector& v);                   // (a, b, c)
std::string render(const CMatrix& mat);                 // diag(...) or an aligned grid
std::string render(const CommutingClass& cls, long d);  // one member per block
std::string render(const MubFamily& fam);
std::string render(const PauliWord& word);
std::string render(const std::vector<OverlapViolation>& violations);

}  // namespace mubforge
