#pragma once

#include <json.hpp>

#include <vector>

#include "mubforge/finite_field.hpp"
#include "mubforge/matrix.hpp"
#include "mubforge/mub.hpp"
#include "mubforge/tensor.hpp"
#include "mubforge/weyl.hpp"

namespace mubforge {

using Json = nlohmann::json;  // std::map storage, so dumped keys are sorted

// Document schemas (all emitters are deterministic: sorted keys, canonical values):
//   FieldSpec    {"p":2,"n":2,"modulus":[1,1,1]}            modulus constant-first
//   FieldElement {"power":3} | {"zero":true}
//   CycloScalar  {"m":3,"k":1,"coeffs":[["1","1"],...]}     coeffs as [num, den]
//                                                           strings, index = zeta power
//   CVector      [CycloScalar, ...]
//   CMatrix      {"dim":4,"entries":[[CycloScalar,...],...]}
//   class        {"class_id":"mixed:3","members":[{"label":"X_0Z_3","matrix":...},...]}
//   MubFamily    {"d":4,"route":"even_joint_diag",
//                 "bases":[{"class":"diagonal","ordering":...,"vectors":[...]},...]}
//   violations   [{"basis_a":0,"vec_i":0,"basis_b":1,"vec_j":2,"overlap_sq":...},...]
//   PauliWord    {"p":3,"factors":[{"x":1,"z":2},...],"phase":CycloScalar}

Json to_json(const FieldSpec& spec);
Json to_json(const FieldElement& a);
Json to_json(const CycloScalar& s);
Json to_json(const CVector& v);
Json to_json(const CMatrix& mat);
Json to_json(const CommutingClass& cls, long d);
Json to_json(const MubFamily& fam);
Json to_json(const std::vector<OverlapViolation>& violations);
Json to_json(const PauliWord& word);

// Readers invert the emitters above; each throws std::invalid_argument on a document
// that does not match its schema. Scalars need the ambient dimension, which the
// enclosing document carries ("dim", "d", or p^(factor count)).
FieldSpec field_spec_from_json(const Json& j);
FieldElement element_from_json(const Json& j, const FieldSpec& spec);
CycloScalar scalar_from_json(const Json& j, long d);
CVector vector_from_json(const Json& j, long d);
CMatrix matrix_from_json(const Json& j);
MubFamily family_from_json(const Json& j);
std::vector<OverlapViolation> violations_from_json(const Json& j, long d);
PauliWord pauli_word_from_json(const Json& j);

}  // namespace mubforge
