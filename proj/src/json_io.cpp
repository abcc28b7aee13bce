#include "mubforge/json_io.hpp"

#include <stdexcept>
#include <string>

namespace mubforge {

namespace {

// Canonical support: the folded coefficient slots (c_2, c_3 for m = 4, c_{m-1} for
// odd prime m) are always zero, so the documents omit them.
long coeff_count(long m) { return m == 4 ? 2 : m - 1; }

long require_long(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("expected integer field \"") + key + "\"");
    return j.at(key).get<long>();
}

const Json& require_array(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw std::invalid_argument(std::string("expected array field \"") + key + "\"");
    return j.at(key);
}

std::string require_string(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw std::invalid_argument(std::string("expected string field \"") + key + "\"");
    return j.at(key).get<std::string>();
}

ClassId class_id_from_string(const std::string& s) {
    if (s == "diagonal") return {ClassId::Kind::Diagonal, 0};
    if (s == "shift") return {ClassId::Kind::Shift, 0};
    if (s.rfind("mixed:", 0) == 0)
        return {ClassId::Kind::Mixed, std::stol(s.substr(6))};
    throw std::invalid_argument("unknown class id \"" + s + "\"");
}

Route route_from_string(const std::string& s) {
    for (Route r : {Route::PrimeFV, Route::OddCompositeVF, Route::EvenJointDiag})
        if (route_name(r) == s) return r;
    throw std::invalid_argument("unknown route \"" + s + "\"");
}

}  // namespace

Json to_json(const FieldSpec& spec) {
    return Json{{"p", spec.p()}, {"n", spec.n()}, {"modulus", spec.modulus()}};
}

Json to_json(const FieldElement& a) {
    if (a.is_zero()) return Json{{"zero", true}};
    return Json{{"power", *a.power()}};
}

Json to_json(const CycloScalar& s) {
    Json coeffs = Json::array();
    for (long j = 0; j < coeff_count(s.conductor()); ++j) {
        const Rat& c = s.coeffs().at(j);
        coeffs.push_back(Json::array({rat_num_str(c), rat_den_str(c)}));
    }
    return Json{{"m", s.conductor()}, {"k", s.scale_k()}, {"coeffs", coeffs}};
}

Json to_json(const CVector& v) {
    Json a = Json::array();
    for (long i = 0; i < v.dim(); ++i) a.push_back(to_json(v[i]));
    return a;
}

Json to_json(const CMatrix& mat) {
    Json rows = Json::array();
    for (long i = 0; i < mat.dim(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < mat.dim(); ++j) row.push_back(to_json(mat.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"dim", mat.dim()}, {"entries", rows}};
}

Json to_json(const CommutingClass& cls, long d) {
    Json members = Json::array();
    for (const auto& [label, mat] : cls.members)
        members.push_back(Json{{"label", label.to_string(d)}, {"matrix", to_json(mat)}});
    return Json{{"class_id", cls.id.to_string()}, {"members", members}};
}

Json to_json(const MubFamily& fam) {
    Json bases = Json::array();
    for (const Basis& b : fam.bases) {
        Json vectors = Json::array();
        for (const CVector& v : b.vectors) vectors.push_back(to_json(v));
        bases.push_back(Json{{"class", b.provenance.to_string()},
                             {"ordering", b.ordering_tag},
                             {"vectors", vectors}});
    }
    return Json{{"d", fam.dim}, {"route", route_name(fam.route)}, {"bases", bases}};
}

Json to_json(const std::vector<OverlapViolation>& violations) {
    Json rows = Json::array();
    for (const OverlapViolation& v : violations)
        rows.push_back(Json{{"basis_a", v.basis_a},
                            {"vec_i", v.vec_i},
                            {"basis_b", v.basis_b},
                            {"vec_j", v.vec_j},
                            {"overlap_sq", to_json(v.overlap_sq)}});
    return rows;
}

Json to_json(const PauliWord& word) {
    Json factors = Json::array();
    for (const auto& [x, z] : word.factors)
        factors.push_back(Json{{"x", x}, {"z", z}});
    return Json{{"p", word.p}, {"factors", factors}, {"phase", to_json(word.phase)}};
}

FieldSpec field_spec_from_json(const Json& j) {
    long p = require_long(j, "p");
    long n = require_long(j, "n");
    FieldSpec spec = FieldSpec::build(p, static_cast<int>(n));
    const Json& mod = require_array(j, "modulus");
    std::vector<int> got(mod.begin(), mod.end());
    if (got != spec.modulus())
        throw std::invalid_argument("modulus does not match the canonical choice for GF(p^n)");
    return spec;
}

FieldElement element_from_json(const Json& j, const FieldSpec& spec) {
    if (j.contains("zero")) {
        if (!j.at("zero").is_boolean() || !j.at("zero").get<bool>())
            throw std::invalid_argument("element \"zero\" field must be true");
        return spec.zero();
    }
    return spec.from_power(require_long(j, "power"));
}

CycloScalar scalar_from_json(const Json& j, long d) {
    long m = require_long(j, "m");
    long k = require_long(j, "k");
    if (k != 0 && k != 1) throw std::invalid_argument("scalar scale k must be 0 or 1");
    const Json& coeffs = require_array(j, "coeffs");
    if (static_cast<long>(coeffs.size()) != coeff_count(m))
        throw std::invalid_argument("scalar coefficient count does not match conductor");
    CycloScalar acc = CycloScalar::zero(m, d);
    for (long e = 0; e < static_cast<long>(coeffs.size()); ++e) {
        const Json& pair = coeffs.at(e);
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("scalar coefficient must be a [num, den] pair");
        Rat c = rat_from_strings(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
        if (c != 0) acc = acc + CycloScalar::root_of_unity(m, d, e).scaled(c);
    }
    if (k == 1) acc = acc * CycloScalar::inv_sqrt_d(m, d);
    return acc;
}

CVector vector_from_json(const Json& j, long d) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("vector document must be a nonempty array");
    std::vector<CycloScalar> entries;
    entries.reserve(j.size());
    for (const Json& e : j) entries.push_back(scalar_from_json(e, d));
    return CVector(std::move(entries));
}

CMatrix matrix_from_json(const Json& j) {
    long dim = require_long(j, "dim");
    const Json& rows = require_array(j, "entries");
    if (static_cast<long>(rows.size()) != dim)
        throw std::invalid_argument("matrix row count does not match dim");
    CMatrix mat(dim, scalar_conductor(dim), dim);
    for (long i = 0; i < dim; ++i) {
        const Json& row = rows.at(i);
        if (!row.is_array() || static_cast<long>(row.size()) != dim)
            throw std::invalid_argument("matrix column count does not match dim");
        for (long c = 0; c < dim; ++c) mat.set(i, c, scalar_from_json(row.at(c), dim));
    }
    return mat;
}

MubFamily family_from_json(const Json& j) {
    long d = require_long(j, "d");
    MubFamily fam{d, route_from_string(require_string(j, "route")), {}};
    for (const Json& bj : require_array(j, "bases")) {
        Basis b{d, class_id_from_string(require_string(bj, "class")),
                require_string(bj, "ordering"), {}};
        for (const Json& vj : require_array(bj, "vectors")) {
            CVector v = vector_from_json(vj, d);
            if (v.dim() != d) throw std::invalid_argument("basis vector length does not match d");
            b.vectors.push_back(std::move(v));
        }
        fam.bases.push_back(std::move(b));
    }
    return fam;
}

std::vector<OverlapViolation> violations_from_json(const Json& j, long d) {
    if (!j.is_array()) throw std::invalid_argument("violation report must be an array");
    std::vector<OverlapViolation> rows;
    for (const Json& rj : j)
        rows.push_back({require_long(rj, "basis_a"), require_long(rj, "vec_i"),
                        require_long(rj, "basis_b"), require_long(rj, "vec_j"),
                        scalar_from_json(rj.at("overlap_sq"), d)});
    return rows;
}

PauliWord pauli_word_from_json(const Json& j) {
    long p = require_long(j, "p");
    const Json& factors = require_array(j, "factors");
    if (factors.empty()) throw std::invalid_argument("word must have at least one factor");
    long d = 1;
    for (size_t i = 0; i < factors.size(); ++i) d *= p;
    PauliWord word{p, {}, scalar_from_json(j.at("phase"), d)};
    for (const Json& f : factors)
        word.factors.emplace_back(static_cast<int>(require_long(f, "x")),
                                  static_cast<int>(require_long(f, "z")));
    return word;
}

}  // namespace mubforge
