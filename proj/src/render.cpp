#include "mubforge/render.hpp"

#include <algorithm>
#include <sstream>

namespace mubforge {

namespace {

const char* kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴",
                               "⁵", "⁶", "⁷", "⁸", "⁹"};

// exponent suffix: nothing for 1, a superscript digit for 2..9, ^e beyond
std::string sup(long e) {
    if (e == 1) return "";
    if (e >= 0 && e <= 9) return kSuperscripts[e];
    return "^" + std::to_string(e);
}

std::string rat_str(const Rat& r) {
    std::string s = rat_num_str(r);
    if (r.get_den() != 1) s += "/" + rat_den_str(r);
    return s;
}

// coefficient prefix in front of a symbol: "" for 1, "-" for -1, "2" / "3/2·" otherwise
std::string coeff_prefix(const Rat& c) {
    if (c == 1) return "";
    if (c == -1) return "-";
    std::string s = rat_str(c);
    return c.get_den() == 1 ? s : s + "·";
}

// power of omega with the high half written as conjugates: ω̄ = ζ^(m-1), ω̄² = ζ^(m-2), ...
std::string omega_power(long e, long m) {
    if (2 * e <= m - 1) return "ω" + sup(e);
    return "ω̄" + sup(m - e);
}

// unscaled coefficient sum as signed terms; n_terms reports how many were emitted
std::string coeff_sum(const CycloScalar& s, int& n_terms) {
    long m = s.conductor();
    std::ostringstream out;
    n_terms = 0;
    // a pure multiple of the folded root zeta^(m-1) canonicalizes to equal coefficients
    // everywhere; print it back as the conjugate symbol
    if (m != 4) {
        const Rat& c0 = s.coeffs()[0];
        bool uniform = c0 != 0;
        for (long j = 1; uniform && j < m - 1; ++j) uniform = s.coeffs()[j] == c0;
        if (uniform) {
            n_terms = 1;
            return coeff_prefix(-c0) + omega_power(m - 1, m);
        }
    }
    for (long j = 0; j < m; ++j) {
        const Rat& c = s.coeffs()[j];
        if (c == 0) continue;
        std::string sym = j == 0 ? "" : (m == 4 ? "i" : omega_power(j, m));
        if (n_terms == 0) {
            out << (j == 0 ? rat_str(c) : coeff_prefix(c) + sym);
        } else {
            Rat a = c < 0 ? Rat(-c) : c;
            out << (c < 0 ? " - " : " + ");
            out << (j == 0 ? rat_str(a) : coeff_prefix(a) + sym);
        }
        ++n_terms;
    }
    return out.str();
}

// display width in columns: code points minus combining marks (the macron in ω̄)
size_t display_width(const std::string& s) {
    size_t w = 0;
    for (size_t i = 0; i < s.size();) {
        unsigned char b = s[i];
        size_t len = b < 0x80 ? 1 : b < 0xe0 ? 2 : b < 0xf0 ? 3 : 4;
        if (s.compare(i, 2, "̄") != 0) ++w;
        i += len;
    }
    return w;
}

std::string pauli_factor(int x, int z) {
    if (x == 0 && z == 0) return "I";
    if (x == 0) return "\U0001d4b5" + sup(z);                    // Z
    if (z == 0) return "\U0001d4b3" + sup(x);                    // X
    if (x == z) return "\U0001d4b4" + sup(x);                    // Y = XZ
    if (z == 2 * x || (x == 2 && z == 1)) {
        long e = x == 2 && z == 1 ? 2 : x;                       // W = XZ², W² = X²Z
        return "\U0001d4b2" + sup(e);
    }
    return "\U0001d4b3" + sup(x) + "\U0001d4b5" + sup(z);
}

}  // namespace

std::string render(const CycloScalar& s) {
    if (s.is_zero()) return "0";
    int n_terms = 0;
    std::string sum = coeff_sum(s, n_terms);
    if (s.scale_k() == 0) return sum;
    std::string root = "√" + std::to_string(s.ambient_dim());
    if (n_terms > 1) return "(" + sum + ")/" + root;
    return sum == "1" ? "1/" + root : sum + "/" + root;
}

std::string render(const CVector& v) {
    std::string out = "(";
    for (long i = 0; i < v.dim(); ++i) {
        if (i) out += ", ";
        out += render(v[i]);
    }
    return out + ")";
}

std::string render(const CMatrix& mat) {
    bool diagonal = true;
    for (long i = 0; diagonal && i < mat.dim(); ++i)
        for (long j = 0; j < mat.dim(); ++j)
            if (i != j && !mat.at(i, j).is_zero()) { diagonal = false; break; }
    if (diagonal) {
        std::string out = "diag(";
        for (long i = 0; i < mat.dim(); ++i) {
            if (i) out += ", ";
            out += render(mat.at(i, i));
        }
        return out + ")";
    }
    std::vector<std::vector<std::string>> cells(mat.dim());
    std::vector<size_t> width(mat.dim(), 0);
    for (long i = 0; i < mat.dim(); ++i)
        for (long j = 0; j < mat.dim(); ++j) {
            cells[i].push_back(render(mat.at(i, j)));
            width[j] = std::max(width[j], display_width(cells[i].back()));
        }
    std::ostringstream out;
    for (long i = 0; i < mat.dim(); ++i) {
        out << "[ ";
        for (long j = 0; j < mat.dim(); ++j) {
            const std::string& c = cells[i][j];
            out << c << std::string(width[j] - display_width(c) + (j + 1 < mat.dim() ? 2 : 0), ' ');
        }
        out << " ]\n";
    }
    return out.str();
}

std::string render(const CommutingClass& cls, long d) {
    std::ostringstream out;
    out << "class " << cls.id.to_string() << " (" << cls.members.size()
        << (cls.members.size() == 1 ? " member)\n" : " members)\n");
    for (const auto& [label, mat] : cls.members) {
        std::string body = render(mat);
        if (body.find('\n') == std::string::npos) {
            out << "  " << label.to_string(d) << " = " << body << "\n";
        } else {
            out << "  " << label.to_string(d) << " =\n";
            std::istringstream lines(body);
            for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
        }
    }
    return out.str();
}

std::string render(const MubFamily& fam) {
    std::ostringstream out;
    out << "d = " << fam.dim << ", route " << route_name(fam.route) << ", "
        << fam.bases.size() << " bases\n";
    for (size_t b = 0; b < fam.bases.size(); ++b) {
        const Basis& basis = fam.bases[b];
        out << "basis " << b << " [" << basis.provenance.to_string() << "], "
            << basis.ordering_tag << ":\n";
        for (const CVector& v : basis.vectors) out << "  " << render(v) << "\n";
    }
    return out.str();
}

std::string render(const PauliWord& word) {
    std::string out;
    if (!word.phase.is_one()) out = render(word.phase) + " · ";
    for (size_t l = 0; l < word.factors.size(); ++l) {
        if (l) out += " ⊗ ";
        out += pauli_factor(word.factors[l].first, word.factors[l].second);
    }
    return out;
}

std::string render(const std::vector<OverlapViolation>& violations) {
    if (violations.empty()) return "no violations\n";
    std::ostringstream out;
    for (const OverlapViolation& v : violations)
        out << "basis " << v.basis_a << " vec " << v.vec_i << " × basis " << v.basis_b
            << " vec " << v.vec_j << ": |<u|w>|² = " << render(v.overlap_sq) << "\n";
    return out.str();
}

}  // namespace mubforge
