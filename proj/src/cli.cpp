#include "mubforge/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mubforge/json_io.hpp"
#include "mubforge/numeric.hpp"
#include "mubforge/render.hpp"

namespace mubforge {

namespace {

constexpr long kFieldBound = 1024;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FieldSpec checked_spec(const RunConfig& cfg, long bound) {
    if (!is_prime(cfg.p)) throw BadInput("p must be prime");
    if (cfg.n < 1) throw BadInput("n must be at least 1");
    long d = int_pow(cfg.p, cfg.n);
    if (d > bound)
        throw BadInput("d = " + std::to_string(d) + " exceeds the bound " +
                       std::to_string(bound) +
                       (bound == kFieldBound ? "" : " (raise MUBFORGE_MAX_D to override)"));
    return FieldSpec::build(cfg.p, cfg.n, bound);
}

std::string polynomial_string(const std::vector<int>& mod) {
    std::string s;
    for (size_t k = 0; k < mod.size(); ++k) {
        if (mod[k] == 0) continue;
        if (!s.empty()) s += " + ";
        std::string term = k == 0 ? std::to_string(mod[k])
                                  : (mod[k] == 1 ? "" : std::to_string(mod[k]));
        if (k >= 1) term += "t";
        if (k >= 2) term += "^" + std::to_string(k);
        s += term;
    }
    return s;
}

int cmd_field_info(const RunConfig& cfg, std::ostream& out) {
    FieldSpec spec = checked_spec(cfg, kFieldBound);
    long d = spec.d();
    std::vector<FieldElement> elems;
    elems.push_back(spec.zero());
    for (long k = 1; k <= d - 1; ++k) elems.push_back(spec.from_power(k));
    if (cfg.format == "json") {
        Json doc{{"spec", to_json(spec)}};
        Json table = Json::array();
        for (const FieldElement& a : elems)
            table.push_back(Json{{"element", to_json(a)},
                                 {"coeffs", a.coeffs()},
                                 {"trace", field_trace(a)},
                                 {"character", to_json(additive_character(a))}});
        doc["elements"] = table;
        Json jacobi = Json::array();
        for (const auto& l : spec.jacobi_table())
            jacobi.push_back(l ? Json(*l) : Json(nullptr));
        doc["jacobi"] = jacobi;
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "GF(" << d << ") = GF(" << spec.p() << "^" << spec.n() << "), modulus "
        << polynomial_string(spec.modulus()) << "\n";
    out << "elements (power order, a^" << d - 1 << " = 1):\n";
    for (long pos = 0; pos < d; ++pos) {
        const FieldElement& a = elems[pos];
        std::string name = a.is_zero() ? "0" : "a^" + std::to_string(pos);
        out << "  " << name << std::string(name.size() < 8 ? 8 - name.size() : 1, ' ') << "(";
        for (size_t l = 0; l < a.coeffs().size(); ++l)
            out << (l ? ", " : "") << a.coeffs()[l];
        out << ")  tr " << field_trace(a) << "  chi " << render(additive_character(a)) << "\n";
    }
    out << "jacobi logarithms (a^k + a^q = a^(k + L(q-k))):\n";
    const auto& table = spec.jacobi_table();
    for (size_t m = 0; m < table.size(); ++m) {
        out << "  L(" << m << ") = ";
        if (table[m]) out << *table[m] << "\n";
        else out << "undefined (1 + a^" << m << " = 0)\n";
    }
    return 0;
}

int cmd_operators(const RunConfig& cfg, std::ostream& out) {
    FieldSpec spec = checked_spec(cfg, cfg.max_matrix_d);
    long d = spec.d();
    std::vector<std::pair<std::string, CMatrix>> ops;
    if (cfg.n == 1) {
        ops.emplace_back("Z", prime_clock(d));
        ops.emplace_back("X", prime_shift(d));
        ops.emplace_back("F", prime_fourier(d));
        ops.emplace_back("V", prime_phase(d));
    } else {
        long limit = d - 1;
        if ((cfg.q && (*cfg.q < 0 || *cfg.q >= limit)) || (cfg.r && (*cfg.r < 0 || *cfg.r >= limit)))
            throw BadInput("operator indices run from 0 to d-2");
        for (long q = 0; q < limit; ++q) {
            if (cfg.q && *cfg.q != q) continue;
            ops.emplace_back("Z_" + std::to_string(q), field_clock(spec, q));
            ops.emplace_back("X_" + std::to_string(q), field_shift(spec, q));
        }
        ops.emplace_back("F", field_fourier(spec));
        if (cfg.p != 2) {
            long r = cfg.r.value_or(0);
            ops.emplace_back("V^(" + std::to_string(r) + ")", field_phase(spec, 0, r));
        }
    }
    if (cfg.format == "json") {
        Json list = Json::array();
        for (const auto& [label, mat] : ops)
            list.push_back(Json{{"label", label}, {"matrix", to_json(mat)}});
        out << Json{{"d", d}, {"operators", list}}.dump(2) << "\n";
        return 0;
    }
    for (const auto& [label, mat] : ops) {
        std::string body = render(mat);
        out << label << (body.find('\n') == std::string::npos ? " = " + body + "\n"
                                                              : " =\n" + body);
    }
    return 0;
}

std::vector<CommutingClass> filtered_classes(const RunConfig& cfg, const FieldSpec& spec) {
    std::vector<CommutingClass> classes = build_classes(spec);
    if (!cfg.klass) return classes;
    for (const CommutingClass& cls : classes)
        if (cls.id.to_string() == *cfg.klass) return {cls};
    throw BadInput("no class named \"" + *cfg.klass + "\" in dimension " +
                   std::to_string(spec.d()));
}

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
    FieldSpec spec = checked_spec(cfg, cfg.max_matrix_d);
    std::vector<CommutingClass> classes = filtered_classes(cfg, spec);
    if (cfg.format == "json") {
        Json list = Json::array();
        for (const CommutingClass& cls : classes) list.push_back(to_json(cls, spec.d()));
        out << Json{{"d", spec.d()}, {"classes", list}}.dump(2) << "\n";
        return 0;
    }
    for (const CommutingClass& cls : classes) out << render(cls, spec.d());
    return 0;
}

int cmd_mubs(const RunConfig& cfg, std::ostream& out) {
    FieldSpec spec = checked_spec(cfg, cfg.max_matrix_d);
    MubFamily fam = mubs(spec);  // fail-closed: throws on any violated invariant
    if (cfg.format == "json") out << to_json(fam).dump(2) << "\n";
    else out << render(fam);
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    FieldSpec spec = checked_spec(cfg, cfg.max_matrix_d);
    std::vector<CommutingClass> classes = build_classes(spec);
    MubFamily fam = mubs(spec);
    std::vector<std::string> structure = verify_class_structure(classes, spec.d());
    std::vector<OverlapViolation> overlaps = verify_unbiased(fam);
    std::vector<std::string> eigen;
    for (const Basis& b : fam.bases)
        for (const CommutingClass& cls : classes)
            if (cls.id == b.provenance)
                for (std::string& v : verify_eigenbasis(b, cls))
                    eigen.push_back(std::move(v));
    if (cfg.format == "json") {
        out << to_json(overlaps).dump(2) << "\n";
    } else {
        out << "class structure: " << (structure.empty() ? "ok" : "FAILED") << " ("
            << classes.size() << " classes)\n";
        out << "eigenbases: " << (eigen.empty() ? "ok" : "FAILED") << " (" << fam.bases.size()
            << " bases)\n";
        out << "unbiasedness: " << (overlaps.empty() ? "ok" : "FAILED") << "\n";
        out << render(overlaps);
    }
    for (const std::string& v : structure) err << v << "\n";
    for (const std::string& v : eigen) err << v << "\n";
    return structure.empty() && overlaps.empty() && eigen.empty() ? 0 : 1;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
    FieldSpec spec = checked_spec(cfg, cfg.max_matrix_d);
    FieldBasis basis = cfg.basis == "normal" ? FieldBasis::normal(spec)
                                             : FieldBasis::polynomial(spec);
    DigitMap map = build_digit_map(spec, basis);
    std::vector<CommutingClass> classes = build_classes(spec);
    auto factors = factorization_of_F(spec, map);
    if (cfg.format == "json") {
        Json tables = Json::array();
        for (const CommutingClass& cls : classes) {
            Json entries = Json::array();
            for (const auto& [label, mat] : cls.members)
                entries.push_back(Json{{"label", label.to_string(spec.d())},
                                       {"word", to_json(decompose(mat, map))}});
            tables.push_back(Json{{"class_id", cls.id.to_string()}, {"entries", entries}});
        }
        out << Json{{"d", spec.d()},
                    {"basis", cfg.basis},
                    {"digit_index", map.perm},
                    {"fourier_factorizes", factors.has_value()},
                    {"tables", tables}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "digit basis " << cfg.basis << ", position -> digit index:";
    for (long idx : map.perm) out << " " << idx;
    out << "\n";
    for (const CommutingClass& cls : classes) {
        out << "class " << cls.id.to_string() << ":\n";
        for (const auto& [label, mat] : cls.members)
            out << "  " << label.to_string(spec.d()) << " = " << render(decompose(mat, map))
                << "\n";
    }
    out << "F factorizes into single-digit transforms: " << (factors ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "field-info") return cmd_field_info(cfg, out);
        if (cfg.command == "operators") return cmd_operators(cfg, out);
        if (cfg.command == "classes") return cmd_classes(cfg, out);
        if (cfg.command == "mubs") return cmd_mubs(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        if (cfg.command == "decompose") return cmd_decompose(cfg, out);
        err << "unknown command \"" << cfg.command << "\"\n";
        return 2;
    } catch (const BadInput& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // exact invariant checks fired during construction: a verification failure
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }
}

int cli_main(int argc, const char* const* argv) {
    RunConfig cfg;
    std::string out_path;
    CLI::App app{"exact construction of complete mutually unbiased bases over GF(p^n)"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "prime characteristic")->required();
        sub->add_option("--n", cfg.n, "field degree (d = p^n)")->capture_default_str();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "write the document to a file instead of stdout");
    };
    add_common(app.add_subcommand("field-info",
                                  "field description, element table, characters, logarithms"));
    CLI::App* operators =
        app.add_subcommand("operators", "generalized Pauli operators, F, and the phase operator");
    add_common(operators);
    operators->add_option("--q", cfg.q, "print only the operators with this index");
    operators->add_option("--r", cfg.r, "phase-operator family index");
    CLI::App* classes = app.add_subcommand("classes", "the d+1 commuting operator classes");
    add_common(classes);
    classes->add_option("--class", cfg.klass, "restrict to one class id, e.g. mixed:3");
    add_common(app.add_subcommand("mubs", "the verified family of d+1 mutually unbiased bases"));
    add_common(app.add_subcommand("verify", "re-run every exact invariant check and report"));
    CLI::App* decompose =
        app.add_subcommand("decompose", "single-digit tensor words for every class member");
    add_common(decompose);
    decompose->add_option("--basis", cfg.basis, "digit basis")
        ->check(CLI::IsMember({"polynomial", "normal"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    if (const char* env = std::getenv("MUBFORGE_MAX_D")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 2) {
            std::cerr << "MUBFORGE_MAX_D must be an integer >= 2\n";
            return 2;
        }
        cfg.max_matrix_d = v;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return 2;
        }
        return run(cfg, file, std::cerr);
    }
    return run(cfg, std::cout, std::cerr);
}

}  // namespace mubforge
