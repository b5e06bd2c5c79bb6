#include "schurcoef/reference_forms.hpp"

#include <array>
#include <sstream>

#include "schurcoef/errors.hpp"

namespace schurcoef::symbolic {

namespace {

// Transcribed verbatim, alignment markup included.
constexpr std::array kForms{
    ReferenceForm{Family::F, 1, R"(\gamma_1)"},
    ReferenceForm{Family::F, 2, R"((1-|\gamma_1|^2)\gamma_2)"},
    ReferenceForm{Family::F, 3, R"((1-|\gamma_1|^2)(1-|\gamma_2|^2)\gamma_3
-(1-|\gamma_1|^2)\bar\gamma_1\gamma_2^2)"},
    ReferenceForm{Family::F, 4, R"((1-|\gamma_1|^2)(1-|\gamma_2|^2)(1-|\gamma_3|^2)\gamma_4 \\
&\quad -(1-|\gamma_1|^2)(1-|\gamma_2|^2)\gamma_3(2\bar\gamma_1\gamma_2
+\bar\gamma_2\gamma_3)+(1-|\gamma_1|^2)\bar\gamma_1^2\gamma_2^3)"},
    ReferenceForm{Family::F, 5, R"((1-|\gamma_1|^2)(1-|\gamma_2|^2)(1-|\gamma_3|^2)(1-|\gamma_4|^2)\gamma_5 \\
&\quad  -(1-|\gamma_1|^2)(1-|\gamma_2|^2)(1-|\gamma_3|^2)\gamma_4
(2\bar\gamma_1\gamma_2+2\bar\gamma_2\gamma_3+\bar\gamma_3\gamma_4) \\
&\quad +(1-|\gamma_1|^2)(1-|\gamma_2|^2)\gamma_3
(3\bar\gamma_1^2-\bar\gamma_1\gamma_3+3\bar\gamma_1|\gamma_2|^2\gamma_3+\bar\gamma_2^2\gamma_3^2) \\
&\quad -(1-|\gamma_1|^2)\bar\gamma_1^3\gamma_2^4)"},

    ReferenceForm{Family::Q, 1, R"(c_1)"},
    ReferenceForm{Family::Q, 2, R"(c_1^2+c_2)"},
    ReferenceForm{Family::Q, 3, R"(c_1^3+2c_1c_2+c_3)"},
    ReferenceForm{Family::Q, 4, R"(c_1^4+3c_1^2c_2+c_2^2+2c_1c_3+c_4)"},
    ReferenceForm{Family::Q, 5, R"(c_1^5+4c_1^3c_2+3c_1^2c_3+2c_2c_3+3c_1c_2^2+2c_1c_4+c_5)"},

    ReferenceForm{Family::R, 1, R"(b_1)"},
    ReferenceForm{Family::R, 2, R"(-b_1^2+b_2)"},
    ReferenceForm{Family::R, 3, R"(b_1^3-2b_1b_2+b_3)"},
    ReferenceForm{Family::R, 4, R"(-b_1^4+3b_1^2b_2-b_2^2-2b_1b_3+b_4)"},
    ReferenceForm{Family::R, 5, R"(b_1^5-4b_1^3b_2+3b_1^2b_3-2b_2b_3+3b_1b_2^2-2b_1b_4+b_5)"},

    ReferenceForm{Family::T, 1, R"(\gamma_1)"},
    ReferenceForm{Family::T, 2, R"(\gamma_1^2+\gamma_2(1-|\gamma_1|^2))"},
    ReferenceForm{Family::T, 3, R"(\gamma_1^3+(1-|\gamma_1|^2)\gamma_2(2\gamma_1-\bar\gamma_1\gamma_2)
+(1-|\gamma_1|^2)(1-|\gamma_2|^2)\gamma_3)"},
    ReferenceForm{Family::T, 4, R"(\gamma_1^4
+(1-|\gamma_1|^2)\gamma_2(3\gamma_1^2-2\gamma_2+\bar\gamma_1^2\gamma_2^2)
+3(1-|\gamma_1|^2)^2\gamma_2^2 \\
&\quad
+(1-|\gamma_1|^2)(1-|\gamma_2|^2)\gamma_3(2\gamma_1-2\bar\gamma_1\gamma_2
-\bar\gamma_2\gamma_3) \\
&\quad +(1-|\gamma_1|^2)(1-|\gamma_2|^2)(1-|\gamma_3|^2)\gamma_4)"},
    ReferenceForm{Family::T, 5, R"(\gamma_1^5
+(1-|\gamma_1|^2)\gamma_2
(4\gamma_1^3-3\gamma_1\gamma_2
+2\bar\gamma_1\gamma_2^2-\bar\gamma_1^3\gamma_2^3) \\
&\quad
+2(1-|\gamma_1|^2)^2\gamma_2^2(3\gamma_1-2\bar\gamma_1\gamma_2) \\
&\quad
+6(1-|\gamma_1|^2)^2(1-|\gamma_2|^2)\gamma_2\gamma_3
-3(1-|\gamma_1|^2)(1-|\gamma_2|^2)^2\bar\gamma_1\gamma_3^2 \\
&\quad
+(1-|\gamma_1|^2)(1-|\gamma_2|^2)\gamma_3
(3\gamma_1^2+3\bar\gamma_1^2\gamma_2^2+2\bar\gamma_1\gamma_3
-2\gamma_1\bar\gamma_2\gamma_3-4\gamma_2+\bar\gamma_2^2\gamma_3^2) \\
&\quad +(1-|\gamma_1|^2)(1-|\gamma_2|^2)(1-|\gamma_3|^2)\gamma_4(2\gamma_1
-2\bar\gamma_1\gamma_2-2\bar\gamma_2\gamma_3-\bar\gamma_3\gamma_4) \\
&\quad +(1-|\gamma_1|^2)(1-|\gamma_2|^2)(1-|\gamma_3|^2)(1-|\gamma_4|^2)\gamma_5)"},
};

Alphabet alphabet_of(Family f) {
    return f == Family::Q || f == Family::R ? Alphabet::x : Alphabet::gamma;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::Q: return "Q";
        case Family::R: return "R";
        case Family::T: return "T";
    }
    return "?";
}

std::span<const ReferenceForm> reference_forms() { return kForms; }

const ReferenceForm& reference_form(Family family, std::size_t n) {
    for (const auto& f : kForms)
        if (f.family == family && f.n == n) return f;
    throw usage_error("reference_form: no closed form recorded for this family and order");
}

ConjPolynomial derived_form(Family family, std::size_t n) {
    switch (family) {
        case Family::F: return sym_F(n);
        case Family::Q: return sym_Q(n);
        case Family::R: return sym_R(n);
        case Family::T: return sym_T(n);
    }
    throw usage_error("derived_form: unknown family");
}

AuditEntry audit_reference_form(const ReferenceForm& form) {
    const auto derived = derived_form(form.family, form.n);
    const auto reference = parse_latex(form.latex);
    const auto alphabet = alphabet_of(form.family);
    AuditEntry e{form.family, form.n, derived == reference, {}, "0"};
    if (!e.matches) {
        e.mismatches = diff_terms(derived, reference, alphabet);
        e.discrepancy_latex = render_latex(derived - reference, alphabet, true);
    }
    return e;
}

std::vector<AuditEntry> audit_reference_forms() {
    std::vector<AuditEntry> out;
    for (const auto& f : kForms) out.push_back(audit_reference_form(f));
    return out;
}

std::string render_audit_report(std::span<const AuditEntry> entries) {
    std::ostringstream os;
    os << "# Closed-form audit\n\n"
       << "Each published closed form is parsed and compared, monomial by monomial, with\n"
       << "the expansion of its defining recursion. The recursion-derived polynomial is\n"
       << "authoritative.\n\n"
       << "| form | status |\n|---|---|\n";
    std::size_t discrepancies = 0;
    for (const auto& e : entries) {
        os << "| " << family_name(e.family) << "_" << e.n << " | "
           << (e.matches ? "matches" : "DISCREPANCY") << " |\n";
        if (!e.matches) ++discrepancies;
    }
    os << "\n" << discrepancies << " discrepanc" << (discrepancies == 1 ? "y" : "ies") << ".\n";
    for (const auto& e : entries) {
        if (e.matches) continue;
        os << "\n## " << family_name(e.family) << "_" << e.n << "\n\n"
           << "derived - published:\n\n    " << e.discrepancy_latex << "\n\n"
           << "Monomials (derived vs published coefficient):\n\n";
        for (const auto& line : e.mismatches) os << "    " << line << "\n";
    }
    return os.str();
}

}  // namespace schurcoef::symbolic
