#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schurcoef/symbolic.hpp"

namespace schurcoef::symbolic {

enum class Family { F, Q, R, T };

std::string_view family_name(Family f);

// A published closed form, kept as its LaTeX source.
struct ReferenceForm {
    Family family;
    std::size_t n;
    std::string_view latex;
};

// F_1..F_5, Q_1..Q_5 (in c_k), R_1..R_5 (in b_k), T_1..T_5.
std::span<const ReferenceForm> reference_forms();
const ReferenceForm& reference_form(Family family, std::size_t n);

// Expansion of the family's defining recursion at order n.
ConjPolynomial derived_form(Family family, std::size_t n);

struct AuditEntry {
    Family family;
    std::size_t n;
    bool matches = false;
    // Monomial-level diff, derived vs reference (empty when matching).
    std::vector<std::string> mismatches;
    // derived - reference, grouped LaTeX ("0" when matching).
    std::string discrepancy_latex;
};

AuditEntry audit_reference_form(const ReferenceForm& form);
std::vector<AuditEntry> audit_reference_forms();

// Markdown report listing every audited form and each discrepancy.
std::string render_audit_report(std::span<const AuditEntry> entries);

}  // namespace schurcoef::symbolic
