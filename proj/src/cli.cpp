#include "schurcoef/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurcoef/caratheodory.hpp"
#include "schurcoef/errors.hpp"
#include "schurcoef/maps.hpp"
#include "schurcoef/reference_forms.hpp"
#include "schurcoef/schur.hpp"
#include "schurcoef/symbolic.hpp"

namespace schurcoef::cli {

namespace {

using json = nlohmann::ordered_json;

// Malformed input rather than a mathematical failure.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adding 0.0 folds -0.0 into 0.0 so equal values print identically.
json encode(complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json encode(std::span<const complex> v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(encode(z));
    return a;
}

json encode_index(std::optional<std::size_t> i) { return i ? json(*i) : json(nullptr); }

std::string dump(const json& j) { return j.dump() + "\n"; }

// A JSON argument is inline JSON, "-" for stdin, or a file path.
json load_json(const std::string& arg, std::string_view stdin_text) {
    std::string text;
    if (arg.empty() || arg == "-") {
        text = std::string(stdin_text);
    } else if (arg.front() == '[' || arg.front() == '{') {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw input_error("cannot open " + arg);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

complex decode_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw input_error("expected a complex number encoded as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

// Either a bare list of [re, im] pairs or an object holding one under key.
std::vector<complex> decode_list(const json& j, const char* key) {
    const json* list = &j;
    if (j.is_object()) {
        if (!j.contains(key)) throw input_error(std::string("missing key \"") + key + "\"");
        list = &j.at(key);
    }
    if (!list->is_array()) throw input_error("expected a list of [re, im] pairs");
    std::vector<complex> out;
    out.reserve(list->size());
    for (const auto& z : *list) out.push_back(decode_complex(z));
    return out;
}

std::string cmd_extract(const std::string& omega_arg, std::string_view in) {
    const auto coeffs = decode_list(load_json(omega_arg, in), "coeffs");
    if (coeffs.empty()) throw input_error("coeffs must not be empty");
    if (coeffs[0] != complex{}) throw input_error("first coefficient must be [0, 0]");
    const auto gamma = extract_parameters(TruncatedSeries(coeffs));
    json out;
    out["gamma"] = encode(gamma.params());
    out["blaschke_index"] = encode_index(gamma.blaschke_index());
    return dump(out);
}

std::string cmd_reconstruct(const std::string& gamma_arg, std::string_view in) {
    const auto params = decode_list(load_json(gamma_arg, in), "gamma");
    SchurVector gamma;
    try {
        gamma = SchurVector::from_params(params);
    } catch (const usage_error& e) {
        throw domain_error(e.what());
    }
    json out;
    out["coeffs"] = encode(reconstruct_coefficients(gamma).coeffs());
    return dump(out);
}

void require_closed_polydisk(std::span<const complex> gamma) {
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        if (std::abs(gamma[j]) > 1.0 + kModulusTol) {
            std::ostringstream os;
            os << "|gamma_" << j + 1 << "| = " << std::abs(gamma[j]) << " exceeds 1";
            throw domain_error(os.str());
        }
    }
}

std::string cmd_tmap(const std::string& gamma_arg, const std::string& method, std::string_view in) {
    const auto gamma = decode_list(load_json(gamma_arg, in), "gamma");
    if (gamma.empty()) throw input_error("gamma must not be empty");
    require_closed_polydisk(gamma);
    const auto b = method == "recursive" ? vec_T_recursive(gamma) : vec_T(gamma);
    json out;
    out["b"] = encode(b.values);
    return dump(out);
}

std::string cmd_invert(const std::string& b_arg, std::string_view in) {
    const auto b = decode_list(load_json(b_arg, in), "b");
    if (b.empty()) throw input_error("b must not be empty");
    json out;
    try {
        const auto gamma = invert_T({b, CoefficientClass::caratheodory_V});
        out["gamma"] = encode(gamma.params());
        out["blaschke_index"] = encode_index(gamma.blaschke_index());
        out["in_body"] = true;
    } catch (const not_in_body& e) {
        out["gamma"] = nullptr;
        out["in_body"] = false;
        out["failure"] = json{{"index", e.index()}, {"modulus", e.modulus()}, {"message", e.what()}};
    }
    return dump(out);
}

std::string cmd_member(const std::string& p_arg, double tol, std::string_view in) {
    const auto p = decode_list(load_json(p_arg, in), "p");
    const auto v = is_caratheodory(p, tol);
    json out;
    out["status"] = to_string(v.status);
    out["first_failure"] = encode_index(v.first_failure);
    json deltas = json::array();
    for (double d : v.minors.deltas) deltas.push_back(d + 0.0);
    out["deltas"] = deltas;
    return dump(out);
}

std::string cmd_sample(std::size_t n, std::size_t count, std::uint64_t seed, bool closed) {
    json out = json::array();
    for (const auto& point : sample_body(n, count, seed, closed)) out.push_back(encode(point.values));
    return dump(out);
}

std::string cmd_expand(const std::string& target, std::size_t n, bool latex, bool raw,
                       bool check_identities) {
    using namespace symbolic;
    if (check_identities) {
        const auto report = sym_identity_suite(n);
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back(json{{"identity", c.name},
                                  {"n", c.n},
                                  {"passed", c.passed},
                                  {"mismatches", c.mismatches}});
        }
        json out;
        out["all_passed"] = report.all_passed();
        out["checks"] = checks;
        return dump(out);
    }
    Family family;
    if (target == "F")
        family = Family::F;
    else if (target == "Q")
        family = Family::Q;
    else if (target == "R")
        family = Family::R;
    else if (target == "T")
        family = Family::T;
    else
        throw input_error("--target must be one of F, T, Q, R");
    const auto p = derived_form(family, n);
    const auto alphabet = family == Family::Q || family == Family::R ? Alphabet::x : Alphabet::gamma;
    return (latex ? render_latex(p, alphabet, !raw) : render_plain(p, alphabet)) + "\n";
}

std::string cmd_audit() {
    const auto entries = symbolic::audit_reference_forms();
    return symbolic::render_audit_report(entries);
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::string_view stdin_text) {
    CLI::App app{"Schur parameters and Caratheodory coefficient bodies", "schurcoef"};
    app.require_subcommand(1);

    std::string omega_arg, gamma_arg, b_arg, p_arg, target, method = "composed";
    double tol = kMembershipTol;
    std::size_t n = 1, count = 1;
    std::uint64_t seed = 0;
    bool closed = false, latex = false, raw = false, check_identities = false;

    auto* extract = app.add_subcommand("extract", "Schur parameters of an S_0 truncation");
    extract->add_option("--omega", omega_arg, "JSON {coeffs: [[re,im],...]}: inline, file, or - for stdin");

    auto* reconstruct = app.add_subcommand("reconstruct", "S_0 coefficients from Schur parameters");
    reconstruct->add_option("--gamma", gamma_arg, "JSON list of [re,im]: inline, file, or - for stdin");

    auto* tmap = app.add_subcommand("tmap", "Caratheodory coefficients b_1..b_n from Schur parameters");
    tmap->add_option("--gamma", gamma_arg, "JSON list of [re,im]: inline, file, or - for stdin");
    tmap->add_option("--method", method, "composed or recursive")
        ->check(CLI::IsMember({"composed", "recursive"}));

    auto* invert = app.add_subcommand("invert", "Schur parameters of a point b of the body");
    invert->add_option("--b", b_arg, "JSON list of [re,im]: inline, file, or - for stdin");

    auto* member = app.add_subcommand("member", "Toeplitz determinant test on p_1..p_n");
    member->add_option("--p", p_arg, "JSON list of [re,im]: inline, file, or - for stdin");
    member->add_option("--tol", tol, "verdict tolerance")->check(CLI::PositiveNumber);

    auto* sample = app.add_subcommand("sample", "Seeded samples of the coefficient body");
    sample->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
    sample->add_option("--count", count, "number of points")->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "generator seed")->required();
    sample->add_flag("--closed", closed, "include unimodular parameters");

    auto* expand = app.add_subcommand("expand", "Exact expansion of F_n, T_n, Q_n, or R_n");
    expand->add_option("--target", target, "F, T, Q, or R")
        ->check(CLI::IsMember({"F", "T", "Q", "R"}));
    expand->add_option("--n", n, "order")->required()->check(CLI::PositiveNumber);
    expand->add_flag("--latex", latex, "LaTeX output, grouped through (1-|gamma_j|^2)");
    expand->add_flag("--raw", raw, "with --latex: plain monomials, no grouping");
    expand->add_flag("--check-identities", check_identities, "verify the polynomial identities up to n");

    auto* audit = app.add_subcommand("audit", "Compare published closed forms with the recursions");

    CommandResult result;
    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? kSuccess : kUsageError;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    try {
        if (extract->parsed()) {
            result.out = cmd_extract(omega_arg, stdin_text);
        } else if (reconstruct->parsed()) {
            result.out = cmd_reconstruct(gamma_arg, stdin_text);
        } else if (tmap->parsed()) {
            result.out = cmd_tmap(gamma_arg, method, stdin_text);
        } else if (invert->parsed()) {
            result.out = cmd_invert(b_arg, stdin_text);
        } else if (member->parsed()) {
            result.out = cmd_member(p_arg, tol, stdin_text);
        } else if (sample->parsed()) {
            result.out = cmd_sample(n, count, seed, closed);
        } else if (expand->parsed()) {
            if (target.empty() && !check_identities)
                throw input_error("expand requires --target or --check-identities");
            result.out = cmd_expand(target, n, latex, raw, check_identities);
            if (check_identities && result.out.find("\"all_passed\":false") != std::string::npos)
                result.exit_code = kDomainError;
        } else if (audit->parsed()) {
            result.out = cmd_audit();
        }
    } catch (const input_error& e) {
        result = {kUsageError, "", std::string("error: ") + e.what() + "\n"};
    } catch (const usage_error& e) {
        result = {kUsageError, "", std::string("error: ") + e.what() + "\n"};
    } catch (const domain_error& e) {
        result = {kDomainError, "", std::string("error: ") + e.what() + "\n"};
    } catch (const resource_error& e) {
        result = {kDomainError, "", std::string("error: ") + e.what() + "\n"};
    }
    return result;
}

}  // namespace schurcoef::cli
