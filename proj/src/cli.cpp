#include "etaprove/cli.hpp"

#include "etaprove/certificate.hpp"
#include "etaprove/cusps.hpp"
#include "etaprove/expr_parser.hpp"
#include "etaprove/modularity.hpp"
#include "etaprove/prover.hpp"
#include "etaprove/up_operator.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace etaprove {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// An argument is a file if one exists at that path, otherwise expression text.
std::string file_or_text(const std::string& arg)
{
    std::error_code ec;
    if (arg == "-" || std::filesystem::is_regular_file(arg, ec))
        return read_input(arg);
    return arg;
}

EtaProduct single_product(const std::string& text)
{
    auto terms = parse_terms(text);
    if (terms.size() != 1 || terms[0].coeff != Rational(1))
        throw InputError("expected a single eta-product, got '" + text + "'");
    return terms[0].product;
}

int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::Proved:
    case Verdict::BoundOnly:
        return kExitSuccess;
    case Verdict::Refuted:
    case Verdict::InternalInconsistency:
        return kExitRefuted;
    case Verdict::NotApplicable:
        return kExitNotApplicable;
    }
    return kExitInputError;
}

std::string qpow(const Rational& e)
{
    return e.is_integer() && e.sign() >= 0 ? "q^" + e.str() : "q^(" + e.str() + ")";
}

void print_report(const ProofReport& r, bool quiet, std::ostream& out)
{
    if (quiet) {
        out << to_string(r.verdict);
        if (r.verdict != Verdict::NotApplicable)
            out << " B=" << r.bound << " required_depth=" << r.required_depth;
        if (r.checked_depth >= 0)
            out << " checked_depth=" << r.checked_depth;
        out << "\n";
        return;
    }
    const std::string lvl = "Gamma0(" + std::to_string(r.level) + ")";
    if (r.up_prime)
        out << "Identity: U(" << *r.up_prime << ") " << r.up_source->str() << " = "
            << r.identity.str() << "\n";
    else
        out << "Identity: " << r.identity.str() << " = 0\n";
    out << "Level: " << r.level << "\n";
    if (r.verdict == Verdict::NotApplicable) {
        out << "*** The valence-formula method does not apply:\n";
        for (const auto& why : r.reasons)
            out << "***   " << why << "\n";
        out << "RESULT: " << to_string(r.verdict) << "\n";
        return;
    }
    if (r.up_prime)
        out << "*** " << r.up_source->str() << " is a modular function on Gamma0("
            << *r.up_prime * r.level << ").\n";
    out << "*** Each term is a modular function on " << lvl << ".\n"
        << "*** Each term has total order zero.\n";
    if (r.constants_warning)
        out << "*** WARNING: some terms were constants.\n";
    out << "\n" << ord_table(r) << "\n";
    out << "B = " << r.bound << "\n";
    out << "To prove the identity we need v[oo](ID) > " << r.required_depth
        << ", i.e. verify through q^" << r.required_depth << ".\n";
    switch (r.verdict) {
    case Verdict::BoundOnly:
        out << "RESULT: " << to_string(r.verdict) << "; rerun with --yes to verify.\n";
        break;
    case Verdict::Proved:
        out << "Verified through q^" << r.checked_depth << ".\n"
            << "RESULT: PROVED. The identity holds, since only v[oo](ID) > " << r.required_depth
            << " was needed.\n";
        break;
    case Verdict::Refuted:
    case Verdict::InternalInconsistency:
        out << "First nonvanishing coefficient: " << r.first_nonzero->value << "*"
            << qpow(r.first_nonzero->exponent) << "\n"
            << "RESULT: " << to_string(r.verdict) << "\n";
        break;
    case Verdict::NotApplicable:
        break;
    }
}

struct ProveArgs {
    std::string file;
    std::int64_t level = 0;
    std::int64_t margin = 10;
    bool yes = false;
};

int finish_proof(const ProofReport& report, const std::string& text, const ProveArgs& a,
                 bool quiet, const std::string& json_path, std::ostream& out)
{
    print_report(report, quiet, out);
    if (!json_path.empty()) {
        std::ofstream js(json_path, std::ios::binary);
        if (!js)
            throw InputError("cannot write '" + json_path + "'");
        js << certificate_json(report, text, a.margin);
    }
    return exit_code(report.verdict);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Prove identities between eta-products with the valence formula", kToolName};
    app.require_subcommand(1);
    app.fallthrough();
    bool quiet = false;
    std::string json_path;
    app.add_flag("--quiet", quiet, "Print only the verdict line");
    app.add_option("--json", json_path, "Write a proof certificate to PATH");
    app.set_version_flag("--version", std::string(kToolVersion));

    ProveArgs pa;
    auto* prove = app.add_subcommand("prove", "Prove a linear eta-product identity on Gamma0(N)");
    prove->add_option("file", pa.file, "Identity file ('-' for stdin)")->required();
    prove->add_option("--level,-N", pa.level, "Level N")->required()->check(CLI::PositiveNumber);
    prove->add_option("--margin", pa.margin, "Extra coefficients checked past the bound")
        ->check(CLI::NonNegativeNumber);
    prove->add_flag("--yes", pa.yes, "Carry out the verification (otherwise bound only)");

    ProveArgs ua;
    auto* prove_up = app.add_subcommand("prove-up", "Prove an identity U(p) g = sum a_j f_j");
    prove_up->add_option("file", ua.file, "Identity file ('-' for stdin)")->required();
    prove_up->add_option("--level,-N", ua.level, "Level N")->required()->check(CLI::PositiveNumber);
    prove_up->add_option("--margin", ua.margin, "Extra coefficients checked past the bound")
        ->check(CLI::NonNegativeNumber);
    prove_up->add_flag("--yes", ua.yes, "Carry out the verification (otherwise bound only)");

    std::string expr_text, depth_text = "20";
    bool no_prefactor = false;
    auto* expand_cmd = app.add_subcommand("expand", "q-expansion of an eta-product combination");
    expand_cmd->add_option("expr", expr_text, "Expression")->required();
    expand_cmd->add_option("--depth", depth_text, "Exclusive exponent bound");
    expand_cmd->add_flag("--no-prefactor", no_prefactor, "Omit the q^(t/24) factors");

    std::string factor_depth = "50";
    std::int64_t factor_up = 0;
    auto* factor_cmd = app.add_subcommand("factor", "Recognize an expansion as an eta-product");
    factor_cmd->add_option("expr", expr_text, "Expression")->required();
    factor_cmd->add_option("--depth", factor_depth, "Depth of the expansion");
    factor_cmd->add_option("--up", factor_up, "Apply U_p before factoring");

    std::int64_t level = 0;
    bool widths = false;
    auto* cusps_cmd = app.add_subcommand("cusps", "Inequivalent cusps of Gamma0(N)");
    cusps_cmd->add_option("level", level, "Level N")->required()->check(CLI::PositiveNumber);
    cusps_cmd->add_flag("--widths", widths, "Print [cusp,width] pairs");

    bool all_cusps = false, as_list = false, normalize = false;
    auto* orders_cmd = app.add_subcommand("orders", "ORD table of the terms of an identity");
    orders_cmd->add_option("input", expr_text, "Identity file or expression")->required();
    orders_cmd->add_option("--level,-N", level, "Level N")->required()->check(CLI::PositiveNumber);
    orders_cmd->add_flag("--all-cusps", all_cusps, "Include the class of infinity");
    orders_cmd->add_flag("--list", as_list, "Print [[cusp,ORD],...] lists instead of a table");
    orders_cmd->add_flag("--normalize", normalize, "Normalize the identity first");

    bool verbose = false;
    auto* check_cmd = app.add_subcommand("check", "Newman's conditions on Gamma0(N)");
    check_cmd->add_option("expr", expr_text, "Eta-product")->required();
    check_cmd->add_option("level", level, "Level N")->required()->check(CLI::PositiveNumber);
    check_cmd->add_flag("--verbose", verbose, "Report every condition");

    auto* form_cmd = app.add_subcommand("formcheck", "Weight and character on Gamma0(N)");
    form_cmd->add_option("expr", expr_text, "Eta-product")->required();
    form_cmd->add_option("level", level, "Level N")->required()->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitInputError;
    }

    try {
        if (*prove) {
            std::string text = read_input(pa.file);
            IdentityFile f = parse_identity_file(text);
            if (f.kind != IdentityFile::Kind::Linear)
                throw InputError("'" + pa.file + "' holds a U(p) identity; use prove-up");
            EtaCombo id = f.terms.empty() ? EtaCombo() : normalize_identity(f.terms);
            ProofReport r = prove_gamma0_identity(id, pa.level, {pa.margin, pa.yes});
            return finish_proof(r, text, pa, quiet, json_path, out);
        }
        if (*prove_up) {
            std::string text = read_input(ua.file);
            IdentityFile f = parse_identity_file(text);
            if (f.kind != IdentityFile::Kind::Up)
                throw InputError("'" + ua.file + "' does not hold a U(p) identity");
            ProofReport r = prove_up_identity(f.source, f.prime, f.rhs, ua.level, {ua.margin, ua.yes});
            return finish_proof(r, text, ua, quiet, json_path, out);
        }
        if (*expand_cmd) {
            Rational depth = Rational::parse(depth_text);
            QSeries acc = QSeries::zero(depth);
            for (const auto& t : parse_terms(expr_text)) {
                QSeries s = no_prefactor ? expand_no_prefactor(t.product, depth)
                                         : expand(t.product, depth);
                acc = series_add(acc, s.scaled(t.coeff));
            }
            out << acc.str() << "\n";
            return kExitSuccess;
        }
        if (*factor_cmd) {
            Rational depth = Rational::parse(factor_depth);
            EtaCombo c(Rational(0), parse_terms(expr_text));
            QSeries s = factor_up > 0
                            ? up_series(combo_expand(c, depth * Rational(factor_up)), factor_up)
                            : combo_expand(c, depth);
            try {
                EtaProduct ep = eta_factorize(s, depth);
                out << ep.str() << "\n";
                if (!quiet)
                    out << ep.expr_str() << "\n";
                return kExitSuccess;
            } catch (const NotAnEtaProduct& e) {
                err << "not an eta-product: " << e.what() << "\n";
                return kExitRefuted;
            }
        }
        if (*cusps_cmd) {
            bool first = true;
            for (const auto& s : cusp_set(level)) {
                out << (first ? "" : " ");
                if (widths)
                    out << "[" << s.str() << "," << fan_width(s, level) << "]";
                else
                    out << s.str();
                first = false;
            }
            out << "\n";
            return kExitSuccess;
        }
        if (*orders_cmd) {
            IdentityFile f = parse_identity_file(file_or_text(expr_text));
            if (f.kind != IdentityFile::Kind::Linear)
                throw InputError("orders expects a linear identity or expression");
            EtaCombo c = normalize ? normalize_identity(f.terms) : EtaCombo(Rational(0), f.terms);
            std::vector<Cusp> cusps = all_cusps ? cusp_set(level) : finite_cusps(level);
            if (as_list) {
                for (const auto& t : c.terms())
                    out << t.product.str() << " " << format_ords(cusp_ORDS(t.product, cusps, level))
                        << "\n";
                return kExitSuccess;
            }
            ProofReport r;
            r.level = level;
            r.identity = c;
            r.cusps = cusps;
            std::size_t j = 0;
            for (const auto& t : c.terms())
                r.rows.push_back({"f" + std::to_string(++j), cusp_ORDS(t.product, cusps, level)});
            for (std::size_t k = 0; k < cusps.size(); ++k) {
                Rational lo(0);
                for (const auto& row : r.rows)
                    lo = std::min(lo, row.ords[k].ord);
                r.lower_bound.push_back({cusps[k], lo});
            }
            out << ord_table(r);
            return kExitSuccess;
        }
        if (*check_cmd) {
            ModularityVerdict v = gamma_check(single_product(expr_text), level);
            if (verbose)
                out << v.report();
            out << (v.invariant() ? 1 : 0) << "\n";
            return kExitSuccess;
        }
        if (*form_cmd) {
            auto res = form_check(single_product(expr_text), level);
            if (auto* nf = std::get_if<NotAForm>(&res)) {
                out << "not a form on Gamma0(" << level << ") with character:\n";
                for (const auto& why : nf->reasons)
                    out << "  " << why << "\n";
                return kExitNotApplicable;
            }
            const auto& fv = std::get<FormVerdict>(res);
            out << "N = " << fv.level << ", weight = " << fv.weight << ", character = ("
                << fv.character_disc << "/d)"
                << ", cleared = " << fv.cleared << ", kernel = " << fv.kernel;
            if (fv.half_integral_weight)
                out << " [half-integral weight]";
            out << "\n";
            return kExitSuccess;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const LoweringError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const SeriesError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace etaprove
