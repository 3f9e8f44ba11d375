#include "qmf/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qmf/qexp_io.hpp"
#include "qmf/theorems.hpp"

namespace qmf {

namespace {

FormExpansion load_form(const std::string& src, std::optional<long> builtin_prec,
                        std::istream& in) {
    if (src.rfind("builtin:", 0) == 0) {
        if (!builtin_prec)
            throw Error("builtin form source '" + src + "' needs --prec");
        return builtin_form(src.substr(8), *builtin_prec);
    }
    if (src == "-") return parse_qexp(in);
    std::ifstream file(src);
    if (!file) throw Error("cannot open input file: " + src);
    return parse_qexp(file);
}

void emit_form(const FormExpansion& f, const std::string& out_path, std::ostream& out) {
    std::string text = write_qexp(f);
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw Error("cannot open output file: " + out_path);
    file << text;
}

EtaQuotientSpec parse_eta_spec(const std::string& text) {
    EtaQuotientSpec spec;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw Error("eta spec items are <scale>:<exponent>");
        spec.push_back({std::stol(item.substr(0, colon)), std::stol(item.substr(colon + 1))});
    }
    if (spec.empty()) throw Error("empty eta spec");
    return spec;
}

std::string weight_str(long twice_weight) {
    if (twice_weight % 2 == 0) return std::to_string(twice_weight / 2);
    return std::to_string(twice_weight) + "/2";
}

void show_form(const FormExpansion& f, std::ostream& out) {
    out << "weight " << weight_str(f.twice_weight) << "  level " << f.level << "  character "
        << f.character.spec() << "  prec " << f.prec() << "  ring order "
        << f.series.ring_order() << "\n";
    std::ostringstream terms;
    long shown = 0;
    for (long n = 0; n < f.prec(); ++n) {
        const RingValue& c = f.series.coefficient(n);
        if (c.is_zero()) continue;
        if (shown) terms << " + ";
        terms << "(" << c.str() << ")";
        if (n == 1)
            terms << "*q";
        else if (n > 1)
            terms << "*q^" << n;
        ++shown;
    }
    out << (shown ? terms.str() : "0") << " + O(q^" << f.prec() << ")\n";
}

struct VerifyArgs {
    std::string f_src = "builtin:f4l5";
    long N = 1;
    std::string chi = "trivial:1";
    std::string psi = "trivial:1";
    long r = 1;
    long t = 1;
    long D = 1;
    long w = 0;
    long M = 4;
    long prec = 10;
    long bound = 10;
    long kmax = 8;
    long wmax = 6;
};

FormExpansion load_verify_form(const std::string& src, long required_prec, std::istream& in) {
    if (src.rfind("builtin:", 0) == 0) return builtin_form(src.substr(8), required_prec);
    return load_form(src, std::nullopt, in);
}

int finish_verification(const VerificationReport& rep, std::ostream& out) {
    out << rep.render();
    if (!rep.error.empty()) return 2;
    return rep.pass ? 0 : 1;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact q-expansion calculator for modular forms"};
    app.require_subcommand(1);

    std::string in_src, form_src, f_src, g_src, out_path, chi_spec, psi_spec, eta_spec_text,
        a_text = "1", b_text = "1", norm_text;
    std::optional<long> prec_opt;
    long d_arg = 1, k_arg = 4, w_arg = 0, l_arg = 1, p_arg = 2, t_arg = 1, D_arg = 1, r_arg = 1,
         order_arg = 0;

    auto add_prec = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option_function<long>(
            "--prec", [&](long v) { prec_opt = v; }, "output / builtin construction precision");
        if (required) opt->required();
        return opt;
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "output file ('-' = stdout)"); };
    auto add_input = [&](CLI::App* cmd) {
        auto* a = cmd->add_option("--in", in_src, "input file ('-' = stdin)");
        auto* b = cmd->add_option("--form", form_src, "builtin form source (builtin:<name>)");
        a->excludes(b);
    };

    auto* eta = app.add_subcommand("eta", "eta quotient expansion");
    eta->add_option("--spec", eta_spec_text, "comma list <scale>:<exponent>")->required();
    add_prec(eta, true);
    add_out(eta);

    auto* theta = app.add_subcommand("theta", "theta series of a character");
    theta->add_option("--psi", psi_spec, "character spec")->required();
    theta->add_option("--d", d_arg, "dilation of the square exponents");
    add_prec(theta, true);
    add_out(theta);

    auto* eis = app.add_subcommand("eisenstein", "Eisenstein series G_k");
    eis->add_option("--k", k_arg, "even weight >= 2")->required();
    add_prec(eis, true);
    add_out(eis);

    auto* br = app.add_subcommand("bracket", "Rankin-Cohen bracket of two forms");
    br->add_option("--f", f_src, "first form source")->required();
    br->add_option("--g", g_src, "second form source")->required();
    br->add_option("--w", w_arg, "bracket order")->required();
    add_prec(br, false);
    add_out(br);

    auto* tw = app.add_subcommand("twist", "coefficient-wise twist by a character");
    add_input(tw);
    tw->add_option("--psi", psi_spec, "character spec")->required();
    add_prec(tw, false);
    add_out(tw);

    auto* di = app.add_subcommand("dilate", "f(z) -> f(lz)");
    add_input(di);
    di->add_option("--l", l_arg, "dilation factor")->required();
    add_prec(di, false);
    add_out(di);

    auto* op = app.add_subcommand("apply-op", "f | (aI + bB(l))");
    add_input(op);
    op->add_option("--a", a_text, "rational scalar a");
    op->add_option("--b", b_text, "rational scalar b");
    op->add_option("--l", l_arg, "dilation factor")->required();
    add_prec(op, false);
    add_out(op);

    auto* he = app.add_subcommand("hecke", "Hecke operator T_p");
    add_input(he);
    he->add_option("--p", p_arg, "prime")->required();
    add_prec(he, false);
    add_out(he);

    auto* li = app.add_subcommand("lift", "Shimura lift S_t");
    add_input(li);
    li->add_option("--t", t_arg, "squarefree t >= 1");
    add_prec(li, false);
    add_out(li);

    auto* ko = app.add_subcommand("kohnen-lift", "Kohnen plus-space lift S_D^+");
    add_input(ko);
    ko->add_option("--D", D_arg, "positive fundamental discriminant");
    ko->add_option("--normalizer", norm_text, "explicit rational normalizer");
    add_prec(ko, false);
    add_out(ko);

    auto* bg = app.add_subcommand("build-g", "unitary-divisor bracket combination g(z)");
    bg->add_option("--f", f_src, "eigenform source")->required();
    bg->add_option("--r", r_arg, "modulus of psi")->required();
    bg->add_option("--psi", psi_spec, "character spec, modulus r")->required();
    bg->add_option("--order", order_arg, "bracket order (2w+v)")->required();
    add_prec(bg, true);
    add_out(bg);

    auto* sh = app.add_subcommand("show", "summarize a stored expansion");
    add_input(sh);
    add_prec(sh, false);

    VerifyArgs va;
    auto* ve = app.add_subcommand("verify", "check an identity coefficient-by-coefficient");
    ve->require_subcommand(1);
    auto add_verify_common = [&](CLI::App* cmd) {
        cmd->add_option("--f", va.f_src, "eigenform source");
        cmd->add_option("--N", va.N, "level of the eigenform");
        cmd->add_option("--chi", va.chi, "character of the eigenform, modulus N");
        cmd->add_option("--prec", va.prec, "number of coefficients (compares q^1..q^{prec-1})");
        cmd->add_option("--bound", va.bound, "eigenform-relation check bound");
    };
    auto* v1 = ve->add_subcommand("thm1", "Shimura lift of [f(4rz), theta_psi(tz)]_w");
    add_verify_common(v1);
    v1->add_option("--psi", va.psi, "character spec (its modulus is r)");
    v1->add_option("--t", va.t, "squarefree t dividing N");
    v1->add_option("--w", va.w, "bracket order");
    auto* v2 = ve->add_subcommand("thm2", "Kohnen lift of [f(4rz), theta_psi(Dz)]_w");
    add_verify_common(v2);
    v2->add_option("--psi", va.psi, "character spec (its modulus is r)");
    v2->add_option("--D", va.D, "positive fundamental discriminant dividing N");
    v2->add_option("--w", va.w, "bracket order");
    auto* v3 = ve->add_subcommand("thm3", "Shimura lift of [f(4rz), theta(tz)]_w at level M");
    add_verify_common(v3);
    v3->add_option("--r", va.r, "dilation parameter r");
    v3->add_option("--t", va.t, "squarefree t dividing N");
    v3->add_option("--w", va.w, "bracket order");
    v3->add_option("--M", va.M, "half-integral level, multiple of 4Nr");
    auto* vl = ve->add_subcommand("lemma1", "combinatorial polynomial identity grid");
    vl->add_option("--kmax", va.kmax, "largest k");
    vl->add_option("--wmax", va.wmax, "largest w");
    auto* vs = ve->add_subcommand("selberg", "S_1(Delta(4z) theta(z))");
    vs->add_option("--prec", va.prec, "number of coefficients");

    std::vector<const char*> argv;
    argv.push_back("qmf");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help() << "\n";
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto input_source = [&]() -> const std::string& {
        if (in_src.empty() && form_src.empty()) throw Error("one of --in or --form is required");
        return in_src.empty() ? form_src : in_src;
    };

    try {
        if (eta->parsed()) {
            emit_form(eta_quotient(parse_eta_spec(eta_spec_text), *prec_opt), out_path, out);
        } else if (theta->parsed()) {
            emit_form(theta_series(parse_character(psi_spec), d_arg, *prec_opt), out_path, out);
        } else if (eis->parsed()) {
            emit_form(eisenstein(k_arg, *prec_opt), out_path, out);
        } else if (br->parsed()) {
            FormExpansion f = load_form(f_src, prec_opt, in);
            FormExpansion g = load_form(g_src, prec_opt, in);
            emit_form(bracket(f, g, w_arg), out_path, out);
        } else if (tw->parsed()) {
            emit_form(twist(load_form(input_source(), prec_opt, in), parse_character(psi_spec)),
                      out_path, out);
        } else if (di->parsed()) {
            emit_form(dilate_form(load_form(input_source(), prec_opt, in), l_arg), out_path, out);
        } else if (op->parsed()) {
            FormExpansion f = load_form(input_source(), prec_opt, in);
            emit_form(apply_aI_bB(f, RingValue(parse_rational(a_text)),
                                  RingValue(parse_rational(b_text)), l_arg),
                      out_path, out);
        } else if (he->parsed()) {
            emit_form(hecke_tp(load_form(input_source(), prec_opt, in), p_arg), out_path, out);
        } else if (li->parsed()) {
            const std::string& src = input_source();
            FormExpansion f = src.rfind("builtin:", 0) == 0 && prec_opt
                                  ? builtin_form(src.substr(8),
                                                 lift_required_input_prec(t_arg, *prec_opt))
                                  : load_form(src, prec_opt, in);
            long out_prec = prec_opt ? *prec_opt : f.prec();
            emit_form(shimura_lift(f, t_arg, out_prec), out_path, out);
        } else if (ko->parsed()) {
            const std::string& src = input_source();
            FormExpansion f = src.rfind("builtin:", 0) == 0 && prec_opt
                                  ? builtin_form(src.substr(8),
                                                 lift_required_input_prec(D_arg, *prec_opt))
                                  : load_form(src, prec_opt, in);
            long out_prec = prec_opt ? *prec_opt : f.prec();
            std::optional<Rational> nu;
            if (!norm_text.empty()) nu = parse_rational(norm_text);
            emit_form(kohnen_lift(f, D_arg, out_prec, nu), out_path, out);
        } else if (bg->parsed()) {
            FormExpansion f = load_form(f_src, prec_opt, in);
            emit_form(build_g(f, r_arg, parse_character(psi_spec), order_arg, *prec_opt), out_path,
                      out);
        } else if (sh->parsed()) {
            show_form(load_form(input_source(), prec_opt, in), out);
        } else if (ve->parsed()) {
            if (vl->parsed()) return finish_verification(verify_lemma1(va.kmax, va.wmax), out);
            if (vs->parsed()) return finish_verification(verify_selberg(va.prec), out);
            DirichletCharacter chi = parse_character(va.chi);
            DirichletCharacter psi = parse_character(va.psi);
            if (v1->parsed()) {
                long fp = thm1_required_f_prec(psi.modulus(), va.t, va.prec, va.bound);
                FormExpansion f = load_verify_form(va.f_src, fp, in);
                return finish_verification(
                    verify_thm1(f, va.N, chi, psi, va.t, va.w, va.prec, va.bound), out);
            }
            if (v2->parsed()) {
                long fp = thm2_required_f_prec(psi.modulus(), va.D, va.prec, va.bound);
                FormExpansion f = load_verify_form(va.f_src, fp, in);
                return finish_verification(
                    verify_thm2(f, va.N, chi, psi, va.D, va.w, va.prec, va.bound), out);
            }
            long fp = thm3_required_f_prec(va.r, va.t, va.prec, va.bound);
            FormExpansion f = load_verify_form(va.f_src, fp, in);
            return finish_verification(
                verify_thm3(f, va.N, chi, va.r, va.t, va.w, va.M, va.prec, va.bound), out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace qmf
