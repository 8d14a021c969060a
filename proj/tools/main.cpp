#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hopftwist/config.hpp"
#include "hopftwist/hopf.hpp"

using namespace hopftwist;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
    std::optional<unsigned> order;
    std::string format = "text";
    std::string output;
    std::string config_path;
    Config config;
};

unsigned order_from_env() {
    const char* env = std::getenv("HOPFTWIST_ORDER");
    if (!env || !*env) return 4;
    try {
        std::size_t used = 0;
        unsigned long n = std::stoul(env, &used);
        if (used != std::string(env).size() || n > 32) throw std::invalid_argument("range");
        return static_cast<unsigned>(n);
    } catch (const std::exception&) {
        throw ConfigError(std::string("HOPFTWIST_ORDER must be an integer in 0..32, got '") + env + "'");
    }
}

int emit(const Options& o, const Report& rep) {
    std::cout << (o.format == "kv" ? rep.to_kv() : rep.to_text());
    if (!o.output.empty()) {
        std::ofstream out(o.output);
        if (!out) throw ConfigError("cannot write report file '" + o.output + "'");
        out << rep.to_kv();
    }
    return rep.passed() ? kPass : kFail;
}

LiePtr algebra_or(const Options& o, const std::string& name) {
    if (!name.empty()) return LiePresentation::builtin(name);
    return o.config.algebra ? o.config.algebra : LiePresentation::so21();
}

TwistSpec twist_spec(const Options& o, const std::string& kind, const LiePtr& alg) {
    if (kind.empty() && o.config.twist) return *o.config.twist;
    TwistSpec spec;
    spec.kind = kind.empty() ? "jordanian" : kind;
    if (spec.kind == "abelian") {
        // Commuting pair: the two translations, or H with itself.
        if (alg->dim() >= 2 && alg->bracket(0, 1).empty())
            spec.pairs = {{alg->basis_name(0), alg->basis_name(1)}};
        else
            spec.pairs = {{alg->basis_name(0), alg->basis_name(0)}};
    }
    return spec;
}

RealizationPtr realization_for(const Options& o, const LiePtr& alg) {
    if (o.config.realization && o.config.realization->algebra() == alg) return o.config.realization;
    if (alg->name() == "so21") return Realization::hyperboloid();
    throw ConfigError("no realization of " + alg->name() + " (give one in a config file)");
}

/// Star algebra used by the geometric subcommands.
StarAlgebra star_algebra(const Options& o, const std::string& kind, int moyal_sign) {
    if (kind == "moyal") {
        ConstantPoisson pi(2);
        pi.set(0, 1, Scalar::rational(1, 2));
        return moyal_star_algebra(pi, moyal_sign);
    }
    LiePtr alg = o.config.realization ? o.config.realization->algebra() : algebra_or(o, "");
    RealizationPtr phi = realization_for(o, alg);
    return StarAlgebra(phi, build_twist(alg, twist_spec(o, kind, alg), o.config.parameters));
}

ParseContext context_for(const Options& o, const StarAlgebra& a) {
    ParseContext ctx = o.config.context();
    ctx.algebra = a.realization().algebra();
    ctx.dim = a.dim();
    return ctx;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Drinfel'd twists, star products and braided Cartan calculi with exact coefficients"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    unsigned order_flag = 0;
    auto* order_opt = app.add_option("--order", order_flag, "truncation order in hbar (default $HOPFTWIST_ORDER or 4)")
                          ->check(CLI::Range(0u, 32u));
    app.add_option("--format", o.format, "report format on stdout")->check(CLI::IsMember({"text", "kv"}));
    app.add_option("--output", o.output, "also write the key-value report to this file");
    app.add_option("--config", o.config_path, "declarative setup file")->check(CLI::ExistingFile);

    std::string algebra, kind, twist = "", a_text = "a", c_text = "c";
    std::string left, right, expr;
    unsigned degree = 3, samples = 50, seed = 1;
    int sign = 1;
    bool unitary = false;

    auto* hopf = app.add_subcommand("verify-hopf", "Hopf axioms of the built-in algebras");
    hopf->add_option("--algebra", algebra, "so21, sl2, abelian2, kz2, fz2, h4 or all")
        ->check(CLI::IsMember({"so21", "sl2", "abelian2", "kz2", "fz2", "h4", "all"}));
    hopf->add_option("--degree", degree, "PBW degree bound")->check(CLI::Range(0u, 6u));

    auto* vtwist = app.add_subcommand("verify-twist", "normalization, cocycle and R-matrix of a twist");
    vtwist->add_option("--kind", kind, "trivial, abelian or jordanian")
        ->check(CLI::IsMember({"trivial", "abelian", "jordanian"}));
    vtwist->add_option("--algebra", algebra, "so21, sl2 or abelian2")->check(CLI::IsMember({"so21", "sl2", "abelian2"}));
    vtwist->add_flag("--unitary", unitary, "also require unitarity");

    auto add_twist = [&](CLI::App* sub, bool moyal) {
        std::vector<std::string> kinds = {"trivial", "abelian", "jordanian"};
        if (moyal) kinds.push_back("moyal");
        sub->add_option("--twist", twist, "twist kind (default: config file, else jordanian)")->check(CLI::IsMember(kinds));
    };

    auto* star_cmd = app.add_subcommand("star", "twist star product of two functions");
    add_twist(star_cmd, true);
    star_cmd->add_option("--sign", sign, "sign of the Moyal exponent")->check(CLI::IsMember({-1, 1}));
    star_cmd->add_option("f", left, "left factor")->required();
    star_cmd->add_option("g", right, "right factor")->required();

    auto* cop = app.add_subcommand("coproduct", "twisted coproduct of an algebra element");
    add_twist(cop, false);
    cop->add_option("expr", expr, "element of the enveloping algebra")->required();
    auto* ant = app.add_subcommand("antipode", "twisted antipode of an algebra element");
    add_twist(ant, false);
    ant->add_option("expr", expr, "element of the enveloping algebra")->required();

    auto* cartan = app.add_subcommand("cartan", "braided Cartan identities on the standard samples");
    add_twist(cartan, true);

    auto* conn = app.add_subcommand("connection", "twisted Levi-Civita checks (metric from config or Minkowski)");
    add_twist(conn, false);

    auto* sub = app.add_subcommand("submanifold", "projection to the quadric commutes with the twisted calculus");
    add_twist(sub, false);
    sub->add_option("--samples", samples, "number of random functions")->check(CLI::Range(2u, 1000u));
    sub->add_option("--seed", seed, "random seed");

    auto* hyp = app.add_subcommand("hyperboloid", "Jordanian deformation of the 2-sheet hyperboloid");
    hyp->add_option("--a", a_text, "parameter a (needs an exact square root)");
    hyp->add_option("--c", c_text, "parameter c");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (!o.config_path.empty()) o.config = load_config(o.config_path);
        unsigned order = order_opt->count() ? order_flag : o.config.order ? *o.config.order : order_from_env();
        set_truncation_order(order);
        // Twists in the config are validated at the final order.
        if (o.config.twist && o.config.algebra) build_twist(o.config.algebra, *o.config.twist, o.config.parameters);

        if (hopf->parsed()) {
            Report rep("hopf");
            std::string which = algebra.empty() ? "all" : algebra;
            for (const char* name : {"so21", "sl2", "abelian2"})
                if (which == "all" || which == name) rep.merge(hopf_axiom_report(LiePresentation::builtin(name), degree));
            if (which == "all" || which == "kz2") rep.merge(hopf_axiom_report(FiniteHopf::group_algebra_z2()));
            if (which == "all" || which == "fz2") rep.merge(hopf_axiom_report(FiniteHopf::functions_z2()));
            if (which == "all" || which == "h4") rep.merge(hopf_axiom_report(FiniteHopf::sweedler()));
            return emit(o, rep);
        }
        if (vtwist->parsed()) {
            LiePtr alg = algebra_or(o, algebra);
            Twist f = build_twist(alg, twist_spec(o, kind, alg), o.config.parameters);
            Report rep("twist");
            rep.merge(verify_twist(f));
            rep.merge(verify_rmatrix(f));
            if (unitary) rep.merge(check_unitary(f));
            return emit(o, rep);
        }
        if (star_cmd->parsed()) {
            StarAlgebra a = star_algebra(o, twist, sign);
            ParseContext ctx = context_for(o, a);
            std::cout << star(a, parse_geom(left, ctx), parse_geom(right, ctx)) << "\n";
            return kPass;
        }
        if (cop->parsed() || ant->parsed()) {
            LiePtr alg = algebra_or(o, "");
            Twist f = build_twist(alg, twist_spec(o, twist, alg), o.config.parameters);
            ParseContext ctx = o.config.context();
            ctx.algebra = alg;
            PBWElement x = parse_pbw(expr, ctx);
            if (cop->parsed())
                std::cout << twisted_coproduct(f, x) << "\n";
            else
                std::cout << twisted_antipode(f, x) << "\n";
            return kPass;
        }
        if (cartan->parsed()) {
            StarAlgebra a = star_algebra(o, twist, 1);
            return emit(o, cartan_report(a, default_cartan_samples(a.realization())));
        }
        if (conn->parsed()) {
            Metric g = o.config.metric ? *o.config.metric : Metric::lightcone_minkowski();
            RealizationPtr phi = o.config.realization ? o.config.realization : Realization::hyperboloid(Scalar(1));
            LiePtr alg = phi->algebra();
            StarAlgebra a(phi, build_twist(alg, twist_spec(o, twist, alg), o.config.parameters));
            Connection lc = koszul_levi_civita(g);
            return emit(o, connection_report(a, lc, g, standard_frame(*phi)));
        }
        if (sub->parsed()) {
            StarAlgebra a = star_algebra(o, twist, 1);
            QuadricIdeal ideal = o.config.quadric ? *o.config.quadric
                                                  : QuadricIdeal::hyperboloid(Scalar::param("a"), Scalar::param("c"),
                                                                              a.realization());
            return emit(o, twist_project_report(a, ideal, random_projection_samples(ideal, static_cast<int>(samples), seed)));
        }
        if (hyp->parsed()) {
            ParseContext ctx = o.config.context();
            return emit(o, hyperboloid_suite(parse_scalar(a_text, ctx), parse_scalar(c_text, ctx)));
        }
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
