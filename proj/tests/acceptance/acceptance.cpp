// One line per acceptance criterion. Exit status is 0 when the set of failing
// criteria equals the set passed with --expect-fail (empty by default).

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopftwist/hopf.hpp"
#include "hopftwist/submanifold.hpp"

using namespace hopftwist;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

/// Collects the names of failing checks.
struct Tally {
    Outcome out;
    void report(const Report& r) {
        if (r.checks().empty()) fail(r.suite() + " ran no checks");
        for (const auto& c : r.checks())
            if (!c.passed && !c.informational) fail(r.suite() + " / " + c.name);
    }
    void check(bool ok, const std::string& name) {
        if (!ok) fail(name);
    }
    void fail(const std::string& name) {
        out.passed = false;
        out.detail += (out.detail.empty() ? "" : "; ") + name;
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_s;
    std::function<Outcome()> run;
};

RealizationPtr hyperboloid() { return Realization::hyperboloid(); }

StarAlgebra jordanian_on(const RealizationPtr& phi) {
    return StarAlgebra(phi, make_jordanian_twist(phi->algebra(), "H", "E", Scalar::i()));
}

Twist abelian_unitary() {
    auto ab = LiePresentation::abelian(2);
    return make_abelian_twist(ab, {{PBWElement::generator(ab, 0), PBWElement::generator(ab, 1)}}, Scalar::i());
}

/// Monomials of degree <= 2 in `dim` coordinates, including 1.
std::vector<Geom> low_monomials(int dim) {
    std::vector<Geom> out = {Geom::constant(dim, Scalar(1))};
    for (int i = 0; i < dim; ++i) out.push_back(Geom::coordinate(dim, i));
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) out.push_back(Geom::coordinate(dim, i) * Geom::coordinate(dim, j));
    return out;
}

Outcome hopf_suite() {
    Tally t;
    for (const char* name : {"so21", "sl2", "abelian2"}) t.report(hopf_axiom_report(LiePresentation::builtin(name), 3));
    for (const auto& h : {FiniteHopf::group_algebra_z2(), FiniteHopf::functions_z2(), FiniteHopf::sweedler()})
        t.report(hopf_axiom_report(h));
    return t.out;
}

std::vector<Twist> twist_family() {
    auto so21 = LiePresentation::so21();
    return {make_trivial_twist(so21), abelian_unitary(), make_jordanian_twist(so21, "H", "E", Scalar::i())};
}

Outcome twist_suite() {
    Tally t;
    for (const auto& f : twist_family()) t.report(verify_twist(f));
    return t.out;
}

Outcome rmatrix_suite() {
    Tally t;
    for (const auto& f : twist_family()) t.report(verify_rmatrix(f));
    return t.out;
}

/// The printed table of the Jordanian hyperboloid, compared literally.
Outcome table_reproduction() {
    Tally t;
    auto phi = hyperboloid();
    StarAlgebra J = jordanian_on(phi);
    const Scalar i = Scalar::i(), half = Scalar::rational(1, 2), s = Scalar::sqrt_param("a");
    const Scalar a = Scalar::param("a"), c = Scalar::param("c");
    auto x = [](int k) { return Geom::coordinate(3, k); };
    auto hb = [](const Geom& g, unsigned k) { return g.hbar_shift(k); };

    struct Row {
        int l, r;
        Geom value;
    };
    const std::vector<Row> table = {
        {0, 0, x(0) * x(0)},
        {0, 1, x(0) * x(1) - hb(x(0) * x(0), 1) * (i / s)},
        {0, 2, x(0) * x(2) + hb(x(0) * x(1), 1) * (Scalar(2) * i * s) - hb(x(0) * x(0), 2)},
        {1, 0, x(1) * x(0)},
        {1, 1, x(1) * x(1)},
        {1, 2, x(1) * x(2)},
        {2, 0, x(0) * x(2)},
        {2, 1, x(1) * x(2) + hb(x(0) * x(2), 1) * (i / s)},
        {2, 2, x(2) * x(2) - hb(x(1) * x(2), 1) * (Scalar(2) * i * s)},
    };
    for (const auto& row : table)
        t.check(star(J, x(row.l), x(row.r)) == row.value, coordinate_name(row.l) + " * " + coordinate_name(row.r));

    const LiePtr& alg = phi->algebra();
    PBWElement one = PBWElement::one(alg), H = PBWElement::generator(alg, "H"), E = PBWElement::generator(alg, "E"),
               Ep = PBWElement::generator(alg, "Ep");
    PBWElement u = one + E.hbar_shift(1) * i, ui = u.inverse();
    auto ox = [](const PBWElement& l, const PBWElement& r) { return TensorElement::product_of({l, r}); };
    const Twist& f = J.twist();
    t.check(twisted_coproduct(f, H) == coproduct(H) - ox(H, E * ui).hbar_shift(1) * i, "Delta_F(H)");
    t.check(twisted_coproduct(f, E) == coproduct(E) + ox(E, E).hbar_shift(1) * i, "Delta_F(E)");
    t.check(twisted_coproduct(f, Ep) == ox(one, Ep) + ox(Ep, ui) - ox(H, H * ui).hbar_shift(1) * (i * half) +
                                            ox(H * (H * half + one), E * ui * ui).hbar_shift(2) * half,
            "Delta_F(Ep)");
    t.check(twisted_antipode(f, H) == -(H * u), "S_F(H)");
    t.check(twisted_antipode(f, E) == antipode(E) * ui, "S_F(E)");
    t.check(twisted_antipode(f, Ep) == antipode(Ep) * u - (H * H).hbar_shift(1) * (i * half) +
                                           ((H * half - one) * H * E).hbar_shift(2) * half +
                                           ((one - H * half) * H * E * E).hbar_shift(3) * (i * half),
            "S_F(Ep)");

    t.check(twisted_involution(J, x(0)) == x(0), "(x1)^*F");
    t.check(twisted_involution(J, x(1)) == x(1), "(x2)^*F");
    t.check(twisted_involution(J, x(2)) == x(2) - hb(x(1), 1) * (Scalar(2) * i * s), "(x3)^*F");

    QuadricIdeal ideal = QuadricIdeal::hyperboloid(a, c, *phi);
    Geom constraint = star(J, x(2), x(0)) * half + star(J, x(1), x(1)) * (a * half) + Geom::constant(3, c);
    t.check(reduce_mod(ideal, constraint).is_zero(), "deformed constraint");
    return t.out;
}

Outcome braided_cartan() {
    Tally t;
    auto phi = hyperboloid();
    CartanSamples samples = default_cartan_samples(*phi);
    t.report(cartan_report(StarAlgebra(phi, make_trivial_twist(phi->algebra())), samples));
    t.report(cartan_report(jordanian_on(phi), samples));
    return t.out;
}

Outcome correspondence() {
    Tally t;
    auto phi = hyperboloid();
    StarAlgebra J = jordanian_on(phi);
    ClassicalR r = classical_r(J.twist());
    auto mons = low_monomials(3);
    for (const auto& f : mons)
        for (const auto& g : mons) {
            Geom comm = star(J, f, g) - star(J, g, f);
            if (!comm.order(0).is_zero() || comm.order(1) != poisson_from_r(*phi, r, f, g)) {
                t.fail("[" + f.to_string() + ", " + g.to_string() + "]");
                return t.out;
            }
        }

    ConstantPoisson pi(2);
    pi.set(0, 1, Scalar::rational(1, 2));
    auto y = [](int k) { return Geom::coordinate(2, k); };
    auto mons2 = low_monomials(2);
    for (int sign : {1, -1}) {
        Geom comm = moyal_star(pi, y(0), y(1), sign) - moyal_star(pi, y(1), y(0), sign);
        t.check(comm == Geom::constant(2, Scalar(sign)).hbar_shift(1), "Moyal [x, y] sign " + std::to_string(sign));
        StarAlgebra M = moyal_star_algebra(pi, sign);
        for (const auto& f : mons2)
            for (const auto& g : mons2)
                if (star(M, f, g) != moyal_star(pi, f, g, sign)) {
                    t.fail("star(F_moyal) != moyal_star on " + f.to_string() + ", " + g.to_string());
                    return t.out;
                }
    }
    return t.out;
}

Outcome r_matrix_theory() {
    Tally t;
    auto so21 = LiePresentation::so21();
    ClassicalR r = classical_r(make_jordanian_twist(so21, "H", "E", Scalar::i()));
    t.check(!r.is_zero() && r.is_skew(), "r is a nonzero skew element");
    t.check(cybe_check(r).is_zero(), "CYBE");
    t.check(schouten_wedge_g(r, r).is_zero(), "[[r, r]] = 0");
    LeafBasis leaf = symplectic_leaf(ClassicalR::wedge(so21, "H", "E"));
    // span{H, E}: two vectors supported on H and E with an invertible 2x2 block.
    const int h = *so21->index_of("H"), e = *so21->index_of("E");
    bool span = leaf.basis.size() == 2;
    Scalar m[2][2];
    for (std::size_t v = 0; span && v < 2; ++v)
        for (const auto& [k, c] : leaf.basis[v]) {
            if (k == h)
                m[v][0] = c;
            else if (k == e)
                m[v][1] = c;
            else
                span = false;
        }
    span = span && !(m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_zero();
    t.check(span, "leaf of H^E is span{H, E}");
    t.check(leaf.bracket_closed, "leaf closed under the bracket");
    return t.out;
}

Outcome connections() {
    Tally t;
    Metric g = Metric::lightcone_minkowski();
    Connection lc = koszul_levi_civita(g);
    t.check(lc.is_flat(), "Koszul Christoffel symbols vanish");

    auto phi = hyperboloid();
    StarAlgebra J = jordanian_on(phi);
    const Geom &H = phi->field(0), &E = phi->field(1), &Ep = phi->field(2);
    const Scalar i = Scalar::i();
    auto nab = [&](const Geom& p, const Geom& q) { return nabla(lc, p, q); };
    auto tnab = [&](const Geom& p, const Geom& q) { return twist_nabla(J, lc, p, q); };
    auto hb = [](const Geom& v, unsigned k) { return v.hbar_shift(k); };
    t.check(tnab(E, H) == nab(E, H) + hb(nab(E, E), 1) * (Scalar(2) * i), "nabla^F_E H");
    t.check(tnab(Ep, H) == nab(Ep, H) - hb(nab(Ep, E), 1) * (Scalar(2) * i), "nabla^F_Ep H");
    t.check(tnab(E, Ep) == nab(E, Ep) + hb(nab(E, H), 1) * i - hb(nab(E, E), 2) * Scalar(2), "nabla^F_E Ep");
    t.check(tnab(Ep, Ep) == nab(Ep, Ep) - hb(nab(Ep, H), 1) * i, "nabla^F_Ep Ep");

    auto circular = Realization::hyperboloid(Scalar(1));
    t.report(connection_report(jordanian_on(circular), lc, g, standard_frame(*circular)));
    return t.out;
}

Outcome submanifold_commutation() {
    Tally t;
    auto phi = hyperboloid();
    QuadricIdeal ideal = QuadricIdeal::hyperboloid(Scalar::param("a"), Scalar::param("c"), *phi);
    ProjectionSamples samples = random_projection_samples(ideal, 50, 2024u, 3);
    t.check(samples.functions.size() >= 50, "at least 50 samples");
    t.report(twist_project_report(jordanian_on(phi), ideal, samples));
    return t.out;
}

Outcome unitarity() {
    Tally t;
    auto so21 = LiePresentation::so21();
    t.report(check_unitary(abelian_unitary()));
    t.report(check_unitary(make_jordanian_twist(so21, "H", "E", Scalar::i())));

    std::mt19937 gen(77u);
    auto random_poly = [&](int dim) {
        std::uniform_int_distribution<int> coeff(-4, 4), var(0, dim - 1), deg(0, 2), im(-2, 2);
        Geom f(GeomKind::Function, dim);
        for (int k = 0; k < 3; ++k) {
            GMono m;
            for (int d = deg(gen); d > 0; --d) ++m.x[static_cast<std::size_t>(var(gen))];
            f.add(0, m, Scalar(Gaussian(mpq_class(coeff(gen)), mpq_class(im(gen)))));
        }
        return f;
    };
    auto laws = [&](const StarAlgebra& a, const std::string& label) {
        for (int n = 0; n < 12; ++n) {
            Geom f = random_poly(a.dim()), g = random_poly(a.dim());
            Geom lhs = twisted_involution(a, star(a, f, g));
            Geom rhs = star(a, twisted_involution(a, g), twisted_involution(a, f));
            if (lhs != rhs) return t.fail(label + ": (f*g)^*F != g^*F * f^*F for " + f.to_string() + ", " + g.to_string());
            if (twisted_involution(a, twisted_involution(a, f)) != f) return t.fail(label + ": ^*F not involutive");
        }
    };
    laws(jordanian_on(hyperboloid()), "jordanian");
    laws(StarAlgebra(Realization::translations(2), abelian_unitary()), "abelian");
    return t.out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> expect_fail, only;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail; exit 0 iff exactly these fail")
        ->delimiter(',')
        ->check(CLI::Range(1, 10));
    app.add_option("--only", only, "run only these criteria")->delimiter(',')->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    set_truncation_order(4);
    const std::vector<Criterion> criteria = {
        {1, "Hopf axiom suite", 5, hopf_suite},
        {2, "twist suite", 10, twist_suite},
        {3, "R-matrix suite", 30, rmatrix_suite},
        {4, "hyperboloid table reproduction", 20, table_reproduction},
        {5, "braided Cartan theorem", 60, braided_cartan},
        {6, "correspondence principle", 30, correspondence},
        {7, "classical r-matrix theory", 30, r_matrix_theory},
        {8, "connections", 20, connections},
        {9, "submanifold commutation", 30, submanifold_commutation},
        {10, "unitarity and involutions", 30, unitarity},
    };

    std::set<int> failed;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= c.limit_s) {
            o.passed = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("over the time limit");
        }
        if (!o.passed) failed.insert(c.id);
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.limit_s);
        std::cout << (o.passed ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << "  (" << timing << ")";
        if (!o.passed) std::cout << "  failing: " << o.detail;
        std::cout << std::endl;
    }
    std::set<int> expected(expect_fail.begin(), expect_fail.end());
    std::cout << (criteria.size() - (only.empty() ? 0 : criteria.size() - only.size())) - failed.size() << " passed, "
              << failed.size() << " failed";
    if (!expected.empty()) std::cout << (failed == expected ? " (as expected)" : " (expected failures differ)");
    std::cout << "\n";
    return failed == expected ? 0 : 1;
}
