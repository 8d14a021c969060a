#include <doctest.h>

#include <functional>

#include "hopftwist/geometry.hpp"
#include "support.hpp"

using namespace hopftwist;
using hopftwist::testing::random_rational;
using hopftwist::testing::small_int;

namespace {

constexpr int D = 3;

Geom x(int i) { return Geom::coordinate(D, i); }
Geom del(int i) { return Geom::partial(D, i); }
Geom dx(int i) { return Geom::dx(D, i); }
Geom one() { return Geom::constant(D, Scalar(1)); }

Geom random_function(int max_deg = 2) {
    Geom f = Geom::constant(D, random_rational());
    for (int t = 0; t < 3; ++t) {
        GMono m;
        int d = static_cast<int>(small_int(1, max_deg));
        for (int j = 0; j < d; ++j) ++m.x[static_cast<std::size_t>(small_int(0, D - 1))];
        f += Geom::monomial(GeomKind::Function, D, m, random_rational());
    }
    return f;
}

Geom random_graded(GeomKind kind, int degree, int terms = 2) {
    Geom g(kind, D);
    if (degree == 0) return random_function();
    for (int t = 0; t < terms; ++t) {
        unsigned mask = 0;
        while (__builtin_popcount(mask) < degree) mask |= 1u << small_int(0, D - 1);
        Geom basis = Geom::monomial(kind, D, GMono{{}, static_cast<std::uint8_t>(mask)});
        g += random_function() * basis;
    }
    return g;
}

bool odd(int k) { return (k % 2 + 2) % 2 == 1; }

using Op = std::function<Geom(const Geom&)>;

/// Graded commutator A B - (-1)^{|A||B|} B A.
Op commutator(Op a, int da, Op b, int db) {
    return [=](const Geom& w) {
        Geom r = a(b(w));
        Geom s = b(a(w));
        return odd(da * db) ? r + s : r - s;
    };
}

Op lie_op(const Geom& X) {
    return [X](const Geom& w) { return lie_form(X, w); };
}
Op ins_op(const Geom& X) {
    return [X](const Geom& w) { return insert(X, w); };
}
Op d_op() {
    return [](const Geom& w) { return exterior_derivative(w); };
}

/// eq. for decomposable fields X_1^...^X_k, Y_1^...^Y_l by the sum over pairs.
Geom schouten_decomposable(const std::vector<Geom>& X, const std::vector<Geom>& Y) {
    Geom r(GeomKind::Multivector, D);
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < Y.size(); ++j) {
            Geom t = vf_bracket(X[i], Y[j]);
            for (std::size_t a = 0; a < X.size(); ++a)
                if (a != i) t = t * X[a];
            for (std::size_t b = 0; b < Y.size(); ++b)
                if (b != j) t = t * Y[b];
            r += odd(static_cast<int>(i + j)) ? -t : t;
        }
    return r;
}

Geom random_field() { return random_graded(GeomKind::Multivector, 1, 3); }

}  // namespace

TEST_CASE("functions and vector fields") {
    CHECK(vf_apply(del(0), x(0) * x(1)) == x(1));
    CHECK(vf_apply(random_field(), one()).is_zero());
    auto phi = Realization::hyperboloid();
    Scalar a = Scalar::param("a"), c = Scalar::param("c");
    Geom f = x(0) * x(2) * Scalar::rational(1, 2) + x(1) * x(1) * (a / Scalar(2)) + Geom::constant(D, c);
    for (int i = 0; i < 3; ++i) CHECK(vf_apply(phi->field(i), f).is_zero());

    Geom X = random_field(), f1 = random_function(), f2 = random_function();
    CHECK(vf_apply(X, f1 * f2) == vf_apply(X, f1) * f2 + f1 * vf_apply(X, f2));
}

TEST_CASE("vector field brackets") {
    auto phi = Realization::hyperboloid();
    const Geom &H = phi->field(0), &E = phi->field(1), &Ep = phi->field(2);
    CHECK(vf_bracket(H, E) == E * Scalar(2));
    CHECK(vf_bracket(H, Ep) == Ep * Scalar(-2));
    CHECK(vf_bracket(Ep, E) == H);
    CHECK(vf_bracket(del(0), del(1)).is_zero());
    CHECK_FALSE(phi->failing_pair());

    Geom X = random_field(), Y = random_field(), Z = random_field(), f = random_function();
    CHECK(vf_bracket(X, Y) == -vf_bracket(Y, X));
    CHECK((vf_bracket(X, vf_bracket(Y, Z)) + vf_bracket(Y, vf_bracket(Z, X)) + vf_bracket(Z, vf_bracket(X, Y)))
              .is_zero());
    CHECK(vf_apply(vf_bracket(X, Y), f) == vf_apply(X, vf_apply(Y, f)) - vf_apply(Y, vf_apply(X, f)));
}

TEST_CASE("wedge and schouten") {
    CHECK(del(0) * del(1) == -(del(1) * del(0)));
    CHECK((del(0) * del(0)).is_zero());
    CHECK(dx(0) * dx(2) == -(dx(2) * dx(0)));

    Geom X = random_field(), a = random_function();
    CHECK(schouten(X, a) == vf_apply(X, a));
    CHECK(schouten(a, X) == -vf_apply(X, a));
    CHECK(schouten(a, random_function()).is_zero());
    CHECK(schouten(del(0), x(0) * del(1) * del(2)) == del(1) * del(2));

    SUBCASE("decomposable formula") {
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3 && k + l <= 4; ++l) {
                std::vector<Geom> Xs, Ys;
                Geom Xw = one(), Yw = one();
                for (int i = 0; i < k; ++i) Xs.push_back(random_field()), Xw = Xw * Xs.back();
                for (int j = 0; j < l; ++j) Ys.push_back(random_field()), Yw = Yw * Ys.back();
                CAPTURE(k);
                CAPTURE(l);
                CHECK(schouten(Xw, Yw) == schouten_decomposable(Xs, Ys));
            }
    }
    SUBCASE("graded laws") {
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l) {
                int m = static_cast<int>(small_int(0, 2));
                Geom A = random_graded(GeomKind::Multivector, k), B = random_graded(GeomKind::Multivector, l),
                     C = random_graded(GeomKind::Multivector, m);
                CAPTURE(k);
                CAPTURE(l);
                Geom skew = schouten(B, A);
                CHECK(skew == (odd((k - 1) * (l - 1)) ? schouten(A, B) : -schouten(A, B)));
                Geom jac = schouten(A, schouten(B, C)) - schouten(schouten(A, B), C);
                Geom third = schouten(B, schouten(A, C));
                CHECK(jac == (odd((k - 1) * (l - 1)) ? -third : third));
                Geom leib = schouten(A, B) * C;
                Geom rest = B * schouten(A, C);
                CHECK(schouten(A, B * C) == (odd((k - 1) * l) ? leib - rest : leib + rest));
            }
    }
}

TEST_CASE("exterior derivative and insertion") {
    CHECK(exterior_derivative(x(0)) == dx(0));
    CHECK(exterior_derivative(x(0) * dx(1)) == dx(0) * dx(1));
    CHECK(insert(del(0), dx(0)) == one());
    CHECK(insert(del(0), dx(0) * dx(1)) == dx(1));
    CHECK(insert(del(1), dx(0) * dx(1)) == -dx(0));
    CHECK(lie_form(del(0), x(0) * dx(1)) == dx(1));
    Geom a = random_function();
    CHECK(insert(del(0) * del(1), dx(0) * dx(1)) == insert(del(0), insert(del(1), dx(0) * dx(1))));
    CHECK(insert(a, dx(2)) == a * dx(2));
    Geom X = random_field();
    CHECK(insert(X, exterior_derivative(a)) == vf_apply(X, a));
    Geom w = random_graded(GeomKind::Form, 1);
    CHECK(lie_form(a, w) == -(exterior_derivative(a) * w));
    for (int k = 0; k <= 3; ++k) {
        Geom f = random_graded(GeomKind::Form, k);
        CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
        Geom g = random_graded(GeomKind::Form, 1);
        Geom lhs = exterior_derivative(f * g);
        Geom r = f * exterior_derivative(g);
        CHECK(lhs == (odd(k) ? exterior_derivative(f) * g - r : exterior_derivative(f) * g + r));
        Geom li = insert(X, f * g), ri = f * insert(X, g);
        CHECK(li == (odd(k) ? insert(X, f) * g - ri : insert(X, f) * g + ri));
    }
}

TEST_CASE("classical cartan identities") {
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l) {
            Geom X = random_graded(GeomKind::Multivector, k), Y = random_graded(GeomKind::Multivector, l);
            Geom XY = schouten(X, Y);
            CAPTURE(k);
            CAPTURE(l);
            for (int p = 0; p <= D; ++p) {
                Geom w = random_graded(GeomKind::Form, p);
                CAPTURE(p);
                CHECK(commutator(lie_op(X), 1 - k, lie_op(Y), 1 - l)(w) == lie_op(XY)(w));
                CHECK(commutator(lie_op(X), 1 - k, ins_op(Y), -l)(w) == ins_op(XY)(w));
                CHECK(commutator(lie_op(X), 1 - k, d_op(), 1)(w).is_zero());
                CHECK(commutator(ins_op(X), -k, ins_op(Y), -l)(w).is_zero());
                CHECK(commutator(ins_op(X), -k, d_op(), 1)(w) == lie_op(X)(w));
                CHECK(commutator(d_op(), 1, d_op(), 1)(w).is_zero());
            }
        }
}

TEST_CASE("involution") {
    Scalar i = Scalar::i();
    CHECK(star_involution(x(0) * i) == x(0) * (-i));
    CHECK(star_involution(del(0)) == -del(0));
    CHECK(star_involution(dx(1)) == -dx(1));
    CHECK(star_involution(del(0) * del(1)) == -(del(0) * del(1)));
    for (int k = 0; k <= 3; ++k) {
        Geom m = random_graded(GeomKind::Multivector, k) * i + random_graded(GeomKind::Multivector, k);
        CHECK(star_involution(star_involution(m)) == m);
        Geom n = random_graded(GeomKind::Multivector, 1);
        CHECK(star_involution(m * n) == star_involution(n) * star_involution(m));
    }
    // L_{X^*} f = -(L_X f^*)^*
    Geom X = random_field() * i + random_field(), f = random_function() * i;
    CHECK(vf_apply(star_involution(X), f) == -star_involution(vf_apply(X, star_involution(f))));
}

TEST_CASE("realization action") {
    auto phi = Realization::hyperboloid();
    auto alg = phi->algebra();
    PBWElement H = PBWElement::generator(alg, "H"), E = PBWElement::generator(alg, "E"),
               Ep = PBWElement::generator(alg, "Ep");
    Scalar s = Scalar::sqrt_param("a");
    CHECK(hopf_act(*phi, H, x(0)) == x(0) * Scalar(2));
    CHECK(hopf_act(*phi, E, x(2)) == x(1) * (Scalar(-2) * s));
    CHECK(hopf_act(*phi, E, x(1)) == x(0) * s.inverse());
    for (int j = 0; j < 3; ++j) {
        PBWElement xi = hopftwist::testing::random_pbw(alg, 3);
        Geom expect(GeomKind::Function, D);
        for (const auto& [k, c] : xi.terms())
            if (k.m == Exps{}) expect += one().hbar_shift(k.h) * c;
        CHECK(hopf_act(*phi, xi, one()) == expect);
    }
    SUBCASE("ordering: E H acts as E after H") {
        Geom f = random_function(3);
        CHECK(hopf_act(*phi, E * H, f) == phi->act_generator(1, phi->act_generator(0, f)));
        CHECK(hopf_act(*phi, H * E, f) == phi->act_generator(0, phi->act_generator(1, f)));
    }
    SUBCASE("module algebra") {
        for (int t = 0; t < 4; ++t) {
            PBWElement xi = hopftwist::testing::random_pbw(alg, 3);
            Geom f = random_function(), g = random_function();
            Geom w = random_graded(GeomKind::Form, 1), v = random_graded(GeomKind::Form, 1);
            Geom P = random_graded(GeomKind::Multivector, 1), Q = random_graded(GeomKind::Multivector, 2);
            TensorElement cop = coproduct(xi);
            auto wedge = [](const Geom& p, const Geom& q) { return p * q; };
            CHECK(hopf_act(*phi, xi, f * g) == contract2(*phi, cop, f, g, wedge));
            CHECK(hopf_act(*phi, xi, w * v) == contract2(*phi, cop, w, v, wedge));
            CHECK(hopf_act(*phi, xi, P * Q) == contract2(*phi, cop, P, Q, wedge));
            CHECK(hopf_act(*phi, xi, schouten(P, Q)) ==
                  contract2(*phi, cop, P, Q, [](const Geom& p, const Geom& q) { return schouten(p, q); }));
            CHECK(hopf_act(*phi, xi, insert(Q, w * v)) ==
                  contract2(*phi, cop, Q, w * v, [](const Geom& p, const Geom& q) { return insert(p, q); }));
        }
    }
    SUBCASE("adjoint action on fields") {
        // (xi |> Y)(f) = xi_(1) |> (Y(S(xi_(2)) |> f))
        PBWElement xi = E * E + H * Ep;
        Geom Y = random_field(), f = random_function(3);
        TensorElement cop = coproduct(xi);
        Geom rhs(GeomKind::Function, D);
        for (const auto& [k, c] : cop.terms()) {
            PBWElement second = antipode(PBWElement::monomial(alg, k.m[1]));
            Geom inner = vf_apply(Y, hopf_act(*phi, second, f));
            rhs += phi->act(k.m[0], inner) * c;
        }
        CHECK(vf_apply(hopf_act(*phi, xi, Y), f) == rhs);
    }
    SUBCASE("forms pair with fields") {
        // <X |> w, Y> = X(<w, Y>) - <w, [X, Y]>
        Geom w = random_graded(GeomKind::Form, 1), Y = random_field();
        for (int g = 0; g < 3; ++g) {
            Geom lhs = insert(Y, phi->act_generator(g, w));
            Geom rhs = vf_apply(phi->field(g), insert(Y, w)) - insert(vf_bracket(phi->field(g), Y), w);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("translations") {
    auto phi = Realization::translations(D);
    PBWElement p0 = PBWElement::generator(phi->algebra(), 0);
    CHECK(hopf_act(*phi, p0, x(0) * x(0) * x(1)) == x(0) * x(1) * Scalar(2));
    CHECK(hopf_act(*phi, p0, x(0) * x(0) * dx(0)) == x(0) * dx(0) * Scalar(2));
    CHECK(hopf_act(*phi, p0 * p0, x(0) * dx(0)).is_zero());
    CHECK_THROWS_AS(Realization::create(phi->algebra(), D, {del(0), del(0) * del(1), del(2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Realization::create(LiePresentation::so21(), D, {del(0), del(1), del(2)}), AlgebraError);
}

TEST_CASE("rendering") {
    Scalar s = Scalar::sqrt_param("a");
    CHECK((x(0) * x(1)).to_string() == "x1*x2");
    CHECK((x(0) * del(1) * del(2)).to_string() == "x1*del2&del3");
    CHECK((dx(0) * Scalar(-1)).to_string() == "-dx1");
    CHECK(Geom(GeomKind::Form, D).to_string() == "0");
    (void)s;
}
