#include <doctest.h>

#include "hopftwist/parse.hpp"
#include "hopftwist/star.hpp"
#include "support.hpp"

using namespace hopftwist;
using hopftwist::testing::random_pbw;
using hopftwist::testing::random_scalar;
using hopftwist::testing::small_int;

namespace {

ParseContext so21_ctx() { return ParseContext{LiePresentation::so21(), 3, {"a", "c"}}; }

Geom x(int i) { return Geom::coordinate(3, i); }

}  // namespace

TEST_CASE("parsing") {
    ParseContext ctx = so21_ctx();
    Scalar a = Scalar::param("a"), c = Scalar::param("c");
    CHECK(parse_geom("x1*x3 + (a/2)*x2^2 + c", ctx) ==
          x(0) * x(2) + x(1) * x(1) * (a * Scalar::rational(1, 2)) + Geom::constant(3, c));
    CHECK(parse_tensor("1 ox 1", ctx) == TensorElement::one(ctx.algebra, 2));
    CHECK(parse_pbw("H*E - E*H - 2*E", ctx).is_zero());
    CHECK(parse_pbw("Ep*E", ctx) == PBWElement::word(ctx.algebra, std::vector<std::string>{"Ep", "E"}));
    CHECK(parse_scalar("sqrt(a)^2", ctx) == a);
    CHECK(parse_scalar("-2^2") == Scalar(-4));
    CHECK(parse_scalar("2/4 - 1/2").is_zero());
    CHECK(parse_geom("hbar*x1", ctx) == x(0).hbar_shift(1));
    CHECK(parse_geom("x1*dx2&dx3", ctx) == x(0) * Geom::dx(3, 1) * Geom::dx(3, 2));
    CHECK(parse_geom("del1&del2 + del2&del1", ctx).is_zero());
    CHECK(parse_tensor("H ox E ox Ep", ctx).arity() == 3);
    CHECK(parse_tensor("(H + E) ox 1 - H ox 1", ctx) == parse_tensor("E ox 1", ctx));
    CHECK(parse_tensor("2*(H ox E)*(E ox H)", ctx) == parse_tensor("2*H*E ox E*H", ctx));
    CHECK(parse_scalar("i*i") == Scalar(-1));
}

TEST_CASE("parse errors") {
    ParseContext ctx = so21_ctx();
    auto pos = [&](const char* text) -> long {
        try {
            parse_expr(text, ctx);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(pos("x1 + y") == 5);
    CHECK(pos("x1 +") == 4);
    CHECK(pos("(x1") == 3);
    CHECK(pos("x1 $ x2") == 3);
    CHECK(pos("x1 / x2") == 3);
    CHECK(pos("x1 / hbar") == 3);
    CHECK(pos("x1 ^ x2") == 5);
    CHECK(pos("x4") == 0);
    CHECK(pos("x1 * H") == 3);
    CHECK(pos("x1 x2") == 3);
    CHECK(pos("1/0") == 1);
    CHECK_THROWS_AS(parse_pbw("H", ParseContext{nullptr, 3, {}}), ParseError);
    CHECK_THROWS_AS(parse_tensor("H", ctx), ParseError);
    CHECK_THROWS_AS(parse_geom("dx1 + del1", ctx), std::invalid_argument);
}

TEST_CASE("printer round trip") {
    ParseContext ctx = so21_ctx();
    auto phi = Realization::hyperboloid();
    StarAlgebra J(phi, make_jordanian_twist(phi->algebra(), "H", "E", Scalar::i()));
    std::vector<Geom> geoms;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) geoms.push_back(star(J, x(i), x(j)));
    geoms.push_back(twisted_involution(J, x(2)));
    geoms.push_back(x(0) * Geom::dx(3, 1) * Geom::dx(3, 2) * random_scalar() + Geom::dx(3, 0).hbar_shift(2));
    geoms.push_back(phi->field(1) * phi->field(2) * random_scalar() + phi->field(0));
    for (int n = 0; n < 10; ++n) geoms.push_back(x(static_cast<int>(small_int(0, 2))) * random_scalar() + Geom::constant(3, random_scalar()).hbar_shift(1));
    for (const auto& g : geoms) {
        INFO(g.to_string());
        CHECK(parse_geom(g.to_string(), ctx) == g);
    }
    PBWElement Ep = PBWElement::generator(ctx.algebra, "Ep");
    std::vector<PBWElement> pbws = {twisted_antipode(J.twist(), Ep)};
    for (int n = 0; n < 10; ++n) pbws.push_back(random_pbw(ctx.algebra, 3) * random_scalar());
    for (const auto& p : pbws) {
        INFO(p.to_string());
        CHECK(parse_pbw(p.to_string(), ctx) == p);
    }
    for (const auto& t : {twisted_coproduct(J.twist(), Ep), J.twist().f(), J.rmatrix().rinv}) {
        INFO(t.to_string());
        CHECK(parse_tensor(t.to_string(), ctx) == t);
    }
    for (int n = 0; n < 20; ++n) {
        Scalar s = random_scalar();
        INFO(s.to_string());
        CHECK(parse_scalar(s.to_string(), ctx) == s);
    }
}
