#include <doctest.h>

#include "hopftwist/config.hpp"

using namespace hopftwist;

namespace {

const char* kSo21 = R"(
order = 3
[algebra]
basis = H E Ep
bracket H E = 2*E
bracket H Ep = -2*Ep
bracket Ep E = H
[realization]
dim = 3
field H = 2*x1*del1 - 2*x3*del3
field E = x1*del2 - 2*x2*del3
field Ep = x3*del2 - 2*x2*del1
[twist]
kind = jordanian
[quadric]
generator = 1/2*x1*x3 + 1/2*x2^2 + c   # a = 1
frame = H E Ep
)";

}  // namespace

TEST_CASE("config files") {
    Config cfg = parse_config(kSo21);
    REQUIRE(cfg.order);
    CHECK(*cfg.order == 3);
    REQUIRE(cfg.algebra);
    CHECK(cfg.algebra->dim() == 3);
    CHECK(cfg.algebra->bracket(1, 2) == LiePresentation::so21()->bracket(1, 2));
    REQUIRE(cfg.realization);
    CHECK(cfg.realization->field(1) == Realization::hyperboloid(Scalar(1))->field(1));
    REQUIRE(cfg.quadric);
    for (int i = 0; i < 3; ++i) CHECK(is_tangent(*cfg.quadric, cfg.realization->field(i)));
    CHECK(cfg.quadric->tangent_frame().size() == 3);
    REQUIRE(cfg.twist);
    Twist f = build_twist(cfg.algebra, *cfg.twist);
    CHECK(verify_twist(f).passed());

    Config builtin = parse_config("[algebra]\nbuiltin = abelian2\n[twist]\nkind = abelian\npair = P1, P2\nscale = i\n");
    CHECK(builtin.algebra->name() == "abelian2");
    CHECK(verify_twist(build_twist(builtin.algebra, *builtin.twist)).passed());

    Config metric = parse_config("[metric]\ng 1 3 = 1/2\ng 2 2 = 1\n");
    REQUIRE(metric.metric);
    CHECK(metric.metric->determinant() == Metric::lightcone_minkowski().determinant());
}

TEST_CASE("config errors") {
    auto message = [](const std::string& text) -> std::string {
        try {
            parse_config(text);
        } catch (const ConfigError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(message("order = x\n").find("line 1") != std::string::npos);
    CHECK(message("\n[nothing]\n").find("line 2") != std::string::npos);
    CHECK(message("[algebra]\nbasis = H E\nbracket H E = 2*E*E\n").find("line 3") != std::string::npos);
    CHECK(message("[algebra]\nbasis = H E\nbracket H F = E\n").find("unknown basis") != std::string::npos);
    CHECK_FALSE(message("[algebra]\nbasis = A B C\nbracket A B = C\nbracket B C = A\nbracket C A = B\nbracket A C = A\n").empty());
    CHECK(message("[algebra]\nbuiltin = so21\n[realization]\nfield H = del1\n").find("no field") != std::string::npos);
    CHECK(message("[algebra]\nbuiltin = so21\n[realization]\nfield H = del1\nfield E = del2\nfield Ep = del3\n")
              .find("realize") != std::string::npos);
    CHECK(message("[algebra]\nbuiltin = so21\n[twist]\nkind = magic\n").find("unknown twist") != std::string::npos);
    CHECK(message("[algebra]\nbuiltin = abelian2\n[twist]\nkind = jordanian\n").find("jordanian") != std::string::npos);
    CHECK(message("[metric]\ng 1 2 = x1 +\n").find("line 2") != std::string::npos);
    CHECK(message("[quadric]\nframe = H\n").find("generator") != std::string::npos);
    CHECK(message("key without value\n").find("key = value") != std::string::npos);
    CHECK_THROWS_AS(load_config("/nonexistent/file.conf"), ConfigError);
}
