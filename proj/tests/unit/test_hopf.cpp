#include <doctest.h>

#include "hopftwist/hopf.hpp"

using namespace hopftwist;

namespace {

const Check& find_check(const Report& r, const std::string& name) {
    for (const auto& c : r.checks())
        if (c.name == name) return c;
    throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST_CASE("enveloping algebras satisfy the Hopf axioms up to degree 3") {
    for (const char* name : {"so21", "sl2", "abelian2"}) {
        Report r = hopf_axiom_report(LiePresentation::builtin(name), 3);
        INFO(r.to_text());
        CHECK(r.passed());
        CHECK(find_check(r, "antipode squared = id").passed);
    }
}

TEST_CASE("finite Hopf algebras") {
    SUBCASE("k[Z2]") {
        Report r = hopf_axiom_report(FiniteHopf::group_algebra_z2());
        CHECK(r.passed());
        CHECK_FALSE(find_check(r, "antipode squared = id").informational);
    }
    SUBCASE("F(Z2)") {
        auto h = FiniteHopf::functions_z2();
        CHECK(h.is_commutative());
        Report r = hopf_axiom_report(h);
        INFO(r.to_text());
        CHECK(r.passed());
    }
    SUBCASE("Sweedler H4") {
        auto h = FiniteHopf::sweedler();
        CHECK_FALSE(h.is_commutative());
        CHECK_FALSE(h.is_cocommutative());
        Report r = hopf_axiom_report(h);
        INFO(r.to_text());
        CHECK(r.passed());
        const Check& s2 = find_check(r, "antipode squared = id");
        CHECK(s2.informational);
        // S^2(x) = -x
        auto x = h.basis_vector(2);
        auto s2x = h.antipode(h.antipode(x));
        CHECK(s2x[2] == Scalar(-1));
    }
}

TEST_CASE("a corrupted table is reported, not thrown") {
    auto h = FiniteHopf::group_algebra_z2();
    h.set_antipode(1, {Scalar(1), Scalar(0)});
    Report r = hopf_axiom_report(h);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(find_check(r, "antipode left").passed);
    CHECK(find_check(r, "coassociativity").passed);
}

TEST_CASE("incomplete tables are rejected") {
    FiniteHopf h("broken", {"1", "g"});
    CHECK_THROWS_AS(h.validate(), std::invalid_argument);
}

TEST_CASE("monomial enumeration") {
    auto so = LiePresentation::so21();
    CHECK(monomials_up_to(*so, 0).size() == 1);
    CHECK(monomials_up_to(*so, 1).size() == 4);
    CHECK(monomials_up_to(*so, 3).size() == 20);
}
