#include <random>

#include "doctest.h"
#include "wildcc/expr.hpp"
#include "wildcc/ram.hpp"

using namespace wildcc;

namespace {

RatFunc P(const Field* F, const std::string& s) { return parse_expr(s, a2_context(F)); }

WittVec W(const Field* F, std::vector<std::string> top_first) {
    std::vector<RatFunc> a;
    for (auto it = top_first.rbegin(); it != top_first.rend(); ++it) a.push_back(P(F, *it));
    return WittVec(F->p(), a);
}

Chart a2(const WittVec& a, bool d1, bool d2) {
    Chart c;
    c.name = "A2";
    c.var = {"t1", "t2"};
    if (d1) c.axis[0].div = 1;
    if (d2) c.axis[1].div = 2;
    c.a = a;
    return c;
}

URat UR(const Field* F, std::vector<Elem> c, bool radicial = false) { return URat::from_poly(UPoly(F, std::move(c)), radicial); }

ChartPlace origin() {
    ChartPlace x;
    x.axis = 0;
    x.g = UPoly::var(Field::get(2));
    return x;
}

RatFunc random_component(const Field* F, std::mt19937& rng) {
    std::uniform_int_distribution<int> co(0, F->q() - 1), ex(0, 3), pole(0, 4);
    Poly2 n(F);
    for (int i = 0; i < 3; ++i) n = n + Poly2::monomial(F, co(rng), ex(rng), ex(rng));
    return RatFunc(n, Poly2::constant(F, 1)) * RatFunc::monomial(F, 1, -pole(rng), -pole(rng));
}

}  // namespace

TEST_CASE("reduction to an admissible representative") {
    const Field* F = Field::get(2);
    WittVec r = reduce_admissible(W(F, {"1/t1^2"}), a2(W(F, {"0"}), true, false).axis);
    CHECK(r == W(F, {"1/t1"}));
    CHECK(swan(r, 0) == 1);
    // Already admissible vectors are left alone.
    WittVec b = W(F, {"t2^3/t1^3"});
    CHECK(reduce_admissible(b, a2(b, true, false).axis) == b);
}

TEST_CASE("divisor invariants of the worked examples") {
    const Field* F2 = Field::get(2);
    const Field* F3 = Field::get(3);
    SUBCASE("(t2/t1)^3, p = 2") {
        auto an = analyze_chart(a2(W(F2, {"t2^3/t1^3"}), true, false));
        CHECK(an.ram[0].sw == 3);
        CHECK(an.ram[0].dt == 4);
        CHECK(an.ram[0].type == DivType::I);
        CHECK_FALSE(an.ram[0].exceptional);
        CHECK(an.forms[0].rsw[0] == UR(F2, {0, 0, 0, 1}));
        CHECK(an.forms[0].rsw[1] == UR(F2, {0, 0, 1}));
        // Unrestricted: (t2^3 dt1 + t1 t2^2 dt2) / t1^4.
        CHECK(an.fsd[0] * P(F2, "t1^4") == P(F2, "t2^3"));
        CHECK(an.fsd[1] * P(F2, "t1^4") == P(F2, "t1*t2^2"));
        CHECK(an.forms[0].cform[0] == UR(F2, {0, 0, 0, 1}));
        CHECK(an.forms[0].cform[1].is_zero());
    }
    SUBCASE("t2/t1^2, p = 2 is exceptional") {
        auto an = analyze_chart(a2(W(F2, {"t2/t1^2"}), true, false));
        CHECK(an.ram[0].sw == 2);
        CHECK(an.ram[0].dt == 2);
        CHECK(an.ram[0].type == DivType::II);
        CHECK(an.ram[0].exceptional);
        CHECK(an.forms[0].radicial);
        CHECK(an.forms[0].cform[0] == UR(F2, {0, 1}, true));
        CHECK(an.forms[0].cform[1] == UR(F2, {1}, true));
    }
    SUBCASE("t2/t1^3, p = 3") {
        auto an = analyze_chart(a2(W(F3, {"t2/t1^3"}), true, false));
        CHECK(an.ram[0].sw == 3);
        CHECK(an.ram[0].dt == 3);
        CHECK(an.ram[0].type == DivType::II);
        CHECK(an.forms[0].cform[0].is_zero());
        CHECK(an.forms[0].cform[1] == UR(F3, {2}));
        CHECK(an.forms[0].rsw[0].is_zero());
    }
    SUBCASE("length two, t2/t1 in the Teichmuller slot") {
        auto an = analyze_chart(a2(W(F2, {"t2/t1", "0"}), true, false));
        CHECK(an.ram[0].sw == 2);
        CHECK(an.ram[0].type == DivType::I);
        CHECK(an.forms[0].rsw[0] == UR(F2, {0, 0, 1}));
        CHECK(an.forms[0].rsw[1] == UR(F2, {0, 1}));
    }
    SUBCASE("tame and unramified") {
        auto an = analyze_chart(a2(W(F2, {"t2"}), true, true));
        CHECK(an.ram[0].sw == 0);
        CHECK(an.ram[0].dt == 1);
        CHECK(an.ram[0].type == DivType::Tame);
    }
}

TEST_CASE("point invariants of the worked examples") {
    const Field* F2 = Field::get(2);
    SUBCASE("(t2/t1)^3 at the origin and at t2 = 1") {
        auto an = analyze_chart(a2(W(F2, {"t2^3/t1^3"}), true, false));
        REQUIRE(an.points.size() == 1);
        const auto& r = an.points[0];
        CHECK(r.place.is_origin());
        CHECK_FALSE(r.clean);
        CHECK(r.ord.at(1) == 2);
        CHECK(r.ordp2.at(1) == 6);
        CHECK_FALSE(r.non_degenerate);
        ChartPlace y{0, UPoly(F2, {1, 1})};
        auto q = point_report(an, y);
        CHECK(q.clean);
        CHECK(q.non_degenerate);
        CHECK(q.ord.at(1) == 0);
    }
    SUBCASE("1/(t1 t2) at the crossing") {
        auto an = analyze_chart(a2(W(F2, {"1/(t1*t2)"}), true, true));
        CHECK(an.forms[0].rsw[0] == UR(F2, {1}));
        CHECK(an.forms[0].rsw[1] == UR(F2, {1}));
        auto r = point_report(an, origin());
        CHECK(r.ix.size() == 2);
        CHECK(r.clean);
        CHECK_FALSE(r.non_degenerate);
        CHECK(r.ordp2.at(1) == 2);
        CHECK(r.ordp2.at(2) == 2);
    }
    SUBCASE("poles off the boundary are rejected") {
        CHECK_THROWS_AS(analyze_chart(a2(W(F2, {"1/(t1+t2)"}), true, true)), Error);
    }
}

TEST_CASE("invariants do not depend on the representative") {
    std::mt19937 rng(41);
    int checked = 0;
    for (auto [p, s] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
        const Field* F = Field::get(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<RatFunc> comps, vs;
            for (unsigned i = 0; i < s; ++i) {
                comps.push_back(random_component(F, rng));
                vs.push_back(random_component(F, rng));
            }
            WittVec a(p, comps), v(p, vs);
            WittVec b = a + v.frobenius() - v;
            auto A = analyze_chart(a2(a, true, true));
            auto B = analyze_chart(a2(b, true, true));
            for (int k = 0; k < 2; ++k) {
                CHECK(A.ram[k].sw == B.ram[k].sw);
                CHECK(A.ram[k].dt == B.ram[k].dt);
                CHECK(A.ram[k].type == B.ram[k].type);
            }
            std::vector<ChartPlace> places;
            for (const auto& x : A.points) places.push_back(x.place);
            for (const auto& x : B.points) places.push_back(x.place);
            for (const auto& x : places) {
                auto ra = point_report(A, x), rb = point_report(B, x);
                CHECK(ra.clean == rb.clean);
                CHECK(ra.ord == rb.ord);
                CHECK(ra.ordp2 == rb.ordp2);
            }
            ++checked;
        }
    }
    CHECK(checked == 120);
}
