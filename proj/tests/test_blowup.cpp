#include <cstdlib>

#include "corpus.hpp"
#include "doctest.h"
#include "wildcc/blowup.hpp"

using namespace wildcc;
using wildcc::testing::witt_a2;
using wildcc::testing::witt_p2;

namespace {

const PointReport* find_point(const ChartAnalysis& an, bool origin) {
    for (const auto& x : an.points)
        if (x.place.is_origin() == origin) return &x;
    return nullptr;
}

}  // namespace

TEST_CASE("projective charts agree on divisor invariants") {
    const Field* F = Field::get(2);
    Surface S = make_p2(witt_p2(F, {"(S2/S1)^3"}), {1}, {});
    REQUIRE(S.charts.size() == 3);
    CHECK(S.chart("P2.1").axis[0].div == -1);
    CHECK(S.chart("P2.2").axis[1].div == 1);
    CHECK(S.euler_number() == 3);
    CheckStats st;
    auto an = analyze_surface(S, &st);
    CHECK(an.at("P2.0").ram[0].sw == 3);
    CHECK(an.at("P2.2").ram[1].sw == 3);
    CHECK(an.at("P2.2").ram[1].dt == 4);
    CHECK(st.count["chart overlap agreement"] > 0);
}

TEST_CASE("poles off the boundary are rejected on every chart") {
    const Field* F = Field::get(2);
    // Regular in the affine chart, but with a pole along S0 = 0.
    CHECK_THROWS_AS(analyze_surface(make_p2(witt_p2(F, {"S2^2/(S0*S1)"}), {1}, {})), Error);
    try {
        analyze_surface(make_p2(witt_p2(F, {"S2/S0"}), {1}, {}));
        FAIL("expected a polar locus error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PolarLocusOutsideBoundary);
    }
    CHECK_THROWS_AS(witt_p2(F, {"S2/S1^2"}), Error);  // not of degree zero
}

TEST_CASE("blowing up a point updates charts and classes") {
    const Field* F = Field::get(3);
    Surface S = make_p2(witt_p2(F, {"(S2/S1)^2"}), {1}, {});
    const BlowUp& b = blow_up(S, "P2.0", ChartPlace{0, UPoly::var(F)});
    CHECK(b.index == 1);
    CHECK(b.E == 3);
    CHECK(b.through == std::vector<int>{1});
    CHECK(S.euler_number() == 4);
    CHECK(S.divisor(1).cls == std::vector<int>{1, -1});
    CHECK(S.divisor(3).cls == std::vector<int>{0, 1});
    CHECK(S.divisor(3).exceptional);
    CHECK(canonical_class(S) == std::vector<int>{-3, 1});
    CHECK(pic_dot(S.divisor(3).cls, S.divisor(3).cls) == -1);
    const Chart& A = S.chart("E1.A");
    CHECK(A.axis[0].div == 3);
    CHECK(A.axis[1].div == -1);
    CHECK(S.chart("E1.B").axis[0].div == 1);
    CHECK(S.chart("E1.B").axis[1].div == 3);
    CHECK(S.blown.count({"P2.0", ChartPlace{0, UPoly::var(F)}}) == 1);
}

TEST_CASE("one blow-up resolves the power examples") {
    for (auto [p, n] : std::vector<std::pair<unsigned, int>>{{2, 3}, {3, 2}, {2, 5}}) {
        CAPTURE(p);
        CAPTURE(n);
        const Field* F = Field::get(p);
        Surface S = make_a2(witt_a2(F, {"(t2/t1)^" + std::to_string(n)}), {1}, {});
        auto an = analyze_surface(S);
        const PointReport* o = find_point(an.at("A2"), true);
        REQUIRE(o);
        CHECK_FALSE(o->clean);
        CHECK(o->ord.at(1) == n - 1);
        Resolution R = resolve(S);
        CHECK(R.final.blowups.size() == 1);
        for (const auto& lp : R.live_points(R.final)) CHECK(lp.report.clean);
        CHECK(R.final.blowups[0].point == "origin");
    }
}

TEST_CASE("centres off the origin and non-rational centres") {
    const Field* F = Field::get(2);
    // A pole along S2 = 0 next to a centre on S1 = 0 away from the origin.
    Surface S = make_p2(witt_p2(F, {"(S2^2+S0^2)/(S1*S2)"}), {1, 2}, {});
    Resolution R = resolve(S);
    CHECK(R.final.blowups.size() >= 1);
    for (const auto& lp : R.live_points(R.final)) CHECK(lp.report.clean);

    Surface T = make_p2(witt_p2(F, {"((S2^2+S2*S0+S0^2)/S1^2)^3"}), {1}, {});
    Resolution Q = resolve(T);
    CHECK(Q.base.F->q() == 4);
    for (const auto& lp : Q.live_points(Q.final)) CHECK(lp.report.clean);

    ResolveOptions tiny;
    tiny.max_field_size = 2;
    try {
        resolve(T, tiny);
        FAIL("expected a non-rational centre");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CenterNotRational);
    }
}

TEST_CASE("depth cap") {
    const Field* F = Field::get(2);
    Surface S = make_a2(witt_a2(F, {"(t2/t1)^3"}), {1}, {});
    ResolveOptions opt;
    opt.depth_cap = 0;
    try {
        resolve(S, opt);
        FAIL("expected the depth cap to trigger");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DepthExceeded);
    }
    setenv("WILDCC_DEPTH_CAP", "7", 1);
    CHECK(depth_cap_from_env() == 7);
    unsetenv("WILDCC_DEPTH_CAP");
    CHECK(depth_cap_from_env(11) == 11);
}

TEST_CASE("extra centres are blown up first") {
    const Field* F = Field::get(2);
    Surface S = make_a2(witt_a2(F, {"(t2/t1)^3"}), {1}, {});
    ResolveOptions opt;
    opt.extra.push_back({"A2", ChartPlace{0, UPoly(F, {1, 1})}});
    Resolution R = resolve(S, opt);
    CHECK(R.final.blowups.size() == 2);
    CHECK(R.final.blowups[0].point == "D1:t2 + 1");
}
