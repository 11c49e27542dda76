#include "corpus.hpp"
#include "doctest.h"
#include "wildcc/cycles.hpp"

using namespace wildcc;
using wildcc::testing::witt_a2;
using wildcc::testing::witt_p2;

namespace {

CharacterAnalysis on_p2(unsigned p, const std::string& f, const std::vector<int>& boundary, int e = 1) {
    return analyze_character(make_p2(witt_p2(Field::get(p, e), {f}), boundary, {}));
}

CharacterAnalysis on_a2(unsigned p, const std::string& f, const std::vector<int>& boundary) {
    return analyze_character(make_a2(witt_a2(Field::get(p), {f}), boundary, {}));
}

}  // namespace

TEST_CASE("cycle bookkeeping") {
    Cycle c;
    c.add(CompKind::Fiber, "origin", 2);
    c.add(CompKind::ZeroSection, "", 1);
    c.add(CompKind::Conormal, "D1", 4);
    c.add(CompKind::Fiber, "origin", 1);
    c.add(CompKind::Fiber, "D1:t2 + 1", 1, 2);
    c.add(CompKind::Fiber, "D1:t2 + 1", -1, 2);
    CHECK(c.terms().size() == 3);
    CHECK(c.mult(CompKind::Fiber, "origin") == 3);
    CHECK(c.mult(CompKind::Fiber, "D1:t2 + 1") == 0);
    CHECK(c.to_line() == "1·ZeroSection + 4·Conormal(D1) + 3·Fiber(origin)");
    c.add(CompKind::Line, "D2", 3, 1, "dt1 + t2 dt2");
    c.add(CompKind::Fiber, "D1:t2^2 + t2 + 1", 5, 2);
    Cycle back = Cycle::parse_text(c.to_text());
    CHECK(back == c);
    CHECK(back.to_text() == c.to_text());
    CHECK_THROWS_AS(Cycle::parse_text("3 * Nonsense(D1)"), Error);
}

TEST_CASE("flagship characteristic cycle") {
    auto A = on_p2(2, "(S2/S1)^3", {1});
    CHECK(cc(A).to_line() == "1·ZeroSection + 4·Conormal(D1) + 3·Fiber(origin)");
    CHECK(A.char_log.to_line() == "1·ZeroSectionLog + 3·LineLog(D1)");
    CHECK(ss(A) == std::vector<std::string>{"ZeroSection", "Conormal(D1)", "Fiber(origin)"});
    REQUIRE(A.points.size() == 1);
    CHECK(A.points[0].rep.sx == 0);
    CHECK(A.points[0].rep.tx == 3);

    auto B = on_p2(3, "(S2/S1)^2", {1});
    CHECK(cc(B).to_line() == "1·ZeroSection + 3·Conormal(D1) + 2·Fiber(origin)");
}

TEST_CASE("trivial character") {
    auto one = on_p2(2, "0", {1});
    CHECK(cc(one).to_line() == "1·ZeroSection + 1·Conormal(D1)");
    auto two = on_p2(3, "0", {1, 2});
    CHECK(cc(two).mult(CompKind::Fiber, "origin") == 1);
    auto three = on_p2(5, "0", {0, 1, 2});
    for (const auto& x : three.points) CHECK(x.rep.tx == static_cast<long long>(x.rep.ix.size()) - 1);
    CHECK(three.points.size() == 3);
    CHECK(three.char_log.to_line() == "1·ZeroSectionLog");
}

TEST_CASE("clean crossing of two wild divisors") {
    auto A = on_a2(2, "1/(t1*t2)", {1, 2});
    CHECK(A.res.final.blowups.empty());
    CHECK(cc(A).to_line() == "1·ZeroSection + 2·Conormal(D1) + 2·Conormal(D2) + 3·Fiber(origin)");
    CHECK(A.char_log.to_line() == "1·ZeroSectionLog + 1·LineLog(D1) + 1·LineLog(D2)");
}

TEST_CASE("type II and exceptional divisors carry lines") {
    auto II = on_a2(3, "t2/t1^3", {1});
    CHECK(II.char_k.mult(CompKind::Line, "D1") == 3);
    CHECK(II.char_k.mult(CompKind::Conormal, "D1") == 0);
    auto ex = on_p2(2, "S2*S0/S1^2", {1});
    CHECK(ex.divisor(1).ram.exceptional);
    CHECK(ex.char_k.mult(CompKind::Line, "D1") == 1);
    CHECK(ex.char_log.mult(CompKind::LineLog, "D1") == 2);
}

TEST_CASE("push-down with nonzero s") {
    auto A = on_p2(2, "(S2/S1)^3 + S0/S2", {1, 2});
    CHECK(A.res.final.blowups.size() >= 1);
    const BasePoint* o = nullptr;
    for (const auto& x : A.points)
        if (x.name == "origin") o = &x;
    REQUIRE(o);
    CHECK(o->rep.sx == 3);
    CHECK(A.char_log.mult(CompKind::FiberLog, "origin") == 3);
    CHECK(compare_tau(A).ok);
}

TEST_CASE("pullback of Char^log matches Char^K on the fixed corpus") {
    for (const auto& spec : wildcc::testing::fixed_p2_corpus()) {
        CAPTURE(spec.name);
        auto A = analyze_character(spec.surface);
        auto t = compare_tau(A);
        CHECK(t.ok);
        for (const auto& m : t.mismatches) MESSAGE(m);
    }
}
