#include "doctest.h"
#include "wildcc/input.hpp"

using namespace wildcc;

namespace {

ErrorKind kind_of(const std::string& text) {
    try {
        InputSpec in = parse_input(text);
        if (in.surface == SurfaceKind::P1) {
            curve_places(in);
            curve_witt(in);
        } else {
            analyze_surface(build_surface(in));
        }
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("input files parse and serialize canonically") {
    const std::string text =
        "# flagship\n"
        "surface = P2   # projective plane\n"
        "p = 2\n"
        "s = 2\n"
        "witt = [S2/S1, (S2/S1)^3]\n"
        "boundary = [D1]\n"
        "depth_cap = 5\n";
    InputSpec in = parse_input(text);
    CHECK(in.surface == SurfaceKind::P2);
    CHECK(in.s() == 2);
    CHECK(in.witt == std::vector<std::string>{"S2/S1", "(S2/S1)^3"});
    CHECK(in.boundary == std::vector<int>{1});
    CHECK(in.depth_cap == 5);
    std::string canon = in.to_text();
    CHECK(parse_input(canon).to_text() == canon);
    // The first listed component has weight p.
    Surface S = build_surface(in);
    CHECK(S.charts[0].a[1].to_string() == "t2/t1");
    CHECK(S.charts[0].a[0].to_string() == "t2^3/t1^3");
}

TEST_CASE("field extensions and curve inputs") {
    InputSpec in = parse_input("surface = P1\np = 2\ndegree = 2\nwitt = [z/t^3]\nremoved = [inf, t, t^2+t+z]\n");
    CHECK(in.field()->q() == 4);
    auto places = curve_places(in);
    REQUIRE(places.size() == 3);
    CHECK(places[0].infinity);
    CHECK(places[2].deg() == 2);
    CHECK(curve_swan(curve_witt(in), places[1]) == 3);
    CHECK(parse_input(in.to_text()).to_text() == in.to_text());
}

TEST_CASE("input errors") {
    CHECK(kind_of("surface = P2\np = 2\nwitt = [S2/S0]\nboundary = [1]\n") == ErrorKind::PolarLocusOutsideBoundary);
    CHECK(kind_of("surface = A2\np = 2\nwitt = [t3]\nboundary = [1]\n") == ErrorKind::UnknownVariable);
    CHECK(kind_of("surface = A2\np = 2\nwitt = [t1 +]\nboundary = [1]\n") == ErrorKind::Syntax);
    CHECK(kind_of("surface = A2\np = 4\nwitt = [t1]\nboundary = [1]\n") == ErrorKind::InvalidInput);
    CHECK(kind_of("surface = A2\np = 2\nwitt = [t1]\nboundary = [3]\n") == ErrorKind::InvalidInput);
    CHECK(kind_of("surface = A2\np = 2\ns = 2\nwitt = [t1]\nboundary = [1]\n") == ErrorKind::InvalidInput);
    CHECK(kind_of("surface = A2\nwitt = [t1]\n") == ErrorKind::InvalidInput);
    CHECK(kind_of("surface = A2\np = 2\nwitt = [1/t1]\nboundary = [1]\ncolour = red\n") == ErrorKind::InvalidInput);
    CHECK(kind_of("surface = P1\np = 2\nwitt = [1/t]\nremoved = [inf, t^2]\n") == ErrorKind::InvalidInput);
    try {
        parse_input("surface = A2\np = 2\n\nwitt\n");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}
