#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wildcc/cycles.hpp"

namespace wildcc {

// deg c_2 of the logarithmic cotangent bundle; equals the Euler number of
// the complement of the boundary.
long long c2_log(const Surface& S);

// Intersection numbers with the zero section.
long long euler_via_charK(const CharacterAnalysis& A);
long long euler_via_charlog(const CharacterAnalysis& A);
// The clean log index assembled on the final surface of the resolution.
long long euler_upstairs(const CharacterAnalysis& A);

// A closed point of P^1: a monic irreducible g, or infinity.
struct CurvePlace {
    bool infinity = false;
    UPoly g;
    int deg() const { return infinity ? 1 : g.deg(); }
};

// Swan conductor of a one-variable Witt vector at a place (after reduction
// modulo (F - 1)).
int curve_swan(const UWittVec& a, const CurvePlace& y);

// Euler characteristic with compact support of the character on P^1 minus
// the given places. Poles outside the removed places are rejected.
long long gos_curve(const UWittVec& a, const std::vector<CurvePlace>& removed);

// Euler characteristic of U from a product decomposition of the character,
// if one exists in a chart whose complement lies in the boundary.
struct ProductOracle {
    std::optional<long long> value;
    std::string note;  // the decomposition used, or why none was found
};
ProductOracle euler_oracle_product(const Surface& S);

struct EulerReport {
    long long char_k = 0;
    long long char_log = 0;
    long long upstairs = 0;
    ProductOracle oracle;
};
EulerReport euler_report(const CharacterAnalysis& A);

}  // namespace wildcc
