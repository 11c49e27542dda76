#pragma once

#include <random>
#include <string>
#include <vector>

#include "wildcc/blowup.hpp"

namespace wildcc::testing {

struct NamedSpec {
    std::string name;
    Surface surface;
};

// Witt vector from expressions written with the weight-p^{s-1} component first.
WittVec witt_p2(const Field* F, const std::vector<std::string>& top_first);
WittVec witt_a2(const Field* F, const std::vector<std::string>& top_first);

// Hand-picked specs on P^2 covering type I, type II, exceptional, tame and
// crossing behaviour, plus the (a1) and (b1) constructions over F_4.
std::vector<NamedSpec> fixed_p2_corpus();

// A random admissible spec on P^2: boundary a nonempty set of coordinate
// lines, components N / (t1^e1 t2^e2) with deg N bounded by the allowed
// pole order along S0 = 0.
Surface random_p2(std::mt19937& rng, unsigned p, unsigned s, int max_pole = 3);

// Whether an exception from the resolver marks a spec outside the range of
// the calculator (rather than a defect).
bool out_of_range(const std::exception& e);

}  // namespace wildcc::testing
