#pragma once

#include <map>
#include <string>

#include "wildcc/ratfunc.hpp"

namespace wildcc {

// Variables known to the expression parser. Each variable carries a
// homogeneous degree; the generator symbol `z` of F_q is available when
// the field is not prime.
struct ExprContext {
    const Field* F = nullptr;
    std::map<std::string, RatFunc> vars;
    std::map<std::string, int> degree;
    bool require_degree_zero = false;
};

ExprContext a2_context(const Field* F);
// S0, S1, S2 dehomogenized in the chart S0 = 1 (t1 = S1/S0, t2 = S2/S0).
ExprContext p2_context(const Field* F);

RatFunc parse_expr(const std::string& text, const ExprContext& ctx);

}  // namespace wildcc
