#include "corpus.hpp"

#include <algorithm>

#include "wildcc/expr.hpp"

namespace wildcc::testing {

namespace {

WittVec witt_with(const ExprContext& ctx, unsigned p, const std::vector<std::string>& top_first) {
    std::vector<RatFunc> a;
    for (auto it = top_first.rbegin(); it != top_first.rend(); ++it) a.push_back(parse_expr(*it, ctx));
    return WittVec(p, a);
}

NamedSpec p2(const std::string& name, unsigned p, int e, const std::vector<std::string>& top_first,
             const std::vector<int>& boundary, const std::vector<int>& tame = {}) {
    const Field* F = Field::get(p, e);
    return {name, make_p2(witt_p2(F, top_first), boundary, tame)};
}

}  // namespace

WittVec witt_p2(const Field* F, const std::vector<std::string>& top_first) {
    return witt_with(p2_context(F), F->p(), top_first);
}

WittVec witt_a2(const Field* F, const std::vector<std::string>& top_first) {
    return witt_with(a2_context(F), F->p(), top_first);
}

std::vector<NamedSpec> fixed_p2_corpus() {
    return {
        p2("cube over S1, p=2", 2, 1, {"(S2/S1)^3"}, {1}),
        p2("square over S1, p=3", 3, 1, {"(S2/S1)^2"}, {1}),
        p2("fifth power over S1, p=2", 2, 1, {"(S2/S1)^5"}, {1}),
        p2("a1 family p=2 n1=3", 2, 2, {"S2*(S2-S0)*(S2-z*S0)/S1^3"}, {1}),
        p2("b1 family p=2 n1=n2=1", 2, 2, {"(S1+S2-S0)*(S1+S2-z*S0)/(S1*S2)"}, {1, 2}),
        p2("inverse product, p=2", 2, 1, {"S0^2/(S1*S2)"}, {1, 2}),
        p2("box sum, p=2", 2, 1, {"(S2/S1)^3 + S0/S2"}, {1, 2}),
        p2("exceptional, p=2", 2, 1, {"S2*S0/S1^2"}, {1}),
        p2("type II, p=3", 3, 1, {"S2*S0^2/S1^3"}, {1}),
        p2("type II with crossing, p=2", 2, 1, {"S0^3/(S1^2*S2)"}, {1, 2}),
        p2("three lines, p=3", 3, 1, {"S1^2/(S0*S2) + S2/S1"}, {0, 1, 2}),
        p2("length two, p=2", 2, 1, {"S2/S1", "0"}, {1}),
        p2("length two mixed, p=2", 2, 1, {"S2/S1", "S2^3/S1^3"}, {1}),
        p2("length two, p=3", 3, 1, {"S2/S1", "S0/S1"}, {1}),
        p2("trivial, one line", 2, 1, {"0"}, {1}),
        p2("trivial, two lines", 3, 1, {"0"}, {1, 2}),
        p2("trivial, three lines", 5, 1, {"0"}, {0, 1, 2}),
        p2("inverse product plus a pole of order one", 2, 1, {"S0^2/(S1*S2) + S2/S1"}, {1, 2}),
        p2("tame flag", 3, 1, {"S2/S1"}, {1, 2}, {2}),
        p2("non-rational centre", 2, 1, {"((S2^2+S2*S0+S0^2)/S1^2)^3"}, {1}),
        p2("p=5 quartic", 5, 1, {"(S2^2 + S0*S2)*S0^2/S1^4"}, {1}),
        p2("line at infinity, p=2", 2, 1, {"S1^3/(S0^2*S2)"}, {0, 2}),
    };
}

Surface random_p2(std::mt19937& rng, unsigned p, unsigned s, int max_pole) {
    const Field* F = Field::get(p);
    std::uniform_int_distribution<int> coin(0, 1), pole(0, max_pole), co(1, static_cast<int>(p) - 1);
    std::vector<int> boundary;
    while (boundary.empty())
        for (int i = 0; i < 3; ++i)
            if (coin(rng)) boundary.push_back(i);
    auto in = [&](int i) { return std::find(boundary.begin(), boundary.end(), i) != boundary.end(); };
    std::vector<RatFunc> comps;
    for (unsigned k = 0; k < s; ++k) {
        int e0 = in(0) ? pole(rng) : 0, e1 = in(1) ? pole(rng) : 0, e2 = in(2) ? pole(rng) : 0;
        int total = e0 + e1 + e2;
        Poly2 num(F);
        std::uniform_int_distribution<int> terms(0, 3), ex(0, total);
        int n = k + 1 == s || coin(rng) ? terms(rng) + 1 : 0;
        for (int t = 0; t < n; ++t) {
            int i = ex(rng), j = std::uniform_int_distribution<int>(0, total - i)(rng);
            num = num + Poly2::monomial(F, F->from_int(co(rng)), i, j);
        }
        comps.push_back(RatFunc(num, Poly2::monomial(F, 1, e1, e2)));
    }
    return make_p2(WittVec(p, comps), boundary, {});
}

bool out_of_range(const std::exception& e) {
    auto* w = dynamic_cast<const Error*>(&e);
    return w && (w->kind() == ErrorKind::CenterNotRational || w->kind() == ErrorKind::DepthExceeded);
}

}  // namespace wildcc::testing
