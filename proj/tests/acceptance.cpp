// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "wildcc/index.hpp"

using namespace wildcc;
using wildcc::testing::NamedSpec;
using wildcc::testing::out_of_range;
using wildcc::testing::witt_a2;
using wildcc::testing::witt_p2;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

const BasePoint* point_named(const CharacterAnalysis& A, const std::string& name) {
    for (const auto& x : A.points)
        if (x.name == name) return &x;
    return nullptr;
}

Outcome criterion1() {
    Outcome o;
    for (auto [p, n] : std::vector<std::pair<unsigned, int>>{{2, 3}, {3, 2}, {2, 5}}) {
        std::string tag = "(p,n)=(" + std::to_string(p) + "," + std::to_string(n) + ")";
        Surface S = make_a2(witt_a2(Field::get(p), {"(t2/t1)^" + std::to_string(n)}), {1}, {});
        auto an = analyze_surface(S);
        const PointReport* x = nullptr;
        for (const auto& r : an.at("A2").points)
            if (r.place.is_origin()) x = &r;
        o.expect(x && !x->clean, tag + " origin reported clean");
        o.expect(x && x->ord.at(1) == n - 1, tag + " ord at the origin");
        auto A = analyze_character(S);
        bool depth1 = A.res.final.blowups.size() == 1 && A.res.final.blowups[0].depth == 1;
        o.expect(depth1, tag + " resolution is not a single blow-up");
        const BasePoint* b = point_named(A, "origin");
        o.expect(b && b->rep.sx == 0, tag + " s at the origin");
        o.detail << tag << ": ord " << (x ? x->ord.at(1) : -1) << ", s " << (b ? b->rep.sx : -1) << "; ";
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    struct Case {
        unsigned p;
        std::string f;
        long long expect;
    };
    for (const auto& c : std::vector<Case>{{2, "(S2/S1)^3", -2}, {3, "(S2/S1)^2", -1}}) {
        auto A = analyze_character(make_p2(witt_p2(Field::get(c.p), {c.f}), {1}, {}));
        if (c.p == 2) {
            std::string line = cc(A).to_line();
            o.expect(line == "1·ZeroSection + 4·Conormal(D1) + 3·Fiber(origin)", "cc is " + line);
            o.detail << "cc " << line << "; ";
        }
        auto r = euler_report(A);
        bool oracle = r.oracle.value && *r.oracle.value == c.expect;
        o.expect(r.char_k == c.expect && r.char_log == c.expect && oracle, "index for p=" + std::to_string(c.p));
        o.detail << "p=" << c.p << " index charK " << r.char_k << " charlog " << r.char_log << " oracle "
                 << (r.oracle.value ? std::to_string(*r.oracle.value) : "none") << "; ";
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    auto one = euler_report(analyze_character(make_p2(witt_p2(Field::get(2), {"0"}), {1}, {})));
    o.expect(one.char_k == 1 && one.char_log == 1, "one line");
    auto twoA = analyze_character(make_p2(witt_p2(Field::get(3), {"0"}), {1, 2}, {}));
    auto two = euler_report(twoA);
    o.expect(two.char_k == 0 && two.char_log == 0, "two lines");
    int crossings = 0;
    for (const auto* A : {&twoA}) {
        for (const auto& x : A->points) {
            long long m = cc(*A).mult(CompKind::Fiber, x.name);
            o.expect(m == static_cast<long long>(x.rep.ix.size()) - 1, "fiber at " + x.name);
            crossings += x.rep.ix.size() > 1;
        }
    }
    auto threeA = analyze_character(make_p2(witt_p2(Field::get(5), {"0"}), {0, 1, 2}, {}));
    for (const auto& x : threeA.points) {
        o.expect(cc(threeA).mult(CompKind::Fiber, x.name) == static_cast<long long>(x.rep.ix.size()) - 1,
                 "fiber at " + x.name);
        crossings += x.rep.ix.size() > 1;
    }
    o.expect(crossings == 4, "number of crossings");
    o.detail << "Euler one line " << one.char_k << ", two lines " << two.char_k << ", crossings checked "
             << crossings << "; ";
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::vector<NamedSpec> corpus = wildcc::testing::fixed_p2_corpus();
    corpus.push_back({"b1 family on the plane", make_a2(witt_a2(Field::get(2), {"1/(t1*t2)"}), {1, 2}, {})});
    corpus.push_back({"type II with tame crossing", make_a2(witt_a2(Field::get(3), {"t2/t1^3"}), {1, 2}, {})});
    std::mt19937 rng(4);
    for (int i = 0; i < 12; ++i)
        corpus.push_back({"random " + std::to_string(i), wildcc::testing::random_p2(rng, i % 3 == 1 ? 3 : 2, i % 4 == 3 ? 2 : 1, 2)});
    int checked = 0, buckets = 0;
    bool a1 = false, b1 = false;
    for (const auto& spec : corpus) {
        try {
            auto A = analyze_character(spec.surface);
            auto t = compare_tau(A);
            o.expect(t.ok, spec.name + (t.mismatches.empty() ? "" : ": " + t.mismatches[0]));
            ++checked;
            buckets += t.buckets;
            a1 |= spec.name.rfind("a1", 0) == 0;
            b1 |= spec.name.rfind("b1", 0) == 0;
        } catch (const std::exception& e) {
            if (!out_of_range(e)) o.expect(false, spec.name + ": " + e.what());
        }
    }
    o.expect(checked >= 20 && a1 && b1, "corpus too small");
    o.detail << checked << " specs, " << buckets << " type II components compared by degree; ";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937 rng(5);
    CheckStats total;
    int checked = 0, divisors = 0, points = 0;
    const std::vector<std::pair<unsigned, unsigned>> ps{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}};
    for (int i = 0; checked < 120 && i < 400; ++i) {
        auto [p, s] = ps[i % ps.size()];
        Surface S = wildcc::testing::random_p2(rng, p, s, 2);
        try {
            auto A = analyze_character(S);
            total.merge(A.checks);
            for (const auto& [name, an] : A.res.an) {
                for (const auto& d : an.ram) {
                    if (d.div < 0) continue;
                    ++divisors;
                    o.expect(d.dt == d.sw || d.dt == d.sw + 1, "dt out of range on " + name);
                }
            }
            for (const auto& x : A.points) {
                ++points;
                o.expect(x.rep.tx >= 0, "negative t at " + x.name);
            }
            ++checked;
        } catch (const std::exception& e) {
            if (!out_of_range(e)) o.expect(false, e.what());
        }
    }
    o.expect(checked >= 100, "fewer than 100 specs analysed");
    const std::vector<std::string> needed{"ord' via the residue order", "ord' via the Witt component of index s'",
                                          "cleanliness off crossings via the Witt components",
                                          "type II / residue / conormal equivalence"};
    for (const auto& k : needed) o.expect(total.count[k] > 0, "no instance of: " + k);
    o.detail << checked << " specs, " << divisors << " divisor checks, " << points << " points; ";
    for (const auto& k : needed) o.detail << k << " x" << total.count[k] << "; ";
    return o;
}

// Witt vector over Z determined by ghost components (exact division checked).
std::vector<BigInt> from_ghost(unsigned p, const std::vector<BigInt>& w, bool& exact) {
    std::vector<BigInt> z(w.size());
    BigInt pn = 1;
    for (unsigned n = 0; n < w.size(); ++n) {
        z[n] = 0;
        BigInt r = w[n] - ghost_component(p, z, n);
        if (r % pn != 0) exact = false;
        z[n] = r / pn;
        pn *= p;
    }
    return z;
}

WittVec reduce_mod_p(const Field* F, const std::vector<BigInt>& x) {
    std::vector<RatFunc> c;
    for (const auto& v : x) {
        BigInt m = ((v % F->p()) + F->p()) % F->p();
        c.push_back(RatFunc::from_int(F, static_cast<long long>(m)));
    }
    return WittVec::from_standard(F->p(), c);
}

Outcome criterion6() {
    Outcome o;
    std::mt19937 rng(6);
    int total = 0, fv = 0;
    for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
        const Field* F = Field::get(p);
        std::uniform_int_distribution<int> d(-50, 50);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<BigInt> x(s), y(s), wsum(s), wneg(s);
            for (unsigned k = 0; k < s; ++k) {
                x[k] = d(rng);
                y[k] = d(rng);
            }
            for (unsigned n = 0; n < s; ++n) {
                wsum[n] = ghost_component(p, x, n) + ghost_component(p, y, n);
                wneg[n] = -ghost_component(p, x, n);
            }
            bool exact = true;
            auto z = from_ghost(p, wsum, exact);
            auto m = from_ghost(p, wneg, exact);
            o.expect(exact, "ghost vector of a sum is not integral");
            WittVec X = reduce_mod_p(F, x), Y = reduce_mod_p(F, y);
            o.expect(X + Y == reduce_mod_p(F, z), "sum disagrees with the ghost lift");
            o.expect(-X == reduce_mod_p(F, m), "negation disagrees with the ghost lift");
            total += 2;
        }
        std::uniform_int_distribution<int> e(0, static_cast<int>(p) - 1), ex(-2, 2);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<RatFunc> a;
            for (unsigned k = 0; k < s; ++k) a.push_back(RatFunc::monomial(F, F->from_int(e(rng)), ex(rng), ex(rng)));
            WittVec X(p, a);
            o.expect(X.verschiebung().frobenius() == X.times(p), "F V != p");
            o.expect(X.frobenius().verschiebung() == X.times(p), "V F != p");
            ++fv;
        }
    }
    o.detail << total << " ghost instances, " << fv << " F V = p instances; ";
    return o;
}

// A clean rational point on a boundary axis owned by some chart, preferring
// special points.
bool pick_clean_point(const Resolution& R, std::pair<std::string, ChartPlace>& out) {
    const Surface& S = R.base;
    for (const auto& c : S.charts) {
        const ChartAnalysis& an = R.analysis(c.name);
        for (const auto& x : an.points)
            if (x.clean && x.place.deg() == 1 && !S.blown.count({c.name, x.place})) {
                out = {c.name, x.place};
                return true;
            }
    }
    const Field* F = S.F;
    for (const auto& c : S.charts)
        for (int k = 0; k < 2; ++k) {
            if (!c.axis[k].boundary()) continue;
            for (unsigned v = 1; v < F->q(); ++v) {
                ChartPlace x{k, UPoly(F, {F->neg(static_cast<Elem>(v)), 1})};
                if (!owns(c, x)) continue;
                bool special = false;
                for (const auto& r : R.analysis(c.name).points) special |= r.place == x;
                if (!special) {
                    out = {c.name, x};
                    return true;
                }
            }
        }
    return false;
}

Outcome criterion7() {
    Outcome o;
    int checked = 0;
    for (const auto& spec : wildcc::testing::fixed_p2_corpus()) {
        try {
            auto A = analyze_character(spec.surface);
            std::pair<std::string, ChartPlace> centre;
            if (!pick_clean_point(A.res, centre)) continue;
            ResolveOptions opt;
            opt.extra.push_back(centre);
            auto B = analyze_character(A.res.base, opt);
            o.expect(B.res.final.blowups.size() == A.res.final.blowups.size() + 1, spec.name + ": extra blow-up missing");
            o.expect(A.char_log == B.char_log, spec.name + ": Char^log changed");
            o.expect(euler_via_charlog(A) == euler_upstairs(A), spec.name + ": downstairs and upstairs index");
            o.expect(euler_via_charlog(B) == euler_upstairs(B), spec.name + ": index after the extra blow-up");
            ++checked;
        } catch (const std::exception& e) {
            if (!out_of_range(e)) o.expect(false, spec.name + ": " + e.what());
        }
    }
    o.expect(checked >= 10, "fewer than 10 specs");
    o.detail << checked << " specs with an extra blow-up; ";
    return o;
}

Outcome criterion8() {
    Outcome o;
    const Field* F = Field::get(2, 2);
    auto A = analyze_character(make_p2(witt_p2(F, {"S2*(S2-S0)*(S2-z*S0)/S1^3"}), {1}, {}));
    std::vector<std::string> sigma{"origin", "D1:t2 + 1", "D1:t2 + z"};
    std::vector<std::string> degenerate;
    for (const auto& x : A.points)
        if (!x.rep.non_degenerate) degenerate.push_back(x.name);
    o.expect(degenerate == sigma, "degenerate locus differs from the constructed set");
    long long t0 = -1;
    for (const auto& name : sigma) {
        const BasePoint* x = point_named(A, name);
        o.expect(x && x->rep.clean, name + " not clean");
        if (!x) continue;
        if (t0 < 0) t0 = x->rep.tx;
        o.expect(x->rep.tx == t0, "t differs at " + name);
        o.detail << name << ": t " << x->rep.tx << "; ";
    }
    o.expect(A.res.final.blowups.empty(), "the construction should already be clean");
    return o;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    std::vector<Outcome (*)()> criteria{criterion1, criterion2, criterion3, criterion4,
                                        criterion5, criterion6, criterion7, criterion8};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << secs << " s): " << o.detail.str()
                  << std::endl;
        all &= o.pass;
    }
    return all ? 0 : 1;
}
