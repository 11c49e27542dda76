#include "wildcc/blowup.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace wildcc {

namespace {

UPoly embed(const UPoly& g, const Field* big) {
    std::vector<Elem> c;
    for (Elem a : g.coeffs()) c.push_back(big->embed(g.field(), a));
    return UPoly(big, std::move(c));
}

Poly2 embed(const Poly2& f, const Field* big) {
    std::vector<UPoly> c;
    for (const auto& g : f.coeffs()) c.push_back(embed(g, big));
    return Poly2(big, std::move(c));
}

RatFunc embed(const RatFunc& f, const Field* big) { return RatFunc(embed(f.num(), big), embed(f.den(), big)); }

WittVec embed(const WittVec& a, const Field* big) {
    std::vector<RatFunc> c;
    for (const auto& x : a.comps()) c.push_back(embed(x, big));
    return WittVec(a.p(), c);
}

WittVec substitute(const WittVec& a, const RatFunc& X, const RatFunc& Y) {
    std::vector<RatFunc> c;
    for (const auto& x : a.comps()) c.push_back(x.substitute(X, Y));
    return WittVec(a.p(), c);
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void set_axes(Chart& c, const std::array<int, 2>& ids, const std::vector<int>& boundary, const std::vector<int>& tame) {
    for (int k = 0; k < 2; ++k) {
        if (!contains(boundary, ids[k])) continue;
        c.axis[k].div = ids[k];
        c.axis[k].tame = contains(tame, ids[k]);
    }
}

void check_ids(const std::vector<int>& boundary, const std::vector<int>& tame, int lo, int hi) {
    for (int id : boundary)
        if (id < lo || id > hi) fail(ErrorKind::InvalidInput, "boundary component D" + std::to_string(id) + " does not exist");
    for (int id : tame)
        if (!contains(boundary, id)) fail(ErrorKind::InvalidInput, "tame flag on D" + std::to_string(id) + ", which is not a boundary component");
}

void check_divisors(const Surface& S, const std::map<std::string, ChartAnalysis>& an, CheckStats* st) {
    std::map<int, const DivRam*> seen;
    for (const auto& c : S.charts) {
        const ChartAnalysis& a = an.at(c.name);
        for (int k = 0; k < 2; ++k) {
            if (!c.axis[k].boundary()) continue;
            const DivRam& d = a.ram[k];
            auto [it, fresh] = seen.emplace(d.div, &d);
            if (fresh) continue;
            const DivRam& e = *it->second;
            check(e.sw == d.sw && e.dt == d.dt && e.type == d.type,
                  "invariants of " + S.divisor(d.div).name + " differ between charts");
            if (st) st->add("chart overlap agreement");
        }
    }
}

int lcm(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

const Chart& Surface::chart(const std::string& name) const {
    for (const auto& c : charts)
        if (c.name == name) return c;
    fail(ErrorKind::InvalidInput, "no chart named " + name);
}

const DivisorInfo& Surface::divisor(int id) const {
    for (const auto& d : divisors)
        if (d.id == id) return d;
    fail(ErrorKind::InvalidInput, "no boundary divisor with id " + std::to_string(id));
}

bool Surface::has_divisor(int id) const {
    for (const auto& d : divisors)
        if (d.id == id) return true;
    return false;
}

int Surface::euler_number() const {
    if (ambient != Ambient::P2) fail(ErrorKind::UnsupportedAmbient, "intersection numbers need a projective surface");
    return 3 + static_cast<int>(blowups.size());
}

int pic_dot(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t n = std::max(a.size(), b.size());
    int r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r += i == 0 ? x * y : -x * y;
    }
    return r;
}

std::vector<int> canonical_class(const Surface& S) {
    std::vector<int> K(S.class_dim(), 1);
    K[0] = -3;
    return K;
}

Surface make_a2(const WittVec& a, const std::vector<int>& boundary, const std::vector<int>& tame) {
    check_ids(boundary, tame, 1, 2);
    Surface S;
    S.ambient = Ambient::A2;
    S.F = a[0].field();
    S.p = a.p();
    S.s = a.s();
    Chart c;
    c.name = "A2";
    c.var = {"t1", "t2"};
    c.own = Own::All;
    c.a = a;
    set_axes(c, {1, 2}, boundary, tame);
    S.charts.push_back(c);
    for (int id : {1, 2})
        if (contains(boundary, id)) S.divisors.push_back({id, "D" + std::to_string(id), false, contains(tame, id), {}});
    return S;
}

Surface make_p2(const WittVec& a, const std::vector<int>& boundary, const std::vector<int>& tame) {
    check_ids(boundary, tame, 0, 2);
    Surface S;
    S.ambient = Ambient::P2;
    const Field* F = a[0].field();
    S.F = F;
    S.p = a.p();
    S.s = a.s();
    RatFunc x1 = RatFunc::var(F, 0), x2 = RatFunc::var(F, 1), one = RatFunc::constant(F, 1);
    Chart c0;
    c0.name = "P2.0";
    c0.var = {"t1", "t2"};
    c0.own = Own::All;
    c0.a = a;
    set_axes(c0, {1, 2}, boundary, tame);
    // (u0, u2) = (S0/S1, S2/S1): t1 = 1/u0, t2 = u2/u0.
    Chart c1;
    c1.name = "P2.1";
    c1.var = {"u0", "u2"};
    c1.own = Own::Axis0;
    c1.a = substitute(a, one / x1, x2 / x1);
    set_axes(c1, {0, 2}, boundary, tame);
    // (u0, u1) = (S0/S2, S1/S2): t1 = u1/u0, t2 = 1/u0.
    Chart c2;
    c2.name = "P2.2";
    c2.var = {"u0", "u1"};
    c2.own = Own::Origin;
    c2.a = substitute(a, x2 / x1, one / x1);
    set_axes(c2, {0, 1}, boundary, tame);
    S.charts = {c0, c1, c2};
    for (int id : {0, 1, 2})
        if (contains(boundary, id)) S.divisors.push_back({id, "D" + std::to_string(id), false, contains(tame, id), {1}});
    return S;
}

Surface extend_scalars(const Surface& S, const Field* big) {
    Surface T = S;
    T.F = big;
    for (auto& c : T.charts) c.a = embed(c.a, big);
    for (auto& b : T.blowups) b.center.g = embed(b.center.g, big);
    std::set<std::pair<std::string, ChartPlace>> blown;
    for (const auto& [name, x] : S.blown) blown.insert({name, ChartPlace{x.axis, embed(x.g, big)}});
    T.blown = blown;
    return T;
}

std::string point_name(const Surface& S, const Chart& c, const ChartPlace& x) {
    bool base = &c == &S.charts[0] || c.name == S.charts[0].name;
    if (x.is_origin()) {
        if (base) return "origin";
        if (c.name == "P2.1") return "[0:1:0]";
        if (c.name == "P2.2") return "[0:0:1]";
        return c.name + ":origin";
    }
    std::string div = S.divisor(c.axis[x.axis].div).name;
    std::string g = x.g.to_string(c.var[1 - x.axis]);
    return (base ? "" : c.name + ":") + div + ":" + g;
}

const BlowUp& blow_up(Surface& S, const std::string& chart, const ChartPlace& center) {
    const Chart& c = S.chart(chart);
    const Field* F = S.F;
    if (center.deg() != 1)
        fail(ErrorKind::CenterNotRational, "centre " + point_name(S, c, center) + " has degree " + std::to_string(center.deg()));
    if (!c.axis[center.axis].boundary()) fail(ErrorKind::InvalidInput, "centre does not lie on the boundary");
    if (!owns(c, center) || S.blown.count({chart, center}))
        fail(ErrorKind::InvalidInput, "chart " + chart + " does not own the centre " + point_name(S, c, center));
    Elem alpha = F->neg(center.g.coeff(0));
    Elem cx = center.axis == 1 ? alpha : 0;
    Elem cy = center.axis == 0 ? alpha : 0;
    if (center.is_origin()) cx = cy = 0;

    BlowUp b;
    b.index = static_cast<int>(S.blowups.size()) + 1;
    b.chart = chart;
    b.center = center;
    b.point = point_name(S, c, center);
    b.depth = c.depth + 1;
    for (int k = 0; k < 2; ++k)
        if (c.axis[k].boundary() && (k == center.axis || center.is_origin())) b.through.push_back(c.axis[k].div);
    int E = 0;
    for (const auto& d : S.divisors) E = std::max(E, d.id + 1);
    E = std::max(E, 3);
    b.E = E;

    if (S.ambient == Ambient::P2) {
        int n = S.class_dim();
        for (auto& d : S.divisors) {
            d.cls.resize(n + 1, 0);
            if (contains(b.through, d.id)) d.cls[n] -= 1;
        }
        std::vector<int> e(n + 1, 0);
        e[n] = 1;
        S.divisors.push_back({E, "E" + std::to_string(b.index), true, false, e});
    } else {
        S.divisors.push_back({E, "E" + std::to_string(b.index), true, false, {}});
    }

    RatFunc u = RatFunc::var(F, 0), v = RatFunc::var(F, 1);
    RatFunc X0 = RatFunc::constant(F, cx), Y0 = RatFunc::constant(F, cy);
    Chart A;
    A.name = "E" + std::to_string(b.index) + ".A";
    A.var = {"u" + std::to_string(b.index), "v" + std::to_string(b.index)};
    A.own = Own::Axis0;
    A.depth = b.depth;
    A.axis[0].div = E;
    if (c.axis[1].boundary() && cy == 0) A.axis[1] = c.axis[1];
    A.a = substitute(c.a, u + X0, u * v + Y0);
    Chart B;
    B.name = "E" + std::to_string(b.index) + ".B";
    B.var = A.var;
    B.own = Own::Origin;
    B.depth = b.depth;
    B.axis[1].div = E;
    if (c.axis[0].boundary() && cx == 0) B.axis[0] = c.axis[0];
    B.a = substitute(c.a, u * v + X0, v + Y0);
    b.chart_a = A.name;
    b.chart_b = B.name;

    S.blown.insert({chart, center});
    S.charts.push_back(A);
    S.charts.push_back(B);
    S.blowups.push_back(b);
    return S.blowups.back();
}

std::vector<LivePoint> Resolution::live_points(const Surface& S) const {
    std::vector<LivePoint> out;
    for (const auto& c : S.charts)
        for (const auto& r : an.at(c.name).points)
            if (!S.blown.count({c.name, r.place})) out.push_back({c.name, r});
    return out;
}

std::map<std::string, ChartAnalysis> analyze_surface(const Surface& S, CheckStats* st) {
    std::map<std::string, ChartAnalysis> an;
    for (const auto& c : S.charts) {
        an.emplace(c.name, analyze_chart(c));
        if (st) st->merge(an.at(c.name).checks);
    }
    check_divisors(S, an, st);
    return an;
}

Resolution resolve(const Surface& S0, const ResolveOptions& opt) {
    Surface S = S0;
    for (;;) {
        Resolution R;
        R.base = S;
        R.final = S;
        R.an = analyze_surface(S, &R.checks);
        auto add_children = [&](const BlowUp& b) {
            for (const auto& name : {b.chart_a, b.chart_b}) {
                R.an.emplace(name, analyze_chart(R.final.chart(name)));
                R.checks.merge(R.an.at(name).checks);
            }
        };
        for (const auto& [chart, x] : opt.extra) {
            ChartPlace y{x.axis, x.g.field() == S.F ? x.g : embed(x.g, S.F)};
            add_children(blow_up(R.final, chart, y));
        }
        int need = 1;
        for (std::size_t i = 0; i < R.final.charts.size(); ++i) {
            std::string name = R.final.charts[i].name;
            int depth = R.final.charts[i].depth;
            std::vector<ChartPlace> todo;
            for (const auto& r : R.an.at(name).points) {
                if (r.clean || R.final.blown.count({name, r.place})) continue;
                if (r.deg() > 1) {
                    need = lcm(need, r.deg());
                    continue;
                }
                todo.push_back(r.place);
            }
            for (const auto& x : todo) {
                if (depth + 1 > opt.depth_cap)
                    fail(ErrorKind::DepthExceeded, "resolution exceeded depth " + std::to_string(opt.depth_cap) + " at " +
                                                       point_name(R.final, R.final.chart(name), x));
                add_children(blow_up(R.final, name, x));
            }
        }
        if (need == 1) {
            check_divisors(R.final, R.an, &R.checks);
            return R;
        }
        unsigned e = S.F->e() * static_cast<unsigned>(need);
        double q = 1;
        for (unsigned i = 0; i < e; ++i) q *= S.p;
        if (q > opt.max_field_size)
            fail(ErrorKind::CenterNotRational, "non-clean points need F_" + std::to_string(S.p) + "^" + std::to_string(e) +
                                                   ", beyond the configured field size");
        S = extend_scalars(S0, Field::get(S.p, e));
    }
}

int depth_cap_from_env(int fallback) {
    const char* v = std::getenv("WILDCC_DEPTH_CAP");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 0) fail(ErrorKind::InvalidInput, "WILDCC_DEPTH_CAP must be a nonnegative integer");
    return static_cast<int>(n);
}

}  // namespace wildcc
