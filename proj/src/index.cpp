#include "wildcc/index.hpp"

#include <algorithm>

namespace wildcc {

namespace {

void require_projective(const Surface& S) {
    if (S.ambient != Ambient::P2) fail(ErrorKind::UnsupportedAmbient, "index formulas need a projective surface");
}

std::vector<int> boundary_class(const Surface& S) {
    std::vector<int> D(S.class_dim(), 0);
    for (const auto& d : S.divisors)
        for (std::size_t i = 0; i < d.cls.size(); ++i) D[i] += d.cls[i];
    return D;
}

std::vector<int> plus(std::vector<int> a, const std::vector<int>& b) {
    a.resize(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

URat derivative(const URat& f) {
    const UPoly &n = f.num(), &d = f.den();
    return URat(n.derivative() * d - n * d.derivative(), d * d);
}

int order_at(const URat& f, const CurvePlace& y) {
    if (f.is_zero()) return kInfinity;
    return y.infinity ? f.valuation_at_infinity() : f.valuation(y.g);
}

int witt_order_at(const UWittVec& a, const CurvePlace& y) {
    long long best = kInfinity, w = 1;
    for (unsigned i = 0; i < a.s(); ++i) {
        int v = order_at(a[i], y);
        if (v != kInfinity) best = std::min(best, w * v);
        w *= a.p();
    }
    return static_cast<int>(best);
}

URat form_coefficient(const UWittVec& a) {
    URat c = ring_const(a[0], 0);
    long long e = 1;
    for (unsigned i = 0; i < a.s(); ++i) {
        if (!a[i].is_zero()) c = c - a[i].pow(static_cast<int>(e - 1)) * derivative(a[i]);
        e *= a.p();
    }
    return c;
}

UPoly mod_inverse(const UPoly& h, const UPoly& g) {
    std::uint64_t Q = 1;
    for (int i = 0; i < g.deg(); ++i) Q *= g.field()->q();
    return h.powmod(Q - 2, g);
}

URat univariate(const Poly2& n, const Poly2& d, int axis) {
    auto conv = [&](const Poly2& P) {
        const Field* F = P.field();
        if (axis == 1) return P.is_zero() ? UPoly(F) : P.coeff(0);
        std::vector<Elem> c;
        for (const auto& q : P.coeffs()) c.push_back(q.coeff(0));
        return UPoly(F, c);
    };
    return URat(conv(n), conv(d));
}

bool depends_only_on(const RatFunc& f, int axis) {
    int other = 1 - axis;
    auto deg_in = [&](const Poly2& P) { return other == 0 ? P.deg1() : P.deg2(); };
    return deg_in(f.num()) <= 0 && deg_in(f.den()) <= 0;
}

long long curve_euler(bool punctured_at_zero) { return punctured_at_zero ? 0 : 1; }

std::vector<CurvePlace> removed_places(const Field* F, bool zero) {
    std::vector<CurvePlace> r{{true, UPoly(F)}};
    if (zero) r.push_back({false, UPoly::var(F)});
    return r;
}

UWittVec to_curve(const WittVec& a, int axis) {
    std::vector<URat> c;
    for (const auto& x : a.comps()) c.push_back(univariate(x.num(), x.den(), axis));
    return UWittVec(a.p(), c);
}

}  // namespace

long long c2_log(const Surface& S) {
    require_projective(S);
    std::vector<int> K = canonical_class(S), D = boundary_class(S);
    long long c = S.euler_number() + pic_dot(K, D);
    for (std::size_t i = 0; i < S.divisors.size(); ++i) {
        c += pic_dot(S.divisors[i].cls, S.divisors[i].cls);
        for (std::size_t j = i + 1; j < S.divisors.size(); ++j) c += pic_dot(S.divisors[i].cls, S.divisors[j].cls);
    }
    return c;
}

long long euler_via_charK(const CharacterAnalysis& A) {
    const Surface& S = A.res.base;
    require_projective(S);
    long long e = S.euler_number();
    for (const auto& d : A.divisors) {
        if (d.ram.type == DivType::II)
            e += static_cast<long long>(d.rprime()) * line_prime_degree(A, d.info.id);
        else
            e += static_cast<long long>(d.rprime()) * conormal_degree(A, d.info.id);
    }
    for (const auto& p : A.points) e += p.rep.tx * p.rep.deg();
    return e;
}

long long euler_via_charlog(const CharacterAnalysis& A) {
    const Surface& S = A.res.base;
    long long e = c2_log(S);
    for (const auto& d : A.divisors)
        if (d.ram.wild()) e += static_cast<long long>(d.ram.sw) * line_log_degree(A, d.info.id);
    for (const auto& p : A.points) e += p.rep.sx * p.rep.deg();
    return e;
}

long long euler_upstairs(const CharacterAnalysis& A) {
    const Resolution& R = A.res;
    const Surface& S = R.final;
    require_projective(S);
    std::map<int, int> sw;
    for (const auto& c : S.charts)
        for (int k = 0; k < 2; ++k)
            if (c.axis[k].boundary()) sw[c.axis[k].div] = R.analysis(c.name).ram[k].sw;
    std::map<int, long long> ord;
    for (const auto& lp : R.live_points(S)) {
        check(lp.report.clean, "final surface of the resolution is not clean");
        for (auto [i, o] : lp.report.ord) ord[i] += static_cast<long long>(o) * lp.report.deg();
    }
    std::vector<int> KD = plus(canonical_class(S), boundary_class(S));
    long long e = c2_log(S);
    check(e == c2_log(R.base), "Euler number of the open part changed under blow-up");
    for (auto [i, s] : sw) {
        if (s == 0) continue;
        const auto& c = S.divisor(i).cls;
        e += static_cast<long long>(s) * (pic_dot(KD, c) + dot_with_R(S, sw, i) - ord[i]);
    }
    return e;
}

int curve_swan(const UWittVec& a0, const CurvePlace& y) {
    UWittVec a = a0;
    const unsigned p = a.p();
    const Field* F = a[0].field();
    for (int guard = 0; guard < 100000; ++guard) {
        int o = witt_order_at(a, y);
        if (o >= 0) return 0;
        int n = -o;
        int oc = order_at(form_coefficient(a), y);
        // Leading part of the form in gr_n: c dt has order -n-1 in the
        // uniformizer at a finite place, and ord_oo(c) = 1 - n at infinity.
        int want = y.infinity ? 1 - n : -n - 1;
        check(oc == kInfinity || oc >= want, "form map left fil_n on a curve");
        if (oc == want) return n;
        int lead = -1;
        long long w = 1;
        for (unsigned i = 0; i < a.s(); ++i, w *= p)
            if (!a[i].is_zero() && w * order_at(a[i], y) == -n) lead = static_cast<int>(i);
        check(lead >= 0, "no leading Witt component on a curve");
        long long pw = 1;
        for (int i = 0; i < lead; ++i) pw *= p;
        long long m = n / pw;
        check(m % p == 0, "leading exponent prime to p but the form vanishes");
        const URat& f = a[lead];
        UPoly v;
        if (y.infinity) {
            Elem c = F->div(f.num().lc(), f.den().lc());
            v = UPoly::monomial(F, F->pth_root(c), static_cast<int>(m / p));
        } else {
            UPoly d = f.den();
            for (long long i = 0; i < m; ++i) d = d.divexact(y.g);
            UPoly c0 = (f.num() * mod_inverse(d % y.g, y.g)) % y.g;
            std::uint64_t Q = 1;
            for (int i = 0; i < y.g.deg(); ++i) Q *= F->q();
            v = c0.powmod(Q / p, y.g);
        }
        URat vv = y.infinity ? URat::from_poly(v) : URat(v, y.g.pow(static_cast<unsigned>(m / p)));
        UWittVec single = UWittVec::zero(p, a.s(), a[0]);
        single[lead] = vv;
        a = a - single.frobenius() + single;
    }
    fail(ErrorKind::ReductionFailed, "reduction on a curve did not terminate");
}

long long gos_curve(const UWittVec& a, const std::vector<CurvePlace>& removed) {
    bool infinity_removed = std::any_of(removed.begin(), removed.end(), [](const CurvePlace& y) { return y.infinity; });
    // Poles must lie in the removed set.
    for (unsigned i = 0; i < a.s(); ++i) {
        const URat& f = a[i];
        if (f.is_zero()) continue;
        if (f.valuation_at_infinity() < 0 && !infinity_removed)
            fail(ErrorKind::PolarLocusOutsideBoundary, "pole at infinity of a curve character");
        if (f.den().deg() <= 0) continue;
        for (auto& [g, mlt] : factor(f.den())) {
            bool ok = std::any_of(removed.begin(), removed.end(), [&](const CurvePlace& y) { return !y.infinity && y.g == g; });
            if (!ok) fail(ErrorKind::PolarLocusOutsideBoundary, "pole of a curve character outside the removed places");
        }
    }
    long long e = 2;
    for (const auto& y : removed) e -= y.deg() + static_cast<long long>(curve_swan(a, y)) * y.deg();
    return e;
}

ProductOracle euler_oracle_product(const Surface& S) {
    ProductOracle out;
    std::vector<const Chart*> candidates;
    if (S.ambient == Ambient::A2) {
        candidates.push_back(&S.charts[0]);
    } else {
        // Chart k is the complement of the line S_k = 0.
        for (int k = 0; k < 3; ++k)
            if (S.has_divisor(k)) candidates.push_back(&S.charts[k]);
    }
    const Field* F = S.F;
    for (const Chart* c : candidates) {
        std::array<bool, 2> punct{c->axis[0].boundary(), c->axis[1].boundary()};
        // Pulled back from one coordinate line.
        for (int j = 0; j < 2; ++j) {
            bool ok = true;
            for (const auto& x : c->a.comps()) ok &= depends_only_on(x, j);
            if (!ok) continue;
            long long v = curve_euler(punct[1 - j]) * gos_curve(to_curve(c->a, j), removed_places(F, punct[j]));
            out.value = v;
            out.note = "chart " + c->name + ": pulled back from the " + c->var[j] + "-line";
            return out;
        }
        if (S.s != 1) continue;
        // Box sum g(x1) + h(x2).
        const RatFunc& f = c->a[0];
        const Poly2 &num = f.num(), &den = f.den();
        int a1 = den.ord(0), a2 = den.ord(1);
        Poly2 g(F), h(F);
        bool ok = true;
        for (int i = 0; i <= num.deg1() && ok; ++i)
            for (int j = 0; j <= num.coeff(i).deg(); ++j) {
                Elem co = num.coeff(i, j);
                if (co == 0) continue;
                Poly2 m = Poly2::monomial(F, co, i, j);
                if (j == a2)
                    g = g + m;
                else if (i == a1)
                    h = h + m;
                else
                    ok = false;
            }
        if (!ok) continue;
        RatFunc G(g, den), H(h, den);
        UWittVec gc(S.p, {univariate(G.num(), G.den(), 0)}), hc(S.p, {univariate(H.num(), H.den(), 1)});
        if (G.is_zero()) gc = UWittVec(S.p, {URat(F)});
        if (H.is_zero()) hc = UWittVec(S.p, {URat(F)});
        out.value = gos_curve(gc, removed_places(F, punct[0])) * gos_curve(hc, removed_places(F, punct[1]));
        out.note = "chart " + c->name + ": sum of functions of " + c->var[0] + " and " + c->var[1];
        return out;
    }
    out.note = "NotProduct: no chart with a one-variable or box-sum decomposition";
    return out;
}

EulerReport euler_report(const CharacterAnalysis& A) {
    EulerReport r;
    r.char_k = euler_via_charK(A);
    r.char_log = euler_via_charlog(A);
    r.upstairs = euler_upstairs(A);
    r.oracle = euler_oracle_product(A.res.base);
    return r;
}

}  // namespace wildcc
