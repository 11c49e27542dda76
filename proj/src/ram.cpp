#include "wildcc/ram.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace wildcc {

namespace {

constexpr int kReductionCap = 100000;

RatFunc xpow(const Field* F, int axis, int e) {
    return RatFunc::monomial(F, 1, axis == 0 ? e : 0, axis == 1 ? e : 0);
}

long long ipow(long long b, unsigned e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

int vp(long long n, long long p) {
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int twice(int v) { return v == kInfinity ? kInfinity : 2 * v; }

// Leading part of -F^{s-1}d a in gr_n along the axis is nonzero.
bool phi_nonzero(const WittVec& a, int k, int n) {
    auto [c1, c2] = fsd(a);
    const RatFunc c[2] = {c1, c2};
    int vlog = (RatFunc::var(a[0].field(), k) * c[k]).valuation(k);
    int vother = c[1 - k].valuation(k);
    check(vlog >= -n && vother >= -n, "the form map left fil_n");
    return vlog == -n || vother == -n;
}

URat restrict_regular(const RatFunc& f, int axis, const char* what) {
    try {
        return f.restrict_axis(axis);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NegativeValuation)
            fail(ErrorKind::InternalPole, std::string(what) + " has a pole along a wild divisor");
        throw;
    }
}

void require(bool cond, const std::string& what, CheckStats* st) {
    check(cond, what + " disagrees with the direct computation");
    if (st) st->add(what);
}

}  // namespace

const char* div_type_name(DivType t) {
    switch (t) {
        case DivType::Tame:
            return "tame";
        case DivType::I:
            return "I";
        case DivType::II:
            return "II";
    }
    return "?";
}

WittVec reduce_admissible(const WittVec& a0, const std::array<Axis, 2>& axes) {
    WittVec a = a0;
    const Field* F = a[0].field();
    const unsigned p = a.p();
    for (int guard = 0;; ++guard) {
        if (guard > kReductionCap) fail(ErrorKind::ReductionFailed, "reduction to an admissible vector did not terminate");
        bool changed = false;
        for (int k = 0; k < 2 && !changed; ++k) {
            if (!axes[k].boundary()) continue;
            int ord = witt_order(a, k);
            if (ord >= 0) continue;
            int n = -ord;
            if (phi_nonzero(a, k, n)) continue;
            // The leading part of the form vanishes; by the Cartier operator
            // argument the leading coefficient of the highest leading
            // component is a p-th power with exponent divisible by p.
            int lead = -1;
            for (unsigned i = 0; i < a.s(); ++i)
                if (!a[i].is_zero() && ipow(p, i) * a[i].valuation(k) == -n) lead = static_cast<int>(i);
            check(lead >= 0, "no leading component");
            long long m = n / ipow(p, lead);
            URat g = a[lead].leading_coeff(k), h;
            if (m % p != 0 || !g.pth_root(h))
                fail(ErrorKind::ReductionFailed, "leading term of component " + std::to_string(lead) +
                                                     " along axis " + std::to_string(k + 1) +
                                                     " is not a p-th power although the form vanishes");
            RatFunc y = RatFunc::from_urat(h, 1 - k) * xpow(F, k, -static_cast<int>(m / p));
            WittVec v = witt_single(p, a.s(), lead, y);
            a = a - v.frobenius() + v;
            changed = true;
        }
        if (!changed) return a;
    }
}

int swan(const WittVec& a, int axis) {
    int o = witt_order(a, axis);
    return o >= 0 ? 0 : -o;
}

int total_dim(const WittVec& a, int axis) {
    int sw = swan(a, axis);
    if (sw == 0) return 1;
    return in_fil_prime(a, sw, axis) ? sw : sw + 1;
}

DivRam classify(const WittVec& a, int axis, int div) {
    DivRam d;
    d.div = div;
    d.sw = swan(a, axis);
    d.dt = total_dim(a, axis);
    check(d.sw == 0 ? d.dt == 1 : (d.dt == d.sw || d.dt == d.sw + 1), "total dimension out of range");
    if (d.sw == 0) {
        d.type = DivType::Tame;
    } else {
        d.type = d.dt == d.sw + 1 ? DivType::I : DivType::II;
        d.exceptional = a.p() == 2 && d.sw == 2 && d.dt == 2;
        d.sprime = vp(d.sw, a.p());
    }
    return d;
}

UPoly w_place(const UPoly& g) { return g.frobenius_coeffs(-1); }
UPoly t_place(const UPoly& gw) { return gw.frobenius_coeffs(1); }

int place_order(const URat& f, const UPoly& g) { return f.is_zero() ? kInfinity : f.valuation(g); }

bool owns(const Chart& c, const ChartPlace& x) {
    switch (c.own) {
        case Own::All:
            return true;
        case Own::Axis0:
            return x.axis == 0 || x.is_origin();
        case Own::Origin:
            return x.is_origin();
    }
    return false;
}

const DivRam* ChartAnalysis::ram_of(int div) const {
    for (int k = 0; k < 2; ++k)
        if (chart.axis[k].div == div) return &ram[k];
    return nullptr;
}

namespace {

// On a chart of a blow-up, a boundary curve not passing through the centre
// shows up as a non-monomial denominator factor. It is harmless when it does
// not meet the exceptional curve, i.e. restricts to a nonzero constant there.
bool unit_along_exceptional(const Chart& c, const Poly2& h) {
    if (c.own == Own::Axis0) return h.coeff(0).deg() == 0;
    for (int i = 1; i <= h.deg1(); ++i)
        if (h.coeff(i, 0) != 0) return false;
    return h.coeff(0, 0) != 0;
}

}  // namespace

ChartAnalysis analyze_chart(const Chart& c0) {
    ChartAnalysis an;
    an.chart = c0;
    Chart& c = an.chart;
    const Field* F = c.field();
    const unsigned p = c.a.p();
    for (unsigned i = 0; i < c.a.s(); ++i) {
        const RatFunc& f = c.a[i];
        if (f.is_zero()) continue;
        const Poly2& d = f.den();
        int o0 = d.ord(0), o1 = d.ord(1);
        bool ok = d.is_monomial() || (c.own != Own::All && unit_along_exceptional(c, d.div_monomial(o0, o1)));
        for (int k = 0; k < 2 && ok; ++k)
            if (!c.axis[k].boundary() && d.ord(k) > 0) ok = false;
        if (!ok)
            fail(ErrorKind::PolarLocusOutsideBoundary,
                 "component " + f.to_string(c.var[0], c.var[1]) + " has poles outside the boundary on chart " + c.name);
    }
    c.a = reduce_admissible(c0.a, c0.axis);
    for (int k = 0; k < 2; ++k) {
        if (!c.axis[k].boundary()) continue;
        an.ram[k] = classify(c.a, k, c.axis[k].div);
        if (c.axis[k].tame && an.ram[k].wild())
            fail(ErrorKind::InvalidInput, "a divisor declared tame carries wild ramification (sw = " +
                                              std::to_string(an.ram[k].sw) + ")");
        an.checks.add("total dimension is sw or sw + 1");
    }
    auto [c1, c2] = fsd(c.a);
    an.fsd = {c1, c2};
    RatFunc T = RatFunc::constant(F, 1), Tp = RatFunc::constant(F, 1);
    std::array<RatFunc, 2> L;
    for (int j = 0; j < 2; ++j) {
        if (c.axis[j].boundary()) {
            Tp = Tp * xpow(F, j, an.ram[j].dt);
            if (an.ram[j].wild()) T = T * xpow(F, j, an.ram[j].sw);
            L[j] = RatFunc::var(F, j) * an.fsd[j];
        } else {
            L[j] = an.fsd[j];
        }
    }
    for (int k = 0; k < 2; ++k) {
        const DivRam& d = an.ram[k];
        if (!c.axis[k].boundary() || !d.wild()) continue;
        AxisForms& f = an.forms[k];
        for (int j = 0; j < 2; ++j) {
            f.rsw[j] = restrict_regular(L[j] * T, k, "the refined Swan conductor");
            f.cform[j] = restrict_regular(an.fsd[j] * Tp, k, "the characteristic form");
        }
        check(!(f.rsw[0].is_zero() && f.rsw[1].is_zero()), "rsw vanishes along a wild divisor");
        if (p == 2 && d.dt == 2) {
            // Square-root term: sqrt(x^2 a_0 |_D) dx / x^2 on the radicial line.
            f.radicial = true;
            for (int j = 0; j < 2; ++j) f.cform[j] = f.cform[j].to_radicial();
            URat g = restrict_regular(xpow(F, k, 2) * c.a[0], k, "the square-root term").to_radicial(), h;
            if (!g.pth_root(h)) fail(ErrorKind::NotASquareInRadicial, "square-root term");
            int o = 1 - k;
            if (c.axis[o].boundary()) h = h * URat::from_poly(UPoly::monomial(F, 1, static_cast<int>(p) * an.ram[o].dt), true);
            f.cform[k] = f.cform[k] + h;
        }
        check(!(f.cform[0].is_zero() && f.cform[1].is_zero()), "cform vanishes along a wild divisor");
        bool xi_zero = f.rsw[k].is_zero();
        bool off_conormal = !f.cform[1 - k].is_zero();
        bool t2 = d.type == DivType::II;
        require(t2 == xi_zero && t2 == off_conormal, "type II / residue / conormal equivalence", &an.checks);
    }
    for (const auto& x : special_places(an)) an.points.push_back(point_report(an, x, &an.checks));
    return an;
}

std::vector<ChartPlace> special_places(const ChartAnalysis& an) {
    const Chart& c = an.chart;
    const Field* F = c.field();
    std::set<ChartPlace> out;
    auto add = [&](int k, const UPoly& g) {
        ChartPlace x{k, g.monic()};
        if (x.is_origin()) x.axis = c.axis[0].boundary() ? 0 : k;
        if (owns(c, x)) out.insert(x);
    };
    auto add_zeros = [&](int k, const URat& f) {
        if (f.is_zero() || f.num().deg() <= 0) return;
        for (auto& [g, m] : factor(f.num())) add(k, f.radicial() ? t_place(g) : g);
    };
    for (int k = 0; k < 2; ++k) {
        if (!c.axis[k].boundary()) continue;
        if (c.axis[1 - k].boundary()) add(k, UPoly::var(F));
        if (!an.ram[k].wild()) continue;
        for (int j = 0; j < 2; ++j) {
            add_zeros(k, an.forms[k].rsw[j]);
            add_zeros(k, an.forms[k].cform[j]);
        }
    }
    return {out.begin(), out.end()};
}

PointReport point_report(const ChartAnalysis& an, const ChartPlace& x, CheckStats* st) {
    const Chart& c = an.chart;
    const Field* F = c.field();
    const unsigned p = c.a.p();
    const unsigned s = c.a.s();
    PointReport r;
    r.chart = c.name;
    r.place = x;
    const UPoly t = UPoly::var(F);
    std::map<int, int> axis_for;  // divisor id -> chart axis
    for (int k = 0; k < 2; ++k) {
        if (!c.axis[k].boundary() || !(k == x.axis || x.is_origin())) continue;
        int div = c.axis[k].div;
        axis_for[div] = k;
        r.ix.push_back(div);
        const DivRam& d = an.ram[k];
        if (!d.wild()) {
            r.tame.push_back(div);
            continue;
        }
        r.wild.push_back(div);
        (d.type == DivType::I ? r.type1 : r.type2).push_back(div);
        const AxisForms& f = an.forms[k];
        UPoly g = x.is_origin() ? t : x.g;
        int o = std::min(place_order(f.rsw[0], g), place_order(f.rsw[1], g));
        int op;
        if (f.radicial) {
            UPoly gw = w_place(g);
            op = std::min(place_order(f.cform[0], gw), place_order(f.cform[1], gw));
        } else {
            op = twice(std::min(place_order(f.cform[0], g), place_order(f.cform[1], g)));
        }
        if (o < 0 || op < 0) fail(ErrorKind::InternalPole, "rsw or cform has a pole at a point of " + c.name);
        check(o != kInfinity && op != kInfinity, "rsw or cform vanishes identically");
        r.ord[div] = o;
        r.ordp2[div] = op;
        r.xi[div] = place_order(f.rsw[k], g);
    }
    if (r.wild.empty()) return r;

    bool some0 = false, all0 = true, somen = false, alln = true, strong = true;
    for (int i : r.wild) {
        some0 |= r.ord[i] == 0;
        all0 &= r.ord[i] == 0;
        somen |= r.ordp2[i] == 0;
        alln &= r.ordp2[i] == 0;
        strong &= r.xi[i] == 0;
    }
    require(some0 == all0, "cleanliness for some / every wild divisor", st);
    require(somen == alln, "non-degeneracy for some / every wild divisor", st);
    r.clean = all0;
    r.non_degenerate = alln;
    r.strongly_clean = strong;
    if (strong) require(r.clean, "strongly clean implies clean", st);

    auto ram_div = [&](int div) -> const DivRam& { return an.ram[axis_for.at(div)]; };
    auto place_for = [&](int) { return x.is_origin() ? t : x.g; };
    const int nix = static_cast<int>(r.ix.size());

    // ord' of type I divisors through the residue order and through the
    // Witt component of index s'.
    for (int i : r.type1) {
        const DivRam& d = ram_div(i);
        int expect = r.xi[i] + static_cast<int>(r.type1.size() + r.tame.size()) - 1;
        require(r.ordp2[i] == 2 * expect, "ord' via the residue order", st);
        unsigned h = static_cast<unsigned>(d.sprime);
        check(h < s, "type I divisor with s' >= s");
        long long ph = ipow(p, h);
        RatFunc ap = c.a[h];
        long long rest = static_cast<long long>(r.tame.size());
        for (int j : r.wild) {
            const DivRam& dj = ram_div(j);
            long long nprime = dj.sw / ph;
            ap = ap * xpow(F, axis_for.at(j), static_cast<int>(nprime));
            if (j != i) rest += dj.dt - ph * nprime;
        }
        int n = place_order(restrict_regular(ap, axis_for.at(i), "the Witt component of index s'"), place_for(i));
        check(n != kInfinity, "Witt component of index s' vanishes along a type I divisor");
        require(r.ordp2[i] == 2 * (n * ph + rest), "ord' via the Witt component of index s'", st);
    }

    // Cleanliness and non-degeneracy through the Witt components a'_h.
    int s1 = INT_MAX;
    for (int j : r.wild) s1 = std::min(s1, ram_div(j).sprime);
    int k0 = axis_for.at(r.wild[0]);
    auto aprime = [&](int h) {
        RatFunc v = h < static_cast<int>(s) ? c.a[h] : RatFunc(F);
        for (int j : r.wild) v = v * xpow(F, axis_for.at(j), static_cast<int>(ram_div(j).sw / ipow(p, h)));
        return v;
    };
    auto order_at_x = [&](const RatFunc& f) {
        int v = place_order(restrict_regular(f, k0, "a normalized Witt component"), place_for(r.wild[0]));
        check(v >= 0, "normalized Witt component has a pole at the point");
        return v;
    };
    bool inv = order_at_x(aprime(s1)) == 0;
    for (int j : r.wild)
        require(((ram_div(j).sprime == s1) && inv) == (r.xi[j] == 0), "residue nonvanishing via the Witt component", st);
    if (inv) require(r.clean, "invertible leading Witt component implies clean", st);
    if (nix == 2) require(r.clean == inv, "cleanliness at a crossing via the Witt component", st);
    if (nix == 1) {
        bool hyp = true;
        for (int h = 0; h < s1; ++h) hyp &= order_at_x(aprime(h)) > 0;
        if (hyp) {
            bool b = !inv && order_at_x(aprime(0)) == 1;
            require(r.clean == (inv || b), "cleanliness off crossings via the Witt components", st);
        }
    }
    if (r.clean) {
        bool all_ii = r.type2.size() == r.ix.size();
        bool one_i = r.tame.empty() && r.type1.size() == 1;
        bool via_witt = all_ii || (one_i && ram_div(r.type1[0]).sprime == s1 && inv);
        require(r.non_degenerate == via_witt, "non-degeneracy via the Witt component", st);
        bool via_residue = all_ii || (one_i && r.xi[r.type1[0]] == 0);
        require(r.non_degenerate == via_residue, "non-degeneracy via the residue", st);
        if (nix == 2) {
            require(!r.type1.empty(), "clean crossing has a type I divisor", st);
            if (r.wild.size() == 1) require(r.xi[r.wild[0]] == 0, "residue at a clean crossing with one wild divisor", st);
            for (int j : r.wild)
                require((ram_div(j).sprime == s1) == (r.xi[j] == 0), "residue at a clean crossing via s'", st);
        }
    }
    if (!r.tame.empty())
        for (int j : r.wild) require(r.ordp2[j] > 0, "cform vanishes where a tame divisor meets the wild locus", st);
    if (r.type1.size() == 2)
        for (int j : r.type1) require(r.ordp2[j] > 0, "cform vanishes at a crossing of type I divisors", st);
    return r;
}

std::string form_to_string(const AxisForms& f, int axis, bool cform, const Chart& c) {
    const auto& pr = cform ? f.cform : f.rsw;
    std::string var = cform && f.radicial ? "w" : c.var[1 - axis];
    std::string out;
    for (int j = 0; j < 2; ++j) {
        if (pr[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        bool log = !cform && c.axis[j].boundary();
        out += "(" + pr[j].to_string(var) + ") " + (log ? "dlog " : "d") + c.var[j];
    }
    return out.empty() ? "0" : out;
}

}  // namespace wildcc
