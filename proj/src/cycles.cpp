#include "wildcc/cycles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace wildcc {

namespace {

const std::vector<std::pair<CompKind, const char*>> kKindNames = {
    {CompKind::ZeroSection, "ZeroSection"}, {CompKind::Conormal, "Conormal"},
    {CompKind::Line, "Line"},               {CompKind::Fiber, "Fiber"},
    {CompKind::ZeroSectionLog, "ZeroSectionLog"}, {CompKind::LineLog, "LineLog"},
    {CompKind::FiberLog, "FiberLog"},
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

using PlaceKey = std::pair<std::string, ChartPlace>;

// min(ord f0, ord f1) at the place g.
int pair_order(const std::array<URat, 2>& f, const UPoly& g) { return std::min(place_order(f[0], g), place_order(f[1], g)); }

// Sum over the finite places of the line of (ord(h) - ord(pair)) deg, for
// the places where either side is nonzero.
long long relative_divisor_degree(const URat& h, const std::array<URat, 2>& pair) {
    std::set<UPoly> places;
    for (const URat* f : {&h, &pair[0], &pair[1]}) {
        if (f->is_zero()) continue;
        for (const UPoly* q : {&f->num(), &f->den()})
            if (q->deg() > 0)
                for (auto& [g, m] : factor(*q)) places.insert(g);
    }
    long long total = 0;
    for (const auto& g : places) {
        int a = place_order(h, g), b = pair_order(pair, g);
        check(a != kInfinity && b != kInfinity, "direction section vanishes identically");
        total += static_cast<long long>(a - b) * g.deg();
    }
    return total;
}

int low_order(const UPoly& q) { return q.low_order(); }

// Leading coefficient at t = 0 of f t^{-o}; zero if the order exceeds o.
Elem lead_at_zero(const URat& f, int o) {
    if (f.is_zero()) return 0;
    int vn = low_order(f.num()), vd = low_order(f.den());
    if (vn - vd > o) return 0;
    const Field* F = f.field();
    return F->div(f.num().coeff(vn), f.den().coeff(vd));
}

URat det(const std::array<URat, 2>& f, std::array<int, 2> im) {
    const Field* F = f[0].field() ? f[0].field() : f[1].field();
    URat a = URat::from_poly(UPoly::constant(F, F->from_int(im[0]))), b = URat::from_poly(UPoly::constant(F, F->from_int(im[1])));
    return f[0] * b - f[1] * a;
}

std::array<URat, 2> sanitize(const std::array<URat, 2>& f, const Field* F) {
    std::array<URat, 2> r = f;
    for (auto& x : r)
        if (!x.field()) x = URat(F);
    return r;
}

}  // namespace

const char* comp_kind_name(CompKind k) {
    for (auto& [kk, n] : kKindNames)
        if (kk == k) return n;
    return "?";
}

CompKind comp_kind_from_name(const std::string& s) {
    for (auto& [k, n] : kKindNames)
        if (s == n) return k;
    fail(ErrorKind::Syntax, "unknown cycle component kind '" + s + "'");
}

void Cycle::add(CompKind kind, const std::string& carrier, long long mult, int deg, const std::string& dir) {
    if (mult == 0) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->kind == kind && it->carrier == carrier) {
            it->mult += mult;
            if (it->mult == 0) terms_.erase(it);
            return;
        }
    }
    terms_.push_back({kind, carrier, mult, deg, dir});
    std::sort(terms_.begin(), terms_.end(), [](const CycleTerm& a, const CycleTerm& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.carrier < b.carrier;
    });
}

long long Cycle::mult(CompKind kind, const std::string& carrier) const {
    for (const auto& t : terms_)
        if (t.kind == kind && t.carrier == carrier) return t.mult;
    return 0;
}

bool Cycle::operator==(const Cycle& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto &a = terms_[i], &b = o.terms_[i];
        if (a.kind != b.kind || a.carrier != b.carrier || a.mult != b.mult || a.deg != b.deg || a.dir != b.dir) return false;
    }
    return true;
}

std::string Cycle::to_text() const {
    std::string out;
    for (const auto& t : terms_) {
        out += std::to_string(t.mult) + " * " + comp_kind_name(t.kind);
        std::string inner = t.carrier;
        if (t.deg != 1) inner += " | deg " + std::to_string(t.deg);
        if (!t.dir.empty()) inner += " | " + t.dir;
        if (!inner.empty()) out += "(" + inner + ")";
        out += "\n";
    }
    return out;
}

Cycle Cycle::parse_text(const std::string& text) {
    Cycle c;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        auto star = line.find(" * ");
        if (star == std::string::npos) fail(ErrorKind::Syntax, "cycle line without ' * ': " + line);
        long long mult = 0;
        try {
            mult = std::stoll(line.substr(0, star));
        } catch (const std::exception&) {
            fail(ErrorKind::Syntax, "bad multiplicity in cycle line: " + line);
        }
        std::string rest = line.substr(star + 3);
        std::string kind = rest, inner;
        auto open = rest.find('(');
        if (open != std::string::npos) {
            if (rest.back() != ')') fail(ErrorKind::Syntax, "unbalanced parenthesis in cycle line: " + line);
            kind = rest.substr(0, open);
            inner = rest.substr(open + 1, rest.size() - open - 2);
        }
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            auto bar = inner.find(" | ", pos);
            parts.push_back(inner.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos));
            if (bar == std::string::npos) break;
            pos = bar + 3;
        }
        std::string carrier = parts[0], dir;
        int deg = 1;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (parts[i].rfind("deg ", 0) == 0 && i == 1)
                deg = std::stoi(parts[i].substr(4));
            else
                dir = parts[i];
        }
        c.add(comp_kind_from_name(trim(kind)), carrier, mult, deg, dir);
    }
    return c;
}

std::string Cycle::to_line() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        out += std::to_string(t.mult) + "·" + comp_kind_name(t.kind);
        if (!t.carrier.empty()) out += "(" + t.carrier + ")";
    }
    return out;
}

const BaseDivisor& CharacterAnalysis::divisor(int id) const {
    for (const auto& d : divisors)
        if (d.info.id == id) return d;
    fail(ErrorKind::InvalidInput, "no boundary divisor with id " + std::to_string(id));
}

std::map<PlaceKey, long long> push_down(const Resolution& R, CheckStats* st) {
    const Surface& S = R.final;
    std::map<PlaceKey, long long> s;
    auto s_at = [&](const std::string& chart, const ChartPlace& x) -> long long {
        auto it = s.find({chart, x});
        return it == s.end() ? 0 : it->second;
    };
    for (auto bit = S.blowups.rbegin(); bit != S.blowups.rend(); ++bit) {
        const BlowUp& b = *bit;
        const Chart& parent = S.chart(b.chart);
        const ChartAnalysis& A = R.analysis(b.chart_a);
        const ChartAnalysis& B = R.analysis(b.chart_b);
        const ChartAnalysis& P = R.analysis(b.chart);
        const Field* F = S.F;
        const UPoly t = UPoly::var(F);
        const DivRam& E = A.ram[0];
        check(E.sw == B.ram[1].sw && E.dt == B.ram[1].dt, "exceptional curve invariants differ between its charts");

        long long total = 0;
        long long ord_sum = 0;
        std::vector<std::pair<const ChartAnalysis*, const PointReport*>> on_e;
        for (const auto& r : A.points)
            if (r.place.axis == 0 || r.place.is_origin()) on_e.push_back({&A, &r});
        for (const auto& r : B.points)
            if (r.place.is_origin()) on_e.push_back({&B, &r});
        for (auto [an, r] : on_e) {
            total += s_at(an->chart.name, r->place) * r->deg();
            if (E.wild()) ord_sum += static_cast<long long>(r->ord.at(b.E)) * r->deg();
        }

        bool crossing = b.through.size() == 2;
        int kc = -1;  // parent axis carrying the single boundary divisor
        if (!crossing) {
            check(b.through.size() == 1, "blow-up centre off the boundary");
            kc = parent.axis[0].div == b.through[0] && (b.center.is_origin() || b.center.axis == 0) ? 0 : 1;
        }
        long long RE = -E.sw;
        for (int id : b.through) RE += P.ram_of(id)->sw;

        if (E.wild()) {
            long long degL = -RE + ord_sum;
            auto fa = sanitize(A.forms[0].rsw, F), fb = sanitize(B.forms[1].rsw, F);
            long long cE;
            if (crossing) {
                // Coordinates in the pulled-back frame (dlog x1, dlog x2).
                URat ba = fa[1], bb = fb[1] - fb[0];
                if (ba.is_zero()) {
                    check(bb.is_zero(), "direction of the exceptional line differs between charts");
                    cE = 0;
                } else {
                    cE = relative_divisor_degree(ba, fa) + (place_order(bb, t) - pair_order(fb, t));
                }
                check(cE == -degL, "mapping degree of the exceptional direction against its line bundle degree");
                if (st) st->add("push-down degree identity at crossings");
            } else {
                std::array<int, 2> ima = kc == 0 ? std::array<int, 2>{1, 0} : std::array<int, 2>{1, 1};
                std::array<int, 2> imb = kc == 0 ? std::array<int, 2>{1, 1} : std::array<int, 2>{0, 1};
                URat da = det(fa, ima), db = det(fb, imb);
                if (da.is_zero()) {
                    check(db.is_zero(), "direction of the exceptional line differs between charts");
                    cE = -1 - degL;  // excess intersection
                    if (st) st->add("push-down excess case");
                } else {
                    cE = relative_divisor_degree(da, fa) + (place_order(db, t) - pair_order(fb, t));
                    check(cE == -1 - degL, "coincidence count on the exceptional curve against its line bundle degree");
                    if (st) st->add("push-down degree identity off crossings");
                }
            }
            total += E.sw * cE;
        }

        if (!crossing) {
            int id = b.through[0];
            const ChartAnalysis& C = kc == 0 ? B : A;
            int k = kc == 0 ? 0 : 1;  // axis of the proper transform in C
            const DivRam& d = C.ram[k];
            check(d.div == id, "proper transform missing from its chart");
            check(d.sw == P.ram_of(id)->sw, "Swan conductor of a proper transform changed");
            if (d.wild()) {
                auto f = sanitize(C.forms[k].rsw, F);
                int o = pair_order(f, t);
                Elem l0 = lead_at_zero(f[0], o), l1 = lead_at_zero(f[1], o);
                // Degenerate image direction is (1, 1) at this crossing.
                bool content = l0 == l1;
                total += content ? d.sw : 0;
            }
        }
        s[{b.chart, b.center}] = total;
    }
    return s;
}

Cycle char_log_clean(const Resolution& R) {
    const Surface& S = R.final;
    for (const auto& lp : R.live_points(S))
        if (!lp.report.clean)
            fail(ErrorKind::NotClean, "not clean at " + point_name(S, S.chart(lp.chart), lp.report.place));
    Cycle c;
    c.add(CompKind::ZeroSectionLog, "", 1);
    std::set<int> done;
    for (const auto& ch : S.charts) {
        const ChartAnalysis& an = R.analysis(ch.name);
        for (int k = 0; k < 2; ++k) {
            if (!ch.axis[k].boundary() || !an.ram[k].wild() || !done.insert(ch.axis[k].div).second) continue;
            c.add(CompKind::LineLog, S.divisor(ch.axis[k].div).name, an.ram[k].sw, 1, form_to_string(an.forms[k], k, false, ch));
        }
    }
    return c;
}

int dot_with_R(const Surface& S, const std::map<int, int>& weights, int div) {
    std::vector<int> R(S.class_dim(), 0);
    for (auto [id, w] : weights) {
        const auto& cls = S.divisor(id).cls;
        for (std::size_t i = 0; i < cls.size(); ++i) R[i] += w * cls[i];
    }
    return pic_dot(R, S.divisor(div).cls);
}

namespace {

std::vector<int> boundary_class(const Surface& S) {
    std::vector<int> D(S.class_dim(), 0);
    for (const auto& d : S.divisors)
        for (std::size_t i = 0; i < d.cls.size(); ++i) D[i] += d.cls[i];
    return D;
}

std::map<int, int> sw_weights(const CharacterAnalysis& A) {
    std::map<int, int> w;
    for (const auto& d : A.divisors) w[d.info.id] = d.ram.sw;
    return w;
}

std::map<int, int> dt_weights(const CharacterAnalysis& A) {
    std::map<int, int> w;
    for (const auto& d : A.divisors) w[d.info.id] = d.ram.dt;
    return w;
}

void require_projective(const Surface& S) {
    if (S.ambient != Ambient::P2) fail(ErrorKind::UnsupportedAmbient, "degrees need a projective surface");
}

long long point_sum(const CharacterAnalysis& A, int div, bool prime) {
    long long t = 0;
    for (const auto& p : A.points) {
        const auto& m = prime ? p.rep.ordp2 : p.rep.ord;
        auto it = m.find(div);
        if (it != m.end()) t += static_cast<long long>(it->second) * p.rep.deg();
    }
    return t;
}

}  // namespace

int conormal_degree(const CharacterAnalysis& A, int div) {
    const Surface& S = A.res.base;
    require_projective(S);
    const auto& c = S.divisor(div).cls;
    return pic_dot(canonical_class(S), c) + pic_dot(c, c);
}

int line_log_degree(const CharacterAnalysis& A, int div) {
    const Surface& S = A.res.base;
    require_projective(S);
    const auto& c = S.divisor(div).cls;
    std::vector<int> KD = canonical_class(S), D = boundary_class(S);
    for (std::size_t i = 0; i < KD.size(); ++i) KD[i] += D[i];
    return pic_dot(KD, c) + dot_with_R(S, sw_weights(A), div) - static_cast<int>(point_sum(A, div, false));
}

int line_prime_degree(const CharacterAnalysis& A, int div) {
    const Surface& S = A.res.base;
    require_projective(S);
    const auto& c = S.divisor(div).cls;
    const BaseDivisor& d = A.divisor(div);
    int base = pic_dot(canonical_class(S), c) + dot_with_R(S, dt_weights(A), div);
    long long ordp2 = point_sum(A, div, true);
    if (d.ram.exceptional) return static_cast<int>(2 * base - ordp2);
    check(ordp2 % 2 == 0, "half-integral ord' on a divisor of usual type");
    return static_cast<int>(base - ordp2 / 2);
}

CharacterAnalysis analyze_character(const Surface& S, const ResolveOptions& opt) {
    CharacterAnalysis out;
    out.res = resolve(S, opt);
    out.checks = out.res.checks;
    const Resolution& R = out.res;
    const Surface& base = R.base;
    out.s = push_down(R, &out.checks);

    for (const auto& info : base.divisors) {
        BaseDivisor bd;
        bd.info = info;
        bool found = false;
        for (const auto& ch : base.charts) {
            for (int k = 0; k < 2 && !found; ++k) {
                if (ch.axis[k].div != info.id) continue;
                const ChartAnalysis& an = R.analysis(ch.name);
                bd.ram = an.ram[k];
                if (bd.ram.wild()) {
                    bd.rsw = form_to_string(an.forms[k], k, false, ch);
                    bd.cform = form_to_string(an.forms[k], k, true, ch);
                }
                found = true;
            }
            if (found) break;
        }
        check(found, "boundary divisor " + info.name + " appears on no chart");
        out.divisors.push_back(bd);
    }

    for (const auto& ch : base.charts) {
        for (const auto& r0 : R.analysis(ch.name).points) {
            BasePoint bp;
            bp.chart = ch.name;
            bp.name = point_name(base, ch, r0.place);
            bp.rep = r0;
            PointReport& r = bp.rep;
            auto it = out.s.find({ch.name, r.place});
            r.sx = it == out.s.end() ? 0 : it->second;
            if (r.clean) check(r.sx == 0, "clean point with nonzero fibre multiplicity in Char^log");
            long long t = static_cast<long long>(r.ix.size()) - 1 + r.sx;
            for (int i : r.wild) {
                const DivRam& d = out.divisor(i).ram;
                long long diff = r.ordp2.at(i) - 2LL * r.ord.at(i);
                check((d.sw * diff) % 2 == 0, "non-integral t_x");
                t += d.sw * diff / 2;
            }
            for (int i : r.type2) t += r.ord.at(i) + 1 - static_cast<long long>(r.ix.size());
            r.tx = t;
            check(t >= 0, "negative fibre multiplicity t_x at " + bp.name);
            out.checks.add("t_x nonnegative");
            if (r.non_degenerate) {
                if (r.tame.empty()) check(t == 0, "t_x at a non-degenerate point with wild divisors only");
                if (r.wild.empty()) check(t == static_cast<long long>(r.ix.size()) - 1, "t_x at a tame point");
                out.checks.add("t_x at non-degenerate points");
            }
            out.points.push_back(bp);
        }
    }

    Cycle& L = out.char_log;
    L.add(CompKind::ZeroSectionLog, "", 1);
    for (const auto& d : out.divisors)
        if (d.ram.wild()) L.add(CompKind::LineLog, d.info.name, d.ram.sw, 1, d.rsw);
    for (const auto& p : out.points) L.add(CompKind::FiberLog, p.name, p.rep.sx, p.rep.deg());

    Cycle& K = out.char_k;
    K.add(CompKind::ZeroSection, "", 1);
    for (const auto& d : out.divisors) {
        if (d.ram.type == DivType::II)
            K.add(CompKind::Line, d.info.name, d.rprime(), 1, d.cform);
        else
            K.add(CompKind::Conormal, d.info.name, d.rprime());
    }
    for (const auto& p : out.points) K.add(CompKind::Fiber, p.name, p.rep.tx, p.rep.deg());

    if (base.ambient == Ambient::P2) {
        // Global degree identities along each wild divisor.
        for (const auto& d : out.divisors) {
            if (!d.ram.wild()) continue;
            int id = d.info.id;
            const auto& c = d.info.cls;
            if (d.ram.type == DivType::I) {
                long long lhs = point_sum(out, id, true);
                long long rhs = 2LL * (dot_with_R(base, dt_weights(out), id) - pic_dot(c, c));
                check(lhs == rhs, "sum of ord' along " + d.info.name + " against R'·D - D^2");
                out.checks.add("global ord' identity (type I)");
            } else {
                int crossings = 0;
                for (const auto& p : out.points)
                    if (p.rep.ix.size() == 2 && std::count(p.rep.ix.begin(), p.rep.ix.end(), id)) crossings += p.rep.deg();
                long long lhs = point_sum(out, id, false);
                long long rhs = dot_with_R(base, sw_weights(out), id) - 2 + crossings;
                check(lhs == rhs, "sum of ord along " + d.info.name + " against R·D - 2 + #crossings");
                out.checks.add("global ord identity (type II)");
            }
        }
    }
    return out;
}

Cycle cc(const CharacterAnalysis& A) { return A.char_k; }

std::vector<std::string> ss(const CharacterAnalysis& A) {
    std::vector<std::string> out;
    for (const auto& t : A.char_k.terms()) {
        std::string c = comp_kind_name(t.kind);
        if (!t.carrier.empty()) c += "(" + t.carrier + ")";
        out.push_back(c);
    }
    return out;
}

TauComparison compare_tau(const CharacterAnalysis& A) {
    TauComparison out;
    const Surface& S = A.res.base;
    std::set<int> type2;
    for (const auto& d : A.divisors)
        if (d.ram.type == DivType::II) type2.insert(d.info.id);
    auto on_z = [&](const PointReport& r) {
        for (int i : r.ix)
            if (type2.count(i)) return true;
        return false;
    };

    Cycle& P = out.pulled;
    P.add(CompKind::ZeroSection, "", 1);
    for (const auto& d : A.divisors) {
        if (type2.count(d.info.id)) continue;
        P.add(CompKind::Conormal, d.info.name, 1 + (d.ram.type == DivType::I ? d.ram.sw : 0));
    }
    // Fibre contributions of τ^! at a point, type II line bundles excluded.
    auto fibre = [&](const PointReport& r) {
        long long m = (r.ix.size() == 2 ? 1 : 0) + r.sx;
        bool z = on_z(r);
        for (int i : r.type1) {
            const DivRam& d = A.divisor(i).ram;
            long long diff = r.ordp2.at(i) - 2LL * r.ord.at(i);
            check(diff % 2 == 0, "half-integral ord' on a type I divisor");
            m += d.sw * (diff / 2 + (z ? 1 : 0));
        }
        return m;
    };
    for (const auto& p : A.points)
        if (!on_z(p.rep)) P.add(CompKind::Fiber, p.name, fibre(p.rep), p.rep.deg());

    Cycle K_off;
    for (const auto& t : A.char_k.terms()) {
        if (t.kind == CompKind::Line) continue;
        if (t.kind == CompKind::Fiber) {
            bool z = false;
            for (const auto& p : A.points)
                if (p.name == t.carrier) z = on_z(p.rep);
            if (z) continue;
        }
        K_off.add(t.kind, t.carrier, t.mult, t.deg, t.dir);
    }
    if (K_off != P) {
        out.ok = false;
        out.mismatches.push_back("off the type II locus: Char^K = " + K_off.to_line() + " but pullback = " + P.to_line());
    }

    if (type2.empty() || S.ambient != Ambient::P2) return out;
    // Connected components of the type II locus.
    std::map<int, int> comp;
    for (int i : type2) comp[i] = i;
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (const auto& p : A.points) {
        std::vector<int> z;
        for (int i : p.rep.ix)
            if (type2.count(i)) z.push_back(i);
        if (z.size() == 2) comp[find(z[0])] = find(z[1]);
    }
    std::map<int, std::pair<long long, long long>> bucket;  // root -> (Char^K degree, pullback degree)
    for (const auto& d : A.divisors) {
        if (!type2.count(d.info.id)) continue;
        auto& b = bucket[find(d.info.id)];
        b.first += static_cast<long long>(d.rprime()) * line_prime_degree(A, d.info.id);
        b.second += conormal_degree(A, d.info.id) + static_cast<long long>(d.ram.sw) * line_log_degree(A, d.info.id);
    }
    for (const auto& p : A.points) {
        if (!on_z(p.rep)) continue;
        int root = -1;
        for (int i : p.rep.ix)
            if (type2.count(i)) root = find(i);
        auto& b = bucket[root];
        b.first += p.rep.tx * p.rep.deg();
        b.second += fibre(p.rep) * p.rep.deg();
    }
    for (auto& [root, b] : bucket) {
        ++out.buckets;
        if (b.first != b.second) {
            out.ok = false;
            out.mismatches.push_back("type II component through " + S.divisor(root).name + ": Char^K degree " +
                                     std::to_string(b.first) + " but pullback degree " + std::to_string(b.second));
        }
    }
    return out;
}

}  // namespace wildcc
