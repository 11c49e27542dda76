#include "wildcc/input.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "wildcc/expr.hpp"

namespace wildcc {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void bad(int line, const std::string& msg) {
    fail(ErrorKind::InvalidInput, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_list(const std::string& v, int line) {
    std::string body = v;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') bad(line, "unterminated list");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::string> out;
    if (trim(body).empty()) return out;
    int depth = 0;
    std::string cur;
    for (char ch : body) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    for (const auto& x : out)
        if (x.empty()) bad(line, "empty list entry");
    return out;
}

long long to_int(const std::string& v, int line) {
    std::size_t used = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &used);
    } catch (const std::exception&) {
        bad(line, "expected an integer, got '" + v + "'");
    }
    if (used != v.size()) bad(line, "expected an integer, got '" + v + "'");
    return x;
}

std::vector<int> to_ints(const std::string& v, int line) {
    std::vector<int> out;
    for (const auto& x : split_list(v, line)) {
        std::string t = x;
        if (t.size() > 1 && (t[0] == 'D' || t[0] == 'L')) t = t.substr(1);
        out.push_back(static_cast<int>(to_int(t, line)));
    }
    return out;
}

bool to_bool(const std::string& v, int line) {
    if (v == "on" || v == "true" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "no") return false;
    bad(line, "expected on or off, got '" + v + "'");
}

std::string join(const std::vector<std::string>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s + "]";
}

std::string join(const std::vector<int>& xs) {
    std::vector<std::string> s;
    for (int x : xs) s.push_back(std::to_string(x));
    return join(s);
}

ExprContext curve_context(const Field* F) {
    ExprContext c;
    c.F = F;
    c.vars["t"] = RatFunc::var(F, 0);
    c.degree["t"] = 0;
    return c;
}

URat on_curve(const RatFunc& f) {
    if (f.num().deg2() > 0 || f.den().deg2() > 0) fail(ErrorKind::InvalidInput, "curve expression depends on a second variable");
    return f.restrict_axis(1);
}

}  // namespace

const Field* InputSpec::field() const { return Field::get(p, degree); }

std::string InputSpec::to_text() const {
    std::ostringstream o;
    const char* names[] = {"A2", "P2", "P1"};
    o << "surface = " << names[static_cast<int>(surface)] << "\n";
    o << "p = " << p << "\n";
    if (degree != 1) o << "degree = " << degree << "\n";
    o << "witt = " << join(witt) << "\n";
    if (surface == SurfaceKind::P1) {
        o << "removed = " << join(removed) << "\n";
    } else {
        o << "boundary = " << join(boundary) << "\n";
        if (!tame.empty()) o << "tame = " << join(tame) << "\n";
    }
    if (!radicial) o << "radicial = off\n";
    if (max_field != (1u << 16)) o << "max_field = " << max_field << "\n";
    if (depth_cap_set) o << "depth_cap = " << depth_cap << "\n";
    return o.str();
}

InputSpec parse_input(const std::string& text) {
    InputSpec in;
    std::map<std::string, int> seen;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    long long declared_s = -1;
    while (std::getline(is, raw)) {
        ++line;
        std::string l = raw.substr(0, raw.find('#'));
        l = trim(l);
        if (l.empty()) continue;
        auto eq = l.find('=');
        if (eq == std::string::npos) bad(line, "expected key = value");
        std::string key = trim(l.substr(0, eq)), v = trim(l.substr(eq + 1));
        if (seen.count(key)) bad(line, "duplicate key '" + key + "'");
        seen[key] = line;
        if (key == "surface") {
            if (v == "A2")
                in.surface = SurfaceKind::A2;
            else if (v == "P2")
                in.surface = SurfaceKind::P2;
            else if (v == "P1")
                in.surface = SurfaceKind::P1;
            else
                bad(line, "surface must be A2, P2 or P1");
        } else if (key == "p") {
            long long p = to_int(v, line);
            if (p < 2 || p > 65521) bad(line, "p out of range");
            in.p = static_cast<unsigned>(p);
        } else if (key == "degree") {
            long long d = to_int(v, line);
            if (d < 1 || d > 16) bad(line, "degree out of range");
            in.degree = static_cast<int>(d);
        } else if (key == "s") {
            declared_s = to_int(v, line);
        } else if (key == "witt") {
            in.witt = split_list(v, line);
        } else if (key == "boundary") {
            in.boundary = to_ints(v, line);
        } else if (key == "tame") {
            in.tame = to_ints(v, line);
        } else if (key == "removed") {
            in.removed = split_list(v, line);
        } else if (key == "radicial") {
            in.radicial = to_bool(v, line);
        } else if (key == "max_field") {
            long long m = to_int(v, line);
            if (m < 2) bad(line, "max_field must be at least 2");
            in.max_field = static_cast<unsigned>(m);
        } else if (key == "depth_cap") {
            long long d = to_int(v, line);
            if (d < 0) bad(line, "depth_cap must be nonnegative");
            in.depth_cap = static_cast<int>(d);
            in.depth_cap_set = true;
        } else {
            bad(line, "unknown key '" + key + "'");
        }
    }
    if (!seen.count("surface")) fail(ErrorKind::InvalidInput, "missing key 'surface'");
    if (!seen.count("p")) fail(ErrorKind::InvalidInput, "missing key 'p'");
    if (in.witt.empty()) fail(ErrorKind::InvalidInput, "missing key 'witt'");
    if (declared_s >= 0 && declared_s != static_cast<long long>(in.witt.size()))
        bad(seen["s"], "s = " + std::to_string(declared_s) + " but witt has " + std::to_string(in.witt.size()) + " components");
    if (in.surface == SurfaceKind::P1 && seen.count("boundary")) bad(seen["boundary"], "use 'removed' on P1");
    if (in.surface != SurfaceKind::P1 && seen.count("removed")) bad(seen["removed"], "'removed' is only for P1");
    in.field();  // rejects composite p
    return in;
}

InputSpec load_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorKind::InvalidInput, "cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_input(ss.str());
}

Surface build_surface(const InputSpec& in) {
    if (in.surface == SurfaceKind::P1) fail(ErrorKind::UnsupportedAmbient, "P1 inputs are only for the curve oracle");
    const Field* F = in.field();
    ExprContext ctx = in.surface == SurfaceKind::P2 ? p2_context(F) : a2_context(F);
    std::vector<RatFunc> a;
    for (auto it = in.witt.rbegin(); it != in.witt.rend(); ++it) a.push_back(parse_expr(*it, ctx));
    WittVec w(in.p, a);
    return in.surface == SurfaceKind::P2 ? make_p2(w, in.boundary, in.tame) : make_a2(w, in.boundary, in.tame);
}

ResolveOptions resolve_options(const InputSpec& in) {
    ResolveOptions opt;
    opt.max_field_size = in.max_field;
    opt.depth_cap = depth_cap_from_env(in.depth_cap);
    return opt;
}

UWittVec curve_witt(const InputSpec& in) {
    if (in.surface != SurfaceKind::P1) fail(ErrorKind::UnsupportedAmbient, "the curve oracle needs surface = P1");
    const Field* F = in.field();
    std::vector<URat> a;
    for (auto it = in.witt.rbegin(); it != in.witt.rend(); ++it) a.push_back(on_curve(parse_expr(*it, curve_context(F))));
    return UWittVec(in.p, a);
}

std::vector<CurvePlace> curve_places(const InputSpec& in) {
    const Field* F = in.field();
    std::vector<CurvePlace> out;
    for (const auto& r : in.removed) {
        if (r == "inf") {
            out.push_back({true, UPoly(F)});
            continue;
        }
        URat g = on_curve(parse_expr(r, curve_context(F)));
        if (g.den().deg() > 0 || g.num().deg() < 1) fail(ErrorKind::InvalidInput, "place '" + r + "' is not a nonconstant polynomial");
        auto fac = factor(g.num());
        if (fac.size() != 1 || fac[0].second != 1) fail(ErrorKind::InvalidInput, "place '" + r + "' is not irreducible");
        out.push_back({false, g.num().monic()});
    }
    return out;
}

}  // namespace wildcc
