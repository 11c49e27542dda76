#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wildcc/input.hpp"

using namespace wildcc;
using nlohmann::ordered_json;

namespace {

struct Options {
    std::string in;
    std::string format = "text";
};

std::string half(int twice) {
    return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

std::string field_name(const Field* F) { return "F_" + std::to_string(F->q()); }

void check_radicial(const InputSpec& in, const CharacterAnalysis& A) {
    if (in.radicial) return;
    for (const auto& d : A.divisors)
        if (d.ram.exceptional)
            fail(ErrorKind::InvalidInput, d.info.name + " is of exceptional type; set radicial = on to analyse it");
}

CharacterAnalysis analyse(const InputSpec& in) {
    CharacterAnalysis A = analyze_character(build_surface(in), resolve_options(in));
    check_radicial(in, A);
    return A;
}

ordered_json cycle_json(const Cycle& c) {
    ordered_json out = ordered_json::array();
    for (const auto& t : c.terms()) {
        ordered_json j{{"mult", t.mult}, {"kind", comp_kind_name(t.kind)}, {"carrier", t.carrier}};
        if (t.deg != 1) j["deg"] = t.deg;
        if (!t.dir.empty()) j["dir"] = t.dir;
        out.push_back(j);
    }
    return out;
}

ordered_json divisors_json(const CharacterAnalysis& A) {
    ordered_json out = ordered_json::array();
    for (const auto& d : A.divisors) {
        ordered_json j{{"id", d.info.id},
                       {"name", d.info.name},
                       {"sw", d.ram.sw},
                       {"dt", d.ram.dt},
                       {"type", div_type_name(d.ram.type)},
                       {"exceptional", d.ram.exceptional}};
        if (!d.rsw.empty()) j["rsw"] = d.rsw;
        if (!d.cform.empty()) j["cform"] = d.cform;
        out.push_back(j);
    }
    return out;
}

ordered_json points_json(const CharacterAnalysis& A) {
    ordered_json out = ordered_json::array();
    const Surface& S = A.res.base;
    for (const auto& x : A.points) {
        ordered_json ord = ordered_json::object(), ordp2 = ordered_json::object();
        for (auto [i, v] : x.rep.ord) ord[S.divisor(i).name] = v;
        for (auto [i, v] : x.rep.ordp2) ordp2[S.divisor(i).name] = v;
        out.push_back({{"place", x.name},
                       {"deg", x.rep.deg()},
                       {"clean", x.rep.clean},
                       {"non_degenerate", x.rep.non_degenerate},
                       {"ord", ord},
                       {"ordp2", ordp2},
                       {"sx", x.rep.sx},
                       {"tx", x.rep.tx}});
    }
    return out;
}

ordered_json euler_json(const EulerReport& r) {
    ordered_json j{{"charK", r.char_k}, {"charlog", r.char_log}, {"upstairs", r.upstairs}};
    if (r.oracle.value) j["oracle"] = *r.oracle.value;
    j["oracle_note"] = r.oracle.note;
    return j;
}

std::string point_line(const CharacterAnalysis& A, const BasePoint& x) {
    const Surface& S = A.res.base;
    std::ostringstream o;
    o << x.name << " [deg " << x.rep.deg() << "]: " << (x.rep.clean ? "clean" : "not clean");
    if (!x.rep.wild.empty()) o << (x.rep.non_degenerate ? ", non-degenerate" : ", degenerate");
    for (auto [i, v] : x.rep.ord) o << ", ord " << S.divisor(i).name << " = " << v;
    for (auto [i, v] : x.rep.ordp2) o << ", ord' " << S.divisor(i).name << " = " << half(v);
    o << ", s = " << x.rep.sx << ", t = " << x.rep.tx;
    return o.str();
}

int cmd_analyze(const InputSpec& in, bool json) {
    auto A = analyse(in);
    const Surface& S = A.res.base;
    if (json) {
        std::cout << ordered_json{{"divisors", divisors_json(A)}, {"points", points_json(A)}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "surface " << (S.ambient == Ambient::P2 ? "P2" : "A2") << " over " << field_name(S.F) << ", s = " << S.s
              << "\n";
    for (const auto& d : A.divisors) {
        std::cout << d.info.name << ": sw " << d.ram.sw << ", dt " << d.ram.dt << ", type "
                  << div_type_name(d.ram.type) << (d.ram.exceptional ? " (exceptional)" : "");
        if (!d.rsw.empty()) std::cout << ", rsw " << d.rsw;
        if (!d.cform.empty()) std::cout << ", cform " << d.cform;
        std::cout << "\n";
    }
    for (const auto& x : A.points) std::cout << point_line(A, x) << "\n";
    return 0;
}

int cmd_resolve(const InputSpec& in, bool json) {
    auto A = analyse(in);
    const Resolution& R = A.res;
    const Surface& S = R.final;
    ordered_json tree = ordered_json::array();
    std::ostringstream text;
    text << "base field " << field_name(R.base.F) << ", " << S.blowups.size() << " blow-up"
         << (S.blowups.size() == 1 ? "" : "s") << "\n";
    for (const auto& b : S.blowups) {
        int sw = R.analysis(b.chart_a).ram[0].sw;
        long long s = A.s.at({b.chart, b.center});
        std::string through;
        for (int i : b.through) through += (through.empty() ? "" : ",") + S.divisor(i).name;
        text << std::string(2 * (b.depth - 1), ' ') << S.divisor(b.E).name << " <- " << b.point << " (depth " << b.depth
             << ", through " << (through.empty() ? "-" : through) << "): sw = " << sw << ", s = " << s << "\n";
        tree.push_back({{"exceptional", S.divisor(b.E).name},
                        {"center", b.point},
                        {"chart", b.chart},
                        {"depth", b.depth},
                        {"through", through},
                        {"sw", sw},
                        {"s", s}});
    }
    bool clean = true;
    for (const auto& lp : R.live_points(S)) clean &= lp.report.clean;
    text << "final surface " << (clean ? "clean" : "NOT clean") << "\n";
    int depth = 0;
    for (const auto& b : S.blowups) depth = std::max(depth, b.depth);
    text << "depth " << depth << "\n";
    for (const auto& x : A.points)
        if (x.rep.sx != 0 || !x.rep.clean) text << "s_" << x.name << " = " << x.rep.sx << "\n";
    if (json) {
        std::cout << ordered_json{{"blowups", tree}, {"depth", depth}, {"clean", clean}, {"points", points_json(A)}}.dump(2)
                  << "\n";
    } else {
        std::cout << text.str();
    }
    return 0;
}

int cmd_cycle(const InputSpec& in, bool json, bool log) {
    auto A = analyse(in);
    const Cycle& c = log ? A.char_log : cc(A);
    if (json)
        std::cout << ordered_json{{"cycle", cycle_json(c)}}.dump(2) << "\n";
    else
        std::cout << c.to_line() << "\n";
    return 0;
}

int cmd_index(const InputSpec& in, bool json) {
    auto A = analyse(in);
    EulerReport r = euler_report(A);
    check(r.char_k == r.char_log, "the two index formulas disagree");
    if (json) {
        std::cout << ordered_json{{"euler", euler_json(r)}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "char_K: " << r.char_k << ", char_log: " << r.char_log << ", oracle(product/GOS): "
              << (r.oracle.value ? std::to_string(*r.oracle.value) : "NotProduct") << "\n";
    return 0;
}

int cmd_verify(const InputSpec& in, bool json) {
    auto A = analyse(in);
    std::vector<std::pair<std::string, bool>> results;
    TauComparison t = compare_tau(A);
    results.push_back({"pullback of Char^log against Char^K", t.ok});
    ordered_json euler;
    if (A.res.base.ambient == Ambient::P2) {
        EulerReport r = euler_report(A);
        results.push_back({"index via Char^K equals index via Char^log", r.char_k == r.char_log});
        results.push_back({"downstairs log index equals upstairs log index", r.char_log == r.upstairs});
        if (r.oracle.value) results.push_back({"index equals the product oracle", *r.oracle.value == r.char_k});
        euler = euler_json(r);
    }
    bool ok = true;
    for (auto& [k, v] : results) ok &= v;
    if (json) {
        ordered_json checks = ordered_json::object();
        for (const auto& [k, v] : A.checks.count) checks[k] = v;
        ordered_json res = ordered_json::object();
        for (auto& [k, v] : results) res[k] = v;
        ordered_json out{{"ok", ok}, {"formula_checks", checks}, {"comparisons", res}, {"mismatches", t.mismatches}};
        if (!euler.is_null()) out["euler"] = euler;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : A.checks.count) std::cout << "agree x" << v << ": " << k << "\n";
        for (auto& [k, v] : results) std::cout << (v ? "ok: " : "MISMATCH: ") << k << "\n";
        for (const auto& m : t.mismatches) std::cout << "  " << m << "\n";
        std::cout << (ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
    }
    return ok ? 0 : 2;
}

int cmd_gos(const InputSpec& in, bool json) {
    UWittVec a = curve_witt(in);
    std::vector<CurvePlace> places = curve_places(in);
    long long chi = gos_curve(a, places);
    ordered_json list = ordered_json::array();
    std::ostringstream text;
    for (const auto& y : places) {
        std::string name = y.infinity ? "inf" : y.g.to_string("t");
        int sw = curve_swan(a, y);
        text << "sw at " << name << " [deg " << y.deg() << "]: " << sw << "\n";
        list.push_back({{"place", name}, {"deg", y.deg()}, {"sw", sw}});
    }
    text << "chi_c: " << chi << "\n";
    if (json)
        std::cout << ordered_json{{"places", list}, {"euler", {{"gos", chi}}}}.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wildcc: ramification invariants and characteristic cycles of rank-one Witt characters on surfaces"};
    app.require_subcommand(1);
    Options opt;
    struct Cmd {
        const char* name;
        const char* help;
    };
    const std::vector<Cmd> cmds{{"analyze", "divisor invariants and point reports"},
                                {"resolve", "blow-up tree and pushed-down s values"},
                                {"cc", "characteristic cycle Char^K"},
                                {"charlog", "logarithmic characteristic cycle"},
                                {"index", "Euler characteristic by both index formulas and the oracle"},
                                {"verify", "run the invariant suite on the input"},
                                {"gos", "Euler characteristic of a character on an open of P1"}};
    for (const auto& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("--in", opt.in, "input file")->required();
        sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    const bool json = opt.format == "json";
    try {
        InputSpec in = load_input(opt.in);
        if (name == "gos") return cmd_gos(in, json);
        if (name == "analyze") return cmd_analyze(in, json);
        if (name == "resolve") return cmd_resolve(in, json);
        if (name == "cc") return cmd_cycle(in, json, false);
        if (name == "charlog") return cmd_cycle(in, json, true);
        if (name == "index") return cmd_index(in, json);
        return cmd_verify(in, json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
