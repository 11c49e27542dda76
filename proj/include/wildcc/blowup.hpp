#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wildcc/ram.hpp"

namespace wildcc {

enum class Ambient { A2, P2 };

struct DivisorInfo {
    int id = -1;
    std::string name;
    bool exceptional = false;
    bool tame = false;
    // Class in the basis (H, E_1, ..., E_n) of Pic of a blow-up of P^2.
    std::vector<int> cls;
};

struct BlowUp {
    int index = 0;  // 1-based, in order of execution
    int E = -1;     // divisor id of the exceptional curve
    std::string chart;
    ChartPlace center;
    std::string point;
    std::string chart_a, chart_b;
    std::vector<int> through;  // boundary divisors through the centre
    int depth = 0;
};

// A surface together with a chart atlas. Every closed point of the boundary
// is owned by exactly one chart; a blown-up centre is removed from the chart
// that owned it and the two new charts own the exceptional curve.
struct Surface {
    Ambient ambient = Ambient::A2;
    const Field* F = nullptr;
    unsigned p = 2, s = 1;
    std::vector<Chart> charts;
    std::vector<DivisorInfo> divisors;
    std::vector<BlowUp> blowups;
    std::set<std::pair<std::string, ChartPlace>> blown;

    const Chart& chart(const std::string& name) const;
    const DivisorInfo& divisor(int id) const;
    bool has_divisor(int id) const;
    int euler_number() const;  // topological Euler number (P^2 towers)
    int class_dim() const { return 1 + static_cast<int>(blowups.size()); }
};

// Intersection pairing on Pic of a blow-up of P^2 in the basis (H, E_i).
int pic_dot(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> canonical_class(const Surface& S);

// Base surfaces. Components are given in the distinguished chart (t1, t2)
// with a[i] of weight p^i. Boundary ids: A^2 uses 1, 2 for {t1 = 0},
// {t2 = 0}; P^2 uses 0, 1, 2 for {S_i = 0}.
Surface make_a2(const WittVec& a, const std::vector<int>& boundary, const std::vector<int>& tame);
Surface make_p2(const WittVec& a, const std::vector<int>& boundary, const std::vector<int>& tame);

// Rewrite every chart over a larger field.
Surface extend_scalars(const Surface& S, const Field* big);

std::string point_name(const Surface& S, const Chart& c, const ChartPlace& x);

// Blow up a rational closed point of a boundary axis.
const BlowUp& blow_up(Surface& S, const std::string& chart, const ChartPlace& center);

struct ResolveOptions {
    int depth_cap = 32;
    unsigned max_field_size = 1u << 16;
    // Extra centres (chart, place) blown up before resolving, used to test
    // independence of the resolution.
    std::vector<std::pair<std::string, ChartPlace>> extra;
};

struct LivePoint {
    std::string chart;
    PointReport report;
};

struct Resolution {
    Surface base;   // the input surface, over the final field
    Surface final;  // after all blow-ups
    std::map<std::string, ChartAnalysis> an;
    CheckStats checks;
    const ChartAnalysis& analysis(const std::string& chart) const { return an.at(chart); }
    // Owned, not blown-up special points of the given surface's charts.
    std::vector<LivePoint> live_points(const Surface& S) const;
};

// Analyze every chart of S and check that divisor invariants agree on overlaps.
std::map<std::string, ChartAnalysis> analyze_surface(const Surface& S, CheckStats* st = nullptr);

// Blow up non-clean points until the triple is clean. Non-rational centres
// trigger a restart over a field containing them.
Resolution resolve(const Surface& S, const ResolveOptions& opt = {});

int depth_cap_from_env(int fallback = 32);

}  // namespace wildcc
