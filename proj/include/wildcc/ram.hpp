#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wildcc/witt.hpp"

namespace wildcc {

// Which closed points of a chart the chart is responsible for. Every point
// of the surface is owned by exactly one chart.
enum class Own { All, Axis0, Origin };

struct Axis {
    int div = -1;  // boundary divisor id, or -1 when the axis is not boundary
    bool tame = false;
    bool boundary() const { return div >= 0; }
};

// A coordinate chart (x1, x2) together with the Witt vector defining the
// character there. Axis 0 is {x1 = 0}, axis 1 is {x2 = 0}.
struct Chart {
    std::string name;
    std::array<std::string, 2> var{"x1", "x2"};
    std::array<Axis, 2> axis;
    Own own = Own::All;
    int depth = 0;  // number of blow-ups above the base surface
    WittVec a;
    const Field* field() const { return a[0].field(); }
};

enum class DivType { Tame, I, II };
const char* div_type_name(DivType t);

struct DivRam {
    int div = -1;
    int sw = 0;
    int dt = 1;
    DivType type = DivType::Tame;
    bool exceptional = false;
    int sprime = 0;  // p-adic valuation of sw (wild only)
    bool wild() const { return sw > 0; }
};

// Reduce a modulo (F - 1) W_s so that it is admissible along every boundary
// axis: either regular there, or the leading part of -F^{s-1}d a is nonzero.
WittVec reduce_admissible(const WittVec& a, const std::array<Axis, 2>& axes);
// Invariants along one boundary axis of an admissible vector.
int swan(const WittVec& a, int axis);
int total_dim(const WittVec& a, int axis);
DivRam classify(const WittVec& a, int axis, int div);

// Restrictions of rsw and cform to one wild boundary axis. Index j of each
// pair is the coefficient belonging to coordinate x_{j+1}: dlog x_j (or dx_j
// when axis j is not boundary) for rsw, dx_j for cform. The cform pair is
// radicial (variable w, w^p = t) for exceptional type.
struct AxisForms {
    std::array<URat, 2> rsw;
    std::array<URat, 2> cform;
    bool radicial = false;
};

// A closed point of a chart lying on a boundary axis: {x_{axis+1} = 0,
// g(x_other) = 0}. The origin is stored with g = t and the lowest boundary
// axis through it.
struct ChartPlace {
    int axis = 0;
    UPoly g;
    int deg() const { return g.deg(); }
    bool is_origin() const { return g.deg() == 1 && g.coeff(0) == 0; }
    bool operator<(const ChartPlace& o) const {
        if (axis != o.axis) return axis < o.axis;
        return g < o.g;
    }
    bool operator==(const ChartPlace& o) const { return axis == o.axis && g == o.g; }
};

struct PointReport {
    std::string chart;
    ChartPlace place;
    std::vector<int> ix, wild, type1, type2, tame;  // divisor ids
    bool clean = true;
    bool strongly_clean = true;
    bool non_degenerate = true;
    std::map<int, int> ord, ordp2;  // per wild divisor; ordp2 = 2 ord'
    std::map<int, int> xi;          // order of the dlog residue of rsw along each wild divisor
    long long sx = 0, tx = 0;
    int deg() const { return place.deg(); }
};

// Counters of the independent formula checks performed (all must agree,
// otherwise an InvariantViolation is thrown).
struct CheckStats {
    std::map<std::string, long long> count;
    void add(const std::string& k, long long n = 1) { count[k] += n; }
    void merge(const CheckStats& o) {
        for (auto& [k, v] : o.count) count[k] += v;
    }
};

struct ChartAnalysis {
    Chart chart;  // with the admissible representative
    std::array<DivRam, 2> ram;
    std::array<AxisForms, 2> forms;
    std::array<RatFunc, 2> fsd;  // -F^{s-1}d a as (dx1, dx2) coefficients
    std::vector<PointReport> points;
    CheckStats checks;
    const DivRam* ram_of(int div) const;
};

// Full per-chart analysis: reduction, divisor invariants, rsw and cform,
// and reports for every owned closed point where some invariant is
// nontrivial (plus crossings).
ChartAnalysis analyze_chart(const Chart& c);

// Point report at one place (also used for points not in the special set).
PointReport point_report(const ChartAnalysis& an, const ChartPlace& x, CheckStats* stats = nullptr);

// Special places of a chart owned by it.
std::vector<ChartPlace> special_places(const ChartAnalysis& an);

bool owns(const Chart& c, const ChartPlace& x);

// The place of the radicial line (variable w, w^p = t) above the t-place g,
// and the t-place below a w-place.
UPoly w_place(const UPoly& g);
UPoly t_place(const UPoly& gw);

// Order of a univariate function at a place; kInfinity for zero.
int place_order(const URat& f, const UPoly& g);

std::string form_to_string(const AxisForms& f, int axis, bool cform, const Chart& c);

}  // namespace wildcc
