#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wildcc/blowup.hpp"

namespace wildcc {

// Components of cycles on T*X (ZeroSection, Conormal, Line, Fiber) and on
// T*X(log D) (the *Log kinds). Lines carry a direction description, fibers
// the degree of their closed point.
enum class CompKind { ZeroSection, Conormal, Line, Fiber, ZeroSectionLog, LineLog, FiberLog };
const char* comp_kind_name(CompKind k);
CompKind comp_kind_from_name(const std::string& s);

struct CycleTerm {
    CompKind kind = CompKind::ZeroSection;
    std::string carrier;
    long long mult = 0;
    int deg = 1;
    std::string dir;
};

class Cycle {
public:
    // Adds to the multiplicity of (kind, carrier); zero terms are dropped.
    void add(CompKind kind, const std::string& carrier, long long mult, int deg = 1, const std::string& dir = "");
    long long mult(CompKind kind, const std::string& carrier = "") const;
    const std::vector<CycleTerm>& terms() const { return terms_; }
    bool operator==(const Cycle& o) const;
    bool operator!=(const Cycle& o) const { return !(*this == o); }

    // One line per term: `mult * Kind(carrier | deg n | dir)`, sorted by
    // (kind, carrier). Degree and direction are written only when present.
    std::string to_text() const;
    static Cycle parse_text(const std::string& text);
    // Single-line form such as `1·ZeroSection + 4·Conormal(D1)`.
    std::string to_line() const;

private:
    std::vector<CycleTerm> terms_;
};

struct BasePoint {
    std::string name;
    std::string chart;
    PointReport rep;  // with sx and tx filled in
};

struct BaseDivisor {
    DivisorInfo info;
    DivRam ram;
    std::string rsw, cform;  // direction descriptions along the divisor
    int rprime() const { return ram.exceptional ? 1 : ram.dt; }
};

struct CharacterAnalysis {
    Resolution res;
    std::vector<BaseDivisor> divisors;
    std::vector<BasePoint> points;  // special points of the base surface
    // s at every blown-up centre of the tower (chart, place).
    std::map<std::pair<std::string, ChartPlace>, long long> s;
    Cycle char_log, char_k;
    CheckStats checks;
    const BaseDivisor& divisor(int id) const;
};

// Resolve, push down, and assemble Char^log and Char^K on the base surface.
CharacterAnalysis analyze_character(const Surface& S, const ResolveOptions& opt = {});

// Push the clean cycle of the final surface down the tower; returns s at
// every centre.
std::map<std::pair<std::string, ChartPlace>, long long> push_down(const Resolution& R, CheckStats* st = nullptr);

// Char^log of the final surface of a resolution; requires cleanliness.
Cycle char_log_clean(const Resolution& R);

// Characteristic cycle and singular support (the support of cc).
Cycle cc(const CharacterAnalysis& A);
std::vector<std::string> ss(const CharacterAnalysis& A);

// Comparison of Char^K with the pullback of Char^log along T*X -> T*X(log D):
// exact off type II divisors, total fibre degree on each connected
// component of the type II locus (projective ambient only; on A^2 these
// Chow groups vanish).
struct TauComparison {
    bool ok = true;
    Cycle pulled;  // components off the type II locus
    int buckets = 0;
    std::vector<std::string> mismatches;
};
TauComparison compare_tau(const CharacterAnalysis& A);

// Degree on the base surface of the pieces entering the index formulas.
int conormal_degree(const CharacterAnalysis& A, int div);
int line_log_degree(const CharacterAnalysis& A, int div);     // (K + D)·D_i + R·D_i - sum ord
int line_prime_degree(const CharacterAnalysis& A, int div);   // degree of the type II line bundle L'
int dot_with_R(const Surface& S, const std::map<int, int>& weights, int div);

}  // namespace wildcc
