#pragma once

#include <string>
#include <vector>

#include "wildcc/blowup.hpp"
#include "wildcc/index.hpp"

namespace wildcc {

enum class SurfaceKind { A2, P2, P1 };

// Contents of an input file. Witt components are kept as written, with the
// weight-p^{s-1} component first as in (a_{s-1}, ..., a_0).
struct InputSpec {
    SurfaceKind surface = SurfaceKind::A2;
    unsigned p = 2;
    int degree = 1;  // the base field is F_{p^degree}
    std::vector<std::string> witt;
    std::vector<int> boundary;
    std::vector<int> tame;
    std::vector<std::string> removed;  // places of P^1 for the curve oracle
    bool radicial = true;
    unsigned max_field = 1u << 16;
    int depth_cap = 32;
    bool depth_cap_set = false;

    unsigned s() const { return static_cast<unsigned>(witt.size()); }
    const Field* field() const;
    // Canonical text: one key per line in a fixed order.
    std::string to_text() const;
};

// Parses `key = value` lines; `#` starts a comment, lists are written as
// `[a, b, c]`. Errors carry the line number.
InputSpec parse_input(const std::string& text);
InputSpec load_input(const std::string& path);

Surface build_surface(const InputSpec& in);
ResolveOptions resolve_options(const InputSpec& in);

// The curve oracle input of a P1 spec.
UWittVec curve_witt(const InputSpec& in);
std::vector<CurvePlace> curve_places(const InputSpec& in);

}  // namespace wildcc
