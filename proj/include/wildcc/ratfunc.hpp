#pragma once

#include <string>

#include "wildcc/poly2.hpp"

namespace wildcc {

// Rational function num/den in the chart coordinates (x1, x2). Canonical:
// gcd(num, den) = 1 and den has leading coefficient 1, so equality is
// structural.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(const Field* F) : num_(F), den_(Poly2::constant(F, 1)) {}
    RatFunc(const Poly2& n, const Poly2& d);
    static RatFunc constant(const Field* F, Elem a) { return RatFunc(Poly2::constant(F, a), Poly2::constant(F, 1)); }
    static RatFunc from_int(const Field* F, long long v) { return constant(F, F->from_int(v)); }
    static RatFunc var(const Field* F, int axis) { return RatFunc(Poly2::var(F, axis), Poly2::constant(F, 1)); }
    static RatFunc monomial(const Field* F, Elem a, int e1, int e2);
    // A univariate function of x_{axis+1}.
    static RatFunc from_urat(const URat& g, int axis);

    const Field* field() const { return num_.field() ? num_.field() : den_.field(); }
    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc pow(long long n) const;
    RatFunc scale(Elem a) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // Order along x_{axis+1} = 0; kInfinity for zero.
    int valuation(int axis) const;
    // Set x_{axis+1} = 0; requires valuation >= 0.
    URat restrict_axis(int axis) const;
    // Restriction of x^{-v} f with v its valuation (the leading coefficient).
    URat leading_coeff(int axis) const;
    RatFunc partial(int axis) const;
    bool pth_root(RatFunc& out) const;
    // f(X, Y).
    RatFunc substitute(const RatFunc& X, const RatFunc& Y) const;
    RatFunc swapped() const;

    std::string to_string(const std::string& v1 = "t1", const std::string& v2 = "t2") const;

private:
    Poly2 num_, den_;
};

inline RatFunc ring_const(const RatFunc& proto, long long c) { return RatFunc::from_int(proto.field(), c); }
inline URat ring_const(const URat& proto, long long c) {
    return URat::from_poly(UPoly::constant(proto.field(), proto.field()->from_int(c)), proto.radicial());
}

}  // namespace wildcc
