#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "wildcc/field.hpp"

namespace wildcc {

constexpr int kInfinity = INT_MAX;

// Dense univariate polynomial over F_q; c[i] is the coefficient of t^i.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(const Field* F) : F_(F) {}
    UPoly(const Field* F, std::vector<Elem> c) : F_(F), c_(std::move(c)) { trim(); }
    static UPoly constant(const Field* F, Elem a) { return UPoly(F, {a}); }
    static UPoly monomial(const Field* F, Elem a, int deg);
    static UPoly var(const Field* F) { return monomial(F, 1, 1); }

    const Field* field() const { return F_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    Elem lc() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }
    // Order of vanishing at t = 0 (kInfinity for zero).
    int low_order() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly scale(Elem a) const;
    UPoly shift(int k) const;  // times t^k, k >= 0
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }
    bool operator<(const UPoly& o) const;

    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }
    // Exact division; throws on nonzero remainder.
    UPoly divexact(const UPoly& d) const;
    UPoly monic() const;
    UPoly derivative() const;
    UPoly pow(unsigned n) const;
    UPoly powmod(std::uint64_t n, const UPoly& m) const;
    Elem eval(Elem x) const;
    // p(g(t)).
    UPoly compose(const UPoly& g) const;
    // Coefficients mapped through the inverse Frobenius and exponents
    // divided by p; only valid when every exponent is divisible by p.
    bool pth_root(UPoly& out) const;
    // Substitute t -> t^k.
    UPoly inflate(int k) const;
    // Apply a -> a^(p^j) to all coefficients (j may be negative).
    UPoly frobenius_coeffs(int j) const;
    // Multiplicity of the irreducible g as a factor.
    int valuation(const UPoly& g) const;
    UPoly reverse(int n) const;

    std::string to_string(const std::string& var) const;

private:
    void trim();
    const Field* F_ = nullptr;
    std::vector<Elem> c_;
};

UPoly gcd(UPoly a, UPoly b);
// Monic irreducible factors with multiplicities, sorted canonically.
std::vector<std::pair<UPoly, int>> factor(const UPoly& f);
bool is_irreducible(const UPoly& g);

// Univariate rational function num/den with gcd 1 and monic den. When
// radicial is set, the variable stands for w with w^p = t.
class URat {
public:
    URat() = default;
    explicit URat(const Field* F) : num_(F), den_(UPoly::constant(F, 1)) {}
    URat(UPoly n, UPoly d, bool radicial = false);
    static URat from_poly(const UPoly& n, bool radicial = false) {
        return URat(n, UPoly::constant(n.field(), 1), radicial);
    }

    const Field* field() const { return num_.field(); }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool radicial() const { return radicial_; }
    bool is_zero() const { return num_.is_zero(); }

    URat operator+(const URat& o) const;
    URat operator-(const URat& o) const;
    URat operator-() const { return URat(-num_, den_, radicial_); }
    URat operator*(const URat& o) const;
    URat operator/(const URat& o) const;
    URat pow(int n) const;
    bool operator==(const URat& o) const {
        return radicial_ == o.radicial_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const URat& o) const { return !(*this == o); }

    // Order at the place given by the monic irreducible g.
    int valuation(const UPoly& g) const;
    int valuation_at_infinity() const;
    // Rewrite a function of t as a function of w (t = w^p).
    URat to_radicial() const;
    // p-th root; false when not a p-th power.
    bool pth_root(URat& out) const;
    std::string to_string(const std::string& var) const;

private:
    UPoly num_, den_;
    bool radicial_ = false;
};

}  // namespace wildcc
