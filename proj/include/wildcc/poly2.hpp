#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wildcc/upoly.hpp"

namespace wildcc {

// Bivariate polynomial in (x1, x2) stored as a dense list of x2-polynomials
// indexed by the x1-exponent.
class Poly2 {
public:
    Poly2() = default;
    explicit Poly2(const Field* F) : F_(F) {}
    Poly2(const Field* F, std::vector<UPoly> c) : F_(F), c_(std::move(c)) { trim(); }
    static Poly2 constant(const Field* F, Elem a);
    static Poly2 monomial(const Field* F, Elem a, int e1, int e2);
    static Poly2 var(const Field* F, int axis) { return axis == 0 ? monomial(F, 1, 1, 0) : monomial(F, 1, 0, 1); }
    // The univariate polynomial g placed in variable x_{axis+1}.
    static Poly2 from_upoly(const UPoly& g, int axis);

    const Field* field() const { return F_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].deg() <= 0); }
    int deg1() const { return static_cast<int>(c_.size()) - 1; }
    int deg2() const;
    int total_degree() const;
    const UPoly& coeff(int i) const;
    const std::vector<UPoly>& coeffs() const { return c_; }
    UPoly lc1() const { return c_.empty() ? UPoly(F_) : c_.back(); }
    Elem lc() const { return c_.empty() ? 0 : c_.back().lc(); }
    Elem coeff(int e1, int e2) const { return coeff(e1).coeff(e2); }
    std::size_t num_terms() const;
    bool is_monomial() const { return num_terms() == 1; }

    // Order of vanishing along x_{axis+1} = 0.
    int ord(int axis) const;
    // Divide by x1^a x2^b (exact).
    Poly2 div_monomial(int a, int b) const;
    Poly2 mul_monomial(int a, int b) const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator-() const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 scale(Elem a) const;
    Poly2 mul_upoly(const UPoly& g) const;  // g in x2
    Poly2 pow(unsigned n) const;
    bool operator==(const Poly2& o) const { return c_ == o.c_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }
    bool operator<(const Poly2& o) const;

    Poly2 derivative(int axis) const;
    // Set x_{axis+1} = 0; result is a polynomial in the other variable.
    UPoly restrict_axis(int axis) const;
    Poly2 swapped() const;
    UPoly content() const;
    Poly2 divexact(const Poly2& d) const;
    Poly2 divexact_upoly(const UPoly& g) const;
    Elem eval(Elem a, Elem b) const;
    // Coefficients through a -> a^(1/p) and exponents divided by p.
    bool pth_root(Poly2& out) const;

    std::string to_string(const std::string& v1, const std::string& v2) const;

private:
    void trim();
    const Field* F_ = nullptr;
    std::vector<UPoly> c_;
};

Poly2 gcd(const Poly2& a, const Poly2& b);

}  // namespace wildcc
