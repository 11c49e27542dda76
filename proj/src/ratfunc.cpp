#include "wildcc/ratfunc.hpp"

#include <algorithm>

#include "wildcc/errors.hpp"

namespace wildcc {

RatFunc::RatFunc(const Poly2& n, const Poly2& d) {
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    const Field* F = d.field();
    if (n.is_zero()) {
        num_ = Poly2(F);
        den_ = Poly2::constant(F, 1);
        return;
    }
    if (d.is_monomial() || n.is_monomial()) {
        int a = std::min(n.ord(0), d.ord(0));
        int b = std::min(n.ord(1), d.ord(1));
        num_ = n.div_monomial(a, b);
        den_ = d.div_monomial(a, b);
    } else {
        Poly2 g = gcd(n, d);
        if (g.is_constant()) {
            num_ = n;
            den_ = d;
        } else {
            num_ = n.divexact(g);
            den_ = d.divexact(g);
        }
    }
    Elem l = den_.lc();
    if (l != 1) {
        Elem il = F->inv(l);
        num_ = num_.scale(il);
        den_ = den_.scale(il);
    }
}

RatFunc RatFunc::monomial(const Field* F, Elem a, int e1, int e2) {
    int p1 = std::max(e1, 0), p2 = std::max(e2, 0);
    int q1 = std::max(-e1, 0), q2 = std::max(-e2, 0);
    return RatFunc(Poly2::monomial(F, a, p1, p2), Poly2::monomial(F, 1, q1, q2));
}

RatFunc RatFunc::from_urat(const URat& g, int axis) {
    return RatFunc(Poly2::from_upoly(g.num(), axis), Poly2::from_upoly(g.den(), axis));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    if (den_.is_monomial() && o.den_.is_monomial()) {
        int a1 = den_.ord(0), b1 = den_.ord(1), a2 = o.den_.ord(0), b2 = o.den_.ord(1);
        int a = std::max(a1, a2), b = std::max(b1, b2);
        Poly2 n = num_.mul_monomial(a - a1, b - b1) + o.num_.mul_monomial(a - a2, b - b2);
        return RatFunc(n, Poly2::monomial(field(), 1, a, b));
    }
    Poly2 g = gcd(den_, o.den_);
    if (g.is_constant()) return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    Poly2 c1 = o.den_.divexact(g), c2 = den_.divexact(g);
    return RatFunc(num_ * c1 + o.num_ * c2, den_ * c1);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc(field());
    if (den_.is_constant() && o.den_.is_constant()) {
        RatFunc r;
        r.num_ = num_ * o.num_;
        r.den_ = den_;
        return r;
    }
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by the zero function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long long n) const {
    if (n < 0) {
        if (is_zero()) fail(ErrorKind::DivisionByZero, "negative power of zero");
        return RatFunc(den_, num_).pow(-n);
    }
    RatFunc r;
    r.num_ = num_.pow(static_cast<unsigned>(n));
    r.den_ = den_.pow(static_cast<unsigned>(n));
    // Powers of coprime polynomials stay coprime; only rescale.
    Elem l = r.den_.lc();
    if (l != 1) {
        Elem il = field()->inv(l);
        r.num_ = r.num_.scale(il);
        r.den_ = r.den_.scale(il);
    }
    return r;
}

RatFunc RatFunc::scale(Elem a) const {
    if (a == 0) return RatFunc(field());
    RatFunc r;
    r.num_ = num_.scale(a);
    r.den_ = den_;
    return r;
}

int RatFunc::valuation(int axis) const {
    if (is_zero()) return kInfinity;
    return num_.ord(axis) - den_.ord(axis);
}

URat RatFunc::restrict_axis(int axis) const {
    int v = valuation(axis);
    if (v < 0) fail(ErrorKind::NegativeValuation, "pole along axis " + std::to_string(axis + 1));
    if (v > 0) return URat(field());
    return leading_coeff(axis);
}

URat RatFunc::leading_coeff(int axis) const {
    if (is_zero()) return URat(field());
    int a = num_.ord(axis), b = den_.ord(axis);
    Poly2 n = axis == 0 ? num_.div_monomial(a, 0) : num_.div_monomial(0, a);
    Poly2 d = axis == 0 ? den_.div_monomial(b, 0) : den_.div_monomial(0, b);
    return URat(n.restrict_axis(axis), d.restrict_axis(axis));
}

RatFunc RatFunc::partial(int axis) const {
    Poly2 dn = num_.derivative(axis), dd = den_.derivative(axis);
    if (dd.is_zero()) return RatFunc(dn, den_);
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

bool RatFunc::pth_root(RatFunc& out) const {
    Poly2 a, b;
    if (!num_.pth_root(a) || !den_.pth_root(b)) return false;
    out = RatFunc(a, b);
    return true;
}

RatFunc RatFunc::substitute(const RatFunc& X, const RatFunc& Y) const {
    const Field* F = field();
    int D1 = std::max(num_.deg1(), den_.deg1());
    int D2 = std::max(num_.deg2(), den_.deg2());
    D1 = std::max(D1, 0);
    D2 = std::max(D2, 0);
    auto powers = [&](const Poly2& b, int n) {
        std::vector<Poly2> v{Poly2::constant(F, 1)};
        for (int i = 1; i <= n; ++i) v.push_back(v.back() * b);
        return v;
    };
    auto xn = powers(X.num(), D1), xd = powers(X.den(), D1);
    auto yn = powers(Y.num(), D2), yd = powers(Y.den(), D2);
    auto eval = [&](const Poly2& P) {
        Poly2 acc(F);
        for (int i = 0; i <= P.deg1(); ++i) {
            const UPoly& c = P.coeff(i);
            if (c.is_zero()) continue;
            Poly2 inner(F);
            for (int j = 0; j <= c.deg(); ++j) {
                Elem a = c.coeff(j);
                if (!a) continue;
                inner = inner + (yn[j] * yd[D2 - j]).scale(a);
            }
            acc = acc + inner * xn[i] * xd[D1 - i];
        }
        return acc;
    };
    return RatFunc(eval(num_), eval(den_));
}

RatFunc RatFunc::swapped() const {
    RatFunc r;
    r.num_ = num_.swapped();
    r.den_ = den_.swapped();
    return RatFunc(r.num_, r.den_);
}

std::string RatFunc::to_string(const std::string& v1, const std::string& v2) const {
    std::string n = num_.to_string(v1, v2);
    if (den_.is_constant()) return n;
    bool nc = num_.num_terms() > 1;
    bool dc = den_.num_terms() > 1;
    return (nc ? "(" + n + ")" : n) + "/" + (dc ? "(" + den_.to_string(v1, v2) + ")" : den_.to_string(v1, v2));
}

}  // namespace wildcc
