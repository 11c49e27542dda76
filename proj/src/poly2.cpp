#include "wildcc/poly2.hpp"

#include <algorithm>

#include "wildcc/errors.hpp"

namespace wildcc {

Poly2 Poly2::constant(const Field* F, Elem a) { return Poly2(F, {UPoly::constant(F, a)}); }

Poly2 Poly2::monomial(const Field* F, Elem a, int e1, int e2) {
    std::vector<UPoly> c(e1 + 1, UPoly(F));
    c[e1] = UPoly::monomial(F, a, e2);
    return Poly2(F, std::move(c));
}

Poly2 Poly2::from_upoly(const UPoly& g, int axis) {
    const Field* F = g.field();
    if (axis == 1) return Poly2(F, {g});
    std::vector<UPoly> c;
    for (Elem a : g.coeffs()) c.push_back(UPoly::constant(F, a));
    return Poly2(F, std::move(c));
}

void Poly2::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    for (auto& u : c_)
        if (!u.field()) u = UPoly(F_);
}

const UPoly& Poly2::coeff(int i) const {
    static thread_local UPoly zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) {
        zero = UPoly(F_);
        return zero;
    }
    return c_[i];
}

int Poly2::deg2() const {
    int d = -1;
    for (auto& u : c_) d = std::max(d, u.deg());
    return d;
}

int Poly2::total_degree() const {
    int d = -1;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) d = std::max(d, static_cast<int>(i) + c_[i].deg());
    return d;
}

std::size_t Poly2::num_terms() const {
    std::size_t n = 0;
    for (auto& u : c_)
        for (Elem a : u.coeffs()) n += a != 0;
    return n;
}

int Poly2::ord(int axis) const {
    if (c_.empty()) return kInfinity;
    if (axis == 0) {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return kInfinity;
    }
    int m = kInfinity;
    for (auto& u : c_) m = std::min(m, u.low_order());
    return m;
}

Poly2 Poly2::div_monomial(int a, int b) const {
    if (c_.empty()) return *this;
    std::vector<UPoly> r;
    for (std::size_t i = a; i < c_.size(); ++i) {
        const auto& cc = c_[i].coeffs();
        check(static_cast<int>(c_[i].low_order()) >= b || c_[i].is_zero(), "inexact monomial division");
        std::vector<Elem> v(cc.begin() + std::min<std::size_t>(b, cc.size()), cc.end());
        r.push_back(UPoly(F_, std::move(v)));
    }
    for (int i = 0; i < a && i < static_cast<int>(c_.size()); ++i) check(c_[i].is_zero(), "inexact monomial division");
    return Poly2(F_, std::move(r));
}

Poly2 Poly2::mul_monomial(int a, int b) const {
    if (c_.empty()) return *this;
    std::vector<UPoly> r(a, UPoly(F_));
    for (auto& u : c_) r.push_back(u.shift(b));
    return Poly2(F_, std::move(r));
}

Poly2 Poly2::operator+(const Poly2& o) const {
    const Field* F = F_ ? F_ : o.F_;
    std::vector<UPoly> r(std::max(c_.size(), o.c_.size()), UPoly(F));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size() && i < o.c_.size())
            r[i] = c_[i] + o.c_[i];
        else if (i < c_.size())
            r[i] = c_[i];
        else
            r[i] = o.c_[i];
    }
    return Poly2(F, std::move(r));
}

Poly2 Poly2::operator-() const {
    std::vector<UPoly> r;
    r.reserve(c_.size());
    for (auto& u : c_) r.push_back(-u);
    return Poly2(F_, std::move(r));
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
    const Field* F = F_ ? F_ : o.F_;
    if (c_.empty() || o.c_.empty()) return Poly2(F);
    std::vector<UPoly> r(c_.size() + o.c_.size() - 1, UPoly(F));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly2(F, std::move(r));
}

Poly2 Poly2::scale(Elem a) const {
    std::vector<UPoly> r;
    for (auto& u : c_) r.push_back(u.scale(a));
    return Poly2(F_, std::move(r));
}

Poly2 Poly2::mul_upoly(const UPoly& g) const {
    std::vector<UPoly> r;
    for (auto& u : c_) r.push_back(u * g);
    return Poly2(F_, std::move(r));
}

Poly2 Poly2::pow(unsigned n) const {
    Poly2 r = constant(F_, 1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

bool Poly2::operator<(const Poly2& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

Poly2 Poly2::derivative(int axis) const {
    if (axis == 1) {
        std::vector<UPoly> r;
        for (auto& u : c_) r.push_back(u.derivative());
        return Poly2(F_, std::move(r));
    }
    if (c_.size() <= 1) return Poly2(F_);
    std::vector<UPoly> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].scale(F_->from_int(static_cast<long long>(i))));
    return Poly2(F_, std::move(r));
}

UPoly Poly2::restrict_axis(int axis) const {
    if (c_.empty()) return UPoly(F_);
    if (axis == 0) return c_[0];
    std::vector<Elem> v;
    for (auto& u : c_) v.push_back(u.coeff(0));
    return UPoly(F_, std::move(v));
}

Poly2 Poly2::swapped() const {
    int d2 = deg2();
    if (d2 < 0) return *this;
    std::vector<std::vector<Elem>> m(d2 + 1, std::vector<Elem>(c_.size(), 0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (int j = 0; j <= c_[i].deg(); ++j) m[j][i] = c_[i].coeff(j);
    std::vector<UPoly> r;
    for (auto& row : m) r.push_back(UPoly(F_, row));
    return Poly2(F_, std::move(r));
}

UPoly Poly2::content() const {
    UPoly g(F_);
    for (auto& u : c_) {
        if (u.is_zero()) continue;
        g = g.is_zero() ? u.monic() : gcd(g, u);
        if (g.deg() == 0) break;
    }
    return g;
}

Poly2 Poly2::divexact_upoly(const UPoly& g) const {
    std::vector<UPoly> r;
    for (auto& u : c_) r.push_back(u.divexact(g));
    return Poly2(F_, std::move(r));
}

Poly2 Poly2::divexact(const Poly2& d) const {
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "bivariate division by zero");
    if (d.c_.size() == 1) return divexact_upoly(d.c_[0]);
    std::vector<UPoly> rem(c_);
    int dd = d.deg1();
    if (deg1() < dd) {
        check(is_zero(), "inexact bivariate division");
        return *this;
    }
    std::vector<UPoly> q(deg1() - dd + 1, UPoly(F_));
    const UPoly& l = d.c_.back();
    for (int i = deg1(); i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        UPoly t = rem[i].divexact(l);
        q[i - dd] = t;
        for (int j = 0; j <= dd; ++j)
            if (!d.c_[j].is_zero()) rem[i - dd + j] = rem[i - dd + j] - t * d.c_[j];
    }
    for (int i = 0; i < dd; ++i) check(rem[i].is_zero(), "inexact bivariate division");
    return Poly2(F_, std::move(q));
}

Elem Poly2::eval(Elem a, Elem b) const {
    Elem v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = F_->add(F_->mul(v, a), c_[i].eval(b));
    return v;
}

bool Poly2::pth_root(Poly2& out) const {
    std::uint32_t p = F_ ? F_->p() : 2;
    std::vector<UPoly> r;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (i % p) return false;
    }
    for (std::size_t i = 0; i < c_.size(); i += p) {
        UPoly u;
        if (!c_[i].pth_root(u)) return false;
        r.push_back(u);
    }
    out = Poly2(F_, std::move(r));
    return true;
}

std::string Poly2::to_string(const std::string& v1, const std::string& v2) const {
    if (c_.empty()) return "0";
    // Terms in decreasing total degree, then decreasing x1-degree.
    struct T {
        int e1, e2;
        Elem a;
    };
    std::vector<T> ts;
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (int j = 0; j <= c_[i].deg(); ++j)
            if (c_[i].coeff(j)) ts.push_back({static_cast<int>(i), j, c_[i].coeff(j)});
    std::sort(ts.begin(), ts.end(), [](const T& x, const T& y) {
        if (x.e1 + x.e2 != y.e1 + y.e2) return x.e1 + x.e2 > y.e1 + y.e2;
        return x.e1 > y.e1;
    });
    std::string s;
    for (auto& t : ts) {
        if (!s.empty()) s += " + ";
        std::string cs = F_->to_string(t.a);
        bool compound = cs.find('+') != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        std::string mono;
        auto addv = [&](const std::string& v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        addv(v1, t.e1);
        addv(v2, t.e2);
        if (mono.empty())
            s += cs;
        else if (t.a == 1)
            s += mono;
        else
            s += cs + "*" + mono;
    }
    return s;
}

namespace {

Poly2 primitive_part(const Poly2& a) {
    UPoly c = a.content();
    if (c.deg() <= 0) return a;
    return a.divexact_upoly(c);
}

}  // namespace

Poly2 gcd(const Poly2& a0, const Poly2& b0) {
    const Field* F = a0.field() ? a0.field() : b0.field();
    auto normalize = [&](const Poly2& g) {
        if (g.is_zero()) return g;
        return g.scale(F->inv(g.lc()));
    };
    if (a0.is_zero()) return normalize(b0);
    if (b0.is_zero()) return normalize(a0);
    int m1 = std::min(a0.ord(0), b0.ord(0));
    int m2 = std::min(a0.ord(1), b0.ord(1));
    Poly2 a = a0.div_monomial(a0.ord(0), a0.ord(1));
    Poly2 b = b0.div_monomial(b0.ord(0), b0.ord(1));
    Poly2 mono = Poly2::monomial(F, 1, m1, m2);
    if (a.is_constant() || b.is_constant()) return mono;
    UPoly ca = a.content(), cb = b.content();
    UPoly cg = gcd(ca, cb);
    a = a.divexact_upoly(ca);
    b = b.divexact_upoly(cb);
    if (a.deg1() < b.deg1()) std::swap(a, b);
    Poly2 pp;
    while (true) {
        if (b.is_zero()) {
            pp = a;
            break;
        }
        if (b.deg1() == 0) {
            pp = Poly2::constant(F, 1);
            break;
        }
        // Pseudo-remainder of a by b.
        Poly2 r = a;
        UPoly lb = b.lc1();
        while (!r.is_zero() && r.deg1() >= b.deg1()) {
            int k = r.deg1() - b.deg1();
            UPoly lr = r.lc1();
            r = r.mul_upoly(lb) - b.mul_upoly(lr).mul_monomial(k, 0);
        }
        a = b;
        b = r.is_zero() ? r : primitive_part(r);
    }
    return normalize(pp.mul_upoly(cg) * mono);
}

}  // namespace wildcc
