#include "wildcc/upoly.hpp"

#include <algorithm>
#include <random>

#include "wildcc/errors.hpp"

namespace wildcc {

UPoly UPoly::monomial(const Field* F, Elem a, int deg) {
    std::vector<Elem> c(deg + 1, 0);
    c[deg] = a;
    return UPoly(F, std::move(c));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UPoly::low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return kInfinity;
}

UPoly UPoly::operator+(const UPoly& o) const {
    const Field* F = F_ ? F_ : o.F_;
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return UPoly(F, std::move(r));
}

UPoly UPoly::operator-() const {
    std::vector<Elem> r(c_);
    for (auto& x : r) x = F_->neg(x);
    return UPoly(F_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UPoly(F_ ? F_ : o.F_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r[i + j] = F_->add(r[i + j], F_->mul(c_[i], o.c_[j]));
    }
    return UPoly(F_, std::move(r));
}

UPoly UPoly::scale(Elem a) const {
    std::vector<Elem> r(c_);
    for (auto& x : r) x = F_->mul(x, a);
    return UPoly(F_, std::move(r));
}

UPoly UPoly::shift(int k) const {
    if (c_.empty()) return *this;
    std::vector<Elem> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(F_, std::move(r));
}

bool UPoly::operator<(const UPoly& o) const {
    if (deg() != o.deg()) return deg() < o.deg();
    for (int i = deg(); i >= 0; --i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (deg() < d.deg()) return {UPoly(F_ ? F_ : d.F_), *this};
    const Field* F = d.F_;
    std::vector<Elem> r(c_);
    std::vector<Elem> q(c_.size() - d.c_.size() + 1, 0);
    Elem il = F->inv(d.lc());
    int dd = d.deg();
    for (int i = deg(); i >= dd; --i) {
        Elem t = r[i];
        if (t == 0) continue;
        t = F->mul(t, il);
        q[i - dd] = t;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] = F->sub(r[i - dd + j], F->mul(t, d.c_[j]));
    }
    return {UPoly(F, std::move(q)), UPoly(F, std::move(r))};
}

UPoly UPoly::divexact(const UPoly& d) const {
    auto [q, r] = divmod(d);
    check(r.is_zero(), "inexact univariate division");
    return q;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scale(F_->inv(lc()));
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly(F_);
    std::vector<Elem> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = F_->mul(F_->from_int(static_cast<long long>(i)), c_[i]);
    return UPoly(F_, std::move(r));
}

UPoly UPoly::pow(unsigned n) const {
    UPoly r = constant(F_, 1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

UPoly UPoly::powmod(std::uint64_t n, const UPoly& m) const {
    UPoly r = constant(F_, 1) % m, b = *this % m;
    while (n) {
        if (n & 1) r = (r * b) % m;
        n >>= 1;
        if (n) b = (b * b) % m;
    }
    return r;
}

Elem UPoly::eval(Elem x) const {
    Elem v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = F_->add(F_->mul(v, x), c_[i]);
    return v;
}

UPoly UPoly::compose(const UPoly& g) const {
    UPoly r(F_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(F_, c_[i]);
    return r;
}

bool UPoly::pth_root(UPoly& out) const {
    std::uint32_t p = F_ ? F_->p() : 2;
    std::vector<Elem> r;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (i % p != 0) return false;
    }
    if (c_.empty()) {
        out = *this;
        return true;
    }
    r.assign((c_.size() - 1) / p + 1, 0);
    for (std::size_t i = 0; i < c_.size(); i += p) r[i / p] = F_->pth_root(c_[i]);
    out = UPoly(F_, std::move(r));
    return true;
}

UPoly UPoly::inflate(int k) const {
    if (c_.empty()) return *this;
    std::vector<Elem> r((c_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return UPoly(F_, std::move(r));
}

UPoly UPoly::frobenius_coeffs(int j) const {
    std::vector<Elem> r(c_);
    std::uint32_t e = F_->e();
    int jj = ((j % static_cast<int>(e)) + static_cast<int>(e)) % static_cast<int>(e);
    for (auto& x : r)
        for (int k = 0; k < jj; ++k) x = F_->pow(x, F_->p());
    return UPoly(F_, std::move(r));
}

int UPoly::valuation(const UPoly& g) const {
    if (is_zero()) return kInfinity;
    if (g.deg() == 1 && g.coeff(0) == 0) return low_order();
    int v = 0;
    UPoly cur = *this;
    while (true) {
        auto [q, r] = cur.divmod(g);
        if (!r.is_zero()) break;
        cur = q;
        ++v;
    }
    return v;
}

UPoly UPoly::reverse(int n) const {
    std::vector<Elem> r(n + 1, 0);
    for (int i = 0; i <= n && i < static_cast<int>(c_.size()); ++i) r[n - i] = c_[i];
    return UPoly(F_, std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = deg(); i >= 0; --i) {
        Elem a = c_[i];
        if (a == 0) continue;
        std::string cs = F_->to_string(a);
        bool compound = cs.find('+') != std::string::npos;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += compound ? "(" + cs + ")" : cs;
            continue;
        }
        if (a != 1) s += (compound ? "(" + cs + ")" : cs) + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

using Factors = std::vector<std::pair<UPoly, int>>;

Factors squarefree(const UPoly& f) {
    Factors out;
    const Field* F = f.field();
    UPoly one = UPoly::constant(F, 1);
    UPoly c = gcd(f, f.derivative());
    UPoly w = f.divexact(c);
    int i = 1;
    while (!w.is_one()) {
        UPoly y = gcd(w, c);
        UPoly fac = w.divexact(y);
        if (fac.deg() > 0) out.push_back({fac.monic(), i});
        w = y;
        c = c.divexact(y);
        ++i;
    }
    if (c.deg() > 0) {
        UPoly r;
        check(c.pth_root(r), "square-free factorization: remaining part not a p-th power");
        for (auto& [g, j] : squarefree(r.monic())) out.push_back({g, j * static_cast<int>(F->p())});
    }
    return out;
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<UPoly, int>> ddf(UPoly f) {
    std::vector<std::pair<UPoly, int>> out;
    const Field* F = f.field();
    UPoly t = UPoly::var(F);
    UPoly h = t % f;
    int i = 1;
    while (f.deg() >= 2 * i) {
        h = h.powmod(F->q(), f);
        UPoly g = gcd(f, h - t);
        if (g.deg() > 0) {
            out.push_back({g, i});
            f = f.divexact(g);
            h = h % f;
        }
        ++i;
    }
    if (f.deg() > 0) out.push_back({f.monic(), f.deg()});
    return out;
}

void edf(const UPoly& g, int d, std::mt19937& rng, std::vector<UPoly>& out) {
    if (g.deg() == d) {
        out.push_back(g.monic());
        return;
    }
    const Field* F = g.field();
    std::uniform_int_distribution<std::uint32_t> dist(0, F->q() - 1);
    while (true) {
        std::vector<Elem> coeffs(g.deg());
        for (auto& c : coeffs) c = dist(rng);
        UPoly a(F, coeffs);
        if (a.deg() < 1) continue;
        UPoly b(F);
        if (F->p() == 2) {
            // Absolute trace to F_2 of the residue field F_{q^d}.
            int m = static_cast<int>(F->e()) * d;
            UPoly s = a % g, acc = s;
            for (int k = 1; k < m; ++k) {
                s = (s * s) % g;
                acc = acc + s;
            }
            b = acc;
        } else {
            // a^((q^d - 1)/2) = (a^(1+q+...+q^(d-1)))^((q-1)/2).
            UPoly s = a % g, nrm = s;
            for (int k = 1; k < d; ++k) {
                s = s.powmod(F->q(), g);
                nrm = (nrm * s) % g;
            }
            b = nrm.powmod((F->q() - 1) / 2, g) - UPoly::constant(F, 1);
        }
        UPoly h = gcd(g, b);
        if (h.deg() > 0 && h.deg() < g.deg()) {
            edf(h, d, rng, out);
            edf(g.divexact(h), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor(const UPoly& f) {
    check(!f.is_zero(), "factor of zero polynomial");
    std::vector<std::pair<UPoly, int>> out;
    if (f.deg() <= 0) return out;
    std::mt19937 rng(20240917u);
    for (auto& [sq, mult] : squarefree(f.monic())) {
        for (auto& [g, d] : ddf(sq)) {
            std::vector<UPoly> parts;
            edf(g, d, rng, parts);
            for (auto& h : parts) out.push_back({h, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });
    // Merge equal factors that arose from different square-free layers.
    std::vector<std::pair<UPoly, int>> merged;
    for (auto& fm : out) {
        if (!merged.empty() && merged.back().first == fm.first)
            merged.back().second += fm.second;
        else
            merged.push_back(fm);
    }
    return merged;
}

bool is_irreducible(const UPoly& g) {
    if (g.deg() < 1) return false;
    auto fs = factor(g);
    return fs.size() == 1 && fs[0].second == 1;
}

URat::URat(UPoly n, UPoly d, bool radicial) : radicial_(radicial) {
    if (d.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (n.is_zero()) {
        num_ = UPoly(d.field());
        den_ = UPoly::constant(d.field(), 1);
        return;
    }
    UPoly g = gcd(n, d);
    n = n.divexact(g);
    d = d.divexact(g);
    Elem l = d.lc();
    const Field* F = d.field();
    Elem il = F->inv(l);
    num_ = n.scale(il);
    den_ = d.scale(il);
}

URat URat::operator+(const URat& o) const {
    check(radicial_ == o.radicial_, "mixing radicial and plain functions");
    if (den_ == o.den_) return URat(num_ + o.num_, den_, radicial_);
    return URat(num_ * o.den_ + o.num_ * den_, den_ * o.den_, radicial_);
}

URat URat::operator-(const URat& o) const { return *this + (-o); }

URat URat::operator*(const URat& o) const {
    check(radicial_ == o.radicial_, "mixing radicial and plain functions");
    return URat(num_ * o.num_, den_ * o.den_, radicial_);
}

URat URat::operator/(const URat& o) const {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero rational function");
    check(radicial_ == o.radicial_, "mixing radicial and plain functions");
    return URat(num_ * o.den_, den_ * o.num_, radicial_);
}

URat URat::pow(int n) const {
    if (n < 0) return URat(den_, num_, radicial_).pow(-n);
    return URat(num_.pow(n), den_.pow(n), radicial_);
}

int URat::valuation(const UPoly& g) const {
    if (is_zero()) return kInfinity;
    return num_.valuation(g) - den_.valuation(g);
}

int URat::valuation_at_infinity() const {
    if (is_zero()) return kInfinity;
    return den_.deg() - num_.deg();
}

URat URat::to_radicial() const {
    check(!radicial_, "already radicial");
    int p = static_cast<int>(field()->p());
    return URat(num_.inflate(p), den_.inflate(p), true);
}

bool URat::pth_root(URat& out) const {
    UPoly a, b;
    if (!num_.pth_root(a) || !den_.pth_root(b)) return false;
    out = URat(a, b, radicial_);
    return true;
}

std::string URat::to_string(const std::string& var) const {
    std::string n = num_.to_string(var);
    if (den_.is_one()) return n;
    return "(" + n + ")/(" + den_.to_string(var) + ")";
}

}  // namespace wildcc
