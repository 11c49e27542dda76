#include "wildcc/witt.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace wildcc {

namespace {

using Exps = std::vector<std::uint16_t>;

constexpr std::size_t kMaxTerms = 400000;

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            BigInt& slot = r[e];
            slot += ca * cb;
            if (slot == 0) r.erase(e);
        }
    if (r.size() > kMaxTerms) fail(ErrorKind::InvalidInput, "Witt addition polynomials too large for this (p, s)");
    return r;
}

IntPoly pow(const IntPoly& a, unsigned n, std::size_t nvars) {
    IntPoly r{{Exps(nvars, 0), BigInt(1)}}, b = a;
    while (n) {
        if (n & 1) r = mul(r, b);
        n >>= 1;
        if (n) b = mul(b, b);
    }
    return r;
}

void add_into(IntPoly& r, const IntPoly& a, const BigInt& scale) {
    for (auto& [e, c] : a) {
        BigInt& slot = r[e];
        slot += c * scale;
        if (slot == 0) r.erase(e);
    }
}

}  // namespace

const WittSumTable& WittSumTable::get(unsigned p, unsigned s) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<WittSumTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, s);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto* t = new WittSumTable(p, s);
    cache.emplace(key, std::unique_ptr<WittSumTable>(t));
    return *t;
}

WittSumTable::WittSumTable(unsigned p, unsigned s) : p_(p), s_(s) {
    if (s == 0) fail(ErrorKind::InvalidInput, "Witt length must be positive");
    std::size_t nv = 2 * s;
    auto var = [&](std::size_t v, unsigned e) {
        Exps x(nv, 0);
        x[v] = static_cast<std::uint16_t>(e);
        return x;
    };
    BigInt P(p);
    for (unsigned n = 0; n < s; ++n) {
        // p^n S_n = w_n(x) + w_n(y) - sum_{k<n} p^k S_k^{p^{n-k}}
        IntPoly acc;
        BigInt pk(1);
        for (unsigned k = 0; k <= n; ++k) {
            unsigned e = 1;
            for (unsigned j = k; j < n; ++j) e *= p;
            add_into(acc, IntPoly{{var(k, e), BigInt(1)}}, pk);
            add_into(acc, IntPoly{{var(s + k, e), BigInt(1)}}, pk);
            pk *= P;
        }
        pk = 1;
        for (unsigned k = 0; k < n; ++k) {
            unsigned e = 1;
            for (unsigned j = k; j < n; ++j) e *= p;
            add_into(acc, pow(integral_[k], e, nv), -pk);
            pk *= P;
        }
        BigInt pn = pk;
        IntPoly Sn;
        for (auto& [ex, c] : acc) {
            check(c % pn == 0, "ghost recursion produced a non-integral coefficient");
            Sn[ex] = c / pn;
        }
        integral_.push_back(Sn);
        std::vector<Term> carry;
        for (auto& [ex, c] : Sn) {
            if (ex == var(n, 1) || ex == var(s + n, 1)) {
                check(c == 1, "linear part of the Witt sum polynomial");
                continue;
            }
            BigInt m = c % P;
            if (m < 0) m += P;
            if (m == 0) continue;
            Term t;
            t.coef = static_cast<unsigned>(m);
            for (std::size_t v = 0; v < nv; ++v)
                if (ex[v]) t.vars.push_back({static_cast<int>(v), ex[v]});
            carry.push_back(std::move(t));
        }
        carry_.push_back(std::move(carry));
    }
}

BigInt ghost_component(unsigned p, const std::vector<BigInt>& x, unsigned n) {
    BigInt w = 0, pk = 1;
    for (unsigned k = 0; k <= n; ++k) {
        unsigned e = 1;
        for (unsigned j = k; j < n; ++j) e *= p;
        w += pk * boost::multiprecision::pow(x[k], e);
        pk *= p;
    }
    return w;
}

BigInt eval_integral(const IntPoly& P, const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    BigInt acc = 0;
    std::size_t s = x.size();
    for (auto& [ex, c] : P) {
        BigInt m = c;
        for (std::size_t v = 0; v < ex.size(); ++v)
            if (ex[v]) m *= boost::multiprecision::pow(v < s ? x[v] : y[v - s], ex[v]);
        acc += m;
    }
    return acc;
}

WittVec witt_single(unsigned p, unsigned s, unsigned i, const RatFunc& f) {
    WittVec a = WittVec::zero(p, s, f);
    a[i] = f;
    return a;
}

int witt_order(const WittVec& a, int axis) {
    long long best = kInfinity;
    long long w = 1;
    for (unsigned i = 0; i < a.s(); ++i) {
        if (!a[i].is_zero()) best = std::min(best, w * a[i].valuation(axis));
        w *= a.p();
    }
    return static_cast<int>(best);
}

int witt_order(const UWittVec& a, const UPoly& place) {
    long long best = kInfinity;
    long long w = 1;
    for (unsigned i = 0; i < a.s(); ++i) {
        if (!a[i].is_zero()) best = std::min(best, w * a[i].valuation(place));
        w *= a.p();
    }
    return static_cast<int>(best);
}

bool in_fil(const WittVec& a, int n, int axis) { return witt_order(a, axis) >= -n; }

bool in_fil_prime(const WittVec& a, int m, int axis) {
    if (m < 1) fail(ErrorKind::InvalidInput, "fil' index must be positive");
    if (!in_fil(a, m, axis)) return false;
    unsigned sp = 0;
    for (int t = m; t % static_cast<int>(a.p()) == 0; t /= static_cast<int>(a.p())) ++sp;
    sp = std::min(sp, a.s());
    long long w = 1;
    for (unsigned i = 0; i < a.s(); ++i) {
        if (i >= sp && !a[i].is_zero() && w * a[i].valuation(axis) < -(m - 1)) return false;
        w *= a.p();
    }
    return true;
}

std::pair<RatFunc, RatFunc> fsd(const WittVec& a) {
    const Field* F = a[0].field();
    RatFunc c1(F), c2(F);
    long long e = 1;
    for (unsigned i = 0; i < a.s(); ++i) {
        const RatFunc& x = a[i];
        if (!x.is_zero()) {
            RatFunc w = x.pow(e - 1);
            c1 = c1 - w * x.partial(0);
            c2 = c2 - w * x.partial(1);
        }
        e *= a.p();
    }
    return {c1, c2};
}

}  // namespace wildcc
