#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

#include "wildcc/errors.hpp"
#include "wildcc/ratfunc.hpp"

namespace wildcc {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial over Z in the 2s variables x_0..x_{s-1}, y_0..y_{s-1}
// (standard Witt indexing); the key is the exponent vector.
using IntPoly = std::map<std::vector<std::uint16_t>, BigInt>;

// Universal addition polynomials S_0..S_{s-1} obtained from the ghost
// recursion over Z, plus their reductions mod p with the linear part
// x_n + y_n removed.
class WittSumTable {
public:
    struct Term {
        std::vector<std::pair<int, unsigned>> vars;  // variable index, exponent
        unsigned coef;
    };

    static const WittSumTable& get(unsigned p, unsigned s);

    unsigned p() const { return p_; }
    unsigned s() const { return s_; }
    const std::vector<IntPoly>& integral() const { return integral_; }
    const std::vector<Term>& carry(unsigned n) const { return carry_[n]; }

private:
    WittSumTable(unsigned p, unsigned s);
    unsigned p_, s_;
    std::vector<IntPoly> integral_;
    std::vector<std::vector<Term>> carry_;
};

// Ghost component w_n = sum_{k<=n} p^k x_k^{p^{n-k}} of an integer vector in
// standard indexing.
BigInt ghost_component(unsigned p, const std::vector<BigInt>& x, unsigned n);
// S_n evaluated at integer vectors.
BigInt eval_integral(const IntPoly& P, const std::vector<BigInt>& x, const std::vector<BigInt>& y);

namespace detail {

template <class R>
R eval_carry(const WittSumTable& T, unsigned n, const std::vector<R>& xs, const std::vector<R>& ys) {
    const R& proto = xs[0];
    R acc = ring_const(proto, 0);
    unsigned s = T.s();
    std::map<std::pair<int, unsigned>, R> cache;
    auto power = [&](int v, unsigned e) -> const R& {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const R& base = v < static_cast<int>(s) ? xs[v] : ys[v - s];
        return cache.emplace(key, base.pow(e)).first->second;
    };
    for (const auto& t : T.carry(n)) {
        R m = ring_const(proto, t.coef);
        bool zero = false;
        for (auto [v, e] : t.vars) {
            const R& b = v < static_cast<int>(s) ? xs[v] : ys[v - s];
            if (b.is_zero()) {
                zero = true;
                break;
            }
            m = m * power(v, e);
        }
        if (!zero) acc = acc + m;
    }
    return acc;
}

}  // namespace detail

// Witt vector of length s over a ring of functions R. Components are kept
// indexed by weight: a[i] carries weight p^i, so a[s-1] is the
// Teichmuller slot and a[0] the Artin-Schreier slot.
template <class R>
class Witt {
public:
    Witt() = default;
    Witt(unsigned p, std::vector<R> a) : p_(p), a_(std::move(a)) {}
    static Witt zero(unsigned p, unsigned s, const R& proto) {
        return Witt(p, std::vector<R>(s, ring_const(proto, 0)));
    }

    unsigned p() const { return p_; }
    unsigned s() const { return static_cast<unsigned>(a_.size()); }
    const R& operator[](unsigned i) const { return a_[i]; }
    R& operator[](unsigned i) { return a_[i]; }
    const std::vector<R>& comps() const { return a_; }
    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool operator==(const Witt& o) const { return a_ == o.a_; }
    bool operator!=(const Witt& o) const { return !(*this == o); }

    std::vector<R> standard() const { return std::vector<R>(a_.rbegin(), a_.rend()); }
    static Witt from_standard(unsigned p, const std::vector<R>& x) { return Witt(p, std::vector<R>(x.rbegin(), x.rend())); }

    Witt operator+(const Witt& o) const {
        const auto& T = WittSumTable::get(p_, s());
        auto x = standard(), y = o.standard();
        std::vector<R> z(s());
        for (unsigned n = 0; n < s(); ++n) z[n] = x[n] + y[n] + detail::eval_carry(T, n, x, y);
        return from_standard(p_, z);
    }
    Witt operator-() const {
        const auto& T = WittSumTable::get(p_, s());
        auto x = standard();
        std::vector<R> b(s(), ring_const(x[0], 0));
        for (unsigned n = 0; n < s(); ++n) b[n] = -x[n] - detail::eval_carry(T, n, x, b);
        return from_standard(p_, b);
    }
    Witt operator-(const Witt& o) const { return *this + (-o); }

    Witt frobenius() const {
        std::vector<R> r;
        for (auto& x : a_) r.push_back(x.pow(p_));
        return Witt(p_, r);
    }
    // Standard V followed by restriction to length s.
    Witt verschiebung() const {
        auto x = standard();
        std::vector<R> r(s(), ring_const(a_[0], 0));
        for (unsigned k = 1; k < s(); ++k) r[k] = x[k - 1];
        return from_standard(p_, r);
    }
    Witt times(long long n) const {
        Witt r = zero(p_, s(), a_[0]), b = *this;
        bool neg = n < 0;
        if (neg) n = -n;
        while (n) {
            if (n & 1) r = r + b;
            n >>= 1;
            if (n) b = b + b;
        }
        return neg ? -r : r;
    }

private:
    unsigned p_ = 2;
    std::vector<R> a_;
};

using WittVec = Witt<RatFunc>;
using UWittVec = Witt<URat>;

// Teichmuller-slot or Artin-Schreier-slot vector with a single component.
WittVec witt_single(unsigned p, unsigned s, unsigned i, const RatFunc& f);

// min_i p^i ord_{axis}(a_i); kInfinity for zero.
int witt_order(const WittVec& a, int axis);
bool in_fil(const WittVec& a, int n, int axis);
bool in_fil_prime(const WittVec& a, int m, int axis);
// -sum_i a_i^{p^i - 1} d a_i as coefficients of (dx1, dx2).
std::pair<RatFunc, RatFunc> fsd(const WittVec& a);

int witt_order(const UWittVec& a, const UPoly& place);

}  // namespace wildcc
