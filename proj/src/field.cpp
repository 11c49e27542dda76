#include "wildcc/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "wildcc/errors.hpp"

namespace wildcc {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::PolarLocusOutsideBoundary: return "PolarLocusOutsideBoundary";
        case ErrorKind::NegativeValuation: return "NegativeValuation";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotASquareInRadicial: return "NotASquareInRadicial";
        case ErrorKind::UnsupportedAmbient: return "UnsupportedAmbient";
        case ErrorKind::CenterNotRational: return "CenterNotRational";
        case ErrorKind::NotClean: return "NotClean";
        case ErrorKind::ReductionFailed: return "ReductionFailed";
        case ErrorKind::InternalPole: return "InternalPoleError";
        case ErrorKind::DepthExceeded: return "DepthExceeded";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Error";
}

bool is_input_error(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax:
        case ErrorKind::UnknownVariable:
        case ErrorKind::InvalidInput:
        case ErrorKind::PolarLocusOutsideBoundary:
        case ErrorKind::UnsupportedAmbient:
        case ErrorKind::CenterNotRational:
            return true;
        default:
            return false;
    }
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

const Field* Field::get(std::uint32_t p, std::uint32_t e) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second.get();
    if (!is_prime(p)) fail(ErrorKind::InvalidInput, "characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) fail(ErrorKind::InvalidInput, "field degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    if (q > (1u << 20)) fail(ErrorKind::InvalidInput, "field too large: " + std::to_string(p) + "^" + std::to_string(e));
    auto* f = new Field(p, e);
    registry.emplace(key, std::unique_ptr<Field>(f));
    return f;
}

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
    for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
    negtab_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
        Elem r = 0, pw = 1, x = a;
        for (std::uint32_t j = 0; j < e_; ++j) {
            Elem d = x % p_;
            x /= p_;
            r += ((p_ - d) % p_) * pw;
            pw *= p_;
        }
        negtab_[a] = r;
    }
    exp_.assign(q_ - 1 == 0 ? 1 : q_ - 1, 0);
    log_.assign(q_, 0);
    if (e_ == 1) {
        // Smallest primitive root.
        for (Elem g = 1; g < p_; ++g) {
            std::uint64_t x = 1;
            std::uint32_t ord = 0;
            do {
                x = x * g % p_;
                ++ord;
            } while (x != 1);
            if (ord == p_ - 1) {
                std::uint64_t y = 1;
                for (std::uint32_t k = 0; k < p_ - 1; ++k) {
                    exp_[k] = static_cast<Elem>(y);
                    log_[y] = k;
                    y = y * g % p_;
                }
                break;
            }
        }
        modulus_ = {0, 1};
        return;
    }
    // Search monic degree-e polynomials x^e + c_{e-1} x^{e-1} + ... + c_0 for
    // one where x has multiplicative order q - 1.
    std::vector<std::uint32_t> c(e_);
    for (Elem code = 0; code < q_; ++code) {
        Elem x = code;
        for (std::uint32_t j = 0; j < e_; ++j) {
            c[j] = x % p_;
            x /= p_;
        }
        if (c[0] == 0) continue;
        // Multiply-by-x on coefficient vectors modulo the candidate.
        std::vector<std::uint32_t> cur(e_, 0);
        cur[0] = 1;
        auto encode = [&](const std::vector<std::uint32_t>& v) {
            Elem r = 0, pw = 1;
            for (std::uint32_t j = 0; j < e_; ++j) {
                r += v[j] * pw;
                pw *= p_;
            }
            return r;
        };
        std::vector<std::uint32_t> seen(q_, 0);
        bool ok = true;
        for (std::uint32_t k = 0; k < q_ - 1; ++k) {
            Elem enc = encode(cur);
            if (seen[enc] || (k > 0 && enc == 1)) {
                ok = false;
                break;
            }
            seen[enc] = 1;
            exp_[k] = enc;
            log_[enc] = k;
            std::uint32_t top = cur[e_ - 1];
            for (std::uint32_t j = e_ - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            for (std::uint32_t j = 0; j < e_; ++j) cur[j] = (cur[j] + (p_ - c[j]) * top) % p_;
        }
        if (ok && encode(cur) == 1) {
            modulus_.assign(c.begin(), c.end());
            modulus_.push_back(1);
            return;
        }
    }
    fail(ErrorKind::InvariantViolation, "no primitive polynomial found");
}

Elem Field::add(Elem a, Elem b) const {
    if (e_ == 1) {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    Elem r = 0, pw = 1;
    for (std::uint32_t j = 0; j < e_; ++j) {
        Elem d = (a % p_ + b % p_) % p_;
        a /= p_;
        b /= p_;
        r += d * pw;
        pw *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const { return negtab_[a]; }

Elem Field::inv(Elem a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
    std::uint32_t k = log_[a];
    return exp_[k == 0 ? 0 : q_ - 1 - k];
}

Elem Field::pow(Elem a, std::uint64_t n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t k = (static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1))) % (q_ - 1);
    return exp_[k];
}

Elem Field::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::string Field::to_string(Elem a) const {
    if (e_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::string s;
    for (std::uint32_t j = e_; j-- > 0;) {
        Elem pw = 1;
        for (std::uint32_t k = 0; k < j; ++k) pw *= p_;
        Elem d = (a / pw) % p_;
        if (d == 0) continue;
        if (!s.empty()) s += "+";
        if (j == 0) {
            s += std::to_string(d);
        } else {
            if (d != 1) s += std::to_string(d) + "*";
            s += "z";
            if (j > 1) s += "^" + std::to_string(j);
        }
    }
    return s;
}

Elem Field::embed_gen(const Field* small) const {
    if (small->p() != p_ || e_ % small->e() != 0)
        fail(ErrorKind::InvalidInput, "field F_" + std::to_string(small->q()) + " does not embed in F_" + std::to_string(q_));
    if (small->e() == 1) return 1;
    const auto& m = small->modulus();
    for (Elem r = 0; r < q_; ++r) {
        Elem v = 0;
        for (std::size_t j = m.size(); j-- > 0;) v = add(mul(v, r), from_int(m[j]));
        if (v == 0) return r;
    }
    fail(ErrorKind::InvariantViolation, "no root of the generator polynomial");
}

Elem Field::embed(const Field* small, Elem a) const {
    if (small == this) return a;
    if (small->e() == 1) return from_int(a);
    Elem z = embed_gen(small);
    Elem r = 0, pw = 1;
    std::uint32_t sp = small->p();
    for (std::uint32_t j = 0; j < small->e(); ++j) {
        r = add(r, mul(from_int(a % sp), pw));
        a /= sp;
        pw = mul(pw, z);
    }
    return r;
}

}  // namespace wildcc
