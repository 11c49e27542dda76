#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wildcc {

using Elem = std::uint32_t;

// Finite field F_q, q = p^e. Elements are codes sum c_j p^j standing for
// sum c_j z^j, where z is a root of the first primitive monic irreducible
// polynomial of degree e (ordered by coefficient code). For e = 1 the code
// is the residue itself.
class Field {
public:
    // Fields are interned: equal (p, e) give the same pointer.
    static const Field* get(std::uint32_t p, std::uint32_t e = 1);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem gen() const { return e_ == 1 ? exp_[1 % (q_ - 1)] : p_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t k = log_[a] + log_[b];
        if (k >= q_ - 1) k -= q_ - 1;
        return exp_[k];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t n) const;
    Elem from_int(long long v) const;
    // Inverse Frobenius, a^(q/p).
    Elem pth_root(Elem a) const { return pow(a, q_ / p_); }
    // Discrete log to base of the primitive element exp(1).
    std::uint32_t log(Elem a) const { return log_[a]; }
    Elem exp(std::uint32_t k) const { return exp_[k % (q_ - 1)]; }

    // Coefficients of the defining polynomial of z, low degree first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::string to_string(Elem a) const;

    // Image of small's generator z in this field (smallest root of its
    // modulus); requires small->e() | e().
    Elem embed_gen(const Field* small) const;
    Elem embed(const Field* small, Elem a) const;

private:
    Field(std::uint32_t p, std::uint32_t e);
    std::uint32_t p_, e_, q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> negtab_;
};

bool is_prime(std::uint32_t n);

}  // namespace wildcc
