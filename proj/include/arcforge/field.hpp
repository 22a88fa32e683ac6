#pragma once

#include <memory>

#include "arcforge/common.hpp"

namespace arcforge {

class GF;
using GFPtr = std::shared_ptr<const GF>;

// GF(p^m) in the polynomial basis over the prime field. An element is
// addressed by its canonical code
//
//     code(c_0, ..., c_{m-1}) = sum_i c_i * p^i
//
// for its coefficient vector; equality of codes is equality of elements and
// the codes 0..Q-1 double as the deterministic enumeration order.
//
// A context is immutable after construction; every operation is a pure
// function and safe to call from any number of threads.
//
// Fields of order <= 2^21 carry exp/log/Zech tables built at construction;
// larger fields fall back to digit-vector arithmetic.
class GF {
public:
    // Builds GF(p^m). When no modulus is given, picks the monic irreducible
    // of degree m over GF(p) with the smallest candidate code
    // sum_{i<m} c_i p^i, i.e. ordered from the constant term upward.
    // A supplied modulus (c_0,...,c_{m-1},1) is verified irreducible.
    static GFPtr make(u64 p, unsigned m, std::vector<u64> modulus = {});

    u64 p() const { return p_; }
    unsigned m() const { return m_; }
    u64 order() const { return Q_; }
    const std::vector<u64>& modulus() const { return mod_; }

    std::string descriptor() const;       // GF(p^m; modulus=c0,c1,...,1)
    std::string elem_str(u64 x) const;    // polynomial-basis notation in g

    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    u64 neg(u64 a) const;
    u64 mul(u64 a, u64 b) const;
    u64 inv(u64 a) const;                 // throws on zero
    u64 pow(u64 a, u64 e) const;
    u64 pow(u64 a, const bigint& e) const;

    // xid -> x^s for s = p^j; throws when s is not a power of p.
    u64 frobenius(u64 x, u64 s) const;

    // s = p^j with j | m; true iff x^s = x.
    bool in_subfield(u64 x, u64 s) const;

    // Relative trace/norm onto the subfield of order s.
    u64 rel_trace(u64 x, u64 s) const;
    u64 rel_norm(u64 x, u64 s) const;

    u64 from_int(u64 n) const { return n % p_; }
    u64 two() const { return from_int(2); }
    std::vector<u64> coeffs(u64 x) const;
    u64 from_coeffs(const std::vector<u64>& c) const;

    // Degree j of the subfield of order s = p^j; throws unless j >= 1 and
    // j | m.
    unsigned subfield_degree(u64 s) const;
    bool is_power_of_char(u64 s) const;

    // All codes of the order-s subfield, ascending.
    std::vector<u64> subfield_elements(u64 s) const;

    // The full element stream 0..Q-1 in canonical order; bound-checked.
    std::vector<u64> elements() const;

    // Structural equality: same prime, degree and modulus.
    static bool same(const GF& A, const GF& B);

    void require_enumerable() const;  // throws when Q exceeds the bound

    GF(const GF&) = delete;
    GF& operator=(const GF&) = delete;

private:
    GF() = default;

    u64 p_ = 0, Q_ = 0;
    unsigned m_ = 0;
    std::vector<u64> mod_;

    bool tables_ = false;
    std::vector<u32> log_, exp_, zech_;  // zech sentinel = UINT32_MAX
    u32 lneg_ = 0;                       // log(-1), tables only

    u64 add_digits(u64 a, u64 b) const;
    u64 neg_digits(u64 a) const;
    u64 mul_digits(u64 a, u64 b) const;
    u64 pow_digits(u64 a, u64 e) const;
    u64 inv_digits(u64 a) const;
    void build_tables();
};

}  // namespace arcforge
