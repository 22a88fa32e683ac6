#pragma once

#include <compare>
#include <map>

#include "arcforge/field.hpp"

namespace arcforge {

// Partition of an integer: parts sorted descending. Doubles as the degree
// pattern of a squarefree factorization and as a permutation cycle type --
// the two are the same shape.
struct Partition {
    std::vector<unsigned> parts;

    Partition() = default;
    explicit Partition(std::vector<unsigned> p);
    static Partition from_counts(const std::map<unsigned, unsigned>& deg_to_count);

    unsigned sum() const;
    std::map<unsigned, unsigned> counts() const;
    bool uniform() const;  // all parts equal
    std::string str() const;

    auto operator<=>(const Partition&) const = default;
};

using FactorizationPattern = Partition;
using CycleType = Partition;

// Univariate polynomial over a GF context; coefficients lowest degree first,
// trimmed (zero polynomial = empty vector).
class Poly {
public:
    Poly() = default;
    Poly(GFPtr F, std::vector<u64> coeffs);
    static Poly zero(GFPtr F) { return Poly(std::move(F), {}); }
    static Poly one(GFPtr F) { return Poly(std::move(F), {1}); }
    static Poly x(GFPtr F) { return Poly(std::move(F), {0, 1}); }
    static Poly constant(GFPtr F, u64 c) { return Poly(std::move(F), {c}); }

    const GFPtr& field() const { return F_; }
    const std::vector<u64>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    u64 lead() const;
    u64 coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    u64 eval(u64 x) const;
    std::string str() const;  // "c0 + c1*X + ..." with field header

    bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
    GFPtr F_;
    std::vector<u64> c_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, u64 c);
Poly monic(const Poly& a);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic
Poly derivative(const Poly& a);
Poly shift(const Poly& a, u64 t);        // a(X + t)
Poly mod_pow(const Poly& base, const bigint& e, const Poly& f);

// true iff gcd(f, f') is constant; false when f' == 0.
bool is_squarefree(const Poly& f);

struct RootScan {
    std::vector<u64> roots;          // distinct roots in the field, ascending
    std::vector<bool> multiple;      // multiplicity >= 2 flag per root
    size_t count() const { return roots.size(); }
};

// Distinct roots in the coefficient field. Fields within the enumeration
// bound are scanned; larger fields (deg <= 64) go through
// gcd(f, X^Q - X) followed by equal-degree splitting with a deterministic
// seeded sample of splitting elements.
RootScan roots_in_field(const Poly& f);

// Distinct-degree factorization pattern of a squarefree monic polynomial,
// computed by iterated gcd(f, X^{Q^d} - X); no full factorization.
FactorizationPattern ddf_pattern(const Poly& f);

// --- specialized families ---
// Every constructor validates that q is a power of the field characteristic
// and that the required base subfield sits inside F.

// X^{q+1} + m^q X^q + m X - ((m a - b)^q + m a - b); needs GF(q^2) <= F.
Poly hermitian_line_poly(const GFPtr& F, u64 q, u64 a, u64 b, u64 m);

// T^{q+1} + (T a - b)^q + T a - b; squarefree iff b^q + b + a^{q+1} != 0.
Poly hermitian_tangent_poly(const GFPtr& F, u64 q, u64 a, u64 b);

// T^q + (a + m^q) T^{q-1} + (m + a^q); requires (a,b) on the curve.
Poly hermitian_onpoint_poly(const GFPtr& F, u64 q, u64 a, u64 b, u64 m);

// 2m T^{q+1} + (2m-1) T^q + (2m-1) T + m(2-a) + b - 2; q odd, m not in {0, 1/2}.
Poly bks_line_poly(const GFPtr& F, u64 q, u64 a, u64 b, u64 m);

// T^{q+1} + m T^q + m T - (b-2)(m-1) - a/2 + 1; q odd. Same splitting
// behavior as the non-monic form under m -> (2m-1)/(2m).
Poly bks_line_poly_monic(const GFPtr& F, u64 q, u64 a, u64 b, u64 m);

// T^q + (m + t) T^{q-1} + m + t^q; q odd.
Poly bks_onpoint_poly(const GFPtr& F, u64 q, u64 t, u64 m);

enum class CalibrationFamily { cyclic_i, additive_ii };

// I: X^{q+1} + t^{q+1} + 1.  II: X^q - X - w t^{q+1} with w^{q-1} = -1.
Poly calibration_poly(const GFPtr& F, u64 q, CalibrationFamily fam, u64 t, u64 w = 0);

// --- three-root law ---

enum class BluherFamily { hermitian, bks };

struct BluherVerdict {
    bool pass = false;
    u64 root_count = 0;
    bool squarefree = false;
    Poly witness;  // the offending specialization when pass == false
};

// Checks the specialization at (a,b,m): squarefree with distinct-root count
// in {0,1,2,q+1}. Degenerate parameters (the family's nondegeneracy
// condition fails, or BKS with m in {0,1/2}) throw.
BluherVerdict bluher_check(const GFPtr& F, u64 q, BluherFamily fam, u64 a, u64 b, u64 m);

// Nondegeneracy condition of the three-root law for the given family.
bool bluher_admissible(const GFPtr& F, u64 q, BluherFamily fam, u64 a, u64 b, u64 m);

}  // namespace arcforge
