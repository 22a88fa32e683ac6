#include "arcforge/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace arcforge {

namespace {

void require_same(const GFPtr& A, const GFPtr& B) {
    if (!A || !B || !GF::same(*A, *B))
        throw std::invalid_argument("poly: field context mismatch");
}

// q must be a nontrivial power of the characteristic with GF(q^s0) <= F.
unsigned validate_q(const GFPtr& F, u64 q, unsigned s0) {
    if (q < 2 || !F->is_power_of_char(q))
        throw std::invalid_argument("poly: q is not a power of the characteristic");
    unsigned j = 0;
    u64 t = q;
    while (t > 1) {
        t /= F->p();
        ++j;
    }
    if (F->m() % (j * s0) != 0)
        throw std::invalid_argument("poly: field does not contain the required subfield");
    return j;
}

}  // namespace

Partition::Partition(std::vector<unsigned> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
}

Partition Partition::from_counts(const std::map<unsigned, unsigned>& deg_to_count) {
    std::vector<unsigned> parts;
    for (const auto& [d, c] : deg_to_count)
        for (unsigned i = 0; i < c; ++i) parts.push_back(d);
    return Partition(std::move(parts));
}

unsigned Partition::sum() const {
    unsigned s = 0;
    for (unsigned x : parts) s += x;
    return s;
}

std::map<unsigned, unsigned> Partition::counts() const {
    std::map<unsigned, unsigned> out;
    for (unsigned x : parts) ++out[x];
    return out;
}

bool Partition::uniform() const {
    for (unsigned x : parts)
        if (x != parts.front()) return false;
    return true;
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "+";
        s += std::to_string(parts[i]);
    }
    return s.empty() ? "-" : s;
}

Poly::Poly(GFPtr F, std::vector<u64> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
    if (!F_) throw std::invalid_argument("poly: null field");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (u64 v : c_)
        if (v >= F_->order()) throw std::invalid_argument("poly: coefficient out of range");
}

u64 Poly::lead() const {
    if (c_.empty()) throw std::domain_error("poly: zero polynomial has no leading coefficient");
    return c_.back();
}

u64 Poly::eval(u64 x) const {
    u64 acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
    return acc;
}

std::string Poly::str() const {
    std::ostringstream os;
    os << F_->descriptor() << "[X]: ";
    if (c_.empty()) {
        os << "0";
        return os.str();
    }
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << "(" << F_->elem_str(c_[i]) << ")";
        if (i == 1) os << "*X";
        if (i > 1) os << "*X^" << i;
    }
    return os.str();
}

Poly add(const Poly& a, const Poly& b) {
    require_same(a.field(), b.field());
    const auto& F = *a.field();
    std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(a.field(), std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
    require_same(a.field(), b.field());
    const auto& F = *a.field();
    std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field(), std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
    require_same(a.field(), b.field());
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    const auto& F = *a.field();
    std::vector<u64> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        const u64 ai = a.coeff(i);
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeff(j)));
    }
    return Poly(a.field(), std::move(c));
}

Poly scale(const Poly& a, u64 s) {
    const auto& F = *a.field();
    std::vector<u64> c = a.coeffs();
    for (u64& v : c) v = F.mul(v, s);
    return Poly(a.field(), std::move(c));
}

Poly monic(const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(a, a.field()->inv(a.lead()));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    require_same(a.field(), b.field());
    if (b.is_zero()) throw std::domain_error("poly: division by zero polynomial");
    const auto& F = *a.field();
    std::vector<u64> rem = a.coeffs();
    if (a.degree() < b.degree()) return {Poly::zero(a.field()), a};
    const size_t bs = b.coeffs().size();
    std::vector<u64> quot(rem.size() - bs + 1, 0);
    const u64 linv = F.inv(b.lead());
    for (size_t i = rem.size(); i-- >= bs;) {
        const u64 c = F.mul(rem[i], linv);
        if (c != 0) {
            const size_t sh = i - (bs - 1);
            quot[sh] = c;
            for (size_t j = 0; j < bs; ++j)
                rem[sh + j] = F.sub(rem[sh + j], F.mul(c, b.coeff(j)));
        }
    }
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    require_same(a.field(), b.field());
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("poly: gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Poly derivative(const Poly& a) {
    if (a.degree() <= 0) return Poly::zero(a.field());
    const auto& F = *a.field();
    std::vector<u64> c(a.coeffs().size() - 1, 0);
    for (size_t i = 1; i < a.coeffs().size(); ++i) {
        u64 k = F.from_int(i % F.p());
        c[i - 1] = F.mul(a.coeff(i), k);
    }
    return Poly(a.field(), std::move(c));
}

Poly shift(const Poly& a, u64 t) {
    // Horner: a(X+t) = (...((a_n)(X+t) + a_{n-1})(X+t) + ...)
    const auto& F = *a.field();
    if (a.is_zero()) return a;
    std::vector<u64> acc{a.lead()};
    for (size_t i = a.coeffs().size() - 1; i-- > 0;) {
        // acc = acc*(X+t) + a_i
        std::vector<u64> next(acc.size() + 1, 0);
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = F.add(next[j + 1], acc[j]);
            next[j] = F.add(next[j], F.mul(acc[j], t));
        }
        next[0] = F.add(next[0], a.coeff(i));
        acc = std::move(next);
    }
    return Poly(a.field(), std::move(acc));
}

Poly mod_pow(const Poly& base, const bigint& e, const Poly& f) {
    require_same(base.field(), f.field());
    if (f.degree() < 1) throw std::invalid_argument("poly: mod_pow modulus must have degree >= 1");
    if (e < 0) throw std::invalid_argument("poly: negative exponent");
    Poly r = Poly::one(base.field());
    Poly b = divrem(base, f).second;
    if (e == 0) return r;
    const unsigned top = boost::multiprecision::msb(e);
    for (unsigned i = 0; i <= top; ++i) {
        if (boost::multiprecision::bit_test(e, i)) r = divrem(mul(r, b), f).second;
        if (i < top) b = divrem(mul(b, b), f).second;
    }
    return r;
}

bool is_squarefree(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("poly: squarefree test needs degree >= 1");
    Poly d = derivative(f);
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

namespace {

// splits a monic squarefree product of linear factors into roots
void split_linear(const Poly& g, std::mt19937_64& rng, std::vector<u64>& out, int depth) {
    const auto& F = *g.field();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(F.mul(F.neg(g.coeff(0)), F.inv(g.coeff(1))));
        return;
    }
    if (depth > 512) throw std::runtime_error("poly: root splitting did not converge");
    const u64 Q = F.order();
    Poly h = Poly::zero(g.field());
    if (F.p() == 2) {
        // trace map of delta*X splits the 2-group
        const u64 delta = rng() % Q;
        Poly t = Poly(g.field(), {0, delta});
        Poly acc = t;
        for (unsigned i = 1; i < F.m(); ++i) {
            t = divrem(mul(t, t), g).second;
            acc = add(acc, t);
        }
        h = acc;
    } else {
        const u64 delta = rng() % Q;
        Poly xs = Poly(g.field(), {delta, 1});
        h = sub(mod_pow(xs, bigint((Q - 1) / 2), g), Poly::one(g.field()));
    }
    Poly s = h.is_zero() ? g : gcd(h, g);
    if (s.degree() > 0 && s.degree() < g.degree()) {
        split_linear(s, rng, out, depth + 1);
        split_linear(divrem(g, s).first, rng, out, depth + 1);
    } else {
        split_linear(g, rng, out, depth + 1);
    }
}

}  // namespace

RootScan roots_in_field(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("poly: root scan of the zero polynomial");
    const auto& F = *f.field();
    const u64 Q = F.order();
    RootScan out;
    Poly d = derivative(f);
    if (Q <= max_enumeration()) {
        for (u64 x = 0; x < Q; ++x) {
            if (f.eval(x) == 0) {
                out.roots.push_back(x);
                out.multiple.push_back(d.is_zero() || d.eval(x) == 0);
            }
        }
        return out;
    }
    if (f.degree() > 64)
        throw std::runtime_error("poly: field exceeds the enumeration bound and degree > 64");
    // g = gcd(f, X^Q - X) collects exactly the distinct rational roots
    Poly xq = mod_pow(Poly::x(f.field()), bigint(Q), f);
    Poly g = gcd(sub(xq, Poly::x(f.field())), f);
    std::mt19937_64 rng(0x5eedf00dULL);  // deterministic sample
    std::vector<u64> roots;
    split_linear(g, rng, roots, 0);
    std::sort(roots.begin(), roots.end());
    out.roots = std::move(roots);
    for (u64 r : out.roots) out.multiple.push_back(d.is_zero() || d.eval(r) == 0);
    return out;
}

FactorizationPattern ddf_pattern(const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("poly: ddf needs degree >= 1");
    if (!f.is_monic()) throw std::invalid_argument("poly: ddf needs a monic polynomial");
    if (!is_squarefree(f)) throw std::invalid_argument("poly: ddf needs a squarefree polynomial");
    const u64 Q = f.field()->order();
    std::map<unsigned, unsigned> counts;
    Poly rem = f;
    Poly h = Poly::x(f.field());
    unsigned d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (2 * d > static_cast<unsigned>(rem.degree())) {
            counts[rem.degree()] += 1;
            break;
        }
        h = mod_pow(h, bigint(Q), rem);  // X^{Q^d} mod rem
        Poly g = gcd(sub(h, Poly::x(f.field())), rem);
        if (g.degree() > 0) {
            counts[d] += g.degree() / d;
            rem = divrem(rem, g).first;
            h = divrem(h, rem).second;
        }
    }
    return FactorizationPattern::from_counts(counts);
}

Poly hermitian_line_poly(const GFPtr& F, u64 q, u64 a, u64 b, u64 m) {
    validate_q(F, q, 2);
    std::vector<u64> c(q + 2, 0);
    c[q + 1] = 1;
    c[q] = F->pow(m, q);
    c[1] = m;
    const u64 mab = F->sub(F->mul(m, a), b);
    c[0] = F->neg(F->add(F->pow(mab, q), mab));
    return Poly(F, std::move(c));
}

Poly hermitian_tangent_poly(const GFPtr& F, u64 q, u64 a, u64 b) {
    validate_q(F, q, 2);
    std::vector<u64> c(q + 2, 0);
    c[q + 1] = 1;
    c[q] = F->pow(a, q);
    c[1] = a;
    c[0] = F->neg(F->add(F->pow(b, q), b));
    return Poly(F, std::move(c));
}

Poly hermitian_onpoint_poly(const GFPtr& F, u64 q, u64 a, u64 b, u64 m) {
    validate_q(F, q, 2);
    if (F->add(F->add(F->pow(b, q), b), F->pow(a, q + 1)) != 0)
        throw std::invalid_argument("poly: (a,b) is not on the Hermitian curve");
    std::vector<u64> c(q + 1, 0);
    c[q] = 1;
    c[q - 1] = F->add(a, F->pow(m, q));
    c[0] = F->add(c[0], F->add(m, F->pow(a, q)));
    return Poly(F, std::move(c));
}

namespace {

void validate_bks(const GFPtr& F, u64 q) {
    if (F->p() == 2) throw std::invalid_argument("poly: BKS families need odd q");
    validate_q(F, q, 1);
}

}  // namespace

Poly bks_line_poly(const GFPtr& F, u64 q, u64 a, u64 b, u64 m) {
    validate_bks(F, q);
    const u64 half = F->inv(F->two());
    if (m == 0 || m == half)
        throw std::invalid_argument("poly: BKS slope m in {0, 1/2} excluded");
    const u64 two = F->two();
    const u64 twom = F->mul(two, m);
    const u64 twom1 = F->sub(twom, 1);
    std::vector<u64> c(q + 2, 0);
    c[q + 1] = twom;
    c[q] = twom1;
    c[1] = twom1;
    c[0] = F->add(F->mul(m, F->sub(two, a)), F->sub(b, two));
    return Poly(F, std::move(c));
}

Poly bks_line_poly_monic(const GFPtr& F, u64 q, u64 a, u64 b, u64 m) {
    validate_bks(F, q);
    std::vector<u64> c(q + 2, 0);
    c[q + 1] = 1;
    c[q] = m;
    c[1] = m;
    const u64 half = F->inv(F->two());
    u64 k = F->neg(F->mul(F->sub(b, F->two()), F->sub(m, 1)));
    k = F->sub(k, F->mul(a, half));
    c[0] = F->add(k, 1);
    return Poly(F, std::move(c));
}

Poly bks_onpoint_poly(const GFPtr& F, u64 q, u64 t, u64 m) {
    validate_bks(F, q);
    std::vector<u64> c(q + 1, 0);
    c[q] = 1;
    c[q - 1] = F->add(m, t);
    c[0] = F->add(c[0], F->add(m, F->pow(t, q)));
    return Poly(F, std::move(c));
}

Poly calibration_poly(const GFPtr& F, u64 q, CalibrationFamily fam, u64 t, u64 w) {
    validate_q(F, q, 1);
    if (fam == CalibrationFamily::cyclic_i) {
        std::vector<u64> c(q + 2, 0);
        c[q + 1] = 1;
        c[0] = F->add(F->pow(t, q + 1), 1);
        return Poly(F, std::move(c));
    }
    if (F->pow(w, q - 1) != F->neg(1))
        throw std::invalid_argument("poly: calibration II needs w^(q-1) = -1");
    std::vector<u64> c(q + 1, 0);
    c[q] = 1;
    c[1] = F->neg(1);
    c[0] = F->neg(F->mul(w, F->pow(t, q + 1)));
    return Poly(F, std::move(c));
}

bool bluher_admissible(const GFPtr& F, u64 q, BluherFamily fam, u64 a, u64 b, u64 m) {
    if (fam == BluherFamily::hermitian) {
        validate_q(F, q, 2);
        const u64 mab = F->sub(F->mul(m, a), b);
        return F->add(F->pow(m, q + 1), F->add(F->pow(mab, q), mab)) != 0;
    }
    validate_bks(F, q);
    const u64 half = F->inv(F->two());
    if (m == 0 || m == half) return false;
    const u64 two = F->two();
    const u64 disc = F->add(
        F->sub(F->mul(F->mul(two, a), F->mul(m, m)), F->mul(F->mul(two, m), b)), 1);
    return disc != 0;
}

BluherVerdict bluher_check(const GFPtr& F, u64 q, BluherFamily fam, u64 a, u64 b, u64 m) {
    if (!bluher_admissible(F, q, fam, a, b, m))
        throw std::invalid_argument("poly: degenerate parameters for the three-root law");
    Poly f = fam == BluherFamily::hermitian ? hermitian_line_poly(F, q, a, b, m)
                                            : bks_line_poly(F, q, a, b, m);
    BluherVerdict v;
    v.squarefree = is_squarefree(f);
    v.root_count = roots_in_field(f).count();
    v.pass = v.squarefree &&
             (v.root_count == 0 || v.root_count == 1 || v.root_count == 2 || v.root_count == q + 1);
    if (!v.pass) v.witness = f;
    return v;
}

}  // namespace arcforge
