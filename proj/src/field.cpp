#include "arcforge/field.hpp"

#include <algorithm>
#include <sstream>

namespace arcforge {

namespace {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// --- dense polynomials over Z_p (lowest coefficient first, trimmed) ---

using ZpPoly = std::vector<u64>;

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 zp_mod_inv(u64 a, u64 p) {
    // p prime, a != 0
    u64 r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = (unsigned __int128)r * b % p;
        b = (unsigned __int128)b * b % p;
        e >>= 1;
    }
    return r;
}

ZpPoly zp_rem(ZpPoly a, const ZpPoly& f, u64 p) {
    zp_trim(a);
    const u64 linv = zp_mod_inv(f.back(), p);
    while (a.size() >= f.size()) {
        const u64 c = (unsigned __int128)a.back() * linv % p;
        const size_t sh = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i) {
            u64 t = (unsigned __int128)c * f[i] % p;
            a[sh + i] = (a[sh + i] + p - t) % p;
        }
        zp_trim(a);
    }
    return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + (unsigned __int128)a[i] * b[j]) % p;
        }
    }
    return zp_rem(std::move(prod), f, p);
}

ZpPoly zp_powmod(ZpPoly base, u64 e, const ZpPoly& f, u64 p) {
    ZpPoly r{1};
    while (e) {
        if (e & 1) r = zp_mulmod(r, base, f, p);
        base = zp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, u64 p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's exact test: f (monic, degree m >= 1) is irreducible over GF(p)
// iff X^{p^m} = X mod f and gcd(X^{p^{m/l}} - X, f) = 1 for prime l | m.
bool zp_irreducible(const ZpPoly& f, u64 p) {
    const size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    const auto prims = prime_factors(m);
    ZpPoly h{0, 1};  // X
    std::vector<size_t> stops;
    for (u64 l : prims) stops.push_back(m / l);
    for (size_t i = 1; i <= m; ++i) {
        h = zp_powmod(std::move(h), p, f, p);  // h = X^{p^i} mod f
        if (std::find(stops.begin(), stops.end(), i) != stops.end()) {
            ZpPoly d = h;
            if (d.size() < 2) d.resize(2, 0);
            d[1] = (d[1] + p - 1) % p;  // h - X
            zp_trim(d);
            ZpPoly g = zp_gcd(d, f, p);
            if (g.size() != 1) return false;
        }
    }
    // h == X?
    ZpPoly x{0, 1};
    return h == x;
}

constexpr u64 kTableLimit = 1ull << 21;
constexpr u32 kZechZero = 0xffffffffu;

}  // namespace

GFPtr GF::make(u64 p, unsigned m, std::vector<u64> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("GF: p must be prime");
    if (m < 1 || m > 62) throw std::invalid_argument("GF: degree out of range");
    u64 Q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (Q > (u64(1) << 62) / p) throw std::invalid_argument("GF: order overflow");
        Q *= p;
    }
    if (modulus.empty()) {
        // smallest candidate code first; expected O(m) candidates scanned
        for (u64 t = 0;; ++t) {
            if (t >= Q) throw std::logic_error("GF: no irreducible found");
            ZpPoly cand(m + 1, 0);
            u64 v = t;
            for (unsigned i = 0; i < m; ++i) {
                cand[i] = v % p;
                v /= p;
            }
            cand[m] = 1;
            if (zp_irreducible(cand, p)) {
                modulus = std::move(cand);
                break;
            }
        }
    } else {
        if (modulus.size() != m + 1 || modulus[m] != 1)
            throw std::invalid_argument("GF: modulus must be monic of degree m");
        for (u64 c : modulus)
            if (c >= p) throw std::invalid_argument("GF: modulus coefficient out of range");
        if (!zp_irreducible(modulus, p))
            throw std::invalid_argument("GF: supplied modulus is reducible");
    }
    auto F = std::shared_ptr<GF>(new GF());
    F->p_ = p;
    F->m_ = m;
    F->Q_ = Q;
    F->mod_ = std::move(modulus);
    if (Q <= kTableLimit) F->build_tables();
    return F;
}

void GF::build_tables() {
    // deterministic generator: smallest primitive code
    const u64 n = Q_ - 1;
    const auto prims = prime_factors(n);
    u64 g = 0;
    for (u64 cand = 1; cand < Q_; ++cand) {
        bool ok = cand != 0;
        for (u64 l : prims) {
            if (pow_digits(cand, n / l) == 1) {
                ok = false;
                break;
            }
        }
        if (ok && pow_digits(cand, n) == 1) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw std::logic_error("GF: generator search failed");
    exp_.assign(2 * n, 1);
    log_.assign(Q_, 0);
    u64 cur = 1;
    for (u64 i = 0; i < n; ++i) {
        exp_[i] = static_cast<u32>(cur);
        log_[cur] = static_cast<u32>(i);
        cur = mul_digits(cur, g);
    }
    for (u64 i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
    zech_.assign(n, kZechZero);
    for (u64 k = 0; k < n; ++k) {
        const u64 s = add_digits(1, exp_[k]);
        zech_[k] = (s == 0) ? kZechZero : log_[s];
    }
    lneg_ = (p_ == 2) ? 0 : log_[p_ - 1];
    tables_ = true;
}

u64 GF::add_digits(u64 a, u64 b) const {
    if (p_ == 2) return a ^ b;
    u64 r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((a % p_) + (b % p_)) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

u64 GF::neg_digits(u64 a) const {
    if (p_ == 2) return a;
    u64 r = 0, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
        const u64 d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

u64 GF::mul_digits(u64 a, u64 b) const {
    if (a == 0 || b == 0) return 0;
    u64 da[64], db[64];
    unsigned __int128 prod[127] = {};
    for (unsigned i = 0; i < m_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] += (unsigned __int128)da[i] * db[j];
    }
    u64 red[127];
    for (unsigned i = 0; i < 2 * m_ - 1; ++i) red[i] = (u64)(prod[i] % p_);
    for (unsigned i = 2 * m_ - 1; i-- > m_;) {
        const u64 c = red[i];
        if (c) {
            // subtracting c * (modulus << (i-m)) zeroes red[i] via the monic lead
            for (unsigned j = 0; j <= m_; ++j) {
                u64& slot = red[i - m_ + j];
                slot = (slot + (p_ - (u64)((unsigned __int128)c * mod_[j] % p_)) % p_) % p_;
            }
        }
    }
    u64 r = 0;
    for (unsigned i = m_; i-- > 0;) r = r * p_ + red[i];
    return r;
}

u64 GF::pow_digits(u64 a, u64 e) const {
    u64 r = 1, base = a;
    while (e) {
        if (e & 1) r = mul_digits(r, base);
        base = mul_digits(base, base);
        e >>= 1;
    }
    return r;
}

u64 GF::inv_digits(u64 a) const {
    return pow_digits(a, Q_ - 2);
}

u64 GF::add(u64 a, u64 b) const {
    if (p_ == 2) return a ^ b;
    if (tables_) {
        if (a == 0) return b;
        if (b == 0) return a;
        u64 la = log_[a], lb = log_[b];
        if (la > lb) std::swap(la, lb);
        const u32 z = zech_[lb - la];
        return z == kZechZero ? 0 : exp_[la + z];
    }
    return add_digits(a, b);
}

u64 GF::sub(u64 a, u64 b) const {
    return add(a, neg(b));
}

u64 GF::neg(u64 a) const {
    if (p_ == 2 || a == 0) return a;
    if (tables_) return exp_[log_[a] + lneg_];
    return neg_digits(a);
}

u64 GF::mul(u64 a, u64 b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[(u64)log_[a] + log_[b]];
    return mul_digits(a, b);
}

u64 GF::inv(u64 a) const {
    if (a == 0) throw std::domain_error("GF: inversion of zero");
    if (tables_) {
        const u64 n = Q_ - 1;
        return exp_[(n - log_[a]) % n];
    }
    return inv_digits(a);
}

u64 GF::pow(u64 a, u64 e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const u64 n = Q_ - 1;
    e %= n;
    if (tables_) return exp_[(u64)log_[a] * e % n];
    return pow_digits(a, e);
}

u64 GF::pow(u64 a, const bigint& e) const {
    if (e < 0) throw std::invalid_argument("GF: negative exponent");
    if (a == 0) return e == 0 ? 1 : 0;
    const u64 r = (e % (Q_ - 1)).convert_to<u64>();
    return pow(a, r);
}

u64 GF::frobenius(u64 x, u64 s) const {
    if (!is_power_of_char(s)) throw std::invalid_argument("GF: s is not a power of p");
    return pow(x, s);
}

bool GF::is_power_of_char(u64 s) const {
    if (s == 0) return false;
    while (s % p_ == 0) s /= p_;
    return s == 1;
}

unsigned GF::subfield_degree(u64 s) const {
    u64 t = s;
    unsigned j = 0;
    while (t > 1 && t % p_ == 0) {
        t /= p_;
        ++j;
    }
    if (t != 1 || j == 0 || m_ % j != 0)
        throw std::invalid_argument("GF: not a subfield order");
    return j;
}

bool GF::in_subfield(u64 x, u64 s) const {
    subfield_degree(s);
    return pow(x, s) == x;
}

u64 GF::rel_trace(u64 x, u64 s) const {
    const unsigned j = subfield_degree(s);
    const unsigned steps = m_ / j;
    u64 acc = x, t = x;
    for (unsigned i = 1; i < steps; ++i) {
        t = pow(t, s);
        acc = add(acc, t);
    }
    return acc;
}

u64 GF::rel_norm(u64 x, u64 s) const {
    const unsigned j = subfield_degree(s);
    const unsigned steps = m_ / j;
    u64 acc = x, t = x;
    for (unsigned i = 1; i < steps; ++i) {
        t = pow(t, s);
        acc = mul(acc, t);
    }
    return acc;
}

std::vector<u64> GF::coeffs(u64 x) const {
    std::vector<u64> c(m_);
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

u64 GF::from_coeffs(const std::vector<u64>& c) const {
    if (c.size() > m_) throw std::invalid_argument("GF: coefficient vector too long");
    u64 r = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("GF: coefficient out of range");
        r = r * p_ + c[i];
    }
    return r;
}

std::vector<u64> GF::subfield_elements(u64 s) const {
    subfield_degree(s);
    std::vector<u64> out;
    out.reserve(s);
    if (tables_) {
        out.push_back(0);
        if (s > 1) {
            const u64 step = (Q_ - 1) / (s - 1);
            for (u64 i = 0; i < s - 1; ++i) out.push_back(exp_[i * step]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    require_enumerable();
    for (u64 x = 0; x < Q_; ++x)
        if (pow(x, s) == x) out.push_back(x);
    return out;
}

std::vector<u64> GF::elements() const {
    require_enumerable();
    std::vector<u64> out(Q_);
    for (u64 x = 0; x < Q_; ++x) out[x] = x;
    return out;
}

bool GF::same(const GF& A, const GF& B) {
    return A.p_ == B.p_ && A.m_ == B.m_ && A.mod_ == B.mod_;
}

void GF::require_enumerable() const {
    if (Q_ > max_enumeration())
        throw std::runtime_error("GF: order " + std::to_string(Q_) +
                                 " exceeds the enumeration bound " +
                                 std::to_string(max_enumeration()));
}

std::string GF::descriptor() const {
    std::ostringstream os;
    os << "GF(" << p_ << "^" << m_ << "; modulus=";
    for (size_t i = 0; i < mod_.size(); ++i) {
        if (i) os << ",";
        os << mod_[i];
    }
    os << ")";
    return os.str();
}

std::string GF::elem_str(u64 x) const {
    if (m_ == 1) return std::to_string(x);
    if (x == 0) return "0";
    const auto c = coeffs(x);
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c[i];
        } else {
            if (c[i] != 1) os << c[i];
            os << "g";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace arcforge
