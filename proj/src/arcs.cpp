#include "arcforge/arcs.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace arcforge {

namespace {

using json = nlohmann::json;

// Row-reduced GF(p)-linear system for the additive map y -> y^q + y.
// Built once per field, then solved per right-hand side.
class AdditiveSolver {
public:
    AdditiveSolver(const GF& F, u64 q) : F_(F), p_(F.p()), m_(F.m()) {
        std::vector<std::vector<u64>> M(m_, std::vector<u64>(m_, 0));
        u64 basis = 1;
        for (unsigned c = 0; c < m_; ++c) {
            const u64 img = F.add(F.pow(basis, q), basis);
            const auto co = F.coeffs(img);
            for (unsigned r = 0; r < m_; ++r) M[r][c] = co[r];
            basis *= p_;
        }
        // eliminate [M | I]
        T_.assign(m_, std::vector<u64>(m_, 0));
        for (unsigned i = 0; i < m_; ++i) T_[i][i] = 1;
        R_ = std::move(M);
        col_pivot_row_.assign(m_, -1);
        unsigned row = 0;
        for (unsigned col = 0; col < m_ && row < m_; ++col) {
            unsigned sel = row;
            while (sel < m_ && R_[sel][col] == 0) ++sel;
            if (sel == m_) continue;
            std::swap(R_[sel], R_[row]);
            std::swap(T_[sel], T_[row]);
            const u64 inv = mod_inv(R_[row][col]);
            scale_row(R_[row], inv);
            scale_row(T_[row], inv);
            for (unsigned r = 0; r < m_; ++r) {
                if (r != row && R_[r][col] != 0) {
                    const u64 f = R_[r][col];
                    axpy_row(R_[r], R_[row], f);
                    axpy_row(T_[r], T_[row], f);
                }
            }
            col_pivot_row_[col] = static_cast<int>(row);
            ++row;
        }
        rank_ = row;
        // kernel basis -> all kernel element codes
        std::vector<u64> kernel_basis;
        for (unsigned col = 0; col < m_; ++col) {
            if (col_pivot_row_[col] >= 0) continue;
            std::vector<u64> v(m_, 0);
            v[col] = 1;
            for (unsigned c2 = 0; c2 < m_; ++c2) {
                const int pr = col_pivot_row_[c2];
                if (pr >= 0) v[c2] = (p_ - R_[pr][col] % p_) % p_;
            }
            kernel_basis.push_back(F.from_coeffs(v));
        }
        kernel_codes_.push_back(0);
        for (u64 k : kernel_basis) {
            const size_t n = kernel_codes_.size();
            u64 acc = k;
            for (u64 mult = 1; mult < p_; ++mult) {
                for (size_t i = 0; i < n; ++i) kernel_codes_.push_back(F.add(kernel_codes_[i], acc));
                acc = F.add(acc, k);
            }
        }
        std::sort(kernel_codes_.begin(), kernel_codes_.end());
    }

    // distinct y with y^q + y = rhs; empty when inconsistent
    bool solve(u64 rhs, u64& particular) const {
        const auto co = F_.coeffs(rhs);
        std::vector<u64> v(m_, 0);
        for (unsigned r = 0; r < m_; ++r) {
            unsigned __int128 acc = 0;
            for (unsigned c = 0; c < m_; ++c) acc += (unsigned __int128)T_[r][c] * co[c];
            v[r] = (u64)(acc % p_);
        }
        for (unsigned r = rank_; r < m_; ++r)
            if (v[r] != 0) return false;
        std::vector<u64> y(m_, 0);
        for (unsigned col = 0; col < m_; ++col) {
            const int pr = col_pivot_row_[col];
            if (pr >= 0) y[col] = v[pr];
        }
        particular = F_.from_coeffs(y);
        return true;
    }

    const std::vector<u64>& kernel() const { return kernel_codes_; }

private:
    u64 mod_inv(u64 a) const {
        u64 r = 1, b = a, e = p_ - 2;
        while (e) {
            if (e & 1) r = (unsigned __int128)r * b % p_;
            b = (unsigned __int128)b * b % p_;
            e >>= 1;
        }
        return r;
    }
    void scale_row(std::vector<u64>& row, u64 f) const {
        for (u64& x : row) x = (unsigned __int128)x * f % p_;
    }
    void axpy_row(std::vector<u64>& dst, const std::vector<u64>& src, u64 f) const {
        for (unsigned i = 0; i < m_; ++i)
            dst[i] = (dst[i] + (p_ - (u64)((unsigned __int128)f * src[i] % p_)) % p_) % p_;
    }

    const GF& F_;
    u64 p_;
    unsigned m_, rank_ = 0;
    std::vector<std::vector<u64>> R_, T_;
    std::vector<int> col_pivot_row_;
    std::vector<u64> kernel_codes_;
};

void finalize_points(std::vector<u64>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

u64 bks_curve_eval(const GF& F, u64 q, u64 x, u64 y, u64 z) {
    const u64 two = F.two();
    const u64 t1 = F.pow(y, q + 1);
    const u64 t2 = F.add(F.mul(F.pow(x, q), z), F.mul(x, F.pow(z, q)));
    const u64 s = F.sub(F.mul(y, y), F.mul(two, F.mul(x, z)));
    return F.add(F.sub(t1, t2), F.pow(s, (q + 1) / 2));
}

std::string family_name(ArcFamily f) {
    switch (f) {
        case ArcFamily::hermitian: return "hermitian";
        case ArcFamily::bks: return "bks";
        default: return "custom";
    }
}

std::string construction_name(ArcConstruction c) {
    switch (c) {
        case ArcConstruction::implicit: return "implicit";
        case ArcConstruction::parametric: return "parametric";
        default: return "custom";
    }
}

// parses elem_str output: "0", "2", "g", "g^3+2g+1", ...
u64 parse_elem(const GF& F, const std::string& s) {
    if (F.m() == 1) return std::stoull(s) % F.p();
    u64 acc = 0;
    size_t i = 0;
    while (i < s.size()) {
        u64 coef = 1;
        bool saw_digit = false;
        u64 num = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
            num = num * 10 + (s[i] - '0');
            saw_digit = true;
            ++i;
        }
        if (saw_digit) coef = num;
        u64 deg = 0;
        if (i < s.size() && s[i] == 'g') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                u64 e = 0;
                while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
                    e = e * 10 + (s[i] - '0');
                    ++i;
                }
                deg = e;
            }
        }
        if (deg >= F.m()) throw std::invalid_argument("arc import: element degree out of range");
        std::vector<u64> mono(deg + 1, 0);
        mono[deg] = coef % F.p();
        acc = F.add(acc, F.from_coeffs(mono));
        if (i < s.size()) {
            if (s[i] != '+') throw std::invalid_argument("arc import: bad element syntax");
            ++i;
        }
    }
    return acc;
}

GFPtr field_from_descriptor(const std::string& d) {
    // GF(p^m; modulus=c0,c1,...,1)
    u64 p = 0;
    unsigned m = 0;
    const auto open = d.find("GF(");
    const auto caret = d.find('^');
    const auto semi = d.find(';');
    const auto eq = d.find("modulus=");
    const auto close = d.rfind(')');
    if (open != 0 || caret == std::string::npos || semi == std::string::npos ||
        eq == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("bad field descriptor: " + d);
    p = std::stoull(d.substr(3, caret - 3));
    m = static_cast<unsigned>(std::stoul(d.substr(caret + 1, semi - caret - 1)));
    std::vector<u64> mod;
    std::string list = d.substr(eq + 8, close - eq - 8);
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) mod.push_back(std::stoull(tok));
    return GF::make(p, m, mod);
}

}  // namespace

bool Arc::contains(u64 idx) const {
    return std::binary_search(points.begin(), points.end(), idx);
}

std::pair<u64, unsigned> prime_power(u64 q) {
    if (q < 2) throw std::invalid_argument("arcs: q must be a prime power >= 2");
    u64 p = q;
    for (u64 d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned j = 0;
    u64 t = q;
    while (t > 1) {
        if (t % p != 0) throw std::invalid_argument("arcs: q is not a prime power");
        t /= p;
        ++j;
    }
    return {p, j};
}

GFPtr field_for(u64 q, unsigned r) {
    const auto [p, j] = prime_power(q);
    return GF::make(p, j * r);
}

PlanePtr plane_for(u64 q, unsigned r) {
    return std::make_shared<const Plane>(field_for(q, r));
}

Arc hermitian_arc(u64 q, unsigned r) {
    if (r < 1) throw std::invalid_argument("arcs: r >= 1 required");
    auto plane = plane_for(q, 2 * r);
    const GF& F = *plane->field();
    F.require_enumerable();
    AdditiveSolver solver(F, q);
    std::vector<u64> pts;
    for (u64 x = 0; x < F.order(); ++x) {
        const u64 rhs = F.neg(F.pow(x, q + 1));
        u64 y0 = 0;
        if (!solver.solve(rhs, y0)) continue;
        for (u64 k : solver.kernel()) pts.push_back(plane->encode(x, F.add(y0, k), 1));
    }
    pts.push_back(plane->encode(0, 1, 0));
    finalize_points(pts);
    Arc arc;
    arc.plane = std::move(plane);
    arc.points = std::move(pts);
    arc.family = ArcFamily::hermitian;
    arc.q = q;
    arc.r = r;
    arc.construction = ArcConstruction::implicit;
    return arc;
}

Arc bks_arc_parametric(u64 q, unsigned r) {
    if (q % 2 == 0) throw std::invalid_argument("arcs: BKS needs odd q");
    if (r < 1) throw std::invalid_argument("arcs: r >= 1 required");
    auto plane = plane_for(q, r);
    const GF& F = *plane->field();
    F.require_enumerable();
    const u64 two = F.two();
    std::vector<u64> pts;
    pts.reserve(F.order() + 1);
    for (u64 t = 0; t < F.order(); ++t) {
        const u64 x = F.mul(two, F.pow(F.add(t, 1), q + 1));
        const u64 y = F.add(F.add(two, t), F.pow(t, q));
        pts.push_back(plane->encode(x, y, 1));
    }
    pts.push_back(plane->encode(1, 0, 0));
    finalize_points(pts);
    Arc arc;
    arc.plane = std::move(plane);
    arc.points = std::move(pts);
    arc.family = ArcFamily::bks;
    arc.q = q;
    arc.r = r;
    arc.construction = ArcConstruction::parametric;
    return arc;
}

Arc bks_arc_implicit(u64 q, unsigned r) {
    if (q % 2 == 0) throw std::invalid_argument("arcs: BKS needs odd q");
    if (r < 1) throw std::invalid_argument("arcs: r >= 1 required");
    auto plane = plane_for(q, r);
    plane->require_enumerable();
    const GF& F = *plane->field();
    std::vector<u64> pts;
    for (u64 i = 0; i < plane->num_points(); ++i) {
        const auto c = plane->decode(i);
        if (bks_curve_eval(F, q, c[0], c[1], c[2]) == 0) pts.push_back(i);
    }
    Arc arc;
    arc.plane = std::move(plane);
    arc.points = std::move(pts);  // scan order is ascending already
    arc.family = ArcFamily::bks;
    arc.q = q;
    arc.r = r;
    arc.construction = ArcConstruction::implicit;
    return arc;
}

std::vector<u64> node_set(const PlanePtr& plane, u64 q) {
    const GF& F = *plane->field();
    if (F.p() == 2) throw std::invalid_argument("arcs: nodes need odd q");
    const auto sub = F.subfield_elements(q);
    const u64 two = F.two();
    std::vector<u64> out;
    for (u64 a : sub) {
        for (u64 b : sub) {
            // affine (a, b): curve value and both partials (char-p forms)
            const u64 s = F.sub(F.mul(b, b), F.mul(two, a));
            const u64 shalf = F.pow(s, (q - 1) / 2);
            const u64 fx = F.neg(F.add(1, shalf));
            const u64 fy = F.add(F.pow(b, q), F.mul(b, shalf));
            if (fx != 0 || fy != 0) continue;
            if (bks_curve_eval(F, q, a, b, 1) != 0) continue;
            out.push_back(plane->encode(a, b, 1));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> conic_points(const PlanePtr& plane) {
    const GF& F = *plane->field();
    if (F.p() == 2) throw std::invalid_argument("arcs: conic Y^2=2XZ needs odd characteristic");
    F.require_enumerable();
    const u64 halfinv = F.inv(F.two());
    std::vector<u64> out;
    out.reserve(F.order() + 1);
    for (u64 y = 0; y < F.order(); ++y)
        out.push_back(plane->encode(F.mul(halfinv, F.mul(y, y)), y, 1));
    out.push_back(plane->encode(1, 0, 0));
    std::sort(out.begin(), out.end());
    return out;
}

Arc custom_arc(PlanePtr plane, std::vector<u64> points) {
    for (u64 i : points)
        if (i >= plane->num_points()) throw std::invalid_argument("arcs: point index out of range");
    finalize_points(points);
    Arc arc;
    arc.plane = std::move(plane);
    arc.points = std::move(points);
    arc.family = ArcFamily::custom;
    arc.construction = ArcConstruction::custom;
    return arc;
}

std::string arc_to_json(const Arc& arc) {
    json j;
    j["family"] = family_name(arc.family);
    j["q"] = arc.q;
    j["r"] = arc.r;
    j["construction"] = construction_name(arc.construction);
    j["field"] = arc.plane->field()->descriptor();
    json pts = json::array();
    for (u64 p : arc.points) pts.push_back(arc.plane->point_str(p));
    j["points"] = std::move(pts);
    return j.dump(2);
}

Arc arc_from_json(const std::string& text) {
    const json j = json::parse(text);
    auto F = field_from_descriptor(j.at("field").get<std::string>());
    auto plane = std::make_shared<const Plane>(F);
    std::vector<u64> pts;
    for (const auto& entry : j.at("points")) {
        const std::string s = entry.get<std::string>();
        if (s.size() < 2 || s.front() != '(' || s.back() != ')')
            throw std::invalid_argument("arc import: bad point syntax");
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string xs, ys, zs;
        std::getline(ss, xs, ':');
        std::getline(ss, ys, ':');
        std::getline(ss, zs, ':');
        pts.push_back(plane->encode(parse_elem(*F, xs), parse_elem(*F, ys), parse_elem(*F, zs)));
    }
    Arc arc = custom_arc(plane, std::move(pts));
    const std::string fam = j.value("family", "custom");
    arc.family = fam == "hermitian" ? ArcFamily::hermitian
                                    : (fam == "bks" ? ArcFamily::bks : ArcFamily::custom);
    const std::string cons = j.value("construction", "custom");
    arc.construction = cons == "implicit"
                           ? ArcConstruction::implicit
                           : (cons == "parametric" ? ArcConstruction::parametric
                                                   : ArcConstruction::custom);
    arc.q = j.value("q", 0);
    arc.r = j.value("r", 0);
    return arc;
}

}  // namespace arcforge
