#include "arcforge/census.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "arcforge/arcs.hpp"

namespace arcforge {

namespace {

CycleType cycle_type(const std::vector<u64>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<unsigned> parts;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        parts.push_back(len);
    }
    return CycleType(std::move(parts));
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool on_hermitian_curve(const GF& F, u64 q, u64 a, u64 b) {
    return F.add(F.add(F.pow(b, q), b), F.pow(a, q + 1)) == 0;
}

bool on_bks_curve(const GF& F, u64 q, u64 a, u64 b) {
    const u64 two = F.two();
    const u64 t1 = F.pow(b, q + 1);
    const u64 t2 = F.add(F.pow(a, q), a);
    const u64 s = F.sub(F.mul(b, b), F.mul(two, a));
    return F.add(F.sub(t1, t2), F.pow(s, (q + 1) / 2)) == 0;
}

std::string GroupCycleDistribution::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["degree"] = degree;
    j["order"] = order;
    nlohmann::json types = nlohmann::json::array();
    for (const auto& [t, c] : counts) {
        nlohmann::json e;
        e["parts"] = t.parts;
        e["count"] = c;
        types.push_back(std::move(e));
    }
    j["types"] = std::move(types);
    return j.dump(2);
}

GroupCycleDistribution pgl2_distribution(u64 q) {
    if (q > 16) throw std::invalid_argument("census: pgl2_distribution needs q <= 16");
    const auto F = field_for(q, 1);
    GroupCycleDistribution dist;
    dist.name = "PGL(2," + std::to_string(q) + ")";
    dist.degree = static_cast<unsigned>(q + 1);
    // projective line: index x < q is (x:1), index q is (1:0)
    auto apply = [&](u64 A, u64 B, u64 C, u64 D, u64 idx) -> u64 {
        u64 X, Y;
        if (idx < q) {
            X = idx;
            Y = 1;
        } else {
            X = 1;
            Y = 0;
        }
        const u64 Xp = F->add(F->mul(A, X), F->mul(B, Y));
        const u64 Yp = F->add(F->mul(C, X), F->mul(D, Y));
        if (Yp == 0) return q;
        return F->mul(Xp, F->inv(Yp));
    };
    u64 order = 0;
    for (u64 A = 0; A < q; ++A) {
        for (u64 B = 0; B < q; ++B) {
            for (u64 C = 0; C < q; ++C) {
                for (u64 D = 0; D < q; ++D) {
                    // canonical representative mod scalars: first nonzero = 1
                    u64 first = A ? A : (B ? B : (C ? C : D));
                    if (first != 1) continue;
                    if (F->sub(F->mul(A, D), F->mul(B, C)) == 0) continue;
                    std::vector<u64> perm(q + 1);
                    for (u64 i = 0; i <= q; ++i) perm[i] = apply(A, B, C, D, i);
                    ++dist.counts[cycle_type(perm)];
                    ++order;
                }
            }
        }
    }
    dist.order = order;
    if (order != q * q * q - q) throw std::logic_error("census: |PGL(2,q)| mismatch");
    return dist;
}

GroupCycleDistribution agl1_distribution(u64 q) {
    if (q > 64) throw std::invalid_argument("census: agl1_distribution needs q <= 64");
    const auto F = field_for(q, 1);
    GroupCycleDistribution dist;
    dist.name = "AGL(1," + std::to_string(q) + ")";
    dist.degree = static_cast<unsigned>(q);
    for (u64 a = 1; a < q; ++a) {
        for (u64 b = 0; b < q; ++b) {
            std::vector<u64> perm(q);
            for (u64 x = 0; x < q; ++x) perm[x] = F->add(F->mul(a, x), b);
            ++dist.counts[cycle_type(perm)];
        }
    }
    dist.order = q * (q - 1);
    return dist;
}

GroupCycleDistribution cyclic_regular_distribution(unsigned n) {
    GroupCycleDistribution dist;
    dist.name = "C" + std::to_string(n) + " regular";
    dist.degree = n;
    dist.order = n;
    for (unsigned e = 0; e < n; ++e) {
        const unsigned d = n / std::gcd(n, e);
        std::vector<unsigned> parts(n / d, d);
        ++dist.counts[CycleType(std::move(parts))];
    }
    return dist;
}

GroupCycleDistribution elementary_abelian_regular_distribution(u64 p, unsigned e) {
    GroupCycleDistribution dist;
    u64 q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    dist.name = "E" + std::to_string(q) + " regular";
    dist.degree = static_cast<unsigned>(q);
    dist.order = q;
    ++dist.counts[CycleType(std::vector<unsigned>(q, 1))];
    if (q > 1) {
        std::vector<unsigned> parts(q / p, static_cast<unsigned>(p));
        dist.counts[CycleType(std::move(parts))] += q - 1;
    }
    return dist;
}

std::string census_family_name(CensusFamily f) {
    switch (f) {
        case CensusFamily::hermitian_line: return "hermitian_line";
        case CensusFamily::hermitian_onpoint: return "hermitian_onpoint";
        case CensusFamily::bks_line_monic: return "bks_line_monic";
        case CensusFamily::bks_onpoint: return "bks_onpoint";
        case CensusFamily::calibration_i: return "calibration_i";
        case CensusFamily::calibration_ii: return "calibration_ii";
    }
    return "?";
}

u64 CensusReport::samples() const {
    u64 s = 0;
    for (const auto& [pat, c] : patterns) s += c;
    return s;
}

void CensusReport::merge(const CensusReport& other) {
    if (family != other.family || q != other.q || degree != other.degree)
        throw std::invalid_argument("census: merging incompatible reports");
    for (const auto& [pat, c] : other.patterns) patterns[pat] += c;
    ramified += other.ramified;
    skipped += other.skipped;
    draws += other.draws;
    rows.clear();
    rows_valid = false;
}

std::string CensusReport::to_csv() const {
    if (!rows_valid) throw std::logic_error("census: per-value rows dropped by merge");
    std::ostringstream os;
    os << "m_index,status,pattern\n";
    for (const auto& row : rows) {
        os << row.index << ",";
        os << (row.status == 'o' ? "ok" : (row.status == 'r' ? "ram" : "skip"));
        os << "," << (row.status == 'o' ? row.pattern.str() : "");
        os << "\n";
    }
    return os.str();
}

std::string CensusReport::to_json() const {
    nlohmann::json j;
    j["family"] = census_family_name(family);
    j["q"] = q;
    j["degree"] = degree;
    j["params"] = {{"a", a}, {"b", b}};
    j["field"] = field;
    j["field_order"] = field_order;
    j["draws"] = draws;
    j["ramified"] = ramified;
    j["skipped"] = skipped;
    j["samples"] = samples();
    nlohmann::json pats = nlohmann::json::object();
    for (const auto& [pat, c] : patterns) pats[pat.str()] = c;
    j["patterns"] = std::move(pats);
    return j.dump(2);
}

CensusReport specialization_census(CensusFamily family, const GFPtr& F, u64 q, u64 a, u64 b,
                                   bool allow_degenerate, unsigned threads) {
    F->require_enumerable();
    CensusReport rep;
    rep.family = family;
    rep.q = q;
    rep.a = a;
    rep.b = b;
    rep.field_order = F->order();
    rep.field = F->descriptor();
    const u64 Q = F->order();

    switch (family) {
        case CensusFamily::hermitian_line:
            if (on_hermitian_curve(*F, q, a, b))
                throw std::invalid_argument("census: hermitian_line needs (a,b) off the curve");
            rep.degree = static_cast<unsigned>(q + 1);
            break;
        case CensusFamily::hermitian_onpoint: {
            if (!on_hermitian_curve(*F, q, a, b))
                throw std::invalid_argument("census: hermitian_onpoint needs (a,b) on the curve");
            const u64 q2 = q * q;
            if (!allow_degenerate && F->in_subfield(a, q2) && F->in_subfield(b, q2))
                throw std::invalid_argument("census: hermitian_onpoint needs (a,b) outside PG(2,q^2)");
            rep.degree = static_cast<unsigned>(q);
            break;
        }
        case CensusFamily::bks_line_monic: {
            if (on_bks_curve(*F, q, a, b))
                throw std::invalid_argument("census: bks_line needs (a,b) off the curve");
            if (!allow_degenerate && F->in_subfield(a, q) && F->in_subfield(b, q))
                throw std::invalid_argument("census: bks_line needs (a,b) outside PG(2,q)");
            rep.degree = static_cast<unsigned>(q + 1);
            break;
        }
        case CensusFamily::bks_onpoint:
            if (F->in_subfield(a, q * q))
                throw std::invalid_argument("census: bks_onpoint needs t outside GF(q^2)");
            rep.degree = static_cast<unsigned>(q);
            break;
        case CensusFamily::calibration_i:
            rep.degree = static_cast<unsigned>(q + 1);
            break;
        case CensusFamily::calibration_ii:
            if (F->pow(b, q - 1) != F->neg(1))
                throw std::invalid_argument("census: calibration II needs w^(q-1) = -1");
            rep.degree = static_cast<unsigned>(q);
            break;
    }

    rep.rows.assign(Q, {0, 's', {}});
    const unsigned T = effective_threads(threads);
    std::vector<std::map<FactorizationPattern, u64>> tallies(T);
    std::vector<u64> ram(T, 0), skip(T, 0);
    parallel_for(Q, T, [&](unsigned tid, u64 lo, u64 hi) {
        for (u64 v = lo; v < hi; ++v) {
            rep.rows[v].index = v;
            if (family == CensusFamily::bks_line_monic && (v == 0 || v == 1)) {
                ++skip[tid];
                rep.rows[v].status = 's';
                continue;
            }
            Poly f;
            switch (family) {
                case CensusFamily::hermitian_line: f = hermitian_line_poly(F, q, a, b, v); break;
                case CensusFamily::hermitian_onpoint:
                    f = hermitian_onpoint_poly(F, q, a, b, v);
                    break;
                case CensusFamily::bks_line_monic: f = bks_line_poly_monic(F, q, a, b, v); break;
                case CensusFamily::bks_onpoint: f = bks_onpoint_poly(F, q, a, v); break;
                case CensusFamily::calibration_i:
                    f = calibration_poly(F, q, CalibrationFamily::cyclic_i, v);
                    break;
                case CensusFamily::calibration_ii:
                    f = calibration_poly(F, q, CalibrationFamily::additive_ii, v, b);
                    break;
            }
            if (!is_squarefree(f)) {
                ++ram[tid];
                rep.rows[v].status = 'r';
                continue;
            }
            FactorizationPattern pat = ddf_pattern(f);
            ++tallies[tid][pat];
            rep.rows[v].status = 'o';
            rep.rows[v].pattern = std::move(pat);
        }
    });
    for (unsigned t = 0; t < T; ++t) {
        rep.ramified += ram[t];
        rep.skipped += skip[t];
        for (const auto& [pat, c] : tallies[t]) rep.patterns[pat] += c;
    }
    if (rep.ramified + rep.skipped + rep.samples() != Q)
        throw std::logic_error("census: conservation violated");
    return rep;
}

DistributionComparison compare_distribution(const CensusReport& census,
                                            const GroupCycleDistribution& dist) {
    if (census.degree != dist.degree)
        throw std::invalid_argument("census: degree mismatch in comparison");
    DistributionComparison cmp;
    cmp.support_ok = true;
    for (const auto& [pat, c] : census.patterns) {
        if (!dist.counts.count(pat)) {
            cmp.support_ok = false;
            cmp.unexpected.push_back(pat);
        }
    }
    const double total = static_cast<double>(census.samples());
    double tv = 0.0;
    std::map<CycleType, std::pair<double, double>> both;
    if (total > 0) {
        for (const auto& [pat, c] : census.patterns) both[pat].first = c / total;
    }
    for (const auto& [pat, c] : dist.counts)
        both[pat].second = static_cast<double>(c) / static_cast<double>(dist.order);
    for (const auto& [pat, pq] : both) tv += std::abs(pq.first - pq.second);
    cmp.tv = tv / 2.0;
    return cmp;
}

namespace {

Poly tower_line_poly(TowerFamily fam, const GFPtr& F, u64 q, u64 a, u64 b, u64 m0) {
    return fam == TowerFamily::hermitian ? hermitian_line_poly(F, q, a, b, m0)
                                         : bks_line_poly_monic(F, q, a, b, m0);
}

}  // namespace

std::vector<u64> find_split_slopes(TowerFamily fam, const GFPtr& F, u64 q, u64 a, u64 b,
                                   size_t want) {
    F->require_enumerable();
    std::vector<u64> out;
    for (u64 m0 = 0; m0 < F->order() && out.size() < want; ++m0) {
        if (fam == TowerFamily::bks && (m0 == 0 || m0 == 1)) continue;
        const Poly f = tower_line_poly(fam, F, q, a, b, m0);
        if (!is_squarefree(f)) continue;
        if (roots_in_field(f).count() == q + 1) out.push_back(m0);
    }
    return out;
}

TowerCheck tower_consistency(TowerFamily fam, const GFPtr& F, u64 q, u64 a, u64 b, u64 m0) {
    F->require_enumerable();
    const u64 Q = F->order();
    const Poly f = tower_line_poly(fam, F, q, a, b, m0);
    if (!is_squarefree(f))
        throw std::invalid_argument("census: tower slope is ramified");
    const auto scan = roots_in_field(f);
    if (scan.count() != q + 1)
        throw std::invalid_argument("census: tower slope does not split completely");

    TowerCheck chk;
    chk.m0 = m0;
    chk.roots = scan.count();
    const u64 mq = fam == TowerFamily::hermitian ? F->pow(m0, q) : m0;
    const u64 g = gcd_u64(q - 1, Q - 1);
    const u64 crit_exp = (Q - 1) / g;

    auto eq2 = [&](u64 u, u64 v) {
        // v^q + (u + m^q) v^{q-1} + u^q + m
        return F->add(F->add(F->pow(v, q), F->mul(F->add(u, mq), F->pow(v, q - 1))),
                      F->add(F->pow(u, q), m0));
    };
    auto eq3 = [&](u64 u, u64 v, u64 w) {
        // v + u + m^q - (u + m^q) w^{q-1}
        const u64 d = F->add(u, mq);
        return F->sub(F->add(v, d), F->mul(d, F->pow(w, q - 1)));
    };
    auto solution = [&](u64 u, u64 v, u64 w) {
        return f.eval(u) == 0 && eq2(u, v) == 0 && eq3(u, v, w) == 0;
    };

    for (u64 u : scan.roots) {
        // twisted derivative by shift-and-divide
        const Poly shifted = shift(f, u);
        if (shifted.coeff(0) != 0) throw std::logic_error("census: f(u) != 0");
        std::vector<u64> drop(shifted.coeffs().begin() + 1, shifted.coeffs().end());
        const Poly f1(F, std::move(drop));
        // closed form T^q + (u+m^q) T^{q-1} + (m + u^q)
        std::vector<u64> cf(q + 1, 0);
        cf[q] = 1;
        cf[q - 1] = F->add(u, mq);
        cf[0] = F->add(cf[0], F->add(m0, F->pow(u, q)));
        if (!(f1 == Poly(F, std::move(cf)))) chk.derivative_formula_ok = false;

        std::vector<u64> expected;
        for (u64 u2 : scan.roots)
            if (u2 != u) expected.push_back(F->sub(u2, u));
        std::sort(expected.begin(), expected.end());
        const auto r1 = roots_in_field(f1);
        if (r1.roots != expected) chk.rootset_ok = false;

        const u64 denom = F->add(u, mq);
        if (denom == 0) throw std::logic_error("census: u + m^q = 0 at a squarefree slope");
        for (u64 v : r1.roots) {
            ++chk.pairs;
            const u64 rho = F->mul(F->add(v, denom), F->inv(denom));
            const bool criterion = F->pow(rho, crit_exp) == 1;
            u64 w0 = 0;
            bool found = false;
            for (u64 w = 1; w < Q; ++w) {
                if (F->pow(w, q - 1) == rho) {
                    w0 = w;
                    found = true;
                    break;
                }
            }
            if (found != criterion) chk.w_criterion_ok = false;
            if (!found) {
                ++chk.w_absent;
                continue;
            }
            ++chk.w_found;
            if (!solution(u, v, w0)) chk.system_ok = false;
            // map 1: (u,v,w) -> (v+u, -v, w^-1)
            if (!solution(F->add(v, u), F->neg(v), F->inv(w0))) chk.closure_ok = false;
            // map 2: (u,v,w) -> (u, v w (w+1)^-1, w+1)
            const u64 w1 = F->add(w0, 1);
            if (w1 == 0) {
                chk.closure_ok = false;
            } else if (!solution(u, F->mul(v, F->mul(w0, F->inv(w1))), w1)) {
                chk.closure_ok = false;
            }
            // map 3: (u,v,w) -> (u, v, l w), l in GF(q)^*
            for (u64 l : F->subfield_elements(q)) {
                if (l == 0) continue;
                if (!solution(u, v, F->mul(l, w0))) chk.closure_ok = false;
            }
        }
    }
    return chk;
}

u64 ramified_place_count(TowerFamily fam, const GFPtr& closure, u64 q, u64 a, u64 b) {
    closure->require_enumerable();
    const GF& F = *closure;
    if (fam == TowerFamily::hermitian) {
        if (on_hermitian_curve(F, q, a, b))
            throw std::invalid_argument("census: ramified count needs (a,b) off the curve");
        const Poly g = hermitian_tangent_poly(closure, q, a, b);
        if (roots_in_field(g).count() != q + 1)
            throw std::invalid_argument(
                "census: closure field too small, tangent polynomial does not split");
        u64 count = 0;
        for (u64 m = 0; m < F.order(); ++m)
            if (!is_squarefree(hermitian_line_poly(closure, q, a, b, m))) ++count;
        return count;
    }
    if (on_bks_curve(F, q, a, b))
        throw std::invalid_argument("census: ramified count needs (a,b) off the curve");
    const u64 two = F.two();
    const u64 half = F.inv(two);
    if (a != 0) {
        const Poly quad(closure, {1, F.neg(F.mul(two, b)), F.mul(two, a)});
        const u64 disc = F.sub(F.mul(b, b), F.mul(two, a));
        const u64 want = disc == 0 ? 1 : 2;
        if (roots_in_field(quad).count() != want)
            throw std::invalid_argument(
                "census: closure field too small, tangent slopes not rational");
    }
    u64 count = 0;
    for (u64 m = 0; m < F.order(); ++m) {
        if (m == 0 || m == half) continue;
        if (!is_squarefree(bks_line_poly(closure, q, a, b, m))) ++count;
    }
    return count;
}

}  // namespace arcforge
