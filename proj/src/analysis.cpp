#include "arcforge/analysis.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "arcforge/poly.hpp"

namespace arcforge {

namespace {

constexpr u64 kReportCap = 10'000;

u64 pairs_to_count(u64 pairs) {
    // c(c-1)/2 = pairs
    const u64 c = static_cast<u64>((1.0 + std::sqrt(8.0 * (double)pairs + 1.0)) / 2.0 + 0.5);
    if (c * (c - 1) / 2 != pairs)
        throw std::logic_error("analysis: pair count is not triangular");
    return c;
}

}  // namespace

u64 Spectrum::n() const {
    u64 best = 0;
    for (const auto& [c, cnt] : counts)
        if (cnt > 0 && c > best) best = c;
    return best;
}

std::vector<u64> Spectrum::support() const {
    std::vector<u64> out;
    for (const auto& [c, cnt] : counts)
        if (cnt > 0) out.push_back(c);
    return out;
}

u64 Spectrum::lines_with(u64 c) const {
    auto it = counts.find(c);
    return it == counts.end() ? 0 : it->second;
}

SecantCensus secant_census(const Arc& arc, unsigned threads) {
    const auto& pts = arc.points;
    const u64 k = pts.size();
    SecantCensus out;
    if (k < 2) return out;
    const Plane& pl = *arc.plane;
    std::vector<u64> keys(k * (k - 1) / 2);
    parallel_for(k, threads, [&](unsigned, u64 lo, u64 hi) {
        for (u64 i = lo; i < hi; ++i) {
            const u64 off = i * (k - 1) - i * (i - 1) / 2;  // prefix of row i
            for (u64 j = i + 1; j < k; ++j) keys[off + j - i - 1] = pl.join(pts[i], pts[j]);
        }
    });
    std::sort(keys.begin(), keys.end());
    for (size_t i = 0; i < keys.size();) {
        size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        out.lines.emplace_back(keys[i], pairs_to_count(j - i));
        i = j;
    }
    return out;
}

Spectrum spectrum_from_census(const Arc& arc, const SecantCensus& census) {
    const u64 Q = arc.plane->order();
    const u64 k = arc.size();
    Spectrum s;
    s.Q = Q;
    s.k = k;
    u64 incidences = 0, lines_seen = 0;
    for (const auto& [line, c] : census.lines) {
        (void)line;
        ++s.counts[c];
        incidences += c;
        ++lines_seen;
    }
    const u64 total_lines = Q * Q + Q + 1;
    const u64 tangents = k * (Q + 1) - incidences;
    if (tangents > 0) s.counts[1] += tangents;
    const u64 external = total_lines - lines_seen - tangents;
    if (external > 0) s.counts[0] += external;
    // mass identities; cheap and catches census corruption
    u64 mass = 0, weighted = 0;
    for (const auto& [c, cnt] : s.counts) {
        mass += cnt;
        weighted += c * cnt;
    }
    if (mass != total_lines || weighted != k * (Q + 1))
        throw std::logic_error("analysis: spectrum mass identity violated");
    return s;
}

Spectrum spectrum(const Arc& arc, unsigned threads) {
    return spectrum_from_census(arc, secant_census(arc, threads));
}

std::vector<u64> full_secants(const Arc& arc, u64 n, unsigned threads) {
    const Plane& pl = *arc.plane;
    if (n >= 2) {
        const auto census = secant_census(arc, threads);
        std::vector<u64> out;
        for (const auto& [line, c] : census.lines)
            if (c == n) out.push_back(line);
        return out;
    }
    if (n == 1) {
        const auto census = secant_census(arc, threads);
        std::vector<u64> out;
        for (u64 p : arc.points) {
            for (u64 line : pl.pencil(p)) {
                const auto it = std::lower_bound(
                    census.lines.begin(), census.lines.end(), line,
                    [](const auto& a, u64 v) { return a.first < v; });
                if (it == census.lines.end() || it->first != line) out.push_back(line);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    // n == 0: complement scan
    pl.require_enumerable();
    std::vector<char> hit(pl.num_lines(), 0);
    const auto census = secant_census(arc, threads);
    for (const auto& [line, c] : census.lines) hit[line] = 1;
    for (u64 line : full_secants(arc, 1, threads)) hit[line] = 1;
    std::vector<u64> out;
    for (u64 l = 0; l < pl.num_lines(); ++l)
        if (!hit[l]) out.push_back(l);
    return out;
}

CoverageReport coverage(const Arc& arc, u64 n, unsigned threads) {
    const Plane& pl = *arc.plane;
    pl.require_enumerable();
    const u64 npts = pl.num_points();
    const auto secants = full_secants(arc, n, threads);

    const u64 words = (npts + 63) / 64;
    const unsigned T = effective_threads(threads);
    std::vector<std::vector<u64>> maps(T, std::vector<u64>(words, 0));
    parallel_for(secants.size(), T, [&](unsigned tid, u64 lo, u64 hi) {
        auto& bm = maps[tid];
        for (u64 s = lo; s < hi; ++s) {
            pl.for_each_point_on(secants[s],
                                 [&](u64 p) { bm[p >> 6] |= (u64(1) << (p & 63)); });
        }
    });
    std::vector<u64>& bitmap = maps[0];
    for (unsigned t = 1; t < T; ++t)
        for (u64 w = 0; w < words; ++w) bitmap[w] |= maps[t][w];

    CoverageReport rep;
    rep.n = n;
    std::vector<u64> divisors;  // proper subplane orders
    {
        const GF& F = *pl.field();
        for (unsigned d = 1; d < F.m(); ++d) {
            if (F.m() % d) continue;
            u64 s = 1;
            for (unsigned i = 0; i < d; ++i) s *= F.p();
            divisors.push_back(s);
        }
    }
    for (u64 p = 0; p < npts; ++p) {
        if (bitmap[p >> 6] & (u64(1) << (p & 63))) continue;
        const bool on = arc.contains(p);
        auto& count = on ? rep.uncovered_on_count : rep.uncovered_off_count;
        auto& list = on ? rep.uncovered_on : rep.uncovered_off;
        auto& truncated = on ? rep.on_truncated : rep.off_truncated;
        auto& breakdown = on ? rep.on_subplane : rep.off_subplane;
        ++count;
        if (list.size() < kReportCap)
            list.push_back(p);
        else
            truncated = true;
        for (u64 s : divisors)
            if (pl.in_subplane(p, s)) ++breakdown[s];
    }
    rep.is_complete = rep.uncovered_off_count == 0;
    return rep;
}

u64 secants_through(const Arc& arc, u64 point, u64 n, const SecantCensus* census) {
    SecantCensus local;
    if (!census) {
        local = secant_census(arc, 0);
        census = &local;
    }
    const Plane& pl = *arc.plane;
    u64 cnt = 0;
    if (n >= 2) {
        for (const auto& [line, c] : census->lines)
            if (c == n && pl.incident(point, line)) ++cnt;
        return cnt;
    }
    for (u64 line : full_secants(arc, n))
        if (pl.incident(point, line)) ++cnt;
    return cnt;
}

ExtensionResult extend_and_recheck(const Arc& arc, const std::vector<u64>& extra, u64 n,
                                   unsigned threads) {
    for (u64 p : extra)
        if (arc.contains(p)) throw std::invalid_argument("analysis: extension point already in arc");
    std::vector<u64> pts = arc.points;
    pts.insert(pts.end(), extra.begin(), extra.end());
    ExtensionResult res{custom_arc(arc.plane, std::move(pts)), {}, {}, false};
    res.arc.family = arc.family;
    res.arc.q = arc.q;
    res.arc.r = arc.r;
    res.spectrum = spectrum(res.arc, threads);
    res.character_violation = res.spectrum.n() > n;
    res.coverage = coverage(res.arc, n, threads);
    return res;
}

std::vector<u64> tangent_lines_through(ArcFamily family, const PlanePtr& plane, u64 q, u64 a,
                                       u64 b) {
    const GFPtr& F = plane->field();
    std::vector<u64> out;
    auto slope_line = [&](u64 m) {
        // Y = m(X - a) + b  ->  [m : -1 : b - m a]
        return plane->encode(m, F->neg(1), F->sub(b, F->mul(m, a)));
    };
    if (family == ArcFamily::hermitian) {
        const Poly g = hermitian_tangent_poly(F, q, a, b);
        for (u64 m : roots_in_field(g).roots) out.push_back(slope_line(m));
    } else if (family == ArcFamily::bks) {
        if (F->p() == 2) throw std::invalid_argument("analysis: BKS tangents need odd q");
        const u64 two = F->two();
        if (a != 0) {
            const Poly quad(F, {1, F->neg(F->mul(two, b)), F->mul(two, a)});
            for (u64 m : roots_in_field(quad).roots) out.push_back(slope_line(m));
        } else {
            if (b != 0) out.push_back(slope_line(F->inv(F->mul(two, b))));
            out.push_back(plane->encode(1, 0, F->neg(a)));  // vertical X = a
        }
    } else {
        throw std::invalid_argument("analysis: tangents are defined for curve families only");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string report_json(const Arc& arc, const Spectrum& spec, const CoverageReport& cov) {
    nlohmann::json j;
    j["arc"] = {{"family", arc.family == ArcFamily::hermitian
                               ? "hermitian"
                               : (arc.family == ArcFamily::bks ? "bks" : "custom")},
                {"q", arc.q},
                {"r", arc.r},
                {"size", arc.size()},
                {"field", arc.plane->field()->descriptor()}};
    nlohmann::json sp = nlohmann::json::object();
    for (const auto& [c, cnt] : spec.counts) sp[std::to_string(c)] = cnt;
    j["spectrum"] = std::move(sp);
    j["n"] = cov.n;
    j["is_complete"] = cov.is_complete;
    auto side = [&](const std::vector<u64>& list, u64 count, bool truncated,
                    const std::map<u64, u64>& breakdown) {
        nlohmann::json s;
        s["count"] = count;
        nlohmann::json sample = nlohmann::json::array();
        for (u64 p : list) sample.push_back(arc.plane->point_str(p));
        s["sample"] = std::move(sample);
        s["sample_truncated"] = truncated;
        nlohmann::json bd = nlohmann::json::object();
        for (const auto& [sfo, c] : breakdown) bd[std::to_string(sfo)] = c;
        s["subplane_breakdown"] = std::move(bd);
        return s;
    };
    j["uncovered_off"] = side(cov.uncovered_off, cov.uncovered_off_count, cov.off_truncated,
                              cov.off_subplane);
    j["uncovered_on"] =
        side(cov.uncovered_on, cov.uncovered_on_count, cov.on_truncated, cov.on_subplane);
    return j.dump(2);
}

}  // namespace arcforge
