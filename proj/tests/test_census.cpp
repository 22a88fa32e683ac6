#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "arcforge/arcs.hpp"
#include "arcforge/census.hpp"
#include "arcforge/tasks.hpp"

using namespace arcforge;

namespace {

u64 fixed_points(const CycleType& t) {
    u64 fp = 0;
    for (unsigned part : t.parts)
        if (part == 1) ++fp;
    return fp;
}

std::map<CycleType, u64> as_map(std::initializer_list<std::pair<std::vector<unsigned>, u64>> il) {
    std::map<CycleType, u64> out;
    for (const auto& [parts, c] : il) out[CycleType(std::vector<unsigned>(parts))] = c;
    return out;
}

// brute-force symmetric group cycle distribution for comparison tests
GroupCycleDistribution sym_distribution(unsigned n) {
    GroupCycleDistribution dist;
    dist.name = "Sym" + std::to_string(n);
    dist.degree = n;
    std::vector<u64> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    u64 order = 0;
    do {
        std::vector<bool> seen(n, false);
        std::vector<unsigned> parts;
        for (unsigned i = 0; i < n; ++i) {
            if (seen[i]) continue;
            unsigned len = 0;
            u64 j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            parts.push_back(len);
        }
        ++dist.counts[CycleType(std::move(parts))];
        ++order;
    } while (std::next_permutation(perm.begin(), perm.end()));
    dist.order = order;
    return dist;
}

}  // namespace

TEST_CASE("pgl2 distributions") {
    const auto d2 = pgl2_distribution(2);
    CHECK(d2.order == 6);
    CHECK(d2.degree == 3);
    CHECK(d2.counts == as_map({{{1, 1, 1}, 1}, {{2, 1}, 3}, {{3}, 2}}));
    const auto d3 = pgl2_distribution(3);
    CHECK(d3.order == 24);
    CHECK(d3.counts == as_map({{{1, 1, 1, 1}, 1},
                               {{2, 1, 1}, 6},
                               {{2, 2}, 3},
                               {{3, 1}, 8},
                               {{4}, 6}}));
    // sharp 3-transitivity: only the identity fixes 3 or more points
    for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto d = pgl2_distribution(q);
        CHECK(d.order == q * q * q - q);
        u64 total = 0;
        for (const auto& [t, c] : d.counts) {
            total += c;
            if (fixed_points(t) >= 3) CHECK(t.parts == std::vector<unsigned>(q + 1, 1));
        }
        CHECK(total == d.order);
    }
    CHECK_THROWS_AS(pgl2_distribution(17), std::invalid_argument);
}

TEST_CASE("agl1 distributions") {
    const auto d3 = agl1_distribution(3);
    CHECK(d3.counts == as_map({{{1, 1, 1}, 1}, {{2, 1}, 3}, {{3}, 2}}));
    const auto d5 = agl1_distribution(5);
    CHECK(d5.order == 20);
    CHECK(d5.counts == as_map({{{1, 1, 1, 1, 1}, 1},
                               {{5}, 4},
                               {{2, 2, 1}, 5},
                               {{4, 1}, 10}}));
    // sharp 2-transitivity: only the identity fixes 2 or more points
    for (u64 q : {2, 3, 4, 5, 7, 8, 9, 16}) {
        const auto d = agl1_distribution(q);
        CHECK(d.order == q * (q - 1));
        for (const auto& [t, c] : d.counts) {
            (void)c;
            if (fixed_points(t) >= 2) CHECK(t.parts == std::vector<unsigned>(q, 1));
        }
    }
}

TEST_CASE("regular group distributions") {
    const auto c4 = cyclic_regular_distribution(4);
    CHECK(c4.counts == as_map({{{1, 1, 1, 1}, 1}, {{2, 2}, 1}, {{4}, 2}}));
    const auto e9 = elementary_abelian_regular_distribution(3, 2);
    CHECK(e9.order == 9);
    CHECK(e9.counts == as_map({{std::vector<unsigned>(9, 1), 1}, {{3, 3, 3}, 8}}));
}

TEST_CASE("census preconditions and conservation") {
    const auto F = GF::make(3, 4);
    // (0,0) lies on the Hermitian curve
    CHECK_THROWS_AS(specialization_census(CensusFamily::hermitian_line, F, 3, 0, 0),
                    std::invalid_argument);
    // on-point inside PG(2,q^2) rejected without the degenerate flag
    CHECK_THROWS_AS(specialization_census(CensusFamily::hermitian_onpoint, F, 3, 0, 0),
                    std::invalid_argument);
    CHECK_NOTHROW(specialization_census(CensusFamily::hermitian_onpoint, F, 3, 0, 0, true));
    // bks on-point needs t outside GF(q^2)
    CHECK_THROWS_AS(specialization_census(CensusFamily::bks_onpoint, F, 3, 1, 0),
                    std::invalid_argument);
    // an off-curve (a,b): conservation and csv shape
    u64 a = 1, b = 1;
    while (on_hermitian_curve(*F, 3, a, b)) ++b;
    const auto rep = specialization_census(CensusFamily::hermitian_line, F, 3, a, b);
    CHECK(rep.ramified + rep.skipped + rep.samples() == F->order());
    CHECK(rep.rows.size() == F->order());
    const std::string csv = rep.to_csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(F->order()));
    // ramified slopes equal the rational tangent-polynomial roots
    const auto roots = roots_in_field(hermitian_tangent_poly(F, 3, a, b));
    CHECK(rep.ramified == roots.count());
    CHECK(rep.ramified <= 4);
}

TEST_CASE("merged reports drop rows and add counts") {
    const auto F = GF::make(3, 4);
    u64 a = 1, b = 1;
    while (on_hermitian_curve(*F, 3, a, b)) ++b;
    auto r1 = specialization_census(CensusFamily::hermitian_line, F, 3, a, b);
    const u64 s1 = r1.samples();
    u64 a2 = a, b2 = b + 1;
    while (on_hermitian_curve(*F, 3, a2, b2)) ++b2;
    auto r2 = specialization_census(CensusFamily::hermitian_line, F, 3, a2, b2);
    r1.merge(r2);
    CHECK(r1.samples() == s1 + r2.samples());
    CHECK(r1.draws == 2);
    CHECK_FALSE(r1.rows_valid);
    CHECK_THROWS_AS(r1.to_csv(), std::logic_error);
}

TEST_CASE("calibration censuses have uniform parts only") {
    const auto F = GF::make(3, 4);
    const auto rep1 = specialization_census(CensusFamily::calibration_i, F, 3, 0, 0);
    for (const auto& [pat, c] : rep1.patterns) {
        (void)c;
        CHECK(pat.uniform());
    }
    const auto cmp1 = compare_distribution(rep1, cyclic_regular_distribution(4));
    CHECK(cmp1.support_ok);
    // family II: pick w with w^2 = -1
    u64 w = 0;
    for (u64 c = 1; c < 81; ++c)
        if (F->pow(c, 2) == F->neg(1)) {
            w = c;
            break;
        }
    REQUIRE(w != 0);
    const auto rep2 = specialization_census(CensusFamily::calibration_ii, F, 3, 0, w);
    CHECK(rep2.ramified == 0);
    for (const auto& [pat, c] : rep2.patterns) {
        (void)c;
        CHECK(pat.uniform());
    }
    const auto cmp2 = compare_distribution(rep2, elementary_abelian_regular_distribution(3, 1));
    CHECK(cmp2.support_ok);
    // 81 samples sit below the statistical tiers; the tolerance applies from
    // 500 samples up, so check it over GF(3^6)
    const auto F6 = GF::make(3, 6);
    u64 w6 = 0;
    for (u64 c = 1; c < F6->order(); ++c)
        if (F6->pow(c, 2) == F6->neg(1)) {
            w6 = c;
            break;
        }
    REQUIRE(w6 != 0);
    const auto rep6 = specialization_census(CensusFamily::calibration_ii, F6, 3, 0, w6);
    CHECK(rep6.samples() >= 500);
    const auto cmp6 = compare_distribution(rep6, elementary_abelian_regular_distribution(3, 1));
    CHECK(cmp6.support_ok);
    CHECK(cmp6.tv <= 0.15);
    const auto rep6c = specialization_census(CensusFamily::calibration_i, F6, 3, 0, 0);
    const auto cmp6c = compare_distribution(rep6c, cyclic_regular_distribution(4));
    CHECK(cmp6c.support_ok);
    CHECK(cmp6c.tv <= 0.15);
}

TEST_CASE("on-point censuses avoid the forbidden near-identity patterns") {
    // a sharply 2-transitive group fixes at most one point, so degree-5
    // patterns 2+1+1+1 and 3+1+1 must never appear
    const auto F = GF::make(5, 6);
    const auto rep = aggregate_census(CensusFamily::hermitian_onpoint, F, 5, 5000, 1);
    CHECK(rep.samples() >= 5000);
    CHECK(rep.patterns.count(CycleType({2, 1, 1, 1})) == 0);
    CHECK(rep.patterns.count(CycleType({3, 1, 1})) == 0);
    const auto cmp = compare_distribution(rep, agl1_distribution(5));
    CHECK(cmp.support_ok);
}

TEST_CASE("distribution comparison statistics") {
    // identity comparison: a census synthesized from the group itself
    const auto d = pgl2_distribution(3);
    CensusReport synth;
    synth.family = CensusFamily::hermitian_line;
    synth.q = 3;
    synth.degree = 4;
    synth.field_order = d.order;
    synth.patterns = d.counts;
    const auto self = compare_distribution(synth, d);
    CHECK(self.support_ok);
    CHECK(self.tv == doctest::Approx(0.0));
    // a genuine census against the wrong (symmetric) group: the distance blows
    // up even though the support stays legal inside Sym
    const auto F = GF::make(3, 6);
    const auto rep = aggregate_census(CensusFamily::bks_onpoint, F, 3, 2000, 3);
    const auto right = compare_distribution(rep, agl1_distribution(3));
    CHECK(right.support_ok);
    CHECK(right.tv <= 0.15);
    const auto F5 = GF::make(5, 4);
    const auto rep5 = aggregate_census(CensusFamily::bks_onpoint, F5, 5, 2000, 3);
    const auto wrong = compare_distribution(rep5, sym_distribution(5));
    CHECK(wrong.tv > 0.2);
    CHECK_THROWS_AS(compare_distribution(rep5, pgl2_distribution(3)), std::invalid_argument);
}

TEST_CASE("tower consistency at q=2 over GF(64)") {
    const auto F = GF::make(2, 6);
    u64 a = 2, b = 0;
    while (on_hermitian_curve(*F, 2, a, b)) ++b;
    const auto slopes = find_split_slopes(TowerFamily::hermitian, F, 2, a, b, 3);
    REQUIRE(slopes.size() == 3);
    for (u64 m0 : slopes) {
        const auto chk = tower_consistency(TowerFamily::hermitian, F, 2, a, b, m0);
        CHECK(chk.ok());
        CHECK(chk.roots == 3);
        CHECK(chk.pairs == 6);    // (q+1) roots x q derivative roots
        CHECK(chk.w_found == 6);  // totally split slopes lift completely
    }
    // a ramified slope is rejected
    const auto ram = roots_in_field(hermitian_tangent_poly(F, 2, a, b));
    if (!ram.roots.empty())
        CHECK_THROWS_AS(tower_consistency(TowerFamily::hermitian, F, 2, a, b, ram.roots[0]),
                        std::invalid_argument);
}

TEST_CASE("bks tower consistency at q=3 over GF(3^6)") {
    const auto F = GF::make(3, 6);
    u64 a = 1, b = 0;
    while (on_bks_curve(*F, 3, a, b)) ++b;
    const auto slopes = find_split_slopes(TowerFamily::bks, F, 3, a, b, 2);
    REQUIRE(slopes.size() == 2);
    for (u64 m0 : slopes) {
        const auto chk = tower_consistency(TowerFamily::bks, F, 3, a, b, m0);
        CHECK(chk.ok());
        CHECK(chk.roots == 4);
        CHECK(chk.pairs == 12);
    }
}

TEST_CASE("ramified place counts reject a too-small closure field") {
    const auto F64 = GF::make(2, 6);
    bool found_nonsplit = false;
    for (u64 a = 0; a < 64 && !found_nonsplit; ++a) {
        for (u64 b = 0; b < 64 && !found_nonsplit; ++b) {
            if (on_hermitian_curve(*F64, 2, a, b)) continue;
            if (roots_in_field(hermitian_tangent_poly(F64, 2, a, b)).count() != 3) {
                CHECK_THROWS_AS(ramified_place_count(TowerFamily::hermitian, F64, 2, a, b),
                                std::invalid_argument);
                found_nonsplit = true;
            }
        }
    }
    CHECK(found_nonsplit);
}

TEST_CASE("degenerate subplane census runs report-only") {
    // external point of PG(2,q) for the BKS family: allow_degenerate computes
    // the census without asserting a target group
    const u64 q = 11;
    const auto F = GF::make(11, 3);
    u64 aa = 0, bb = 0;
    bool found = false;
    for (u64 a = 1; a < 11 && !found; ++a) {
        for (u64 b = 0; b < 11 && !found; ++b) {
            if (!on_bks_curve(*F, q, a, b)) {
                aa = a;
                bb = b;
                found = true;
            }
        }
    }
    REQUIRE(found);
    const auto rep = specialization_census(CensusFamily::bks_line_monic, F, q, aa, bb, true);
    CHECK(rep.ramified + rep.skipped + rep.samples() == F->order());
    CHECK(rep.samples() > 0);
}
