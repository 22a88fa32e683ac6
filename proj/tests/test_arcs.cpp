#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arcforge/arcs.hpp"
#include "arcforge/census.hpp"

using namespace arcforge;

namespace {

// size of the Hermitian point set in PG(2, q^{2r}): q^{2r} + 1 +- q^{r+1}(q-1),
// plus for odd r, minus for even r
u64 hermitian_size_formula(u64 q, unsigned r) {
    u64 plane = 1, corr = q - 1;
    for (unsigned i = 0; i < 2 * r; ++i) plane *= q;
    for (unsigned i = 0; i < r + 1; ++i) corr *= q;
    return r % 2 == 1 ? plane + 1 + corr : plane + 1 - corr;
}

}  // namespace

TEST_CASE("hermitian sizes across q and r") {
    for (u64 q : {2, 3, 4, 5}) {
        for (unsigned r : {1u, 2u, 3u}) {
            const Arc arc = hermitian_arc(q, r);
            CHECK(arc.size() == hermitian_size_formula(q, r));
        }
    }
    CHECK(hermitian_arc(2, 1).size() == 9);
    CHECK(hermitian_arc(2, 3).size() == 81);
}

TEST_CASE("hermitian points satisfy the curve equation") {
    const Arc arc = hermitian_arc(3, 2);
    const Plane& pl = *arc.plane;
    const GF& F = *pl.field();
    for (u64 idx : arc.points) {
        const auto c = pl.decode(idx);
        // X^{q+1} + Y^q Z + Y Z^q = 0
        const u64 v = F.add(F.pow(c[0], 4),
                            F.add(F.mul(F.pow(c[1], 3), c[2]), F.mul(c[1], F.pow(c[2], 3))));
        CHECK(v == 0);
    }
    CHECK(arc.contains(pl.encode(0, 1, 0)));
}

TEST_CASE("r = 2 collapses into the subplane and embeds the unital") {
    const Arc arc22 = hermitian_arc(2, 2);
    CHECK(arc22.size() == 9);
    for (u64 idx : arc22.points) CHECK(arc22.plane->in_subplane(idx, 4));
    // subfield consistency at r = 3: the PG(2,q^2) part is the unital
    const Arc arc23 = hermitian_arc(2, 3);
    u64 in_sub = 0;
    for (u64 idx : arc23.points)
        if (arc23.plane->in_subplane(idx, 4)) ++in_sub;
    CHECK(in_sub == 9);
    const Arc arc32 = hermitian_arc(3, 3);
    in_sub = 0;
    for (u64 idx : arc32.points)
        if (arc32.plane->in_subplane(idx, 9)) ++in_sub;
    CHECK(in_sub == 28);  // q^3 + 1
}

TEST_CASE("bks parametric sizes and dedup") {
    CHECK(bks_arc_parametric(3, 1).size() == 4);   // conic points only
    CHECK(bks_arc_parametric(3, 2).size() == 7);   // 9 + 1 - 3 conjugate pairs
    CHECK(bks_arc_parametric(3, 4).size() == 79);  // 81 + 1 - 3
    CHECK(bks_arc_parametric(5, 2).size() == 16);  // 25 + 1 - 10
    CHECK_THROWS_AS(bks_arc_parametric(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(bks_arc_parametric(4, 1), std::invalid_argument);
}

TEST_CASE("bks implicit equals parametric for even r, adds the nodes for odd r") {
    for (auto [q, r] : {std::pair<u64, unsigned>{3, 2}, {3, 4}, {5, 2}}) {
        const Arc par = bks_arc_parametric(q, r);
        const Arc imp = bks_arc_implicit(q, r);
        CHECK(par.points == imp.points);
    }
    for (auto [q, r] : {std::pair<u64, unsigned>{3, 3}, {5, 3}, {3, 5}}) {
        const Arc par = bks_arc_parametric(q, r);
        const Arc imp = bks_arc_implicit(q, r);
        CHECK(imp.size() == par.size() + q * (q - 1) / 2);
        for (u64 idx : par.points) CHECK(imp.contains(idx));
        const auto nodes = node_set(imp.plane, q);
        for (u64 n : nodes) {
            CHECK(imp.contains(n));
            CHECK_FALSE(par.contains(n));
        }
    }
}

TEST_CASE("bks r = 1 sizes") {
    CHECK(bks_arc_implicit(3, 1).size() == 7);    // (q^2+q+2)/2
    CHECK(bks_arc_implicit(5, 1).size() == 16);
    CHECK(bks_arc_implicit(7, 1).size() == 29);
}

TEST_CASE("parametric points satisfy the implicit equation and rational params hit the conic") {
    const Arc arc = bks_arc_parametric(3, 3);
    const auto conic = conic_points(arc.plane);
    const GF& F = *arc.plane->field();
    const u64 two = F.two();
    // P(t) for t in GF(q) plus infinity lie on the conic
    std::set<u64> conicset(conic.begin(), conic.end());
    for (u64 t : F.subfield_elements(3)) {
        const u64 x = F.mul(two, F.pow(F.add(t, 1), 4));
        const u64 y = F.add(F.add(two, t), F.pow(t, 3));
        CHECK(conicset.count(arc.plane->encode(x, y, 1)));
    }
    CHECK(conicset.count(arc.plane->encode(1, 0, 0)));
}

TEST_CASE("node sets") {
    const auto pl3 = plane_for(3, 1);
    CHECK(node_set(pl3, 3).size() == 3);
    const auto pl5 = plane_for(5, 1);
    const auto nodes5 = node_set(pl5, 5);
    CHECK(nodes5.size() == 10);
    // internal-point criterion: a node lies on zero tangents of the conic
    const auto conic = conic_points(pl5);
    std::vector<u64> tangents;
    for (u64 l = 0; l < pl5->num_lines(); ++l) {
        u64 c = 0;
        for (u64 pt : conic)
            if (pl5->incident(pt, l)) ++c;
        if (c == 1) tangents.push_back(l);
    }
    CHECK(tangents.size() == 6);  // one tangent per conic point
    for (u64 n : nodes5) {
        u64 through = 0;
        for (u64 l : tangents)
            if (pl5->incident(n, l)) ++through;
        CHECK(through == 0);
    }
    // nodes are exactly the singular points of the r=1 arc
    const Arc arc = bks_arc_implicit(5, 1);
    for (u64 n : nodes5) CHECK(arc.contains(n));
}

TEST_CASE("conic point counts") {
    CHECK(conic_points(plane_for(3, 2)).size() == 10);
    CHECK(conic_points(plane_for(5, 1)).size() == 6);
    CHECK(conic_points(plane_for(3, 3)).size() == 28);
}

TEST_CASE("custom arcs") {
    const Arc base = hermitian_arc(2, 1);
    const Arc single = custom_arc(base.plane, {5});
    CHECK(single.size() == 1);
    // union with one off-curve point
    u64 extra = 0;
    while (base.contains(extra)) ++extra;
    std::vector<u64> pts = base.points;
    pts.push_back(extra);
    const Arc bigger = custom_arc(base.plane, pts);
    CHECK(bigger.size() == 10);
    // re-canonicalization is idempotent
    const Arc again = custom_arc(bigger.plane, bigger.points);
    CHECK(again.points == bigger.points);
    CHECK_THROWS_AS(custom_arc(base.plane, {base.plane->num_points()}), std::invalid_argument);
}

TEST_CASE("arc json export imports back and re-exports byte-identically") {
    for (const Arc& arc : {hermitian_arc(2, 1), bks_arc_implicit(3, 2), hermitian_arc(3, 1)}) {
        const std::string j1 = arc_to_json(arc);
        const Arc back = arc_from_json(j1);
        CHECK(back.points == arc.points);
        CHECK(back.q == arc.q);
        CHECK(back.r == arc.r);
        CHECK(arc_to_json(back) == j1);
    }
}

TEST_CASE("prime power decomposition") {
    CHECK(prime_power(9) == std::pair<u64, unsigned>{3, 2});
    CHECK(prime_power(64) == std::pair<u64, unsigned>{2, 6});
    CHECK(prime_power(7) == std::pair<u64, unsigned>{7, 1});
    CHECK_THROWS_AS(prime_power(12), std::invalid_argument);
    CHECK_THROWS_AS(prime_power(1), std::invalid_argument);
}
