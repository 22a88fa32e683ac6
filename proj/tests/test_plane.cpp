#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "arcforge/plane.hpp"

using namespace arcforge;

namespace {

PlanePtr make_plane(u64 p, unsigned m) {
    return std::make_shared<const Plane>(GF::make(p, m));
}

}  // namespace

TEST_CASE("encoding is canonical and scale invariant") {
    const auto pl = make_plane(2, 2);
    CHECK(pl->num_points() == 21);
    CHECK_THROWS_AS(pl->encode(0, 0, 0), std::invalid_argument);
    const GF& F = *pl->field();
    std::mt19937_64 rng(4);
    for (int i = 0; i < 500; ++i) {
        u64 x = rng() % 4, y = rng() % 4, z = rng() % 4;
        if (x == 0 && y == 0 && z == 0) continue;
        const u64 idx = pl->encode(x, y, z);
        for (u64 c = 1; c < 4; ++c)
            CHECK(pl->encode(F.mul(c, x), F.mul(c, y), F.mul(c, z)) == idx);
        const auto d = pl->decode(idx);
        CHECK(pl->encode(d[0], d[1], d[2]) == idx);
    }
    // decode of every index is normalized with leading coordinate 1
    for (u64 i = 0; i < pl->num_points(); ++i) {
        const auto d = pl->decode(i);
        const u64 first = d[0] ? d[0] : (d[1] ? d[1] : d[2]);
        CHECK(first == 1);
    }
}

TEST_CASE("join and meet") {
    const auto pl = make_plane(2, 2);
    CHECK(pl->join(pl->encode(1, 0, 0), pl->encode(0, 1, 0)) == pl->encode(0, 0, 1));
    CHECK_THROWS_AS(pl->join(3, 3), std::invalid_argument);
    // join over GF(4): (1:g:1), (1:g:0) -> the unique line on both
    const u64 p1 = pl->encode(1, 2, 1), p2 = pl->encode(1, 2, 0);
    const u64 l = pl->join(p1, p2);
    CHECK(pl->incident(p1, l));
    CHECK(pl->incident(p2, l));
    u64 lines_on_both = 0;
    for (u64 cand = 0; cand < pl->num_lines(); ++cand)
        if (pl->incident(p1, cand) && pl->incident(p2, cand)) ++lines_on_both;
    CHECK(lines_on_both == 1);
    // meet(join(P,Q), join(P,R)) = P for non-collinear triples
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 100) {
        const u64 P = rng() % 21, Q = rng() % 21, R = rng() % 21;
        if (P == Q || P == R || Q == R) continue;
        if (pl->incident(R, pl->join(P, Q))) continue;
        CHECK(pl->meet(pl->join(P, Q), pl->join(P, R)) == P);
        ++done;
    }
}

TEST_CASE("plane axioms exhaustively at small orders") {
    for (auto [p, m] : {std::pair<u64, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                        {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
        const auto pl = make_plane(p, m);
        const u64 Q = pl->order();
        CHECK(pl->num_points() == Q * Q + Q + 1);
        for (u64 l = 0; l < pl->num_lines(); ++l) {
            const auto pts = pl->points_on(l);
            CHECK(pts.size() == Q + 1);
            CHECK(std::set<u64>(pts.begin(), pts.end()).size() == Q + 1);
            for (u64 pt : pts) CHECK(pl->incident(pt, l));
        }
        std::mt19937_64 rng(3);
        for (int i = 0; i < 300; ++i) {
            const u64 A = rng() % pl->num_points(), B = rng() % pl->num_points();
            if (A == B) continue;
            const u64 l = pl->join(A, B);
            CHECK(pl->incident(A, l));
            CHECK(pl->incident(B, l));
        }
    }
}

TEST_CASE("axioms sampled at Q = 1024") {
    const auto pl = make_plane(2, 10);
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 200) {
        const u64 A = rng() % pl->num_points(), B = rng() % pl->num_points(),
                  C = rng() % pl->num_points();
        if (A == B || A == C || B == C) continue;
        const u64 l = pl->join(A, B);
        CHECK(pl->incident(A, l));
        CHECK(pl->incident(B, l));
        if (!pl->incident(C, l)) CHECK(pl->meet(l, pl->join(A, C)) == A);
        ++done;
    }
    CHECK(pl->points_on(42).size() == 1025);
}

TEST_CASE("pencils") {
    const auto pl = make_plane(2, 2);
    for (u64 P = 0; P < pl->num_points(); ++P) {
        const auto lines = pl->pencil(P);
        CHECK(lines.size() == 5);
        CHECK(std::set<u64>(lines.begin(), lines.end()).size() == 5);
        for (u64 l : lines) CHECK(pl->incident(P, l));
    }
    // the pencil of one point covers the plane: sum (|points_on| - 1) = Q^2+Q
    u64 total_cover = 0;
    for (u64 l : pl->pencil(7)) total_cover += pl->points_on(l).size() - 1;
    CHECK(total_cover == 20);
    // points on [0:0:1] are exactly the (x:y:0) shapes
    const auto z0 = pl->points_on(pl->encode(0, 0, 1));
    CHECK(z0.size() == 5);
    for (u64 pt : z0) CHECK(pl->decode(pt)[2] == 0);
}

TEST_CASE("subplane membership") {
    const auto pl = make_plane(2, 4);  // PG(2,16)
    u64 count = 0, count2 = 0;
    for (u64 P = 0; P < pl->num_points(); ++P) {
        if (pl->in_subplane(P, 4)) ++count;
        if (pl->in_subplane(P, 2)) ++count2;
    }
    CHECK(count == 21);  // 4^2 + 4 + 1
    CHECK(count2 == 7);
    // (1:g:0) with g in GF(4) \ GF(2)
    const GF& F = *pl->field();
    u64 alpha = 0;
    for (u64 x = 2; x < 16; ++x) {
        if (F.in_subfield(x, 4) && !F.in_subfield(x, 2)) {
            alpha = x;
            break;
        }
    }
    REQUIRE(alpha != 0);
    const u64 P = pl->encode(1, alpha, 0);
    CHECK(pl->in_subplane(P, 4));
    CHECK_FALSE(pl->in_subplane(P, 2));
}

TEST_CASE("duality of the incidence pairing") {
    const auto pl = make_plane(3, 1);
    for (u64 a = 0; a < pl->num_points(); ++a)
        for (u64 b = 0; b < pl->num_points(); ++b)
            CHECK(pl->incident(a, b) == pl->incident(b, a));
}

TEST_CASE("point serialization") {
    const auto pl = make_plane(2, 2);
    CHECK(pl->point_str(pl->encode(0, 1, 0)) == "(0:1:0)");
    CHECK(pl->point_str(pl->encode(1, 2, 3)) == "(1:g:g+1)");
}
