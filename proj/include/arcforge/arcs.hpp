#pragma once

#include "arcforge/plane.hpp"

namespace arcforge {

enum class ArcFamily { hermitian, bks, custom };
enum class ArcConstruction { implicit, parametric, custom };

// A point set in a plane with provenance metadata. Point indices are sorted
// and unique (set semantics); immutable once built.
struct Arc {
    PlanePtr plane;
    std::vector<u64> points;
    ArcFamily family = ArcFamily::custom;
    u64 q = 0;
    unsigned r = 0;
    ArcConstruction construction = ArcConstruction::custom;

    u64 size() const { return points.size(); }
    bool contains(u64 idx) const;
};

// Decomposes a prime power; throws otherwise.
std::pair<u64, unsigned> prime_power(u64 q);

// All points of X^{q+1} + Y^q Z + Y Z^q = 0 in PG(2, q^{2r}), including the
// single infinite point (0:1:0). Solves y^q + y = -x^{q+1} per x through the
// precomputed GF(p)-linear system for y -> y^q + y.
Arc hermitian_arc(u64 q, unsigned r);

// {P(t) = (2(t+1)^{q+1} : 2+t+t^q : 1), t in GF(q^r)} plus (1:0:0),
// deduplicated; q odd. t = 0 is included: P(0) = (2,2) satisfies the curve
// equation in every odd characteristic.
Arc bks_arc_parametric(u64 q, unsigned r);

// All PG(2,q^r) points of the homogenized curve
// Y^{q+1} - (X^q Z + X Z^q) + (Y^2 - 2XZ)^{(q+1)/2} = 0, singular points
// included; q odd.
Arc bks_arc_implicit(u64 q, unsigned r);

// Points of the given plane lying in the subplane PG(2,q) at which the BKS
// curve equation and both affine partial derivatives vanish. Size q(q-1)/2.
std::vector<u64> node_set(const PlanePtr& plane, u64 q);

// PG(2,Q) points of the conic Y^2 = 2XZ; size Q+1; odd characteristic.
std::vector<u64> conic_points(const PlanePtr& plane);

// Validates and canonicalizes an arbitrary point set.
Arc custom_arc(PlanePtr plane, std::vector<u64> points);

// JSON export/import: {family, q, r, construction, field, points:[(x:y:z)...]}
std::string arc_to_json(const Arc& arc);
Arc arc_from_json(const std::string& text);

// Shared plane/field builders (q = p^j, plane over GF(q^r)).
GFPtr field_for(u64 q, unsigned r);
PlanePtr plane_for(u64 q, unsigned r);

}  // namespace arcforge
