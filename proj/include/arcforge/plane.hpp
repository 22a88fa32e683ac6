#pragma once

#include <array>

#include "arcforge/field.hpp"

namespace arcforge {

// PG(2,Q) over a GF context. Points and lines are both stored as canonical
// indices of their normalized homogeneous triple (first nonzero coordinate
// scaled to 1):
//
//   (1:y:z) -> y*Q + z      (0:1:z) -> Q^2 + z      (0:0:1) -> Q^2 + Q
//
// Lines use the identical encoding on dual coordinates [u:v:w] with
// incidence u x + v y + w z = 0. Everything here is read-only and
// thread-safe; enumerations are deterministic.
class Plane {
public:
    explicit Plane(GFPtr F);

    const GFPtr& field() const { return F_; }
    u64 order() const { return Q_; }
    u64 num_points() const { return Q_ * Q_ + Q_ + 1; }
    u64 num_lines() const { return num_points(); }

    u64 encode(u64 x, u64 y, u64 z) const;  // normalizes, rejects (0,0,0)
    std::array<u64, 3> decode(u64 idx) const;

    bool incident(u64 point, u64 line) const;
    u64 join(u64 p1, u64 p2) const;  // throws on equal points
    u64 meet(u64 l1, u64 l2) const;

    std::vector<u64> pencil(u64 point) const;     // Q+1 lines, ascending
    std::vector<u64> points_on(u64 line) const;   // Q+1 points, ascending

    // Hot path used by coverage marking: fn(point index) for every point of
    // the line, unspecified order, no allocation.
    template <class Fn>
    void for_each_point_on(u64 line, Fn&& fn) const {
        const auto [b1, b2] = incident_basis(decode(line));
        fn(encode(b2[0], b2[1], b2[2]));
        const GF& F = *F_;
        for (u64 t = 0; t < Q_; ++t) {
            const u64 x = F.add(b1[0], F.mul(t, b2[0]));
            const u64 y = F.add(b1[1], F.mul(t, b2[1]));
            const u64 z = F.add(b1[2], F.mul(t, b2[2]));
            fn(encode(x, y, z));
        }
    }

    // s = p^j subfield order; true iff all normalized coordinates lie in GF(s).
    bool in_subplane(u64 point, u64 s) const;

    std::string point_str(u64 idx) const;  // "(x:y:z)" polynomial-basis coords

    void require_enumerable() const;  // num_points() within the bound

private:
    // two independent solutions of u x + v y + w z = 0 for the given triple
    std::pair<std::array<u64, 3>, std::array<u64, 3>> incident_basis(
        std::array<u64, 3> triple) const;

    GFPtr F_;
    u64 Q_;
};

using PlanePtr = std::shared_ptr<const Plane>;

}  // namespace arcforge
