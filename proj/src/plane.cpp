#include "arcforge/plane.hpp"

#include <algorithm>
#include <sstream>

namespace arcforge {

Plane::Plane(GFPtr F) : F_(std::move(F)) {
    if (!F_) throw std::invalid_argument("plane: null field");
    Q_ = F_->order();
}

u64 Plane::encode(u64 x, u64 y, u64 z) const {
    const GF& F = *F_;
    if (x != 0) {
        const u64 c = F.inv(x);
        return F.mul(y, c) * Q_ + F.mul(z, c);
    }
    if (y != 0) {
        return Q_ * Q_ + F.mul(z, F.inv(y));
    }
    if (z != 0) return Q_ * Q_ + Q_;
    throw std::invalid_argument("plane: (0,0,0) is not a projective triple");
}

std::array<u64, 3> Plane::decode(u64 idx) const {
    if (idx < Q_ * Q_) return {1, idx / Q_, idx % Q_};
    if (idx < Q_ * Q_ + Q_) return {0, 1, idx - Q_ * Q_};
    if (idx == Q_ * Q_ + Q_) return {0, 0, 1};
    throw std::invalid_argument("plane: index out of range");
}

bool Plane::incident(u64 point, u64 line) const {
    const GF& F = *F_;
    const auto p = decode(point);
    const auto l = decode(line);
    return F.add(F.add(F.mul(l[0], p[0]), F.mul(l[1], p[1])), F.mul(l[2], p[2])) == 0;
}

u64 Plane::join(u64 p1, u64 p2) const {
    if (p1 == p2) throw std::invalid_argument("plane: join of equal points");
    const GF& F = *F_;
    const auto a = decode(p1);
    const auto b = decode(p2);
    const u64 u = F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1]));
    const u64 v = F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2]));
    const u64 w = F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]));
    return encode(u, v, w);
}

u64 Plane::meet(u64 l1, u64 l2) const {
    if (l1 == l2) throw std::invalid_argument("plane: meet of equal lines");
    return join(l1, l2);  // same cross product on dual coordinates
}

std::pair<std::array<u64, 3>, std::array<u64, 3>> Plane::incident_basis(
    std::array<u64, 3> t) const {
    const GF& F = *F_;
    const auto [u, v, w] = t;
    if (u != 0) return {{F.neg(v), u, 0}, {F.neg(w), 0, u}};
    if (v != 0) return {{1, 0, 0}, {0, F.neg(w), v}};
    return {{1, 0, 0}, {0, 1, 0}};  // w != 0
}

std::vector<u64> Plane::pencil(u64 point) const {
    require_enumerable();
    const GF& F = *F_;
    const auto [b1, b2] = incident_basis(decode(point));
    std::vector<u64> out;
    out.reserve(Q_ + 1);
    out.push_back(encode(b2[0], b2[1], b2[2]));
    for (u64 t = 0; t < Q_; ++t) {
        out.push_back(encode(F.add(b1[0], F.mul(t, b2[0])), F.add(b1[1], F.mul(t, b2[1])),
                             F.add(b1[2], F.mul(t, b2[2]))));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> Plane::points_on(u64 line) const {
    require_enumerable();
    std::vector<u64> out;
    out.reserve(Q_ + 1);
    for_each_point_on(line, [&](u64 p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

bool Plane::in_subplane(u64 point, u64 s) const {
    const GF& F = *F_;
    const auto p = decode(point);
    return F.in_subfield(p[0], s) && F.in_subfield(p[1], s) && F.in_subfield(p[2], s);
}

std::string Plane::point_str(u64 idx) const {
    const auto p = decode(idx);
    std::ostringstream os;
    os << "(" << F_->elem_str(p[0]) << ":" << F_->elem_str(p[1]) << ":" << F_->elem_str(p[2])
       << ")";
    return os.str();
}

void Plane::require_enumerable() const {
    if (num_points() > max_enumeration())
        throw std::runtime_error("plane: PG(2," + std::to_string(Q_) +
                                 ") exceeds the enumeration bound");
}

}  // namespace arcforge
