#pragma once

// Minimal 3D vector math plus point-to-primitive distance queries for the
// geometric primitives a capture scene is built from (plane, box, sphere,
// capsule). Distances are unsigned; query points inside a solid report
// distance zero with the nearest surface point and its outward normal.

#include <algorithm>
#include <cmath>
#include <variant>

#include "wbpose/errors.hpp"

namespace wbpose {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    bool operator==(const Vec3& o) const = default;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double squared_norm() const { return dot(*this); }
    double norm() const { return std::sqrt(squared_norm()); }

    Vec3 normalized() const {
        const double n = norm();
        if (n <= 0.0) throw SchemaError("cannot normalize a zero vector");
        return *this / n;
    }

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Row-major 3x3 rotation matrix.
struct Mat3 {
    double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    static Mat3 identity() { return {}; }

    Vec3 apply(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    /// Applies the transpose, i.e. the inverse for a rotation.
    Vec3 apply_transposed(const Vec3& v) const {
        return {m[0][0] * v.x + m[1][0] * v.y + m[2][0] * v.z,
                m[0][1] * v.x + m[1][1] * v.y + m[2][1] * v.z,
                m[0][2] * v.x + m[1][2] * v.y + m[2][2] * v.z};
    }

    bool operator==(const Mat3& o) const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (m[i][j] != o.m[i][j]) return false;
        return true;
    }
};

/// Rz(yaw) * Ry(pitch) * Rx(roll), angles in radians.
inline Mat3 rotation_rpy(double roll, double pitch, double yaw) {
    const double cr = std::cos(roll), sr = std::sin(roll);
    const double cp = std::cos(pitch), sp = std::sin(pitch);
    const double cy = std::cos(yaw), sy = std::sin(yaw);
    Mat3 r;
    r.m[0][0] = cy * cp;
    r.m[0][1] = cy * sp * sr - sy * cr;
    r.m[0][2] = cy * sp * cr + sy * sr;
    r.m[1][0] = sy * cp;
    r.m[1][1] = sy * sp * sr + cy * cr;
    r.m[1][2] = sy * sp * cr - cy * sr;
    r.m[2][0] = -sp;
    r.m[2][1] = cp * sr;
    r.m[2][2] = cp * cr;
    return r;
}

// -- Primitives ---------------------------------------------------------

struct Plane {
    Vec3 point;
    Vec3 normal;  // unit length
};

struct Box {
    Vec3 center;
    Vec3 half_extents;  // all > 0
    Mat3 orientation;   // local-to-world rotation
};

struct Sphere {
    Vec3 center;
    double radius = 0.0;  // > 0
};

struct Capsule {
    Vec3 p0;
    Vec3 p1;
    double radius = 0.0;  // > 0
};

using Primitive = std::variant<Plane, Box, Sphere, Capsule>;

/// Result of a point-to-surface query. `normal` points outward from the
/// surface toward the query side; it is unit length.
struct SurfacePoint {
    double distance = 0.0;
    Vec3 closest;
    Vec3 normal;
};

namespace detail {

inline constexpr double kTiny = 1e-12;

// Direction from `axis_point` toward `p`, falling back to +z (then a vector
// orthogonal to `axis`) when `p` sits on the axis itself.
inline Vec3 radial_direction(const Vec3& p, const Vec3& axis_point, const Vec3& axis) {
    const Vec3 r = p - axis_point;
    if (r.norm() > kTiny) return r / r.norm();
    const Vec3 z{0.0, 0.0, 1.0};
    if (axis.norm() <= kTiny) return z;
    const Vec3 a = axis / axis.norm();
    Vec3 w = z - a * z.dot(a);
    if (w.norm() <= kTiny) {
        const Vec3 x{1.0, 0.0, 0.0};
        w = x - a * x.dot(a);
    }
    return w / w.norm();
}

inline SurfacePoint distance_to_plane(const Vec3& p, const Plane& pl) {
    const double signed_d = (p - pl.point).dot(pl.normal);
    SurfacePoint out;
    out.distance = std::abs(signed_d);
    out.closest = p - pl.normal * signed_d;
    out.normal = signed_d < 0.0 ? -pl.normal : pl.normal;
    return out;
}

inline SurfacePoint distance_to_sphere(const Vec3& p, const Sphere& s) {
    const Vec3 dir = radial_direction(p, s.center, {0, 0, 0});
    const double center_dist = (p - s.center).norm();
    SurfacePoint out;
    out.distance = std::max(0.0, center_dist - s.radius);
    out.closest = s.center + dir * s.radius;
    out.normal = dir;
    return out;
}

inline SurfacePoint distance_to_box(const Vec3& p, const Box& b) {
    const Vec3 q = b.orientation.apply_transposed(p - b.center);
    const Vec3 h = b.half_extents;
    const Vec3 clamped{std::clamp(q.x, -h.x, h.x), std::clamp(q.y, -h.y, h.y),
                       std::clamp(q.z, -h.z, h.z)};
    SurfacePoint out;
    const Vec3 delta = q - clamped;
    const double d = delta.norm();
    if (d > kTiny) {
        out.distance = d;
        out.closest = b.orientation.apply(clamped) + b.center;
        out.normal = b.orientation.apply(delta / d);
        return out;
    }
    // Inside (or on the surface): snap to the nearest face.
    const double gaps[3] = {h.x - std::abs(q.x), h.y - std::abs(q.y), h.z - std::abs(q.z)};
    int axis = 0;
    if (gaps[1] < gaps[axis]) axis = 1;
    if (gaps[2] < gaps[axis]) axis = 2;
    Vec3 local = q;
    Vec3 n_local{0, 0, 0};
    const double coords[3] = {q.x, q.y, q.z};
    const double extents[3] = {h.x, h.y, h.z};
    const double side = coords[axis] >= 0.0 ? 1.0 : -1.0;
    if (axis == 0) { local.x = side * extents[0]; n_local.x = side; }
    if (axis == 1) { local.y = side * extents[1]; n_local.y = side; }
    if (axis == 2) { local.z = side * extents[2]; n_local.z = side; }
    out.distance = 0.0;
    out.closest = b.orientation.apply(local) + b.center;
    out.normal = b.orientation.apply(n_local);
    return out;
}

inline SurfacePoint distance_to_capsule(const Vec3& p, const Capsule& c) {
    const Vec3 ab = c.p1 - c.p0;
    const double len2 = ab.squared_norm();
    double t = 0.0;
    if (len2 > kTiny) t = std::clamp((p - c.p0).dot(ab) / len2, 0.0, 1.0);
    const Vec3 s = c.p0 + ab * t;
    const Vec3 dir = radial_direction(p, s, ab);
    SurfacePoint out;
    out.distance = std::max(0.0, (p - s).norm() - c.radius);
    out.closest = s + dir * c.radius;
    out.normal = dir;
    return out;
}

}  // namespace detail

inline SurfacePoint distance_to(const Vec3& point, const Primitive& prim) {
    return std::visit(
        [&](const auto& shape) -> SurfacePoint {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, Plane>) return detail::distance_to_plane(point, shape);
            if constexpr (std::is_same_v<T, Sphere>) return detail::distance_to_sphere(point, shape);
            if constexpr (std::is_same_v<T, Box>) return detail::distance_to_box(point, shape);
            if constexpr (std::is_same_v<T, Capsule>) return detail::distance_to_capsule(point, shape);
        },
        prim);
}

}  // namespace wbpose
