#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spheresub {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.14159265358979323846;

/// Point on (or near) the unit 2-sphere in R^3.
struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(const Vec3& a) {
    double n = norm(a);
    if (n < 1e-300) throw Error("cannot normalize zero vector");
    return a * (1.0 / n);
}

/// Great-circle (angular) distance, stable for near and antipodal pairs.
inline double sphere_angle(const Vec3& a, const Vec3& b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

/// Interpolate along the shorter great-circle arc from a to b.
inline Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
    double ang = sphere_angle(a, b);
    if (ang < 1e-12) return normalized(a * (1.0 - t) + b * t);
    if (ang > kPi - 1e-9) throw Error("slerp undefined for antipodal points");
    double s = std::sin(ang);
    return normalized(a * (std::sin((1.0 - t) * ang) / s) + b * (std::sin(t * ang) / s));
}

/// Uniformly sampled polyline on the sphere; parameter t in [0,1] maps
/// linearly over the points, geodesic interpolation between samples.
struct Polyline {
    std::vector<Vec3> pts;

    size_t segments() const { return pts.empty() ? 0 : pts.size() - 1; }

    Vec3 at(double t) const {
        if (pts.empty()) throw Error("empty polyline");
        if (pts.size() == 1) return pts[0];
        t = std::clamp(t, 0.0, 1.0);
        double s = t * double(segments());
        size_t i = std::min(size_t(s), segments() - 1);
        double local = s - double(i);
        if (local <= 0.0) return pts[i];
        if (local >= 1.0) return pts[i + 1];
        double ang = sphere_angle(pts[i], pts[i + 1]);
        if (ang < 1e-14) return pts[i];
        return slerp(pts[i], pts[i + 1], local);
    }

    double length() const {
        double acc = 0;
        for (size_t i = 0; i + 1 < pts.size(); ++i) acc += sphere_angle(pts[i], pts[i + 1]);
        return acc;
    }
};

/// Shorter great-circle arc sampled with n+1 points (n segments).
inline Polyline sample_arc(const Vec3& a, const Vec3& b, size_t n) {
    if (sphere_angle(a, b) > kPi - 1e-9)
        throw Error("arc between antipodal points is ambiguous; supply waypoints");
    Polyline p;
    p.pts.reserve(n + 1);
    for (size_t i = 0; i <= n; ++i) p.pts.push_back(slerp(a, b, double(i) / double(n)));
    return p;
}

/// Distance from p to the geodesic segment [a,b].
inline double dist_point_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
    double ab = sphere_angle(a, b);
    if (ab < 1e-14) return sphere_angle(p, a);
    Vec3 n = normalized(cross(a, b));
    double sinh_ = dot(p, n); // sine of signed distance to the great circle
    Vec3 proj = p - n * sinh_;
    double pn = norm(proj);
    if (pn < 1e-12) return kPi / 2; // p is a pole of the circle
    proj = proj * (1.0 / pn);
    // angle of proj along the circle, measured from a toward b
    double s = std::atan2(dot(proj, cross(n, a)), dot(proj, a));
    if (s >= 0 && s <= ab) return std::abs(std::asin(std::clamp(sinh_, -1.0, 1.0)));
    return std::min(sphere_angle(p, a), sphere_angle(p, b));
}

inline double dist_point_polyline(const Vec3& p, const Polyline& pl) {
    if (pl.pts.empty()) throw Error("empty polyline");
    if (pl.pts.size() == 1) return sphere_angle(p, pl.pts[0]);
    double best = 1e300;
    for (size_t i = 0; i + 1 < pl.pts.size(); ++i)
        best = std::min(best, dist_point_segment(p, pl.pts[i], pl.pts[i + 1]));
    return best;
}

inline double dist_polyline_polyline(const Polyline& a, const Polyline& b) {
    double best = 1e300;
    for (const Vec3& p : a.pts) best = std::min(best, dist_point_polyline(p, b));
    for (const Vec3& p : b.pts) best = std::min(best, dist_point_polyline(p, a));
    return best;
}

/// Max pairwise angular distance over a point set (min dot product scan).
inline double point_set_diameter(const std::vector<Vec3>& pts) {
    double mind = 1.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            mind = std::min(mind, dot(pts[i], pts[j]));
    return std::acos(std::clamp(mind, -1.0, 1.0));
}

/// Do the open geodesic segments (a,b) and (c,d) intersect?
/// Shared endpoints do not count as intersections.
inline bool segments_cross(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d,
                           double tol = 1e-12) {
    auto same = [&](const Vec3& u, const Vec3& v) { return sphere_angle(u, v) < 1e-11; };
    Vec3 n1 = cross(a, b), n2 = cross(c, d);
    double n1n = norm(n1), n2n = norm(n2);
    if (n1n < 1e-14 || n2n < 1e-14) return false; // degenerate segment
    n1 = n1 * (1.0 / n1n);
    n2 = n2 * (1.0 / n2n);
    Vec3 dir = cross(n1, n2);
    double dn = norm(dir);
    auto within = [&](const Vec3& p, const Vec3& u, const Vec3& v, const Vec3& nrm) {
        double len = sphere_angle(u, v);
        double s = std::atan2(dot(p, cross(nrm, u)), dot(p, u));
        return s > tol && s < len - tol;
    };
    if (dn < 1e-10) {
        // same (or opposite) great circle: check 1-D overlap of open arcs
        if (std::abs(dot(n1, n2)) < 1 - 1e-10) return false;
        int hits = 0;
        for (const Vec3& p : {c, d})
            if (within(p, a, b, n1)) ++hits;
        for (const Vec3& p : {a, b})
            if (within(p, c, d, n2)) ++hits;
        // also fully-overlapping segments with identical endpoints
        if (hits == 0 && same(a, c) && same(b, d)) return true;
        if (hits == 0 && same(a, d) && same(b, c)) return true;
        return hits > 0;
    }
    dir = dir * (1.0 / dn);
    for (const Vec3& p : {dir, -dir}) {
        bool in1 = within(p, a, b, n1) || same(p, a) || same(p, b);
        bool in2 = within(p, c, d, n2) || same(p, c) || same(p, d);
        bool strict1 = within(p, a, b, n1);
        bool strict2 = within(p, c, d, n2);
        if ((strict1 && in2) || (strict2 && in1)) return true;
    }
    return false;
}

/// Deterministic quasi-uniform sample of the sphere (Fibonacci lattice).
inline std::vector<Vec3> fibonacci_sphere(size_t n) {
    std::vector<Vec3> out;
    out.reserve(n);
    const double ga = kPi * (3.0 - std::sqrt(5.0));
    for (size_t i = 0; i < n; ++i) {
        double z = 1.0 - 2.0 * (double(i) + 0.5) / double(n);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double th = ga * double(i);
        out.push_back({r * std::cos(th), r * std::sin(th), z});
    }
    return out;
}

// ---- Riemann sphere <-> unit sphere -------------------------------------
//
// The extended plane embeds by z |-> (2 Re z, 2 Im z, |z|^2 - 1)/(|z|^2 + 1),
// with infinity at the north pole (0,0,1). Homogeneous form (a : b) avoids
// special-casing infinity.

using C64 = std::complex<double>;

inline Vec3 homogeneous_to_vec3(const C64& a, const C64& b) {
    double na = std::norm(a), nb = std::norm(b);
    double denom = na + nb;
    if (denom < 1e-300) throw Error("homogeneous point (0:0)");
    C64 ab = a * std::conj(b);
    return {2.0 * ab.real() / denom, 2.0 * ab.imag() / denom, (na - nb) / denom};
}

inline std::pair<C64, C64> vec3_to_homogeneous(const Vec3& p) {
    // (x + iy : 1 - z) == (1 + z : x - iy); pick the better-conditioned form
    if (p.z <= 0.0) return {C64(p.x, p.y), C64(1.0 - p.z, 0.0)};
    return {C64(1.0 + p.z, 0.0), C64(p.x, -p.y)};
}

inline Vec3 plane_to_sphere(const C64& z) { return homogeneous_to_vec3(z, C64(1, 0)); }

} // namespace spheresub
