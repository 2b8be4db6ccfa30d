#include "wormbound/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "wormbound/error.hpp"

namespace wormbound {

namespace {

// Monotone chain over lexicographically sorted input. Writes the ring into
// `out` (capacity >= n + 1) and returns its length. Collinear and duplicate
// points are dropped because the pop test is `<= 0`.
std::size_t monotone_chain(std::span<const Point> sorted, Point* out) {
    const std::size_t n = sorted.size();
    if (n < 3) {
        std::size_t k = 0;
        for (const Point& p : sorted) {
            if (k == 0 || !(out[k - 1] == p)) out[k++] = p;
        }
        return k;
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient(out[k - 2], out[k - 1], sorted[i]) <= 0.0) --k;
        out[k++] = sorted[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orient(out[k - 2], out[k - 1], sorted[i]) <= 0.0) --k;
        out[k++] = sorted[i];
    }
    // The last point repeats the first.
    k -= 1;
    if (k == 2 && out[0] == out[1]) k = 1;
    return k;
}

double shoelace(const Point* ring, std::size_t n) {
    if (n < 3) return 0.0;
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[i + 1 == n ? 0 : i + 1];
        twice += a.x * b.y - a.y * b.x;
    }
    return 0.5 * twice;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = sign(orient(a, b, c));
    const int o2 = sign(orient(a, b, d));
    const int o3 = sign(orient(c, d, a));
    const int o4 = sign(orient(c, d, b));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool inside_closed(std::span<const Point> ring, const Point& p) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % ring.size()];
        if (orient(a, b, p) < 0.0) return false;
    }
    return true;
}

}  // namespace

bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

ConvexPolygon convex_hull(std::span<const Point> points) {
    if (points.size() > kMaxHullInput) {
        throw InvalidInput("convex_hull: at most " + std::to_string(kMaxHullInput) +
                           " points supported, got " + std::to_string(points.size()));
    }
    std::array<Point, kMaxHullInput> sorted;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!is_finite(points[i])) {
            throw InvalidInput("convex_hull: non-finite coordinate at index " + std::to_string(i));
        }
        sorted[i] = points[i];
    }
    std::sort(sorted.begin(), sorted.begin() + points.size(), lex_less);
    std::array<Point, 2 * kMaxHullInput + 1> ring;
    const std::size_t k = monotone_chain({sorted.data(), points.size()}, ring.data());
    return ConvexPolygon(std::vector<Point>(ring.begin(), ring.begin() + k));
}

double polygon_area(const ConvexPolygon& poly) {
    const auto v = poly.vertices();
    return shoelace(v.data(), v.size());
}

double sorted_hull_area(std::span<const Point> sorted) {
    std::array<Point, 2 * kMaxHullInput + 1> ring;
    const std::size_t k = monotone_chain(sorted, ring.data());
    return shoelace(ring.data(), k);
}

double height(const Point& u, const Point& v) {
    const double norm = std::hypot(u.x, u.y);
    if (!(norm > 0.0)) throw InvalidInput("height: reference vector must be non-zero");
    return std::abs(u.x * v.y - u.y * v.x) / norm;
}

double point_segment_distance(const Point& p) {
    const double fx = std::clamp(p.x, 0.0, 1.0);
    return std::hypot(p.x - fx, p.y);
}

bool segment_polygon_intersects(std::span<const Point> ring) {
    if (inside_closed(ring, kSegmentStart) || inside_closed(ring, kSegmentEnd)) return true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (segments_intersect(kSegmentStart, kSegmentEnd, ring[i], ring[(i + 1) % ring.size()])) {
            return true;
        }
    }
    return false;
}

bool segment_polygon_intersects(const ConvexPolygon& poly) {
    return segment_polygon_intersects(poly.vertices());
}

}  // namespace wormbound
