#pragma once

#include <span>
#include <vector>

namespace wormbound {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline constexpr Point kSegmentStart{0.0, 0.0};  // E
inline constexpr Point kSegmentEnd{1.0, 0.0};    // F

/// Lexicographic (x, then y) order used by the hull and by canonical vertex rings.
inline bool lex_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// Twice the signed area of triangle (o, a, b); positive for a left turn.
inline double orient(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool is_finite(const Point& p);

/// Counterclockwise vertex ring without collinear triples, starting at the
/// lexicographically smallest vertex. Only produced by convex_hull().
class ConvexPolygon {
public:
    ConvexPolygon() = default;

    std::span<const Point> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

private:
    friend ConvexPolygon convex_hull(std::span<const Point> points);
    explicit ConvexPolygon(std::vector<Point> v) : vertices_(std::move(v)) {}

    std::vector<Point> vertices_;
};

inline constexpr std::size_t kMaxHullInput = 64;

/// Andrew monotone chain. Throws InvalidInput on non-finite coordinates or
/// more than kMaxHullInput points.
ConvexPolygon convex_hull(std::span<const Point> points);

/// Shoelace area; 0 for fewer than three vertices.
double polygon_area(const ConvexPolygon& poly);

/// Hull area of points already sorted by lex_less. Allocation free; this is
/// the kernel behind mu() and the grid search.
double sorted_hull_area(std::span<const Point> sorted);

/// |v| sin(theta) for theta the angle between u and v. Throws on u == 0.
double height(const Point& u, const Point& v);

/// Distance from p to the closed unit segment (0,0)-(1,0).
double point_segment_distance(const Point& p);

/// True iff the closed polygon meets the closed unit segment (0,0)-(1,0).
/// Exact sign tests; touching counts.
bool segment_polygon_intersects(std::span<const Point> ccw_polygon);
bool segment_polygon_intersects(const ConvexPolygon& poly);

}  // namespace wormbound
