#include "wormbound/configuration.hpp"

#include <algorithm>
#include <cmath>

namespace wormbound {

namespace {

template <std::size_t N>
std::array<Point, N> regular_polygon(double cx, double cy, double radius, double angle) {
    std::array<Point, N> v;
    const double step = 2.0 * kPi / static_cast<double>(N);
    for (std::size_t k = 0; k < N; ++k) {
        const double t = angle + step * static_cast<double>(k);
        v[k] = {cx + radius * std::cos(t), cy + radius * std::sin(t)};
    }
    return v;
}

Point transform(const Point& p, SymmetryKind s) {
    switch (s) {
        case SymmetryKind::ReflectHalfX: return {1.0 - p.x, p.y};
        case SymmetryKind::HalfTurn: return {1.0 - p.x, -p.y};
        case SymmetryKind::ReflectXAxis: return {p.x, -p.y};
    }
    return p;
}

template <std::size_t N>
std::array<Point, N> transformed(const std::array<Point, N>& v, SymmetryKind s) {
    std::array<Point, N> out;
    std::transform(v.begin(), v.end(), out.begin(), [s](const Point& p) { return transform(p, s); });
    return out;
}

}  // namespace

bool is_finite(const Config& c) {
    return std::ranges::all_of(c.as_array(), [](double v) { return std::isfinite(v); });
}

bool tuple_less(const Config& a, const Config& b) { return a.as_array() < b.as_array(); }

bool DomainBox::contains(const Config& c) const {
    const auto iv = as_array();
    const auto v = c.as_array();
    for (std::size_t i = 0; i < 6; ++i) {
        if (!iv[i].contains(v[i])) return false;
    }
    return true;
}

bool DomainBox::contains(const DomainBox& inner, double tol) const {
    const auto outer_iv = as_array();
    const auto inner_iv = inner.as_array();
    for (std::size_t i = 0; i < 6; ++i) {
        if (inner_iv[i].lo < outer_iv[i].lo - tol || inner_iv[i].hi > outer_iv[i].hi + tol) return false;
    }
    return true;
}

bool DomainBox::well_formed() const {
    return std::ranges::all_of(as_array(), [](const Interval& iv) {
        return std::isfinite(iv.lo) && std::isfinite(iv.hi) && iv.lo <= iv.hi;
    });
}

std::array<Point, 4> square_vertices(double x1, double y1, double alpha) {
    return regular_polygon<4>(x1, y1, kSquareCircumradius, alpha);
}

std::array<Point, 3> triangle_vertices(double x2, double y2, double beta) {
    return regular_polygon<3>(x2, y2, kTriangleCircumradius, beta);
}

std::array<Point, 9> config_points(const Config& c) {
    const auto sq = square_vertices(c.x1, c.y1, c.alpha);
    const auto tr = triangle_vertices(c.x2, c.y2, c.beta);
    return {kSegmentStart, kSegmentEnd, sq[0], sq[1], sq[2], sq[3], tr[0], tr[1], tr[2]};
}

double mu(const Config& c) {
    auto pts = config_points(c);
    std::sort(pts.begin(), pts.end(), lex_less);
    return sorted_hull_area(pts);
}

double reduce_angle(double angle, double period) {
    double r = std::fmod(angle, period);
    if (r < 0.0) r += period;
    if (r >= period) r = 0.0;
    return r;
}

Config canonicalize(const Config& c) {
    Config out = c;
    out.alpha = reduce_angle(c.alpha, kSquarePeriod);
    out.beta = reduce_angle(c.beta, kTrianglePeriod);
    return out;
}

ShapePose recover_pose(std::span<const Point> vertices, double period) {
    double sx = 0.0;
    double sy = 0.0;
    for (const Point& p : vertices) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(vertices.size());
    ShapePose pose{sx / n, sy / n, 0.0};
    pose.angle = reduce_angle(std::atan2(vertices[0].y - pose.cy, vertices[0].x - pose.cx), period);
    return pose;
}

Config apply_symmetry(const Config& c, SymmetryKind s) {
    const auto sq = transformed(square_vertices(c.x1, c.y1, c.alpha), s);
    const auto tr = transformed(triangle_vertices(c.x2, c.y2, c.beta), s);
    // Centers map exactly; only the angle is read back from the vertices.
    const Point sq_center = transform({c.x1, c.y1}, s);
    const Point tr_center = transform({c.x2, c.y2}, s);
    const ShapePose sp = recover_pose(sq, kSquarePeriod);
    const ShapePose tp = recover_pose(tr, kTrianglePeriod);
    return {sq_center.x, sq_center.y, sp.angle, tr_center.x, tr_center.y, tp.angle};
}

bool in_K1(const Config& c) { return kK1Alpha.contains(c.alpha) && kK1Beta.contains(c.beta); }

bool shape_in_K2(std::span<const Point> ccw_vertices) {
    for (const Point& p : ccw_vertices) {
        if (point_segment_distance(p) > 1.0 || std::abs(p.y) > kK2HalfHeight) return false;
    }
    return segment_polygon_intersects(ccw_vertices);
}

bool in_K2(const Config& c) {
    const auto sq = square_vertices(c.x1, c.y1, c.alpha);
    const auto tr = triangle_vertices(c.x2, c.y2, c.beta);
    return shape_in_K2(sq) && shape_in_K2(tr);
}

DomainBox search_domain() {
    const double rs = kSquareCircumradius;
    const double rt = kTriangleCircumradius;
    return {{-rs, 1.0 + rs}, {-rs, rs}, kK1Alpha, {-rt, 1.0 + rt}, {-rt, rt}, kK1Beta};
}

}  // namespace wormbound
