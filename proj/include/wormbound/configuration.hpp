#pragma once

#include <array>
#include <numbers>
#include <span>

#include "wormbound/geometry.hpp"

namespace wormbound {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSquareSide = 1.0 / 3.0;
inline constexpr double kTriangleSide = 0.5;
inline constexpr double kSquareCircumradius = std::numbers::sqrt2 / 6.0;
inline constexpr double kTriangleCircumradius = std::numbers::sqrt3 / 6.0;
inline constexpr double kSquarePeriod = kPi / 2.0;
inline constexpr double kTrianglePeriod = 2.0 * kPi / 3.0;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Placement of the square (center x1,y1, rotation alpha) and triangle
/// (centroid x2,y2, rotation beta) relative to the unit segment (0,0)-(1,0).
/// Angles are stored raw; canonicalize() reduces them.
struct Config {
    double x1 = 0.0;
    double y1 = 0.0;
    double alpha = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;
    double beta = 0.0;

    std::array<double, 6> as_array() const { return {x1, y1, alpha, x2, y2, beta}; }
    static Config from_array(const std::array<double, 6>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5]};
    }

    friend bool operator==(const Config&, const Config&) = default;
};

bool is_finite(const Config& c);

/// Lexicographic order on the 6-tuple; used for deterministic tie-breaks.
bool tuple_less(const Config& a, const Config& b);

enum class SymmetryKind { ReflectHalfX, HalfTurn, ReflectXAxis };

inline constexpr std::array<SymmetryKind, 3> kAllSymmetries = {
    SymmetryKind::ReflectHalfX, SymmetryKind::HalfTurn, SymmetryKind::ReflectXAxis};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double v) const { return lo <= v && v <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// One closed interval per Config coordinate.
struct DomainBox {
    Interval x1, y1, alpha, x2, y2, beta;

    std::array<Interval, 6> as_array() const { return {x1, y1, alpha, x2, y2, beta}; }
    static DomainBox from_array(const std::array<Interval, 6>& a) {
        return {a[0], a[1], a[2], a[3], a[4], a[5]};
    }

    bool contains(const Config& c) const;
    /// Containment with slack `tol` on every bound.
    bool contains(const DomainBox& inner, double tol = 1e-12) const;
    bool well_formed() const;

    friend bool operator==(const DomainBox&, const DomainBox&) = default;
};

/// Vertices A, B, C, D counterclockwise; A at angle alpha from the center.
std::array<Point, 4> square_vertices(double x1, double y1, double alpha);

/// Vertices P, Q, R counterclockwise; P at angle beta from the centroid.
std::array<Point, 3> triangle_vertices(double x2, double y2, double beta);

/// [E, F, A, B, C, D, P, Q, R].
std::array<Point, 9> config_points(const Config& c);

/// Area of the convex hull of the segment, square and triangle.
double mu(const Config& c);

/// Reduce an angle into [0, period).
double reduce_angle(double angle, double period);

Config canonicalize(const Config& c);

/// Parameters of the image of `c` under a segment-preserving isometry, with
/// angles canonical. Angles are recovered from the transformed vertex sets.
Config apply_symmetry(const Config& c, SymmetryKind s);

/// alpha in [45deg, 78deg] and beta in [83deg, 97deg], closed.
bool in_K1(const Config& c);

/// Per-shape K2 test: every vertex within distance 1 of the segment and
/// |y| <= 0.46, and the shape meets the segment.
bool shape_in_K2(std::span<const Point> ccw_vertices);

bool in_K2(const Config& c);

inline constexpr double kK2HalfHeight = 0.46;
inline const Interval kK1Alpha{deg_to_rad(45.0), deg_to_rad(78.0)};
inline const Interval kK1Beta{deg_to_rad(83.0), deg_to_rad(97.0)};

/// Box containing every K1 and K2 configuration with canonical angles.
DomainBox search_domain();

/// Recover (center, canonical angle) of a regular polygon from its vertices.
struct ShapePose {
    double cx = 0.0;
    double cy = 0.0;
    double angle = 0.0;
};
ShapePose recover_pose(std::span<const Point> vertices, double period);

}  // namespace wormbound
