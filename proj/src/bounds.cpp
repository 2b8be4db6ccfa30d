#include "wormbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wormbound/configuration.hpp"
#include "wormbound/error.hpp"

namespace wormbound {

double f_bound(double alpha, double beta) {
    return (0.5 * std::cos(alpha - beta + deg_to_rad(15.0)) + std::cos(alpha - deg_to_rad(45.0))) / 6.0;
}

double g_bound(double alpha) { return std::numbers::sqrt2 / 6.0 * std::sin(alpha); }

double h_bound(double beta) {
    return 0.25 * std::max(std::sin(beta - kPi / 6.0), std::sin(beta + kPi / 6.0));
}

double p_bound(double alpha, double beta) {
    return std::max({f_bound(alpha, beta), g_bound(alpha), h_bound(beta)});
}

BoundBreakdown bound_breakdown(double alpha, double beta) {
    if (!(alpha >= 0.0 && alpha <= kPi / 2.0)) throw InvalidInput("bound_breakdown: alpha outside [0, pi/2]");
    if (!(beta >= kPi / 3.0 && beta <= 2.0 * kPi / 3.0)) {
        throw InvalidInput("bound_breakdown: beta outside [pi/3, 2pi/3]");
    }
    BoundBreakdown b;
    b.f = f_bound(alpha, beta);
    b.g = g_bound(alpha);
    b.h = h_bound(beta);
    b.p = std::max({b.f, b.g, b.h});
    return b;
}

std::string to_string(CertifyMethod m) {
    return m == CertifyMethod::FullGrid ? "FullGrid" : "BranchAndBound";
}

std::string to_string(CertifyStatus s) { return s == CertifyStatus::Certified ? "Certified" : "Failed"; }

CertifyMethod parse_certify_method(const std::string& s) {
    if (s == "FullGrid" || s == "grid") return CertifyMethod::FullGrid;
    if (s == "BranchAndBound" || s == "bnb") return CertifyMethod::BranchAndBound;
    throw InvalidInput("unknown certification method '" + s + "' (expected grid or bnb)");
}

CertifyStatus parse_certify_status(const std::string& s) {
    if (s == "Certified") return CertifyStatus::Certified;
    if (s == "Failed") return CertifyStatus::Failed;
    throw InvalidInput("unknown certificate status '" + s + "'");
}

ErrorBound grid_error_bound(double d1, double d2) {
    if (!(d1 >= 0.0) || !(d2 >= 0.0) || !std::isfinite(d1) || !std::isfinite(d2)) {
        throw InvalidInput("grid_error_bound: grid steps must be finite and non-negative");
    }
    ErrorBound e;
    e.d1 = d1;
    e.d2 = d2;
    // Worst vertex displacement: half-step translation in both coordinates
    // plus a half-step rotation about the triangle centroid.
    e.delta = d1 / std::numbers::sqrt2 + std::sin(d2 / 4.0) / std::numbers::sqrt3;
    e.exact_bound = e.delta * kDomainPerimeter + kPi * e.delta * e.delta;
    e.linear_bound = kLinearCoeffD1 * d1 + kLinearCoeffD2 * d2;
    return e;
}

double domain_D_perimeter() {
    const double h = kK2HalfHeight;
    const double flat = 2.0 * std::sqrt(1.0 - h * h) - 1.0;
    return 2.0 * flat + 4.0 * std::asin(h);
}

double circle_point_hull_area(double d, double r) {
    if (!(r > 0.0) || !std::isfinite(d) || !std::isfinite(r)) {
        throw InvalidInput("circle_point_hull_area: radius must be positive and finite");
    }
    if (d < r) throw InvalidInput("circle_point_hull_area: point lies inside the disk (d < r)");
    // Kite of the two tangent segments plus the disk sector they leave exposed.
    return r * std::sqrt(d * d - r * r) + r * r * (kPi - std::acos(r / d));
}

double safe_center_radius(double r, double target_area) {
    if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(target_area)) {
        throw InvalidInput("safe_center_radius: radius must be positive and finite");
    }
    if (!(target_area > kPi * r * r)) {
        throw InvalidInput("safe_center_radius: target area must exceed the disk area");
    }
    double lo = r;
    double hi = 2.0 * r;
    while (circle_point_hull_area(hi, r) < target_area) {
        lo = hi;
        hi *= 2.0;
    }
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (circle_point_hull_area(mid, r) >= target_area) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace wormbound
