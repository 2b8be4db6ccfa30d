#pragma once

#include <cstdint>
#include <string>

namespace wormbound {

// Closed-form lower bounds on the hull area as functions of the canonical
// angles (radians). g and h hold for alpha in [45deg, 90deg] and beta in
// [60deg, 120deg]; f holds on K1 x K2 configurations.
double f_bound(double alpha, double beta);
double g_bound(double alpha);
double h_bound(double beta);
double p_bound(double alpha, double beta);

struct BoundBreakdown {
    double f = 0.0;
    double g = 0.0;
    double h = 0.0;
    double p = 0.0;
};

/// Throws InvalidInput outside alpha in [0, pi/2], beta in [pi/3, 2pi/3].
BoundBreakdown bound_breakdown(double alpha, double beta);

/// Lipschitz constant of p per radian in each angle:
/// |df/dalpha| <= (1/6)(1/2 + 1), |df/dbeta| <= 1/12, |g'| <= sqrt(2)/6, |h'| <= 1/4.
inline constexpr double kLipschitzP = 0.25;

enum class CertifyMethod { FullGrid, BranchAndBound };
enum class CertifyStatus { Certified, Failed };

std::string to_string(CertifyMethod m);
std::string to_string(CertifyStatus s);
CertifyMethod parse_certify_method(const std::string& s);
CertifyStatus parse_certify_status(const std::string& s);

struct Certificate {
    double target = 0.0;
    double certified_min = 0.0;
    std::uint64_t cells_examined = 0;
    std::uint32_t max_depth = 0;
    CertifyMethod method = CertifyMethod::FullGrid;
    CertifyStatus status = CertifyStatus::Failed;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertifyOptions {
    /// FullGrid: target cell side. BranchAndBound: smallest cell side that may
    /// still be split.
    double resolution = 1e-9;
    std::uint32_t max_depth = 80;
};

/// Certify min p >= target over the K1 angle box
/// [45deg, 78deg] x [83deg, 97deg] with Lipschitz slack per cell.
/// The result does not depend on the OpenMP thread count.
Certificate certify_theorem(double target, CertifyMethod method, const CertifyOptions& options = {});

/// Perimeter bound used by the grid-error estimate (the value quoted for the
/// lens-shaped region D).
inline constexpr double kDomainPerimeter = 3.46364;
inline constexpr double kLinearCoeffD1 = 2.44916;
inline constexpr double kLinearCoeffD2 = 0.49993;

struct ErrorBound {
    double d1 = 0.0;
    double d2 = 0.0;
    double delta = 0.0;
    double exact_bound = 0.0;
    double linear_bound = 0.0;
};

/// Maximum area change between a configuration and any grid node within
/// half a step of it.
ErrorBound grid_error_bound(double d1, double d2);

/// Perimeter of {|y| <= 0.46} intersect {x^2+y^2 <= 1} intersect {(x-1)^2+y^2 <= 1}.
double domain_D_perimeter();

/// Area of the convex hull of a disk of radius r and a point at distance d
/// from its center.
double circle_point_hull_area(double d, double r);

/// Smallest center distance d at which circle_point_hull_area(d, r) reaches
/// target_area (bisection to 1e-9).
double safe_center_radius(double r, double target_area);

}  // namespace wormbound
