#pragma once

#include <array>

#include "apwt/sectors.hpp"
#include "apwt/types.hpp"

namespace apwt {

/// Lorentz boost on the (ct, x) plane with rapidity phi, tanh(phi) = v/c:
///   Lambda_phi = [[cosh phi, -sinh phi], [-sinh phi, cosh phi]].
/// Frequency-wavenumber pairs (omega/c, k_x) transform with the same matrix.
/// Acting on a point of hyperbolic angle theta, Lambda_phi yields angle
/// theta - phi; Lambda_{-phi} raises the angle by phi.
struct Boost {
    double phi = 0.0;

    explicit Boost(double rapidity);

    double v_over_c() const;
    std::array<std::array<double, 2>, 2> matrix() const;
    Vec2 apply(const Vec2& p) const;
    Boost inverse() const { return Boost(-phi); }
};

/// a * Lambda_phi * sigma: the argument at which a mother spectrum is
/// evaluated for the family member with scale a and rapidity phi.  A boost by
/// the member's own rapidity cancels the hyperbolic angle of an on-hyperbola
/// point, and the Minkowski norm (omega/c)^2 - k_x^2 scales by a^2.
Vec2 spectral_boost_scale(const Vec2& sigma, double a, double phi);

/// Hyperbolic polar coordinates adapted to the sector structure.
/// Propagating sectors (D1, D2): omega/c = +/- rho cosh(phi0), k_x = +/- rho sinh(phi0).
/// Evanescent sectors (D3, D4): k_x = +/- rho cosh(phi0), omega/c = +/- rho sinh(phi0).
/// rho > 0 always; phi0 is the hyperbolic angle along the sector's hyperbola.
struct HyperbolicPoint {
    double rho = 0.0;
    double phi0 = 0.0;
    Sector branch = Sector::d1;
};

/// Inverse-maps a spectral point to (rho, phi0, branch).  Light-cone points
/// (|omega|/c == |k_x|) are rejected with std::domain_error.
HyperbolicPoint hyperbolic_coords(const Vec2& sigma);

/// Spatial localisation ellipse of a boosted Gaussian packet on the (x, y)
/// plane.  For the unboosted packet exp(-alpha^2 x^2 - beta^2 y^2), the member
/// with rapidity phi concentrates inside the quadratic form
///   alpha^2 cosh^2(phi) X^2 + beta^2 (Y + sinh(phi) X)^2 <= const,
/// X = x - x0, Y = y - y0.  `axis1/axis2` are unit vectors of the form's
/// eigendirections, lambda1 >= lambda2; the spatial extent along axis_i is
/// proportional to 1/sqrt(lambda_i), so axis2 is the long axis.
struct PacketEllipse {
    double lambda1 = 0.0;            ///< larger eigenvalue of the form matrix
    double lambda2 = 0.0;            ///< smaller eigenvalue
    std::array<double, 2> axis1{};   ///< unit eigenvector for lambda1, (x, y) components
    std::array<double, 2> axis2{};   ///< unit eigenvector for lambda2
    std::array<std::array<double, 2>, 2> form{};  ///< the symmetric form matrix itself
};

/// Closed-form eigendecomposition of the boosted-packet form matrix
///   M = [[alpha^2 cosh^2 phi + beta^2 sinh^2 phi, beta^2 sinh phi],
///        [beta^2 sinh phi,                        beta^2         ]].
/// Eigenvalue product is alpha^2 beta^2 cosh^2 phi exactly; the alpha == beta
/// case degenerates to the eigenpairs lambda = alpha^2 e^{+/-phi} cosh phi
/// with axes (e^{phi}, 1) and (-e^{-phi}, 1) respectively.
PacketEllipse packet_ellipse(double alpha, double beta, double phi);

/// Center of the rapidity-phi packet at lab time t: the packet rides its
/// moving frame's y axis at speed c, so
///   x0 = ct tanh(phi), y0 = ct / cosh(phi).
std::array<double, 2> packet_center(double phi, double ct);

}  // namespace apwt
