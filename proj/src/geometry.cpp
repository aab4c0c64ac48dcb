#include "apwt/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace apwt {

Boost::Boost(double rapidity) : phi(rapidity) {
    if (!std::isfinite(phi))
        throw std::invalid_argument("Boost: rapidity must be finite");
}

double Boost::v_over_c() const { return std::tanh(phi); }

std::array<std::array<double, 2>, 2> Boost::matrix() const {
    const double ch = std::cosh(phi);
    const double sh = std::sinh(phi);
    return {{{ch, -sh}, {-sh, ch}}};
}

Vec2 Boost::apply(const Vec2& p) const {
    const double ch = std::cosh(phi);
    const double sh = std::sinh(phi);
    return Vec2{ch * p.t - sh * p.x, -sh * p.t + ch * p.x};
}

Vec2 spectral_boost_scale(const Vec2& sigma, double a, double phi) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("spectral_boost_scale: scale must be positive and finite");
    const Vec2 boosted = Boost(phi).apply(sigma);
    return Vec2{a * boosted.t, a * boosted.x};
}

HyperbolicPoint hyperbolic_coords(const Vec2& sigma) {
    const auto sector = classify(sigma.t, sigma.x);
    if (!sector.has_value())
        throw std::domain_error("hyperbolic_coords: point lies on the light cone");

    HyperbolicPoint out;
    out.branch = *sector;
    switch (*sector) {
        case Sector::d1:
        case Sector::d2:
            // omega/c = s rho cosh(phi0), k_x = s rho sinh(phi0), s = sign(omega)
            out.rho = std::sqrt((sigma.t - sigma.x) * (sigma.t + sigma.x));
            out.phi0 = std::atanh(sigma.x / sigma.t);
            break;
        case Sector::d3:
        case Sector::d4:
            // k_x = s rho cosh(phi0), omega/c = s rho sinh(phi0), s = sign(k_x)
            out.rho = std::sqrt((sigma.x - sigma.t) * (sigma.x + sigma.t));
            out.phi0 = std::atanh(sigma.t / sigma.x);
            break;
    }
    return out;
}

PacketEllipse packet_ellipse(double alpha, double beta, double phi) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("packet_ellipse: alpha and beta must be positive");
    if (!std::isfinite(phi))
        throw std::invalid_argument("packet_ellipse: phi must be finite");

    const double ch = std::cosh(phi);
    const double sh = std::sinh(phi);
    const double a2 = alpha * alpha;
    const double b2 = beta * beta;

    const double m00 = a2 * ch * ch + b2 * sh * sh;
    const double m01 = b2 * sh;
    const double m11 = b2;

    PacketEllipse out;
    out.form = {{{m00, m01}, {m01, m11}}};

    const double half_trace = 0.5 * (m00 + m11);
    const double half_gap = std::sqrt(0.25 * (m00 - m11) * (m00 - m11) + m01 * m01);
    out.lambda1 = half_trace + half_gap;
    out.lambda2 = half_trace - half_gap;

    auto eigenvector = [&](double lambda) -> std::array<double, 2> {
        // (M - lambda I) v = 0; pick the better-conditioned row.
        std::array<double, 2> v1{m01, lambda - m00};
        std::array<double, 2> v2{lambda - m11, m01};
        const double n1 = std::hypot(v1[0], v1[1]);
        const double n2 = std::hypot(v2[0], v2[1]);
        std::array<double, 2> v = (n1 >= n2) ? v1 : v2;
        double n = (n1 >= n2) ? n1 : n2;
        if (n == 0.0) return {1.0, 0.0};  // isotropic case: any direction
        v[0] /= n;
        v[1] /= n;
        // Fix orientation: positive y component, or positive x when y ~ 0.
        if (v[1] < 0.0 || (v[1] == 0.0 && v[0] < 0.0)) {
            v[0] = -v[0];
            v[1] = -v[1];
        }
        return v;
    };

    if (m01 == 0.0) {
        // Diagonal form (phi == 0): coordinate axes, ordered by eigenvalue.
        if (m00 >= m11) {
            out.axis1 = {1.0, 0.0};
            out.axis2 = {0.0, 1.0};
        } else {
            out.axis1 = {0.0, 1.0};
            out.axis2 = {1.0, 0.0};
        }
    } else {
        out.axis1 = eigenvector(out.lambda1);
        out.axis2 = eigenvector(out.lambda2);
    }
    return out;
}

std::array<double, 2> packet_center(double phi, double ct) {
    return {ct * std::tanh(phi), ct / std::cosh(phi)};
}

}  // namespace apwt
