#include "nearsymp/profile.hpp"

#include "dual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nearsymp {

using detail::Dual;
using detail::smooth_step;

namespace {

constexpr double kPi = std::numbers::pi;

// t-windows of the ray family.
constexpr double kLeftLo = 0.02, kLeftHi = 0.22;     // symplectization -> fold
constexpr double kRightLo = 0.6, kRightHi = 0.95;    // fold -> reversed profile
constexpr double kAngleHi = 0.8;                     // direction settles earlier than length
// ρ-windows, as fractions of ρ_max.
constexpr double kRadiusLo = 0.3, kRadiusHi = 0.6;   // log-radius blend
constexpr double kAngleLo = 0.6, kAngleTop = 0.9;    // angle blend

struct Complex {
    Dual re, im;
};

struct Ray {
    Dual base;  // real
    Complex dir;
};

Ray ray_data(Dual t, const ProfileParams& p) {
    const Dual T = t - 0.5;
    const Dual fold_base = 1.0 + p.delta - T * T;
    if (t.v >= kLeftHi && t.v <= kRightLo) return {fold_base, {Dual{1.0}, -2.0 * T}};

    const Dual fold_len = detail::sqrt(1.0 + 4.0 * T * T);
    const Dual fold_ang = -detail::atan(2.0 * T);
    Dual base, len, ang;
    if (t.v < 0.5) {
        const Dual w = smooth_step(t, kLeftLo, kLeftHi);
        base = (1.0 - w) * detail::exp(t) + w * fold_base;
        len = (1.0 - w) * p.kappa * detail::exp(t) + w * fold_len;
        ang = (1.0 - w) * (kPi / 2) + w * fold_ang;
    } else {
        const Dual wb = smooth_step(t, kRightLo, kRightHi);
        const Dual wa = smooth_step(t, kRightLo, kAngleHi);
        base = (1.0 - wb) * fold_base - wb * detail::exp(t);
        len = (1.0 - wb) * fold_len + wb * p.kappa * detail::exp(t);
        ang = (1.0 - wa) * fold_ang + wa * (-kPi / 2);
    }
    return {base, {len * detail::cos(ang), len * detail::sin(ang)}};
}

Complex phi_dual(Dual t, Dual rho, const ProfileParams& p, double rho_max) {
    if (t.v >= kLeftHi && t.v <= kRightLo && rho.v <= kRadiusLo * rho_max) {
        const Dual T = t - 0.5;
        return {rho - T * T + 1.0 + p.delta, -2.0 * rho * T};
    }
    const Ray r = ray_data(t, p);
    const Complex ray{r.base + rho * r.dir.re, rho * r.dir.im};
    if (rho.v <= kRadiusLo * rho_max) return ray;

    // Log-polar blend towards e^t (1 + iκρ); the ray never meets the closed
    // negative real axis for ρ > 0, so atan2 is continuous here.
    const Dual log_ray = 0.5 * detail::log(ray.re * ray.re + ray.im * ray.im);
    const Dual arg_ray = detail::atan2(ray.im, ray.re);
    const Dual kr = p.kappa * rho;
    const Dual log_std = t + 0.5 * detail::log(1.0 + kr * kr);
    const Dual arg_std = detail::atan(kr);
    const Dual wr = smooth_step(rho, kRadiusLo * rho_max, kRadiusHi * rho_max);
    const Dual wa = smooth_step(rho, kAngleLo * rho_max, kAngleTop * rho_max);
    const Dual L = (1.0 - wr) * log_ray + wr * log_std;
    const Dual a = (1.0 - wa) * arg_ray + wa * arg_std;
    const Dual mag = detail::exp(L);
    return {mag * detail::cos(a), mag * detail::sin(a)};
}

void check_domain(double t, double rho, double rho_max) {
    if (!(t >= 0.0 && t <= 1.0) || !(rho >= 0.0 && rho <= rho_max))
        throw std::domain_error("phi: point (" + std::to_string(t) + ", " + std::to_string(rho) +
                                ") outside [0,1] × [0, ε²/2]");
}

void check_rho(double rho, double rho_max) {
    if (!(rho >= 0.0 && rho <= rho_max))
        throw std::domain_error("contact_profile: ρ = " + std::to_string(rho) + " outside [0, ε²/2]");
}

Complex contact_profile_dual(ProfileKind kind, Dual rho, const ProfileParams& p) {
    const double rho_max = 0.5 * p.eps * p.eps;
    const Dual kr = p.kappa * rho;
    if (kind == ProfileKind::Standard) return {Dual{1.0}, kr};
    const Dual mag = detail::sqrt(1.0 + kr * kr);
    const Dual a = detail::atan(kr) - kPi * (1.0 - smooth_step(rho, kAngleLo * rho_max, kAngleTop * rho_max));
    return {mag * detail::cos(a), mag * detail::sin(a)};
}

}  // namespace

ProfileCurve::ProfileCurve(ProfileParams params) : params_(params) {
    if (!(params_.eps > 0) || !(params_.delta > 0) || !(params_.kappa > 0))
        throw std::invalid_argument("ProfileCurve: ε, δ and κ must be positive");
}

double ProfileCurve::fold_radius() const { return std::min(0.1, kRadiusLo * rho_max()); }

bool ProfileCurve::in_fold_zone(double t, double rho) const {
    return rho >= 0.0 && std::hypot(t - 0.5, rho) <= fold_radius();
}

std::pair<double, double> ProfileCurve::phi(double t, double rho) const {
    check_domain(t, rho, rho_max());
    const Complex z = phi_dual(Dual{t}, Dual{rho}, params_, rho_max());
    return {z.re.v, z.im.v};
}

PhiJet ProfileCurve::jet(double t, double rho) const {
    check_domain(t, rho, rho_max());
    const Complex z = phi_dual(Dual::var_t(t), Dual::var_r(rho), params_, rho_max());
    return {z.re.v, z.im.v, z.re.dt, z.re.dr, z.im.dt, z.im.dr};
}

ContactProfileValue contact_profile(ProfileKind kind, double rho, const ProfileParams& params) {
    check_rho(rho, 0.5 * params.eps * params.eps);
    const Complex z = contact_profile_dual(kind, Dual{rho}, params);
    return {z.im.v, z.re.v};
}

ContactProfileJet contact_profile_jet(ProfileKind kind, double rho, const ProfileParams& params) {
    check_rho(rho, 0.5 * params.eps * params.eps);
    const Complex z = contact_profile_dual(kind, Dual::var_r(rho), params);
    return {z.im.v, z.re.v, z.im.dr, z.re.dr};
}

double contact_positivity(const std::function<ContactProfileValue(double)>& profile, double rho_max, int samples) {
    if (samples < 2) throw std::invalid_argument("contact_positivity: need at least two samples");
    const double step = rho_max / (samples - 1);
    const double h = std::min(1e-6, 0.5 * step);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double rho = i * step;
        const double lo = std::max(0.0, rho - h), hi = std::min(rho_max, rho + h);
        const auto a = profile(lo), b = profile(hi), c = profile(rho);
        const double df = (b.f - a.f) / (hi - lo), dg = (b.g - a.g) / (hi - lo);
        best = std::min(best, c.g * df - c.f * dg);
    }
    return best;
}

ImmersionReport phi_immersion_check(const ProfileCurve& p, int grid, double exclusion) {
    if (!(exclusion > 0)) throw std::invalid_argument("phi_immersion_check: exclusion radius must be positive");
    if (grid < 2) throw std::invalid_argument("phi_immersion_check: grid must have at least 2 points per side");
    ImmersionReport rep;
    rep.min_det = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double t = static_cast<double>(i) / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double rho = p.rho_max() * j / (grid - 1);
            if (std::hypot(t - 0.5, rho) < exclusion) continue;
            const double det = p.jet(t, rho).jacobian();
            ++rep.evaluated;
            if (det < rep.min_det) {
                rep.min_det = det;
                rep.at_t = t;
                rep.at_rho = rho;
            }
        }
    }
    return rep;
}

}  // namespace nearsymp
