#pragma once

#include <functional>
#include <utility>

namespace nearsymp {

struct ProfileParams {
    double eps = 1.0;    // chart radius; ρ ranges over [0, ε²/2]
    double delta = 0.2;  // height of the fold tip above 1
    double kappa = 2.0;  // slope of the standard contact profile f₀ = κρ

    bool operator==(const ProfileParams&) const = default;
};

/// Value and first derivatives of φ = (g, f) at one point.
struct PhiJet {
    double g = 0, f = 0;
    double g_t = 0, g_r = 0;
    double f_t = 0, f_r = 0;

    double jacobian() const { return g_t * f_r - g_r * f_t; }
};

struct ContactProfileValue {
    double f = 0, g = 0;
};

struct ContactProfileJet {
    double f = 0, g = 0;
    double df = 0, dg = 0;  // derivatives in ρ
};

enum class ProfileKind { Standard, Lutz };

/// The map φ(t, ρ) on [0,1] × [0, ε²/2].
///
/// Near the bottom edge it is a family of rays b(t) + ρ·v(t); the ray data
/// follow the symplectization of the standard profile for small t, the fold
/// formula around t = 1/2 and the reversed profile near t = 1. Above that the
/// log-radius and then the angle are blended into the pure symplectization
/// e^t(g₀, f₀), with the Lutz profile appearing along t = 1.
class ProfileCurve {
public:
    explicit ProfileCurve(ProfileParams params = {});

    const ProfileParams& params() const { return params_; }
    double rho_max() const { return 0.5 * params_.eps * params_.eps; }
    /// Radius around (1/2, 0) inside which φ is given verbatim by the fold formula.
    double fold_radius() const;
    bool in_fold_zone(double t, double rho) const;

    std::pair<double, double> phi(double t, double rho) const;  // (g, f)
    PhiJet jet(double t, double rho) const;

private:
    ProfileParams params_;
};

ContactProfileValue contact_profile(ProfileKind kind, double rho, const ProfileParams& params = {});
ContactProfileJet contact_profile_jet(ProfileKind kind, double rho, const ProfileParams& params = {});

/// Minimum over `samples` grid points of g f' − f g' on [0, rho_max], with
/// central (one-sided at the ends) differences.
double contact_positivity(const std::function<ContactProfileValue(double)>& profile, double rho_max,
                          int samples = 10000);

struct ImmersionReport {
    double min_det = 0;
    double at_t = 0, at_rho = 0;
    int evaluated = 0;
};

/// Minimum of det Dφ on a grid × grid lattice of the domain, skipping the
/// disk of the given radius around the fold point (1/2, 0).
ImmersionReport phi_immersion_check(const ProfileCurve& p, int grid, double exclusion);

}  // namespace nearsymp
