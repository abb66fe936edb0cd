#pragma once

#include "nearsymp/profile.hpp"
#include "nearsymp/spinc_planner.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nearsymp {

enum class Chart {
    Cartesian,    // (T, x, y, λ)
    Cylindrical,  // (t, ρ, μ, λ)
};

struct ChartPoint {
    std::array<double, 4> coords{};
    Chart chart = Chart::Cartesian;
};

/// Components on the pairs (01, 02, 03, 12, 13, 23) of the chart coordinates:
/// dT∧dx, dT∧dy, dT∧dλ, dx∧dy, dx∧dλ, dy∧dλ in the Cartesian chart.
struct TwoForm {
    std::array<double, 6> c{};
    Chart chart = Chart::Cartesian;

    double operator[](std::size_t i) const { return c[i]; }
};

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

struct Metric4 {
    Mat4 g = Mat4::Identity();
};

/// Index of the pair (i, j), i < j, in TwoForm::c.
std::size_t pair_index(int i, int j);

TwoForm two_form(Chart chart, std::array<double, 6> c);
TwoForm operator+(const TwoForm& a, const TwoForm& b);
TwoForm operator-(const TwoForm& a, const TwoForm& b);
TwoForm operator*(double s, const TwoForm& a);
double max_abs_diff(const TwoForm& a, const TwoForm& b);

/// Antisymmetric matrix Ω with Ω_ij = ω(e_i, e_j).
Mat4 form_matrix(const TwoForm& w);
TwoForm form_from_matrix(const Mat4& m, Chart chart);

/// Coefficient of the coordinate volume form in ω∧ω.
double wedge_square(const TwoForm& w);

/// The three self-dual basis forms of the flat model.
TwoForm form_A();
TwoForm form_B();
TwoForm form_C();

TwoForm omega_near_Z(double T, double x, double y);
Mat4 J_near(double T, double x, double y);
Metric4 metric_g(double T, double x, double y, double eps_prime);
/// The conformal factor f(R): 1 for R ≤ ε′/2, R for R ≥ ε′.
double metric_conformal_factor(double R, double eps_prime);

TwoForm hodge_star_2form(const Metric4& g, int orientation, const TwoForm& w);

/// Gradient of h = −x²/2 − y²/2 + T² as (∂_T, ∂_x, ∂_y).
std::array<double, 3> honda_dh(double T, double x, double y);
TwoForm honda_form(double T, double x, double y);

using FormField = std::function<TwoForm(const std::array<double, 4>&)>;

/// Central-difference dω on the triples (012, 013, 023, 123).
std::array<double, 4> d_omega_numeric(const FormField& field, const ChartPoint& pt, double h);

struct TransversalityReport {
    int rank = 0;
    double det = 0;
    std::array<double, 3> value{};
};

/// Jacobian of the self-dual coefficients of ω in (T, x, y).
TransversalityReport zero_transversality(double T, double x, double y);

/// ω = dα for α = f dμ + g dλ with (g, f) = φ(t, ρ).
TwoForm lutz_form(const ChartPoint& pt, const ProfileCurve& profile);
/// The same form pulled back to (T, x, y, λ) with T = t − 1/2, ρ = (x² + y²)/2, μ = arg(x + iy).
TwoForm lutz_form_cartesian(double T, double x, double y, const ProfileCurve& profile);

/// d(e^t α) for α = f dμ + g dλ built from a fixed contact profile.
TwoForm symplectization_form(double t, double rho, ProfileKind kind, const ProfileParams& params);

struct LevelCircle {
    std::size_t index = 0;
    double lower = 0, upper = 0, level = 0;
    int lk = 0;
};

struct LevelReport {
    bool pass = true;
    std::vector<LevelCircle> circles;
    std::vector<std::string> violations;
};

LevelReport level_schedule_check(const CirclePlan& plan);

// ---------------------------------------------------------------------------
// Check battery

struct CheckRecord {
    std::string quantity;
    double value = 0;        // worst observed value
    double tolerance = 0;
    std::string comparison;  // "<=" or ">" or "in"
    bool pass = false;
    std::vector<double> point;  // where the worst value occurred
};

struct BatteryOptions {
    int samples = 10000;
    int grid = 200;
    std::uint64_t seed = 20240611;
    double tolerance = 1e-12;
    double r_min = 1e-3;
    double eps_prime = 0.1;
    double exclusion = 0.05;
    double patch_tolerance = 1e-9;
    double closedness_tolerance = 1e-6;
    ProfileParams profile;
};

struct BatteryReport {
    std::vector<CheckRecord> records;
    bool pass() const;
};

/// Sampled checks of J, ω, ⋆ and the Honda form near Z (10⁴ points by default).
BatteryReport run_near_zero_battery(const BatteryOptions& opt);
/// Fold zone, immersion, boundary patches and contact positivity of φ.
BatteryReport run_profile_battery(const BatteryOptions& opt);
/// Both of the above.
BatteryReport run_local_battery(const BatteryOptions& opt);

}  // namespace nearsymp
