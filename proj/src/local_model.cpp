#include "nearsymp/local_model.hpp"

#include "dual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace nearsymp {

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
constexpr int kTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

int permutation_sign(std::array<int, 4> p) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] == p[j]) return 0;
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

int levi_civita3(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    // Even permutations of (0,1,2) are its cyclic shifts.
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

void add_wedge(TwoForm& w, int i, int j, double v) {
    if (i == j) return;
    if (i < j)
        w.c[pair_index(i, j)] += v;
    else
        w.c[pair_index(j, i)] -= v;
}

}  // namespace

std::size_t pair_index(int i, int j) {
    for (std::size_t p = 0; p < 6; ++p)
        if (kPairs[p][0] == i && kPairs[p][1] == j) return p;
    throw std::invalid_argument("pair_index: expected 0 ≤ i < j ≤ 3");
}

TwoForm two_form(Chart chart, std::array<double, 6> c) { return TwoForm{c, chart}; }

TwoForm operator+(const TwoForm& a, const TwoForm& b) {
    TwoForm out = a;
    for (std::size_t i = 0; i < 6; ++i) out.c[i] += b.c[i];
    return out;
}

TwoForm operator-(const TwoForm& a, const TwoForm& b) {
    TwoForm out = a;
    for (std::size_t i = 0; i < 6; ++i) out.c[i] -= b.c[i];
    return out;
}

TwoForm operator*(double s, const TwoForm& a) {
    TwoForm out = a;
    for (auto& v : out.c) v *= s;
    return out;
}

double max_abs_diff(const TwoForm& a, const TwoForm& b) {
    double m = 0;
    for (std::size_t i = 0; i < 6; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
    return m;
}

Mat4 form_matrix(const TwoForm& w) {
    Mat4 m = Mat4::Zero();
    for (std::size_t p = 0; p < 6; ++p) {
        m(kPairs[p][0], kPairs[p][1]) = w.c[p];
        m(kPairs[p][1], kPairs[p][0]) = -w.c[p];
    }
    return m;
}

TwoForm form_from_matrix(const Mat4& m, Chart chart) {
    TwoForm w;
    w.chart = chart;
    for (std::size_t p = 0; p < 6; ++p) w.c[p] = m(kPairs[p][0], kPairs[p][1]);
    return w;
}

double wedge_square(const TwoForm& w) {
    const auto& c = w.c;
    return 2.0 * (c[0] * c[5] - c[1] * c[4] + c[2] * c[3]);
}

TwoForm form_A() { return two_form(Chart::Cartesian, {1, 0, 0, 0, 0, 1}); }
TwoForm form_B() { return two_form(Chart::Cartesian, {0, 1, 0, 0, -1, 0}); }
TwoForm form_C() { return two_form(Chart::Cartesian, {0, 0, 1, 1, 0, 0}); }

TwoForm omega_near_Z(double T, double x, double y) {
    return y * form_A() - x * form_B() - (2.0 * T) * form_C();
}

Mat4 J_near(double T, double x, double y) {
    const double R = std::sqrt(4 * T * T + x * x + y * y);
    if (!(R > 0)) throw std::domain_error("J_near: J is undefined on Z (R = 0)");
    Mat4 q;
    q << 0, -y, x, 2 * T,
         y, 0, 2 * T, -x,
         -x, -2 * T, 0, -y,
         -2 * T, x, y, 0;
    return q / R;
}

double metric_conformal_factor(double R, double eps_prime) {
    if (!(eps_prime > 0)) throw std::invalid_argument("metric_g: ε′ must be positive");
    const double s = detail::smooth_step(detail::Dual{R}, 0.5 * eps_prime, eps_prime).v;
    return (1.0 - s) + s * R;
}

Metric4 metric_g(double T, double x, double y, double eps_prime) {
    const double R = std::sqrt(4 * T * T + x * x + y * y);
    return Metric4{metric_conformal_factor(R, eps_prime) * Mat4::Identity()};
}

TwoForm hodge_star_2form(const Metric4& g, int orientation, const TwoForm& w) {
    if (orientation != 1 && orientation != -1) throw std::invalid_argument("hodge_star_2form: orientation must be ±1");
    Eigen::SelfAdjointEigenSolver<Mat4> eig(g.g);
    if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() <= 0)
        throw std::invalid_argument("hodge_star_2form: metric is not positive definite");
    const Mat4 ginv = g.g.inverse();
    const double vol = std::sqrt(g.g.determinant());
    const Mat4 raised = ginv * form_matrix(w) * ginv;
    TwoForm out;
    out.chart = w.chart;
    for (std::size_t p = 0; p < 6; ++p) {
        const int k = kPairs[p][0], l = kPairs[p][1];
        double s = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s += raised(i, j) * permutation_sign({i, j, k, l});
        out.c[p] = 0.5 * vol * orientation * s;
    }
    return out;
}

std::array<double, 3> honda_dh(double T, double x, double y) { return {2 * T, -x, -y}; }

TwoForm honda_form(double T, double x, double y) {
    const auto dh = honda_dh(T, x, y);  // components on (dT, dx, dy) = chart indices 0, 1, 2
    TwoForm w;
    // dλ∧dh
    for (int i = 0; i < 3; ++i) add_wedge(w, 3, i, dh[i]);
    // Three-dimensional star for the metric dy² + dx² + dT², oriented by (y, x, T).
    constexpr int frame[3] = {2, 1, 0};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                const int e = levi_civita3(a, b, c);
                if (e != 0) add_wedge(w, frame[b], frame[c], 0.5 * e * dh[frame[a]]);
            }
    return w;
}

std::array<double, 4> d_omega_numeric(const FormField& field, const ChartPoint& pt, double h) {
    if (!(h > 0)) throw std::invalid_argument("d_omega_numeric: step must be positive");
    double deriv[4][6];
    for (int k = 0; k < 4; ++k) {
        auto plus = pt.coords, minus = pt.coords;
        plus[k] += h;
        minus[k] -= h;
        const TwoForm a = field(plus), b = field(minus);
        for (int p = 0; p < 6; ++p) deriv[k][p] = (a.c[p] - b.c[p]) / (2 * h);
    }
    std::array<double, 4> out{};
    for (int t = 0; t < 4; ++t) {
        const int i = kTriples[t][0], j = kTriples[t][1], k = kTriples[t][2];
        out[t] = deriv[i][pair_index(j, k)] - deriv[j][pair_index(i, k)] + deriv[k][pair_index(i, j)];
    }
    return out;
}

TransversalityReport zero_transversality(double T, double x, double y) {
    auto coeffs = [](double T, double x, double y) {
        const TwoForm w = omega_near_Z(T, x, y);
        return Eigen::Vector3d(w.c[0], w.c[1], w.c[3]);
    };
    constexpr double h = 1e-3;
    Eigen::Matrix3d jac;
    const double p[3] = {T, x, y};
    for (int k = 0; k < 3; ++k) {
        double a[3] = {p[0], p[1], p[2]}, b[3] = {p[0], p[1], p[2]};
        a[k] += h;
        b[k] -= h;
        jac.col(k) = (coeffs(a[0], a[1], a[2]) - coeffs(b[0], b[1], b[2])) / (2 * h);
    }
    Eigen::FullPivLU<Eigen::Matrix3d> lu(jac);
    lu.setThreshold(1e-9);
    const Eigen::Vector3d v = coeffs(T, x, y);
    return {static_cast<int>(lu.rank()), jac.determinant(), {v[0], v[1], v[2]}};
}

TwoForm lutz_form(const ChartPoint& pt, const ProfileCurve& profile) {
    if (pt.chart != Chart::Cylindrical) throw std::invalid_argument("lutz_form: expects a cylindrical chart point");
    const PhiJet j = profile.jet(pt.coords[0], pt.coords[1]);
    // (dt∧dρ, dt∧dμ, dt∧dλ, dρ∧dμ, dρ∧dλ, dμ∧dλ)
    return two_form(Chart::Cylindrical, {0, j.f_t, j.g_t, j.f_r, j.g_r, 0});
}

TwoForm lutz_form_cartesian(double T, double x, double y, const ProfileCurve& profile) {
    const double rho = 0.5 * (x * x + y * y);
    const PhiJet j = profile.jet(T + 0.5, rho);
    // dμ = (x dy − y dx)/(2ρ); the dt∧dμ term tends to 0 on Z since f_t = O(ρ).
    const double ft_over = rho > 0 ? j.f_t / (2 * rho) : 0.0;
    return two_form(Chart::Cartesian, {-y * ft_over, x * ft_over, j.g_t, j.f_r, x * j.g_r, y * j.g_r});
}

TwoForm symplectization_form(double t, double rho, ProfileKind kind, const ProfileParams& params) {
    const ContactProfileJet p = contact_profile_jet(kind, rho, params);
    const double e = std::exp(t);
    return two_form(Chart::Cylindrical, {0, e * p.f, e * p.g, e * p.df, e * p.dg, 0});
}

LevelReport level_schedule_check(const CirclePlan& plan) {
    LevelReport rep;
    const std::size_t n = plan.signs.size();
    if (n == 0) return rep;
    if (plan.levels.size() != n + 1) {
        rep.pass = false;
        rep.violations.push_back("expected " + std::to_string(n + 1) + " levels for " + std::to_string(n) + " circles");
        return rep;
    }
    if (plan.levels.front() != 0.9 || plan.levels.back() != 1.0) {
        rep.pass = false;
        rep.violations.push_back("levels must run from 0.9 to 1.0");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = plan.levels[i], hi = plan.levels[i + 1];
        if (!(lo < hi)) {
            rep.pass = false;
            rep.violations.push_back("overlapping levels at circle " + std::to_string(i + 1));
        }
        rep.circles.push_back({i + 1, lo, hi, 0.5 * (lo + hi), plan.signs[i]});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Battery

bool BatteryReport::pass() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

namespace {

// Tracks the worst value of a quantity that must stay at or below a tolerance.
struct MaxTracker {
    double worst = 0;
    std::vector<double> at;

    void update(double v, std::vector<double> pt) {
        if (at.empty() || v > worst || std::isnan(v)) {
            worst = v;
            at = std::move(pt);
        }
    }
    CheckRecord record(std::string name, double tol) const {
        return {std::move(name), worst, tol, "<=", worst <= tol, at};
    }
};

// Tracks the smallest value of a quantity that must stay above a bound.
struct MinTracker {
    double worst = std::numeric_limits<double>::infinity();
    std::vector<double> at;

    void update(double v, std::vector<double> pt) {
        if (v < worst || std::isnan(v)) {
            worst = v;
            at = std::move(pt);
        }
    }
    CheckRecord record(std::string name, double bound) const {
        return {std::move(name), worst, bound, ">", worst > bound, at};
    }
};

double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

// Points of the (t, ρ) domain inside the blend windows of the profile.
std::vector<std::array<double, 2>> blend_zone_points(const ProfileCurve& p, std::mt19937_64& rng, int count) {
    const double rm = p.rho_max();
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::array<double, 2>> pts;
    while (static_cast<int>(pts.size()) < count) {
        const int kind = static_cast<int>(pts.size()) % 3;
        double t, rho;
        if (kind == 0) {  // left ray transition
            t = 0.04 + 0.16 * u(rng);
            rho = rm * (0.05 + 0.9 * u(rng));
        } else if (kind == 1) {  // right ray transition
            t = 0.62 + 0.31 * u(rng);
            rho = rm * (0.05 + 0.9 * u(rng));
        } else {  // radius and angle blends
            t = 0.05 + 0.9 * u(rng);
            rho = rm * (0.32 + 0.56 * u(rng));
        }
        pts.push_back({t, rho});
    }
    return pts;
}

}  // namespace

BatteryReport run_near_zero_battery(const BatteryOptions& opt) {
    BatteryReport rep;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);

    MaxTracker j_square, j_invariance, compat_sym, star, conformal, honda, wedge, closed;
    MinTracker compat_pos;
    const Mat4 id = Mat4::Identity();
    const Metric4 flat;

    for (int n = 0; n < opt.samples;) {
        const double T = coord(rng), x = coord(rng), y = coord(rng), lam = angle(rng);
        const double R = std::sqrt(4 * T * T + x * x + y * y);
        if (R < opt.r_min) continue;
        ++n;
        const std::vector<double> pt{T, x, y, lam};
        const TwoForm w = omega_near_Z(T, x, y);
        const Mat4 J = J_near(T, x, y);
        const Mat4 om = form_matrix(w);

        j_square.update(max_abs(J * J + id), pt);
        j_invariance.update(max_abs(J.transpose() * om * J - om), pt);

        // g_J(v, w) = ω(v, Jw)
        const Mat4 gj = om * J;
        compat_sym.update(max_abs(gj - gj.transpose()), pt);
        Eigen::SelfAdjointEigenSolver<Mat4> eig(0.5 * (gj + gj.transpose()));
        compat_pos.update(eig.eigenvalues().minCoeff(), pt);

        const Metric4 g = metric_g(T, x, y, opt.eps_prime);
        star.update(max_abs_diff(hodge_star_2form(g, 1, w), w), pt);

        TwoForm random_form;
        for (auto& c : random_form.c) c = coord(rng);
        conformal.update(max_abs_diff(hodge_star_2form(g, 1, random_form), hodge_star_2form(flat, 1, random_form)), pt);

        honda.update(max_abs_diff(honda_form(T, x, y), w), pt);
        wedge.update(std::abs(wedge_square(w) - 2 * R * R), pt);

        const auto d = d_omega_numeric(
            [](const std::array<double, 4>& p) { return omega_near_Z(p[0], p[1], p[2]); },
            ChartPoint{{T, x, y, lam}, Chart::Cartesian}, 1e-3);
        for (double v : d) closed.update(std::abs(v), pt);
    }

    const double tol = opt.tolerance;
    rep.records.push_back(j_square.record("J² + I (max abs entry)", tol));
    rep.records.push_back(j_invariance.record("ω(J·,J·) − ω(·,·) (max abs entry)", tol));
    rep.records.push_back(compat_sym.record("asymmetry of ω(·,J·)", tol));
    rep.records.push_back(compat_pos.record("min eigenvalue of ω(·,J·)", 0.0));
    rep.records.push_back(star.record("⋆_g ω − ω (max abs component)", tol));
    rep.records.push_back(conformal.record("⋆_g − ⋆_g₀ on random 2-forms", tol));
    rep.records.push_back(honda.record("honda_form − omega_near_Z", tol));
    rep.records.push_back(wedge.record("ω∧ω − 2R² vol", tol));
    rep.records.push_back(closed.record("dω residual of omega_near_Z, h = 1e-3", opt.closedness_tolerance));

    // Linear vanishing at Z: ω(sP)/s equals the coefficient form at P.
    {
        MaxTracker slope;
        for (int n = 0; n < 100; ++n) {
            const double T = coord(rng), x = coord(rng), y = coord(rng);
            const TwoForm ref = omega_near_Z(T, x, y);
            for (double s : {1e-1, 1e-2, 1e-3, 1e-6})
                slope.update(max_abs_diff((1.0 / s) * omega_near_Z(s * T, s * x, s * y), ref), {T, x, y, s});
        }
        rep.records.push_back(slope.record("ω(sP)/s − ω(P) as s → 0", 1e-9));
        MinTracker rank;
        for (int n = 0; n < 20; ++n) {
            const double T = n == 0 ? 0.0 : coord(rng), x = n == 0 ? 0.0 : coord(rng), y = n == 0 ? 0.0 : coord(rng);
            const auto tr = zero_transversality(T, x, y);
            rank.update(tr.rank == 3 && std::abs(std::abs(tr.det) - 2.0) < 1e-9 ? 1.0 : 0.0, {T, x, y});
        }
        rep.records.push_back(rank.record("transversality (rank 3, |det| = 2)", 0.5));
    }

    // Closedness of dα: second-order convergence of the finite-difference residual.
    {
        const ProfileCurve profile(opt.profile);
        std::mt19937_64 prng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
        const auto pts = blend_zone_points(profile, prng, 300);
        const FormField field = [&profile](const std::array<double, 4>& p) {
            return lutz_form(ChartPoint{p, Chart::Cylindrical}, profile);
        };
        auto residual = [&](double h) {
            double worst = 0;
            for (const auto& q : pts) {
                const auto d = d_omega_numeric(field, ChartPoint{{q[0], q[1], 0.0, 0.0}, Chart::Cylindrical}, h);
                for (double v : d) worst = std::max(worst, std::abs(v));
            }
            return worst;
        };
        const double r1 = residual(1e-2), r2 = residual(5e-3), r3 = residual(2.5e-3), r4 = residual(1e-3);
        const double o1 = std::log2(r1 / r2), o2 = std::log2(r2 / r3);
        // h = 1e-3 against the h² extrapolation from h = 2.5e-3.
        const double ratio = r4 / (r3 * 0.16);
        rep.records.push_back({"dα residual on blend zones, h = 1e-3 / h² prediction", ratio, 0.25, "in",
                               std::abs(ratio - 1.0) < 0.25, {r4, r3}});
        const bool ok = std::abs(o1 - 2.0) < 0.25 && std::abs(o2 - 2.0) < 0.25;
        rep.records.push_back({"observed order, h = 1e-2 → 5e-3", o1, 2.0, "in", ok, {r1, r2}});
        rep.records.push_back({"observed order, h = 5e-3 → 2.5e-3", o2, 2.0, "in", ok, {r2, r3}});
    }
    return rep;
}

BatteryReport run_profile_battery(const BatteryOptions& opt) {
    BatteryReport rep;
    const ProfileCurve profile(opt.profile);
    const ProfileParams& pp = opt.profile;
    const double rm = profile.rho_max();
    const int n = std::max(opt.grid, 2);

    // Fold formula, evaluated verbatim on a lattice covering the declared zone.
    {
        MaxTracker fold;
        const double r = profile.fold_radius();
        int inside = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double t = 0.5 - r + 2 * r * i / (n - 1);
                const double rho = r * j / (n - 1);
                if (!profile.in_fold_zone(t, rho)) continue;
                ++inside;
                const double T = t - 0.5;
                const auto [g, f] = profile.phi(t, rho);
                const double dg = g - (rho - T * T + 1.0 + pp.delta);
                const double df = f - (-2.0 * rho * T);
                fold.update(std::max(std::abs(dg), std::abs(df)), {t, rho});
            }
        CheckRecord rec = fold.record("φ − fold formula in the fold zone", 0.0);
        rec.pass = rec.pass && inside > 0;
        rep.records.push_back(rec);
        rep.records.push_back({"|det Dφ| at the fold point", std::abs(profile.jet(0.5, 0.0).jacobian()),
                               opt.tolerance, "<=", std::abs(profile.jet(0.5, 0.0).jacobian()) <= opt.tolerance,
                               {0.5, 0.0}});
        const TwoForm w0 = lutz_form_cartesian(0.0, 0.0, 0.0, profile);
        double m0 = 0;
        for (double c : w0.c) m0 = std::max(m0, std::abs(c));
        rep.records.push_back({"ω at the fold point (Cartesian chart)", m0, opt.patch_tolerance, "<=",
                               m0 <= opt.patch_tolerance, {0.5, 0.0}});

        // Pulled back along ρ = (x² + y²)/2, ω agrees with the near-Z model.
        MaxTracker pull;
        std::mt19937_64 rng(opt.seed + 7);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int k = 0; k < std::min(opt.samples, 2000); ++k) {
            const double T = r * u(rng), x = r * u(rng), y = r * u(rng);
            if (!profile.in_fold_zone(0.5 + T, 0.5 * (x * x + y * y))) continue;
            pull.update(max_abs_diff(lutz_form_cartesian(T, x, y, profile), omega_near_Z(T, x, y)), {T, x, y});
        }
        rep.records.push_back(pull.record("Cartesian ω − omega_near_Z in the fold zone", opt.tolerance));
    }

    {
        const ImmersionReport imm = phi_immersion_check(profile, n, opt.exclusion);
        rep.records.push_back({"min det Dφ off the exclusion disk", imm.min_det, 0.0, ">", imm.min_det > 0,
                               {imm.at_t, imm.at_rho}});
    }

    // Boundary patches against the symplectizations of the two contact profiles.
    {
        MaxTracker left, top, right;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double a = static_cast<double>(i) / (n - 1), b = static_cast<double>(j) / (n - 1);
                const double rho = rm * b;
                {
                    const double t = 0.019 * a;
                    const TwoForm w = lutz_form(ChartPoint{{t, rho, 0, 0}, Chart::Cylindrical}, profile);
                    left.update(max_abs_diff(w, symplectization_form(t, rho, ProfileKind::Standard, pp)), {t, rho});
                }
                {
                    const double t = a, r2 = rm * (0.9 + 0.1 * b);
                    const TwoForm w = lutz_form(ChartPoint{{t, r2, 0, 0}, Chart::Cylindrical}, profile);
                    top.update(max_abs_diff(w, symplectization_form(t, r2, ProfileKind::Standard, pp)), {t, r2});
                }
                {
                    const double t = 0.951 + 0.049 * a;
                    const TwoForm w = lutz_form(ChartPoint{{t, rho, 0, 0}, Chart::Cylindrical}, profile);
                    right.update(max_abs_diff(w, symplectization_form(t, rho, ProfileKind::Lutz, pp)), {t, rho});
                }
            }
        rep.records.push_back(left.record("ω − d(e^t α₀) near t = 0", opt.patch_tolerance));
        rep.records.push_back(top.record("ω − d(e^t α₀) near ρ = ε²/2", opt.patch_tolerance));
        rep.records.push_back(right.record("ω − d(e^t α₁) near t = 1", opt.patch_tolerance));
    }

    // The two contact profiles.
    {
        const auto s0 = contact_profile(ProfileKind::Standard, 0.0, pp);
        const auto l0 = contact_profile(ProfileKind::Lutz, 0.0, pp);
        const auto sm = contact_profile(ProfileKind::Standard, rm, pp);
        const auto lm = contact_profile(ProfileKind::Lutz, rm, pp);
        const double e0 = std::max(std::abs(s0.f), std::abs(s0.g - 1.0));
        const double e1 = std::max(std::abs(l0.f), std::abs(l0.g + 1.0));
        const double em = std::max(std::abs(sm.f - lm.f), std::abs(sm.g - lm.g));
        rep.records.push_back({"(f₀, g₀)(0) − (0, 1)", e0, opt.tolerance, "<=", e0 <= opt.tolerance, {0.0}});
        rep.records.push_back({"(f₁, g₁)(0) − (0, −1)", e1, opt.tolerance, "<=", e1 <= opt.tolerance, {0.0}});
        rep.records.push_back({"standard − Lutz profile at ρ = ε²/2", em, opt.tolerance, "<=", em <= opt.tolerance, {rm}});
        const double c0 = contact_positivity([&](double r) { return contact_profile(ProfileKind::Standard, r, pp); }, rm);
        const double c1 = contact_positivity([&](double r) { return contact_profile(ProfileKind::Lutz, r, pp); }, rm);
        rep.records.push_back({"contact positivity, standard profile", c0, 0.0, ">", c0 > 0, {}});
        rep.records.push_back({"contact positivity, Lutz profile", c1, 0.0, ">", c1 > 0, {}});
    }

    // ω∧ω > 0 at sampled interior points away from the fold.
    {
        MinTracker sq;
        std::mt19937_64 rng(opt.seed + 1);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int k = 0; k < opt.samples;) {
            const double t = u(rng), rho = rm * u(rng);
            if (std::hypot(t - 0.5, rho) < opt.exclusion) continue;
            ++k;
            sq.update(wedge_square(lutz_form(ChartPoint{{t, rho, 0, 0}, Chart::Cylindrical}, profile)), {t, rho});
        }
        rep.records.push_back(sq.record("ω∧ω at random points off the fold", 0.0));
    }
    return rep;
}

BatteryReport run_local_battery(const BatteryOptions& opt) {
    BatteryReport rep = run_near_zero_battery(opt);
    BatteryReport prof = run_profile_battery(opt);
    rep.records.insert(rep.records.end(), prof.records.begin(), prof.records.end());
    return rep;
}

}  // namespace nearsymp
