#include "nearsymp/profile.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <tuple>
#include <random>

using namespace nearsymp;

TEST_CASE("phi at the prescribed points") {
    const ProfileCurve p;
    const double delta = p.params().delta;
    auto [g, f] = p.phi(0.5, 0.0);
    CHECK(g == doctest::Approx(1.0 + delta).epsilon(1e-15));
    CHECK(f == 0.0);
    std::tie(g, f) = p.phi(0.0, 0.0);
    CHECK(g == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f == 0.0);
    std::tie(g, f) = p.phi(0.51, 0.001);
    CHECK(g == doctest::Approx(0.001 - 0.0001 + 1.0 + delta).epsilon(1e-14));
    CHECK(f == doctest::Approx(-2.0 * 0.001 * 0.01).epsilon(1e-12));
    CHECK(p.in_fold_zone(0.51, 0.001));
    CHECK_FALSE(p.in_fold_zone(0.5, p.fold_radius() * 1.01));
}

TEST_CASE("phi domain errors") {
    const ProfileCurve p;
    CHECK_THROWS_AS(p.phi(-0.1, 0.1), std::domain_error);
    CHECK_THROWS_AS(p.phi(0.5, p.rho_max() * 1.01), std::domain_error);
    CHECK_THROWS_AS(p.jet(1.1, 0.0), std::domain_error);
    CHECK_THROWS(ProfileCurve(ProfileParams{1.0, -0.1, 2.0}));
}

TEST_CASE("analytic jet agrees with central differences of phi") {
    const ProfileCurve p;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> ut(0.01, 0.99), ur(0.01, 0.99);
    const double h = 1e-6;
    for (int k = 0; k < 2000; ++k) {
        const double t = ut(rng), rho = p.rho_max() * ur(rng);
        const PhiJet j = p.jet(t, rho);
        const auto tp = p.phi(t + h, rho), tm = p.phi(t - h, rho);
        const auto rp = p.phi(t, rho + h), rm = p.phi(t, rho - h);
        const double scale = 1.0 + std::abs(j.g_t) + std::abs(j.g_r) + std::abs(j.f_t) + std::abs(j.f_r);
        CHECK(std::abs(j.g_t - (tp.first - tm.first) / (2 * h)) < 1e-5 * scale);
        CHECK(std::abs(j.f_t - (tp.second - tm.second) / (2 * h)) < 1e-5 * scale);
        CHECK(std::abs(j.g_r - (rp.first - rm.first) / (2 * h)) < 1e-5 * scale);
        CHECK(std::abs(j.f_r - (rp.second - rm.second) / (2 * h)) < 1e-5 * scale);
        const auto v = p.phi(t, rho);
        CHECK(j.g == v.first);
        CHECK(j.f == v.second);
    }
}

TEST_CASE("fold formula holds verbatim in the declared zone") {
    const ProfileCurve p;
    const double r = p.fold_radius(), delta = p.params().delta;
    int inside = 0;
    for (int i = 0; i <= 100; ++i)
        for (int j = 0; j <= 100; ++j) {
            const double t = 0.5 - r + 2 * r * i / 100.0, rho = r * j / 100.0;
            if (!p.in_fold_zone(t, rho)) continue;
            ++inside;
            const double T = t - 0.5;
            const auto [g, f] = p.phi(t, rho);
            CHECK(g == rho - T * T + 1.0 + delta);
            CHECK(f == -2.0 * rho * T);
        }
    CHECK(inside > 1000);
}

TEST_CASE("immersion away from the fold point") {
    const ProfileCurve p;
    const auto rep = phi_immersion_check(p, 200, 0.05);
    CHECK(rep.min_det > 0);
    CHECK(rep.evaluated > 39000);
    CHECK_THROWS(phi_immersion_check(p, 1, 0.05));
    CHECK_THROWS(phi_immersion_check(p, 10, 0.0));

    // Independent coarse check with a differenced Jacobian.
    const double h = 1e-6;
    for (int i = 0; i <= 40; ++i)
        for (int j = 0; j <= 40; ++j) {
            const double t = std::clamp(i / 40.0, h, 1 - h), rho = std::clamp(p.rho_max() * j / 40.0, h, p.rho_max() - h);
            if (std::hypot(t - 0.5, rho) < 0.05) continue;
            const auto tp = p.phi(t + h, rho), tm = p.phi(t - h, rho), rp = p.phi(t, rho + h), rm = p.phi(t, rho - h);
            const double gt = (tp.first - tm.first) / (2 * h), ft = (tp.second - tm.second) / (2 * h);
            const double gr = (rp.first - rm.first) / (2 * h), fr = (rp.second - rm.second) / (2 * h);
            CHECK(gt * fr - gr * ft > 0);
        }
}

TEST_CASE("det Dφ vanishes quadratically at the fold point") {
    const ProfileCurve p;
    CHECK(p.jet(0.5, 0.0).jacobian() == 0.0);
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
        // Along ρ = 0 the determinant is 4T².
        CHECK(p.jet(0.5 + h, 0.0).jacobian() == doctest::Approx(4 * h * h).epsilon(1e-12));
        CHECK(std::abs(p.jet(0.5 - h, h * h).jacobian()) <= 10 * h * h);
    }
}

TEST_CASE("boundary patches are symplectizations of the contact profiles") {
    const ProfileCurve p;
    const ProfileParams& pp = p.params();
    auto compare = [&](double t, double rho, ProfileKind kind) {
        const auto [g, f] = p.phi(t, rho);
        const auto c = contact_profile(kind, rho, pp);
        CHECK(std::abs(g - std::exp(t) * c.g) < 1e-12);
        CHECK(std::abs(f - std::exp(t) * c.f) < 1e-12);
    };
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) {
            const double rho = p.rho_max() * j / 20.0;
            compare(0.02 * i / 20.0, rho, ProfileKind::Standard);
            compare(0.95 + 0.05 * i / 20.0, rho, ProfileKind::Lutz);
            compare(i / 20.0, p.rho_max() * (0.9 + 0.1 * j / 20.0), ProfileKind::Standard);
        }
}

TEST_CASE("contact profiles") {
    auto s = contact_profile(ProfileKind::Standard, 0.0);
    CHECK(s.f == 0.0);
    CHECK(s.g == 1.0);
    auto l = contact_profile(ProfileKind::Lutz, 0.0);
    CHECK(std::abs(l.f) < 1e-15);
    CHECK(l.g == doctest::Approx(-1.0));
    const double rm = 0.5;
    // The two profiles agree where the Lutz twist has finished.
    for (double rho : {0.46, 0.48, 0.5}) {
        s = contact_profile(ProfileKind::Standard, rho);
        l = contact_profile(ProfileKind::Lutz, rho);
        CHECK(std::abs(s.f - l.f) < 1e-14);
        CHECK(std::abs(s.g - l.g) < 1e-14);
    }
    CHECK_THROWS_AS(contact_profile(ProfileKind::Lutz, 0.6), std::domain_error);

    CHECK(contact_positivity([](double r) { return ContactProfileValue{r, 1.0}; }, rm) == doctest::Approx(1.0));
    CHECK(contact_positivity([](double) { return ContactProfileValue{0.0, 1.0}; }, rm) == 0.0);
    CHECK(contact_positivity([](double r) { return contact_profile(ProfileKind::Lutz, r); }, rm) > 0);
    CHECK(contact_positivity([](double r) { return contact_profile(ProfileKind::Standard, r); }, rm) > 0);
}

TEST_CASE("contact profile jets match differences") {
    for (auto kind : {ProfileKind::Standard, ProfileKind::Lutz})
        for (int i = 1; i < 100; ++i) {
            const double rho = 0.5 * i / 100.0, h = 1e-6;
            const auto j = contact_profile_jet(kind, rho);
            const auto a = contact_profile(kind, rho + h), b = contact_profile(kind, rho - h);
            CHECK(std::abs(j.df - (a.f - b.f) / (2 * h)) < 1e-5 * (1 + std::abs(j.df)));
            CHECK(std::abs(j.dg - (a.g - b.g) / (2 * h)) < 1e-5 * (1 + std::abs(j.dg)));
        }
}
