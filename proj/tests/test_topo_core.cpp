#include "nearsymp/topo_core.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace nearsymp;
using namespace nearsymp::oracle;

namespace {

// gcd of all k×k minors, by direct enumeration of row/column subsets.
Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
    std::vector<std::size_t> rows(k), cols(k);
    Integer g = 0;
    std::vector<bool> rsel(a.rows()), csel(a.cols());
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
        do {
            IntMatrix sub(k, k);
            std::size_t ri = 0;
            for (std::size_t i = 0; i < a.rows(); ++i) {
                if (!rsel[i]) continue;
                std::size_t ci = 0;
                for (std::size_t j = 0; j < a.cols(); ++j)
                    if (csel[j]) sub(ri, ci++) = a(i, j);
                ++ri;
            }
            const double det = to_eigen(sub).determinant();
            g = std::gcd(g, static_cast<Integer>(std::llround(det)));
        } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    return std::abs(g);
}

bool brute_characteristic(const IntVector& c, const IntMatrix& q) {
    const std::size_t n = q.rows();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Integer ce = 0, ee = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1u)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                ce += c[j] * q(j, i);
                if (mask >> j & 1u) ee += q(i, j);
            }
        }
        if (((ce - ee) % 2 + 2) % 2 != 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("validate_complex examples") {
    CHECK(validate_complex(zero_boundary_complex({0, 0, 0, 0, 0})).valid);

    ChainComplex ok = zero_boundary_complex({1, 1, 1, 0, 0});
    ok.boundary[2] = IntMatrix{{2}};
    ok.boundary[1] = IntMatrix{{0}};
    CHECK(validate_complex(ok).valid);

    ChainComplex bad = zero_boundary_complex({1, 1, 1, 0, 0});
    bad.boundary[2] = IntMatrix{{1}};
    bad.boundary[1] = IntMatrix{{1}};
    const auto rep = validate_complex(bad);
    CHECK_FALSE(rep.valid);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations.front().find("∂∘∂ ≠ 0") != std::string::npos);

    ChainComplex shape = zero_boundary_complex({1, 2, 0, 0, 0});
    shape.boundary[1] = IntMatrix{{1, 1, 1}};
    CHECK_FALSE(validate_complex(shape).valid);
}

TEST_CASE("euler characteristic examples") {
    CHECK(euler_characteristic(zero_boundary_complex({1, 0, 3, 0, 1})) == 5);
    CHECK(euler_characteristic(zero_boundary_complex({1, 0, 1, 0, 1})) == 3);
    CHECK(euler_characteristic(zero_boundary_complex({1, 2, 1, 2, 1})) == -1);
}

TEST_CASE("smith normal form examples") {
    auto snf = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(snf.elementary_divisors == IntVector{1, 6});
    snf = smith_normal_form(IntMatrix(3, 2));
    CHECK(snf.rank == 0);
    CHECK(snf.elementary_divisors.empty());
    CHECK(smith_normal_form(IntMatrix{{1}}).elementary_divisors == IntVector{1});
}

TEST_CASE("smith normal form: U A V = D, unimodular factors, divisors from minors") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        const std::size_t r = dim(rng), c = dim(rng);
        const IntMatrix a = random_matrix(rng, r, c, -6, 6);
        const auto s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK(std::abs(determinant(s.U)) == 1);
        CHECK(std::abs(determinant(s.V)) == 1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        REQUIRE(s.elementary_divisors.size() == s.rank);
        CHECK(s.rank == eigen_rank(a));
        Integer prev = 1;
        for (std::size_t k = 1; k <= s.rank; ++k) {
            const Integer dk = determinantal_divisor(a, k);
            CHECK(dk != 0);
            CHECK(s.elementary_divisors[k - 1] == dk / prev);
            if (k > 1) CHECK(s.elementary_divisors[k - 1] % s.elementary_divisors[k - 2] == 0);
            prev = dk;
        }
    }
}

TEST_CASE("homology examples") {
    const auto s4 = zero_boundary_complex({1, 0, 0, 0, 1});
    CHECK(homology(s4, 0) == HomologyGroup{1, {}});
    CHECK(homology(s4, 2) == HomologyGroup{0, {}});
    CHECK(homology(zero_boundary_complex({1, 0, 3, 0, 1}), 2) == HomologyGroup{3, {}});

    ChainComplex lens = zero_boundary_complex({1, 1, 1, 0, 0});
    lens.boundary[2] = IntMatrix{{2}};
    const auto h1 = homology(lens, 1);
    CHECK(h1 == HomologyGroup{0, {2}});
    CHECK(has_two_torsion(h1));
    CHECK_FALSE(has_two_torsion(HomologyGroup{0, {3}}));
    CHECK_THROWS_AS((void)homology(lens, 5), std::out_of_range);
}

TEST_CASE("homology betti numbers agree with rank-nullity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        // Random ∂₂ with every other boundary zero, so ∂∘∂ = 0 trivially.
        std::uniform_int_distribution<Integer> dim(0, 4);
        std::vector<Integer> counts{dim(rng), dim(rng), dim(rng), dim(rng), 0};
        ChainComplex c = zero_boundary_complex(counts);
        const IntMatrix d2 = random_matrix(rng, counts[1], counts[2], -3, 3);
        c.boundary[2] = d2;
        const auto v = validate_complex(c);
        REQUIRE(v.valid);
        for (int k = 0; k <= 4; ++k) {
            const std::size_t in = k == 0 ? 0 : eigen_rank(c.boundary_or_zero(k));
            const std::size_t out = k == 4 ? 0 : eigen_rank(c.boundary_or_zero(k + 1));
            const Integer expected = c.cells(k) - static_cast<Integer>(in) - static_cast<Integer>(out);
            CHECK(homology(c, k).betti == expected);
        }
    }
}

TEST_CASE("intersection form from framed link") {
    IntMatrix l(3, 3);
    CHECK(intersection_form_from_link({1, 1, 1}, l).matrix == IntMatrix::identity(3));
    CHECK(intersection_form_from_link({0, 0}, IntMatrix{{0, 1}, {1, 0}}).matrix == IntMatrix{{0, 1}, {1, 0}});
    CHECK(intersection_form_from_link({7}, IntMatrix{{0}}).matrix == IntMatrix{{7}});
    CHECK_THROWS(intersection_form_from_link({0, 0}, IntMatrix{{0, 1}, {2, 0}}));
}

TEST_CASE("signature examples") {
    CHECK(signature(make_form(IntMatrix::identity(3))) == 3);
    CHECK(signature(make_form(IntMatrix{{0, 1}, {1, 0}})) == 0);
    CHECK(signature(make_form(e8())) == 8);
    CHECK(determinant(e8()) == 1);
    CHECK(b2_plus(make_form(IntMatrix{{1, 0}, {0, -1}})) == 1);
    CHECK_THROWS(make_form(IntMatrix{{0, 1}, {0, 0}}));
}

TEST_CASE("signature agrees with the eigenvalue sign count") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 8);
        const IntMatrix m = random_symmetric(rng, dim(rng), -4, 4);
        const auto rank = smith_normal_form(m).rank;
        const Inertia in = inertia(make_form(m));
        CHECK(in.positive + in.negative == rank);
        CHECK(signature(make_form(m)) == eigen_signature(m, rank));
    }
}

TEST_CASE("determinant agrees with floating point") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        const std::size_t n = dim(rng);
        const IntMatrix m = random_matrix(rng, n, n, -5, 5);
        CHECK(determinant(m) == std::llround(to_eigen(m).determinant()));
    }
}

TEST_CASE("characteristic vectors and pairings") {
    const auto q3 = make_form(IntMatrix::identity(3));
    CHECK(is_characteristic({1, 3, 3}, q3));
    CHECK_FALSE(is_characteristic({0, 0, 0}, q3));
    const auto h = make_form(IntMatrix{{0, 1}, {1, 0}});
    CHECK(is_characteristic({2, 2}, h));
    for (Integer a = 0; a < 2; ++a)
        for (Integer b = 0; b < 2; ++b) CHECK(is_characteristic({a, b}, h) == brute_characteristic({a, b}, h.matrix));

    CHECK(pairing({1, 3, 3}, {1, 3, 3}, q3) == 19);
    CHECK(pairing({1, 3, 3}, {1, 0, 0}, q3) == 1);
    CHECK(pairing({5, -2, 7}, {0, 0, 0}, q3) == 0);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        const std::size_t n = dim(rng);
        const IntMatrix m = random_symmetric(rng, n, -3, 3);
        std::uniform_int_distribution<int> u(-3, 3);
        IntVector c(n);
        for (auto& v : c) v = u(rng);
        CHECK(is_characteristic(c, make_form(m)) == brute_characteristic(c, m));
    }
}

TEST_CASE("van der Blij: c² ≡ σ mod 8 on unimodular forms") {
    std::mt19937_64 rng(8);
    const std::vector<IntMatrix> blocks = {IntMatrix{{1}}, IntMatrix{{-1}}, IntMatrix{{0, 1}, {1, 0}}, e8()};
    for (int trial = 0; trial < 60; ++trial) {
        // Block sum of up to three pieces, then a random change of basis.
        std::vector<IntMatrix> parts;
        std::size_t n = 0;
        std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
        const int count = 1 + trial % 3;
        for (int k = 0; k < count; ++k) {
            const auto& b = blocks[trial % 7 == 0 && k == 0 ? 3 : pick(rng) % 3];
            if (n + b.rows() > 12) break;
            parts.push_back(b);
            n += b.rows();
        }
        IntMatrix q(n, n);
        std::size_t off = 0;
        for (const auto& b : parts) {
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) q(off + i, off + j) = b(i, j);
            off += b.rows();
        }
        const IntMatrix p = random_unimodular(rng, n, 3 * static_cast<int>(n));
        q = p * q * p.transpose();
        REQUIRE(std::abs(determinant(q)) == 1);
        const auto form = make_form(q);
        const Integer sigma = signature(form);
        const Integer chi = 2 + static_cast<Integer>(n);

        // A characteristic vector: Q c ≡ diag(Q) mod 2 has a unique solution mod 2.
        IntVector base;
        for (std::uint32_t mask = 0; mask < (1u << std::min<std::size_t>(n, 12)); ++mask) {
            IntVector c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = mask >> i & 1u;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                Integer ce = 0;
                for (std::size_t j = 0; j < n; ++j) ce += q(i, j) * c[j];
                ok = mod2(ce) == mod2(q(i, i));
            }
            if (ok) {
                base = c;
                break;
            }
        }
        REQUIRE(base.size() == n);
        std::uniform_int_distribution<int> u(-3, 3);
        for (int s = 0; s < 20; ++s) {
            IntVector c = base;
            for (auto& v : c) v += 2 * u(rng);
            REQUIRE(is_characteristic(c, form));
            const Integer c2 = pairing(c, c, form);
            CHECK(((c2 - sigma) % 8 + 8) % 8 == 0);
            CHECK(((c2 - 3 * sigma - 2 * chi) % 4 + 4) % 4 == 0);
        }
    }
}

TEST_CASE("solve_mod2 examples and exhaustive oracle") {
    auto y = solve_mod2(IntMatrix::identity(2), {1, 0});
    REQUIRE(y);
    CHECK(*y == Mod2Vector{1, 0});
    y = solve_mod2(IntMatrix{{0}, {1}}, {0, 1});
    REQUIRE(y);
    CHECK(*y == Mod2Vector{1});
    CHECK_FALSE(solve_mod2(IntMatrix(2, 2), {1, 0}));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 8);
        const std::size_t r = dim(rng), c = dim(rng);
        const IntMatrix a = random_matrix(rng, r, c, -2, 3);
        IntVector b(r);
        std::uniform_int_distribution<int> bit(0, 1);
        for (auto& v : b) v = bit(rng);
        bool exists = false;
        for (std::uint32_t mask = 0; mask < (1u << c) && !exists; ++mask) {
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i) {
                Integer s = 0;
                for (std::size_t j = 0; j < c; ++j) s += a(i, j) * (mask >> j & 1u);
                ok = mod2(s) == mod2(b[i]);
            }
            exists = ok;
        }
        const auto sol = solve_mod2(a, b);
        CHECK(sol.has_value() == exists);
        if (sol) {
            for (std::size_t i = 0; i < r; ++i) {
                Integer s = 0;
                for (std::size_t j = 0; j < c; ++j) s += a(i, j) * (*sol)[j];
                CHECK(mod2(s) == mod2(b[i]));
            }
        }
    }
}

TEST_CASE("solve_integer") {
    CHECK_FALSE(solve_integer(IntMatrix{{2}}, {1}));
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        const std::size_t r = dim(rng), c = dim(rng);
        const IntMatrix a = random_matrix(rng, r, c, -4, 4);
        IntVector y0(c);
        std::uniform_int_distribution<int> u(-5, 5);
        for (auto& v : y0) v = u(rng);
        const IntVector b = a * y0;
        const auto y = solve_integer(a, b);
        REQUIRE(y);
        CHECK(a * *y == b);
        // Perturbing one coordinate by an odd amount of a doubled system is never solvable.
        IntMatrix a2 = a;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a2(i, j) *= 2;
        IntVector b2 = a2 * y0;
        b2[0] += 1;
        CHECK_FALSE(solve_integer(a2, b2));
    }
}

TEST_CASE("coboundary matrices") {
    ChainComplex c = zero_boundary_complex({1, 1, 2, 0, 0});
    c.boundary[2] = IntMatrix{{0, 1}};
    CHECK(coboundary_matrix(c, 1) == IntMatrix{{0}, {1}});
    CHECK(coboundary_matrix(c, 1) == c.boundary_or_zero(2).transpose());
    const auto z = zero_boundary_complex({2, 3, 1, 0, 0});
    CHECK(coboundary_matrix(z, 0).is_zero());
    CHECK(coboundary_matrix(z, 0).rows() == 3);
    CHECK(coboundary_matrix(z, 0).cols() == 2);
    CHECK_THROWS_AS((void)coboundary_matrix(z, 4), std::out_of_range);

    // Distinguished pair ∂C²_{p+1} = C¹_b: δ¹ has a unit entry at row p+1, column b.
    ChainComplex g = zero_boundary_complex({1, 2, 3, 0, 0});
    g.boundary[2] = IntMatrix{{0, 0, 0}, {0, 0, 1}};
    const IntMatrix d1 = coboundary_matrix(g, 1);
    CHECK(d1(2, 1) == 1);
    CHECK(d1(2, 0) == 0);
}
