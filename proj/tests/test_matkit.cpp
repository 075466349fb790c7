#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "resetfreq/matkit.hpp"

using namespace resetfreq;
using cplx = std::complex<double>;

namespace {

Mat random_mat(std::mt19937& rng, std::size_t r, std::size_t c, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = u(rng);
    return m;
}

double max_diff(const Mat& a, const Mat& b) { return (a - b).norm_max(); }

// Independent oracle for least squares: solve the 2x2 normal equations
// A^T A x = A^T b by Cramer's rule. Only valid for 2-column systems.
Mat normal_equations_2col(const Mat& a, const Mat& b) {
    double g00 = 0, g01 = 0, g11 = 0, h0 = 0, h1 = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        g00 += a(i, 0) * a(i, 0);
        g01 += a(i, 0) * a(i, 1);
        g11 += a(i, 1) * a(i, 1);
        h0 += a(i, 0) * b(i, 0);
        h1 += a(i, 1) * b(i, 0);
    }
    const double det = g00 * g11 - g01 * g01;
    Mat x(2, 1);
    x(0, 0) = (h0 * g11 - g01 * h1) / det;
    x(1, 0) = (g00 * h1 - g01 * h0) / det;
    return x;
}

} // namespace

TEST_CASE("mat_exp identity cases") {
    CHECK(max_diff(mat_exp(Mat::zeros(2, 2)), Mat::identity(2)) == 0.0);

    const Mat d = Mat::from_rows({{std::log(2.0), 0.0}, {0.0, 0.0}});
    const Mat ed = mat_exp(d);
    CHECK_THAT(ed(0, 0), Catch::Matchers::WithinAbs(2.0, 1e-14));
    CHECK_THAT(ed(1, 1), Catch::Matchers::WithinAbs(1.0, 1e-14));
    CHECK(std::abs(ed(0, 1)) < 1e-15);

    const Mat nilp = Mat::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    CHECK(max_diff(mat_exp(nilp), Mat::from_rows({{1.0, 1.0}, {0.0, 1.0}})) < 1e-15);
}

TEST_CASE("mat_exp rejects non-square input") {
    CHECK_THROWS_AS(mat_exp(Mat::zeros(2, 3)), dimension_error);
}

TEST_CASE("mat_exp inverse identity, random matrices") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 1 + rep % 5;
        const Mat m = random_mat(rng, n, n, 5.0 / static_cast<double>(n));
        const Mat prod = mat_exp(m) * mat_exp(-m);
        CHECK(max_diff(prod, Mat::identity(n)) < 1e-10);
    }
}

TEST_CASE("mat_exp semigroup in time") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    for (int rep = 0; rep < 10; ++rep) {
        const Mat a = random_mat(rng, 3, 3, 2.0);
        const double t = u(rng), s = u(rng);
        const Mat lhs = mat_exp(a * (t + s));
        const Mat rhs = mat_exp(a * t) * mat_exp(a * s);
        CHECK(max_diff(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("spectral_radius basics") {
    CHECK(spectral_radius(Mat::zeros(3, 3)) == 0.0);
    CHECK_THAT(spectral_radius(Mat::identity(2)), Catch::Matchers::WithinAbs(1.0, 1e-14));
    // companion matrix of (s+1)(s+2)
    const Mat m = Mat::from_rows({{0.0, 1.0}, {-2.0, -3.0}});
    CHECK_THAT(spectral_radius(m), Catch::Matchers::WithinAbs(2.0, 1e-12));
    CHECK_THROWS_AS(spectral_radius(Mat::zeros(2, 3)), dimension_error);
}

TEST_CASE("spectral radius of exp(A) equals exp(max real eigenvalue)") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 15; ++rep) {
        const std::size_t n = 2 + rep % 5;
        const Mat a = random_mat(rng, n, n, 1.5);
        double max_re = -1e300;
        for (const auto& lam : eigenvalues(a)) max_re = std::max(max_re, lam.real());
        const double lhs = spectral_radius(mat_exp(a));
        CHECK_THAT(lhs, Catch::Matchers::WithinRel(std::exp(max_re), 1e-8));
    }
}

TEST_CASE("eigenvalues of larger matrices against characteristic values") {
    // block diagonal: rotation-like 2x2 (eigs -1 +- 2i) and diag(3, -4, 0.5)
    Mat m = Mat::zeros(5, 5);
    m(0, 0) = -1; m(0, 1) = 2; m(1, 0) = -2; m(1, 1) = -1;
    m(2, 2) = 3; m(3, 3) = -4; m(4, 4) = 0.5;
    // similarity transform to make it dense
    std::mt19937 rng(3);
    Mat s = random_mat(rng, 5, 5, 1.0);
    for (std::size_t i = 0; i < 5; ++i) s(i, i) += 4.0;
    const Mat a = solve(s, m * s); // S^-1 M S has the same spectrum
    auto eigs = eigenvalues(a);
    std::vector<double> mags;
    for (auto& e : eigs) mags.push_back(std::abs(e));
    std::sort(mags.begin(), mags.end());
    const std::vector<double> expected = {0.5, std::sqrt(5.0), std::sqrt(5.0), 3.0, 4.0};
    REQUIRE(mags.size() == expected.size());
    for (std::size_t i = 0; i < mags.size(); ++i)
        CHECK_THAT(mags[i], Catch::Matchers::WithinAbs(expected[i], 1e-9));
}

TEST_CASE("solve_c basics") {
    const CMat eye = CMat::identity(3);
    std::mt19937 rng(5);
    CMat b(3, 1);
    for (std::size_t i = 0; i < 3; ++i) b(i, 0) = {std::generate_canonical<double, 53>(rng),
                                                   std::generate_canonical<double, 53>(rng)};
    CHECK((solve_c(eye, b) - b).norm_max() == 0.0);

    CMat a(1, 1);
    a(0, 0) = {0.0, 2.0};
    CMat rhs(1, 1);
    rhs(0, 0) = {0.0, 2.0};
    CHECK(std::abs(solve_c(a, rhs)(0, 0) - cplx(1.0, 0.0)) < 1e-15);

    const CMat tri = to_complex(Mat::from_rows({{1.0, 1.0}, {0.0, 1.0}}));
    const CMat r2 = to_complex(Mat::from_rows({{1.0}, {1.0}}));
    const CMat x = solve_c(tri, r2);
    CHECK(std::abs(x(0, 0)) < 1e-15);
    CHECK(std::abs(x(1, 0) - 1.0) < 1e-15);
}

TEST_CASE("solve_c residual bound on random systems") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 2 + rep % 6;
        CMat a(n, n), b(n, 2);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = {u(rng), u(rng)};
            a(i, i) += 3.0;
            b(i, 0) = {u(rng), u(rng)};
            b(i, 1) = {u(rng), u(rng)};
        }
        const CMat x = solve_c(a, b);
        CHECK((a * x - b).norm_fro() <= tol::solve_residual * b.norm_fro());
    }
}

TEST_CASE("solve_c rejects singular-to-tolerance input") {
    CMat a(2, 2);
    a(0, 0) = 1.0; a(0, 1) = 1.0;
    a(1, 0) = 1.0; a(1, 1) = 1.0;
    CMat b(2, 1);
    b(0, 0) = 1.0; b(1, 0) = 0.0;
    CHECK_THROWS_AS(solve_c(a, b), singular_error);
}

TEST_CASE("lstsq identity and mean") {
    const Mat v = Mat::col({1.0, -2.0, 0.5});
    const auto r1 = lstsq(Mat::identity(3), v);
    CHECK(max_diff(r1.x, v) < 1e-15);
    CHECK_FALSE(r1.rank_deficient);

    const Mat a = Mat::from_rows({{1.0}, {1.0}});
    const Mat b = Mat::col({0.0, 2.0});
    const auto r2 = lstsq(a, b);
    CHECK_THAT(r2.x(0, 0), Catch::Matchers::WithinAbs(1.0, 1e-15));
    CHECK_THAT(r2.residual_norm, Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-12));
}

TEST_CASE("lstsq matches normal-equations oracle on random overdetermined systems") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        const Mat a = random_mat(rng, 10, 2, 2.0);
        const Mat b = random_mat(rng, 10, 1, 2.0);
        const auto got = lstsq(a, b);
        const Mat want = normal_equations_2col(a, b);
        CHECK(max_diff(got.x, want) < 1e-10);
    }
}

TEST_CASE("lstsq rank-deficient minimum-norm solution") {
    // all rows [1, 1]: any x with x0 + x1 = mean(b) minimizes; min norm splits evenly
    const Mat a = Mat::from_rows({{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}});
    const Mat b = Mat::col({3.0, 3.0, 3.0});
    const auto r = lstsq(a, b);
    CHECK(r.rank_deficient);
    CHECK(r.rank == 1);
    CHECK_THAT(r.x(0, 0), Catch::Matchers::WithinAbs(1.5, 1e-12));
    CHECK_THAT(r.x(1, 0), Catch::Matchers::WithinAbs(1.5, 1e-12));
}

TEST_CASE("lstsq residual orthogonal to column space") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t nr = 6 + rep % 5, nc = 2 + rep % 3;
        const Mat a = random_mat(rng, nr, nc, 3.0);
        const Mat b = random_mat(rng, nr, 1, 3.0);
        const auto r = lstsq(a, b);
        const Mat ortho = a.transpose() * (a * r.x - b);
        CHECK(ortho.norm_max() <= tol::lstsq_orthogonality * a.norm_fro() * b.norm_fro());
    }
}

TEST_CASE("lstsq shape preconditions") {
    CHECK_THROWS_AS(lstsq(Mat::zeros(2, 3), Mat::zeros(2, 1)), dimension_error);
    CHECK_THROWS_AS(lstsq(Mat::zeros(3, 2), Mat::zeros(2, 1)), dimension_error);
}

TEST_CASE("matrix invariants") {
    const Mat m = Mat::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    CHECK(m.rows() * m.cols() == m.size());
    CHECK(m.all_finite());
    CHECK_THAT(m.norm_one(), Catch::Matchers::WithinAbs(6.0, 0.0));
    CHECK_THAT(m.transpose().norm_one(), Catch::Matchers::WithinAbs(7.0, 0.0));
    Mat bad = m;
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(bad.all_finite());
    CHECK_THROWS_AS(mat_exp(bad), dimension_error);
}
