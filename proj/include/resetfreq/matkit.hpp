#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "resetfreq/errors.hpp"
#include "resetfreq/tolerances.hpp"

namespace resetfreq {

/// Dense row-major matrix over a real or complex scalar. Sized for the small
/// state dimensions of reset elements (m <= ~8); everything is value-semantic
/// and allocation is not a concern at these sizes.
template <typename Scalar>
class MatT {
  public:
    MatT() = default;
    MatT(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Scalar{}) {}

    static MatT zeros(std::size_t rows, std::size_t cols) { return MatT(rows, cols); }

    static MatT identity(std::size_t n) {
        MatT m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar{1};
        return m;
    }

    static MatT ones(std::size_t rows, std::size_t cols) {
        MatT m(rows, cols);
        std::fill(m.a_.begin(), m.a_.end(), Scalar{1});
        return m;
    }

    static MatT from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        MatT m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw dimension_error("from_rows: ragged row lengths");
            std::size_t j = 0;
            for (const Scalar& v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    /// Column vector from a flat list.
    static MatT col(std::initializer_list<Scalar> entries) {
        MatT m(entries.size(), 1);
        std::size_t i = 0;
        for (const Scalar& v : entries) m(i++, 0) = v;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return a_.size(); }
    bool empty() const { return a_.empty(); }
    bool is_square() const { return rows_ == cols_; }
    bool is_vector() const { return cols_ == 1; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// Single-entry access for 1x1 and column-vector use.
    Scalar& operator[](std::size_t i) { return a_[i]; }
    const Scalar& operator[](std::size_t i) const { return a_[i]; }

    /// Value of a 1x1 matrix.
    Scalar scalar() const {
        if (size() != 1) throw dimension_error("scalar(): matrix is not 1x1");
        return a_[0];
    }

    const std::vector<Scalar>& data() const { return a_; }

    MatT transpose() const {
        MatT t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    MatT& operator+=(const MatT& o) {
        require_same_shape(o, "+");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    MatT& operator-=(const MatT& o) {
        require_same_shape(o, "-");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    MatT& operator*=(Scalar s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend MatT operator+(MatT a, const MatT& b) { return a += b; }
    friend MatT operator-(MatT a, const MatT& b) { return a -= b; }
    friend MatT operator*(MatT a, Scalar s) { return a *= s; }
    friend MatT operator*(Scalar s, MatT a) { return a *= s; }
    friend MatT operator-(const MatT& a) {
        MatT r = a;
        for (auto& v : r.a_) v = -v;
        return r;
    }

    friend MatT operator*(const MatT& a, const MatT& b) {
        if (a.cols_ != b.rows_)
            throw dimension_error("matmul: inner dimensions disagree");
        MatT r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const MatT& a, const MatT& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Largest absolute column sum (the induced 1-norm).
    double norm_one() const {
        double best = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            double s = 0;
            for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
            best = std::max(best, s);
        }
        return best;
    }

    double norm_max() const {
        double best = 0;
        for (const auto& v : a_) best = std::max(best, static_cast<double>(std::abs(v)));
        return best;
    }

    double norm_fro() const {
        double s = 0;
        for (const auto& v : a_) {
            const double m = std::abs(v);
            s += m * m;
        }
        return std::sqrt(s);
    }

    bool all_finite() const {
        for (const auto& v : a_)
            if (!entry_finite(v)) return false;
        return true;
    }

    bool all_zero() const {
        for (const auto& v : a_)
            if (v != Scalar{}) return false;
        return true;
    }

  private:
    static bool entry_finite(double v) { return std::isfinite(v); }
    static bool entry_finite(const std::complex<double>& v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    }
    void require_same_shape(const MatT& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_error(std::string("elementwise ") + op + ": shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

using Mat = MatT<double>;
using CMat = MatT<std::complex<double>>;

inline CMat to_complex(const Mat& m) {
    CMat c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j);
    return c;
}

inline Mat real_part(const CMat& m) {
    Mat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).real();
    return r;
}

inline Mat imag_part(const CMat& m) {
    Mat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).imag();
    return r;
}

namespace detail {

inline void require_square(const Mat& m, const char* who) {
    if (!m.is_square()) throw dimension_error(std::string(who) + ": matrix must be square");
}

inline void require_finite(const Mat& m, const char* who) {
    if (!m.all_finite()) throw dimension_error(std::string(who) + ": non-finite entries");
}

/// LU with partial pivoting, shared between the real and complex solvers.
/// Throws singular_error when a pivot vanishes relative to the matrix scale.
template <typename Scalar>
MatT<Scalar> lu_solve(MatT<Scalar> a, MatT<Scalar> b, const char* who) {
    if (!a.is_square()) throw dimension_error(std::string(who) + ": matrix must be square");
    if (a.rows() != b.rows()) throw dimension_error(std::string(who) + ": rhs row mismatch");
    const std::size_t n = a.rows();
    const double scale = std::max(a.norm_max(), std::numeric_limits<double>::min());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = std::abs(a(i, k));
            if (m > best) { best = m; piv = i; }
        }
        if (best <= scale * 1e-300 || best == 0.0)
            throw singular_error(std::string(who) + ": singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(piv, j));
        }
        const Scalar pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Scalar f = a(i, k) / pivot;
            a(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(k, j);
        }
    }
    for (std::size_t kk = n; kk-- > 0;) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar s = b(kk, j);
            for (std::size_t i = kk + 1; i < n; ++i) s -= a(kk, i) * b(i, j);
            b(kk, j) = s / a(kk, kk);
        }
    }
    return b;
}

} // namespace detail

/// Solve A X = B for real square A (partial-pivoted LU).
inline Mat solve(const Mat& a, const Mat& b) { return detail::lu_solve(a, b, "solve"); }

/// Inverse of a small square matrix; convenience over solve(A, I).
inline Mat inverse(const Mat& a) {
    detail::require_square(a, "inverse");
    return solve(a, Mat::identity(a.rows()));
}

/// Solve A X = B for complex square A. Rejects matrices whose 1-norm
/// condition estimate exceeds tol::condition_limit.
inline CMat solve_c(const CMat& a, const CMat& b) {
    if (!a.is_square()) throw dimension_error("solve_c: matrix must be square");
    const CMat x = detail::lu_solve(a, b, "solve_c");
    const CMat ainv = detail::lu_solve(a, CMat::identity(a.rows()), "solve_c");
    const double cond = a.norm_one() * ainv.norm_one();
    if (!(cond < tol::condition_limit))
        throw singular_error("solve_c: condition estimate " + std::to_string(cond) +
                             " exceeds limit");
    return x;
}

/// Matrix exponential by scaling-and-squaring with a degree-13 Pade
/// approximant. The matrices here are tiny, so the single high-order branch
/// is used unconditionally; accuracy ~1e-15 relative after unscaling.
inline Mat mat_exp(const Mat& m) {
    detail::require_square(m, "mat_exp");
    detail::require_finite(m, "mat_exp");
    const std::size_t n = m.rows();
    static constexpr double kTheta13 = 5.371920351148152;
    static constexpr double kPade[] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0,  129060195264000.0,   10559470521600.0,
        670442572800.0,      33522128640.0,       1323241920.0,
        40840800.0,          960960.0,            16380.0,
        182.0,               1.0};

    int squarings = 0;
    const double nrm = m.norm_one();
    if (nrm > kTheta13)
        squarings = static_cast<int>(std::ceil(std::log2(nrm / kTheta13)));
    Mat a = m * std::ldexp(1.0, -squarings);

    const Mat eye = Mat::identity(n);
    const Mat a2 = a * a;
    const Mat a4 = a2 * a2;
    const Mat a6 = a2 * a4;
    const Mat u = a * (a6 * (kPade[13] * a6 + kPade[11] * a4 + kPade[9] * a2) +
                       kPade[7] * a6 + kPade[5] * a4 + kPade[3] * a2 + kPade[1] * eye);
    const Mat v = a6 * (kPade[12] * a6 + kPade[10] * a4 + kPade[8] * a2) +
                  kPade[6] * a6 + kPade[4] * a4 + kPade[2] * a2 + kPade[0] * eye;
    Mat r = solve(v - u, v + u);
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

namespace detail {

inline void givens(std::complex<double> f, std::complex<double> g, double& c,
                   std::complex<double>& s) {
    if (g == std::complex<double>{}) {
        c = 1.0;
        s = {};
    } else if (f == std::complex<double>{}) {
        c = 0.0;
        s = std::conj(g) / std::abs(g);
    } else {
        const double d = std::sqrt(std::norm(f) + std::norm(g));
        c = std::abs(f) / d;
        s = (f / std::abs(f)) * std::conj(g) / d;
    }
}

/// Eigenvalues of a complex upper-Hessenberg matrix by shifted QR with
/// Wilkinson shifts and deflation.
inline std::vector<std::complex<double>> hessenberg_qr_eigs(CMat h) {
    using cplx = std::complex<double>;
    const std::size_t n = h.rows();
    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<cplx> eigs(n);
    std::size_t hi = n - 1;
    int iters_since_deflate = 0;
    int total_iters = 0;
    const int max_total = 200 * static_cast<int>(n) + 200;
    while (true) {
        // Deflate converged trailing entries.
        while (hi > 0) {
            const double off = std::abs(h(hi, hi - 1));
            const double diag = std::abs(h(hi - 1, hi - 1)) + std::abs(h(hi, hi));
            if (off <= eps * diag + std::numeric_limits<double>::min()) {
                h(hi, hi - 1) = {};
                eigs[hi] = h(hi, hi);
                --hi;
                iters_since_deflate = 0;
            } else {
                break;
            }
        }
        if (hi == 0) {
            eigs[0] = h(0, 0);
            break;
        }
        // Active window [lo, hi]: scan up for an interior zero subdiagonal.
        std::size_t lo = hi;
        while (lo > 0) {
            const double off = std::abs(h(lo, lo - 1));
            const double diag = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            if (off <= eps * diag + std::numeric_limits<double>::min()) {
                h(lo, lo - 1) = {};
                break;
            }
            --lo;
        }

        // Wilkinson shift from the trailing 2x2, nudged after stagnation.
        const cplx a = h(hi - 1, hi - 1), b = h(hi - 1, hi);
        const cplx c2 = h(hi, hi - 1), d = h(hi, hi);
        cplx mu;
        if (++iters_since_deflate % 14 == 0) {
            mu = d + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            const cplx tr2 = (a + d) * 0.5;
            const cplx disc = std::sqrt(tr2 * tr2 - (a * d - b * c2));
            const cplx r1 = tr2 + disc, r2 = tr2 - disc;
            mu = (std::abs(r1 - d) < std::abs(r2 - d)) ? r1 : r2;
        }
        if (++total_iters > max_total)
            throw nonconvergence_error("eigenvalues: QR iteration failed to converge");

        for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= mu;
        std::vector<double> cs(hi - lo);
        std::vector<cplx> ss(hi - lo);
        for (std::size_t k = lo; k < hi; ++k) {
            double c;
            cplx s;
            givens(h(k, k), h(k + 1, k), c, s);
            cs[k - lo] = c;
            ss[k - lo] = s;
            for (std::size_t j = k; j <= hi; ++j) {
                const cplx t1 = h(k, j), t2 = h(k + 1, j);
                h(k, j) = c * t1 + s * t2;
                h(k + 1, j) = -std::conj(s) * t1 + c * t2;
            }
        }
        for (std::size_t k = lo; k < hi; ++k) {
            const double c = cs[k - lo];
            const cplx s = ss[k - lo];
            const std::size_t top = lo;
            for (std::size_t i = top; i <= std::min(k + 2, hi); ++i) {
                const cplx t1 = h(i, k), t2 = h(i, k + 1);
                h(i, k) = c * t1 + std::conj(s) * t2;
                h(i, k + 1) = -s * t1 + c * t2;
            }
        }
        for (std::size_t k = lo; k <= hi; ++k) h(k, k) += mu;
    }
    return eigs;
}

} // namespace detail

/// Eigenvalues of a real square matrix. Closed forms for 1x1/2x2; Hessenberg
/// reduction plus complex shifted QR for larger sizes.
inline std::vector<std::complex<double>> eigenvalues(const Mat& m) {
    detail::require_square(m, "eigenvalues");
    detail::require_finite(m, "eigenvalues");
    using cplx = std::complex<double>;
    const std::size_t n = m.rows();
    if (n == 0) return {};
    if (n == 1) return {cplx(m(0, 0), 0.0)};
    if (n == 2) {
        const double tr = m(0, 0) + m(1, 1);
        const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        const double half = 0.5 * tr;
        const double disc = half * half - det;
        if (disc >= 0) {
            const double r = std::sqrt(disc);
            return {cplx(half + r, 0.0), cplx(half - r, 0.0)};
        }
        const double r = std::sqrt(-disc);
        return {cplx(half, r), cplx(half, -r)};
    }

    // Householder reduction to upper Hessenberg form.
    Mat h = m;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double alpha = 0;
        for (std::size_t i = k + 1; i < n; ++i) alpha += h(i, k) * h(i, k);
        alpha = std::sqrt(alpha);
        if (alpha == 0) continue;
        if (h(k + 1, k) > 0) alpha = -alpha;
        std::vector<double> v(n, 0.0);
        v[k + 1] = h(k + 1, k) - alpha;
        for (std::size_t i = k + 2; i < n; ++i) v[i] = h(i, k);
        double vnorm2 = 0;
        for (std::size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
        if (vnorm2 == 0) continue;
        const double beta = 2.0 / vnorm2;
        // H <- (I - beta v v^T) H (I - beta v v^T)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0;
            for (std::size_t i = k + 1; i < n; ++i) s += v[i] * h(i, j);
            s *= beta;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= s * v[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0;
            for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
            s *= beta;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * v[j];
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
    return detail::hessenberg_qr_eigs(to_complex(h));
}

/// Largest eigenvalue magnitude.
inline double spectral_radius(const Mat& m) {
    double best = 0;
    for (const auto& lam : eigenvalues(m)) best = std::max(best, std::abs(lam));
    return best;
}

/// Least-squares solve result. `rank_deficient` marks inputs whose design
/// matrix lost column rank; the returned solution is then the minimum-norm
/// minimizer.
struct LstsqResult {
    Mat x;
    std::size_t rank = 0;
    bool rank_deficient = false;
    double residual_norm = 0.0;
};

/// Minimize ||A x - b||_2 by Householder QR with column pivoting.
inline LstsqResult lstsq(const Mat& a_in, const Mat& b_in) {
    if (a_in.rows() < a_in.cols())
        throw dimension_error("lstsq: need rows >= cols");
    if (a_in.rows() != b_in.rows())
        throw dimension_error("lstsq: rhs row mismatch");
    if (b_in.cols() != 1) throw dimension_error("lstsq: rhs must be a column vector");
    detail::require_finite(a_in, "lstsq");
    detail::require_finite(b_in, "lstsq");

    const std::size_t nr = a_in.rows(), nc = a_in.cols();
    Mat r = a_in;
    Mat qtb = b_in;
    std::vector<std::size_t> perm(nc);
    for (std::size_t j = 0; j < nc; ++j) perm[j] = j;

    auto col_tail_norm2 = [&](std::size_t j, std::size_t from) {
        double s = 0;
        for (std::size_t i = from; i < nr; ++i) s += r(i, j) * r(i, j);
        return s;
    };

    const std::size_t steps = std::min(nr, nc);
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t best = k;
        double best_n = col_tail_norm2(k, k);
        for (std::size_t j = k + 1; j < nc; ++j) {
            const double nj = col_tail_norm2(j, k);
            if (nj > best_n) { best_n = nj; best = j; }
        }
        if (best != k) {
            for (std::size_t i = 0; i < nr; ++i) std::swap(r(i, k), r(i, best));
            std::swap(perm[k], perm[best]);
        }
        double alpha = std::sqrt(best_n);
        if (alpha == 0) continue;
        if (r(k, k) > 0) alpha = -alpha;
        std::vector<double> v(nr, 0.0);
        v[k] = r(k, k) - alpha;
        for (std::size_t i = k + 1; i < nr; ++i) v[i] = r(i, k);
        double vn2 = 0;
        for (std::size_t i = k; i < nr; ++i) vn2 += v[i] * v[i];
        if (vn2 == 0) continue;
        const double beta = 2.0 / vn2;
        for (std::size_t j = k; j < nc; ++j) {
            double s = 0;
            for (std::size_t i = k; i < nr; ++i) s += v[i] * r(i, j);
            s *= beta;
            for (std::size_t i = k; i < nr; ++i) r(i, j) -= s * v[i];
        }
        double s = 0;
        for (std::size_t i = k; i < nr; ++i) s += v[i] * qtb(i, 0);
        s *= beta;
        for (std::size_t i = k; i < nr; ++i) qtb(i, 0) -= s * v[i];
        for (std::size_t i = k + 1; i < nr; ++i) r(i, k) = 0.0;
    }

    const double rank_tol = std::numeric_limits<double>::epsilon() *
                            static_cast<double>(std::max(nr, nc)) *
                            std::max(std::abs(r(0, 0)), 1e-300);
    std::size_t rank = 0;
    while (rank < steps && std::abs(r(rank, rank)) > rank_tol) ++rank;

    LstsqResult out;
    out.rank = rank;
    out.rank_deficient = rank < nc;
    Mat y(nc, 1);
    if (!out.rank_deficient) {
        for (std::size_t kk = nc; kk-- > 0;) {
            double s = qtb(kk, 0);
            for (std::size_t j = kk + 1; j < nc; ++j) s -= r(kk, j) * y(j, 0);
            y(kk, 0) = s / r(kk, kk);
        }
    } else {
        // Minimum-norm solution: orthogonalize the leading rank rows of R
        // (complete orthogonal decomposition), then solve in that basis.
        Mat w(nc, rank); // W = [R11 R12]^T
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < nc; ++j) w(j, i) = r(i, j);
        // Householder QR of W (full column rank): W = Z * T.
        Mat t = w;
        std::vector<std::vector<double>> vs;
        std::vector<double> betas;
        for (std::size_t k = 0; k < rank; ++k) {
            double alpha = 0;
            for (std::size_t i = k; i < nc; ++i) alpha += t(i, k) * t(i, k);
            alpha = std::sqrt(alpha);
            if (t(k, k) > 0) alpha = -alpha;
            std::vector<double> v(nc, 0.0);
            v[k] = t(k, k) - alpha;
            for (std::size_t i = k + 1; i < nc; ++i) v[i] = t(i, k);
            double vn2 = 0;
            for (std::size_t i = k; i < nc; ++i) vn2 += v[i] * v[i];
            double beta = vn2 == 0 ? 0.0 : 2.0 / vn2;
            for (std::size_t j = k; j < rank && beta != 0; ++j) {
                double s = 0;
                for (std::size_t i = k; i < nc; ++i) s += v[i] * t(i, j);
                s *= beta;
                for (std::size_t i = k; i < nc; ++i) t(i, j) -= s * v[i];
            }
            vs.push_back(std::move(v));
            betas.push_back(beta);
        }
        // Solve T^T u = (Q^T b)(0:rank)  (lower triangular forward solve).
        Mat u(rank, 1);
        for (std::size_t i = 0; i < rank; ++i) {
            double s = qtb(i, 0);
            for (std::size_t j = 0; j < i; ++j) s -= t(j, i) * u(j, 0);
            u(i, 0) = s / t(i, i);
        }
        // y = Z u: embed u and apply the stored reflectors in reverse.
        Mat z(nc, 1);
        for (std::size_t i = 0; i < rank; ++i) z(i, 0) = u(i, 0);
        for (std::size_t kk = rank; kk-- > 0;) {
            const auto& v = vs[kk];
            const double beta = betas[kk];
            if (beta == 0) continue;
            double s = 0;
            for (std::size_t i = kk; i < nc; ++i) s += v[i] * z(i, 0);
            s *= beta;
            for (std::size_t i = kk; i < nc; ++i) z(i, 0) -= s * v[i];
        }
        y = z;
    }
    out.x = Mat(nc, 1);
    for (std::size_t j = 0; j < nc; ++j) out.x(perm[j], 0) = y(j, 0);

    Mat resid = a_in * out.x - b_in;
    out.residual_norm = resid.norm_fro();
    return out;
}

} // namespace resetfreq
