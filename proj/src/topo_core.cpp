#include "nearsymp/topo_core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nearsymp {

namespace mp = boost::multiprecision;
using BigInt = mp::cpp_int;
using Rational = mp::cpp_rational;

namespace {

Integer narrow(const BigInt& v, const char* what) {
    if (v > BigInt(std::numeric_limits<Integer>::max()) ||
        v < BigInt(std::numeric_limits<Integer>::min())) {
        throw std::overflow_error(std::string(what) + ": result exceeds 64-bit range");
    }
    return static_cast<Integer>(v);
}

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntMatrix& a) {
    BigMatrix m(a.rows(), std::vector<BigInt>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
    return m;
}

IntMatrix from_big(const BigMatrix& m, std::size_t rows, std::size_t cols) {
    IntMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = narrow(m[i][j], "smith_normal_form");
    return out;
}

BigMatrix big_identity(std::size_t n) {
    BigMatrix m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Integer fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Integer a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("IntMatrix: shape mismatch in matrix-vector product");
    IntVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Integer v) { return v == 0; });
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::vector<IntVector> IntMatrix::to_rows() const {
    std::vector<IntVector> out(rows_, IntVector(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

Integer determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    BigMatrix m = to_big(a);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return narrow(sign * m[n - 1][n - 1], "determinant");
}

// ---------------------------------------------------------------------------
// Chain complexes

Integer ChainComplex::cells(int k) const {
    if (k < 0 || k >= static_cast<int>(cells_per_degree.size())) return 0;
    return cells_per_degree[k];
}

IntMatrix ChainComplex::boundary_or_zero(int k) const {
    auto it = boundary.find(k);
    if (it != boundary.end()) return it->second;
    return IntMatrix(static_cast<std::size_t>(cells(k - 1)), static_cast<std::size_t>(cells(k)));
}

ChainComplex zero_boundary_complex(const std::vector<Integer>& counts) {
    ChainComplex c;
    c.cells_per_degree = counts;
    c.cells_per_degree.resize(5, 0);
    return c;
}

ValidationReport validate_complex(const ChainComplex& c) {
    ValidationReport report;
    auto fail = [&](std::string msg) {
        report.valid = false;
        report.violations.push_back(std::move(msg));
    };
    if (c.cells_per_degree.size() != 5) fail("cells_per_degree must list degrees 0..4");
    for (std::size_t k = 0; k < c.cells_per_degree.size(); ++k)
        if (c.cells_per_degree[k] < 0) fail("negative cell count in degree " + std::to_string(k));
    for (const auto& [k, m] : c.boundary) {
        if (k < 1 || k > 4) {
            fail("boundary map declared in degree " + std::to_string(k) + " (valid degrees are 1..4)");
            continue;
        }
        if (static_cast<Integer>(m.rows()) != c.cells(k - 1) || static_cast<Integer>(m.cols()) != c.cells(k)) {
            std::ostringstream os;
            os << "shape mismatch in degree " << k << ": boundary is " << m.rows() << "x" << m.cols()
               << ", expected " << c.cells(k - 1) << "x" << c.cells(k);
            fail(os.str());
        }
    }
    if (!report.valid) return report;
    for (int k = 2; k <= 4; ++k) {
        IntMatrix comp = c.boundary_or_zero(k - 1) * c.boundary_or_zero(k);
        for (std::size_t i = 0; i < comp.rows(); ++i)
            for (std::size_t j = 0; j < comp.cols(); ++j)
                if (comp(i, j) != 0) {
                    std::ostringstream os;
                    os << "∂∘∂ ≠ 0 in degree " << k << " at entry (" << i << "," << j
                       << "): value " << comp(i, j);
                    fail(os.str());
                }
    }
    return report;
}

Integer euler_characteristic(const ChainComplex& c) {
    Integer chi = 0;
    for (std::size_t k = 0; k < c.cells_per_degree.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * c.cells_per_degree[k];
    return chi;
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    BigMatrix d = to_big(a);
    BigMatrix u = big_identity(m);
    BigMatrix v = big_identity(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : d) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    };
    // row_i += q * row_j
    auto add_row = [&](std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t c = 0; c < n; ++c) d[i][c] += q * d[j][c];
        for (std::size_t c = 0; c < m; ++c) u[i][c] += q * u[j][c];
    };
    // col_i += q * col_j
    auto add_col = [&](std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t r = 0; r < m; ++r) d[r][i] += q * d[r][j];
        for (std::size_t r = 0; r < n; ++r) v[r][i] += q * v[r][j];
    };

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        while (true) {
            // Smallest nonzero magnitude in the trailing block, row-major tie-break.
            std::size_t pr = m, pc = n;
            BigInt best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d[i][j] != 0 && (pr == m || mp::abs(d[i][j]) < best)) {
                        best = mp::abs(d[i][j]);
                        pr = i;
                        pc = j;
                    }
            if (pr == m) goto done;
            if (pr != t) swap_rows(t, pr);
            if (pc != t) swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (d[i][t] != 0) {
                    BigInt q = d[i][t] / d[t][t];
                    add_row(i, t, -q);
                    if (d[i][t] != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (d[t][j] != 0) {
                    BigInt q = d[t][j] / d[t][t];
                    add_col(j, t, -q);
                    if (d[t][j] != 0) clean = false;
                }
            if (!clean) continue;

            // Enforce the divisibility chain before fixing the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (!divides) continue;
            if (d[t][t] < 0) {
                for (std::size_t c = 0; c < n; ++c) d[t][c] = -d[t][c];
                for (std::size_t c = 0; c < m; ++c) u[t][c] = -u[t][c];
            }
            break;
        }
    }
done:
    SmithDecomposition out;
    out.U = from_big(u, m, m);
    out.D = from_big(d, m, n);
    out.V = from_big(v, n, n);
    out.rank = t;
    for (std::size_t i = 0; i < t; ++i) out.elementary_divisors.push_back(out.D(i, i));
    return out;
}

HomologyGroup homology(const ChainComplex& c, int k) {
    if (k < 0 || k > 4) throw std::out_of_range("homology: degree " + std::to_string(k) + " outside 0..4");
    const Integer n = c.cells(k);
    Integer rank_out = 0;
    if (k >= 1) rank_out = static_cast<Integer>(smith_normal_form(c.boundary_or_zero(k)).rank);
    HomologyGroup h;
    Integer rank_in = 0;
    if (k <= 3) {
        auto snf = smith_normal_form(c.boundary_or_zero(k + 1));
        rank_in = static_cast<Integer>(snf.rank);
        for (Integer dvs : snf.elementary_divisors)
            if (dvs > 1) h.torsion.push_back(dvs);
    }
    h.betti = n - rank_out - rank_in;
    return h;
}

bool has_two_torsion(const HomologyGroup& h) {
    return std::any_of(h.torsion.begin(), h.torsion.end(), [](Integer t) { return t % 2 == 0; });
}

// ---------------------------------------------------------------------------
// Forms

SymmetricForm make_form(IntMatrix m, std::vector<std::string> labels) {
    if (!m.is_symmetric()) throw std::invalid_argument("symmetric form: matrix is not symmetric");
    if (!labels.empty() && labels.size() != m.rows())
        throw std::invalid_argument("symmetric form: label count does not match dimension");
    return SymmetricForm{std::move(m), std::move(labels)};
}

SymmetricForm intersection_form_from_link(const IntVector& framings, const IntMatrix& linkings) {
    const std::size_t n = framings.size();
    if (linkings.rows() != n || linkings.cols() != n)
        throw std::invalid_argument("intersection_form_from_link: linking matrix shape does not match framings");
    if (!linkings.is_symmetric()) throw std::invalid_argument("intersection_form_from_link: linkings not symmetric");
    IntMatrix q = linkings;
    for (std::size_t i = 0; i < n; ++i) {
        if (linkings(i, i) != 0)
            throw std::invalid_argument("intersection_form_from_link: linking matrix must have zero diagonal");
        q(i, i) = framings[i];
    }
    return SymmetricForm{q, {}};
}

Inertia inertia(const SymmetricForm& q) {
    const std::size_t n = q.dim();
    if (!q.matrix.is_symmetric()) throw std::invalid_argument("signature: matrix is not symmetric");
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = q.matrix(i, j);
    std::vector<bool> active(n, true);
    std::size_t remaining = n;
    Inertia out;

    while (remaining > 0) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && m[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv != n) {
            (m[piv][piv] > 0 ? out.positive : out.negative)++;
            active[piv] = false;
            --remaining;
            const Rational p = m[piv][piv];
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i] || m[i][piv] == 0) continue;
                const Rational f = m[i][piv] / p;
                for (std::size_t j = 0; j < n; ++j)
                    if (active[j]) m[i][j] -= f * m[piv][j];
            }
            continue;
        }
        // All active diagonals vanish: split off a hyperbolic block if possible.
        std::size_t bi = n, bj = n;
        for (std::size_t i = 0; i < n && bi == n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (active[j] && m[i][j] != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        }
        if (bi == n) {
            out.zero += remaining;
            break;
        }
        ++out.positive;
        ++out.negative;
        active[bi] = active[bj] = false;
        remaining -= 2;
        // Schur complement of [[0,b],[b,0]]: M -= (M_{.i} M_{j.} + M_{.j} M_{i.}) / b
        const Rational b = m[bi][bj];
        std::vector<Rational> ci(n), cj(n);
        for (std::size_t k = 0; k < n; ++k) {
            ci[k] = m[k][bi];
            cj[k] = m[k][bj];
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (!active[r]) continue;
            for (std::size_t s = 0; s < n; ++s)
                if (active[s]) m[r][s] -= (ci[r] * cj[s] + cj[r] * ci[s]) / b;
        }
    }
    return out;
}

Integer signature(const SymmetricForm& q) {
    Inertia in = inertia(q);
    return static_cast<Integer>(in.positive) - static_cast<Integer>(in.negative);
}

Integer b2_plus(const SymmetricForm& q) { return static_cast<Integer>(inertia(q).positive); }

bool is_characteristic(const IntVector& c, const SymmetricForm& q) {
    if (c.size() != q.dim()) throw std::invalid_argument("is_characteristic: dimension mismatch");
    IntVector qc = q.matrix * c;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (mod2(qc[i]) != mod2(q.matrix(i, i))) return false;
    return true;
}

Integer pairing(const IntVector& c, const IntVector& a, const SymmetricForm& q) {
    if (c.size() != q.dim() || a.size() != q.dim()) throw std::invalid_argument("pairing: dimension mismatch");
    IntVector qa = q.matrix * a;
    Integer s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * qa[i];
    return s;
}

// ---------------------------------------------------------------------------
// Z/2 and coboundaries

std::optional<Mod2Vector> solve_mod2(const IntMatrix& a, const IntVector& b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw std::invalid_argument("solve_mod2: right-hand side length mismatch");
    std::vector<Mod2Vector> aug(m, Mod2Vector(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = static_cast<std::uint8_t>(mod2(a(i, j)));
        aug[i][n] = static_cast<std::uint8_t>(mod2(b[i]));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && aug[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(aug[row], aug[sel]);
        for (std::size_t i = 0; i < m; ++i)
            if (i != row && aug[i][col])
                for (std::size_t j = col; j <= n; ++j) aug[i][j] ^= aug[row][j];
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (aug[i][n]) return std::nullopt;
    Mod2Vector y(n, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = aug[i][n];
    return y;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: right-hand side length mismatch");
    // U A V = D, so A y = b  <=>  D (V^-1 y) = U b.
    const SmithDecomposition snf = smith_normal_form(a);
    const IntVector w = snf.U * b;
    IntVector u(a.cols(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < snf.rank) {
            const Integer dv = snf.D(i, i);
            if (w[i] % dv != 0) return std::nullopt;
            u[i] = w[i] / dv;
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V * u;
}

IntMatrix coboundary_matrix(const ChainComplex& c, int k) {
    if (k < 0 || k > 3) throw std::out_of_range("coboundary_matrix: degree " + std::to_string(k) + " outside 0..3");
    return c.boundary_or_zero(k + 1).transpose();
}

}  // namespace nearsymp
