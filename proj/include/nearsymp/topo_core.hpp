#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nearsymp {

using Integer = std::int64_t;
using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix. Zero-sized shapes are allowed and carry
/// their dimensions (a 0x3 matrix still has three columns).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, Integer fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Integer operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(const IntVector& v) const;
    bool is_zero() const;
    bool is_symmetric() const;
    std::vector<IntVector> to_rows() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Exact determinant (fraction-free Bareiss elimination). Throws on overflow.
Integer determinant(const IntMatrix& a);

// ---------------------------------------------------------------------------
// Cellular chain complexes in degrees 0..4

struct ChainComplex {
    std::vector<Integer> cells_per_degree = {0, 0, 0, 0, 0};
    /// boundary[k] : C_k -> C_{k-1}, shape cells[k-1] x cells[k], for k = 1..4.
    std::map<int, IntMatrix> boundary;

    /// Boundary in degree k, or the correctly shaped zero matrix when absent.
    IntMatrix boundary_or_zero(int k) const;
    Integer cells(int k) const;

    bool operator==(const ChainComplex&) const = default;
};

/// Complex with the given counts and all boundary maps zero.
ChainComplex zero_boundary_complex(const std::vector<Integer>& counts);

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
};

ValidationReport validate_complex(const ChainComplex& c);

Integer euler_characteristic(const ChainComplex& c);

struct SmithDecomposition {
    IntMatrix U, D, V;
    std::size_t rank = 0;
    IntVector elementary_divisors;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

struct HomologyGroup {
    Integer betti = 0;
    IntVector torsion;  // invariant factors > 1

    bool operator==(const HomologyGroup&) const = default;
};

HomologyGroup homology(const ChainComplex& c, int k);

/// True when some torsion coefficient of the group is even.
bool has_two_torsion(const HomologyGroup& h);

// ---------------------------------------------------------------------------
// Forms and classes (classes are Poincare-dual vectors in a fixed H_2 basis)

struct SymmetricForm {
    IntMatrix matrix;
    std::vector<std::string> labels;

    std::size_t dim() const { return matrix.rows(); }
    bool operator==(const SymmetricForm&) const = default;
};

/// Builds a form and checks symmetry; labels may be empty.
SymmetricForm make_form(IntMatrix m, std::vector<std::string> labels = {});

SymmetricForm intersection_form_from_link(const IntVector& framings, const IntMatrix& linkings);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

Inertia inertia(const SymmetricForm& q);
Integer signature(const SymmetricForm& q);
/// Rank of the positive part of the form.
Integer b2_plus(const SymmetricForm& q);

bool is_characteristic(const IntVector& c, const SymmetricForm& q);
Integer pairing(const IntVector& c, const IntVector& a, const SymmetricForm& q);

// ---------------------------------------------------------------------------
// Linear algebra over Z/2 and coboundaries

using Mod2Vector = std::vector<std::uint8_t>;

/// Some y with A y = b over Z/2 (entries of A, b are reduced mod 2), or nullopt.
std::optional<Mod2Vector> solve_mod2(const IntMatrix& a, const IntVector& b);

/// Some integer y with A y = b, or nullopt (decided through the Smith form).
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// delta^k : C^k -> C^{k+1}, the transpose of boundary[k+1].
IntMatrix coboundary_matrix(const ChainComplex& c, int k);

/// Non-negative residue of v mod 2.
inline Integer mod2(Integer v) { return ((v % 2) + 2) % 2; }

}  // namespace nearsymp
