#ifndef LEONARD_MATRIX_HPP
#define LEONARD_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

class Matrix;

/// Column vector over a fixed field.
class Vector {
  public:
    Vector(std::size_t n, const FieldSpec& f);
    Vector(std::vector<FieldElement> entries, const FieldSpec& f);

    std::size_t size() const { return entries_.size(); }
    const FieldSpec& field() const { return field_; }

    const FieldElement& operator[](std::size_t i) const { return entries_[i]; }
    FieldElement& operator[](std::size_t i) { return entries_[i]; }

    bool is_zero() const;
    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector scaled(const FieldElement& c) const;
    bool operator==(const Vector& o) const;
    bool operator!=(const Vector& o) const { return !(*this == o); }

  private:
    FieldSpec field_;
    std::vector<FieldElement> entries_;
};

/// Dense row-major matrix over a fixed field; rows and columns are
/// indexed from 0.  All operations are exact and check dimensions and
/// field compatibility.
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f);

    static Matrix identity(std::size_t n, const FieldSpec& f);
    static Matrix zero(std::size_t rows, std::size_t cols, const FieldSpec& f);
    /// Builds a matrix from integer literals (mostly for tests).
    static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows,
                            const FieldSpec& f);
    /// Stacks column vectors into a matrix.
    static Matrix from_columns(std::span<const Vector> cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const FieldElement& at(std::size_t i, std::size_t j) const;
    FieldElement& at(std::size_t i, std::size_t j);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const FieldElement& c) const;
    Matrix operator-() const;
    Vector operator*(const Vector& v) const;

    Matrix transposed() const;
    FieldElement trace() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;

  private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<FieldElement> e_;
};

/// Result of exact Gaussian elimination on [M | rhs].
struct LinearSolution {
    bool consistent = false;
    std::size_t rank = 0;
    /// One solution per rhs column; meaningful only when consistent.
    Matrix particular;
    /// Basis of the null space of M; solution set = particular + span(null_basis).
    std::vector<Vector> null_basis;
};

/// Solves M x = rhs exactly (Gauss-Jordan, first-nonzero pivoting, so the
/// null-space basis is deterministic).  Reports inconsistency instead of
/// guessing.
LinearSolution solve(const Matrix& M, const Matrix& rhs);
LinearSolution solve(const Matrix& M, const Vector& rhs);

std::size_t rank(const Matrix& M);
std::vector<Vector> null_space(const Matrix& M);
Matrix inverse(const Matrix& M); // throws Error if singular

/// Evaluates the monic product (X - r_0 I)(X - r_1 I)...(X - r_{k-1} I);
/// the empty root list gives I.
Matrix poly_eval_roots(std::span<const FieldElement> roots, const Matrix& X);

/// Evaluates c_0 I + c_1 X + ... + c_k X^k by Horner's rule.
Matrix poly_eval_coeffs(std::span<const FieldElement> coeffs, const Matrix& X);

/// Evaluates the monic product (x - r_0)...(x - r_{k-1}) at a scalar.
FieldElement poly_eval_roots_scalar(std::span<const FieldElement> roots, const FieldElement& x);

/// True iff the vectors are n vectors of length n forming a basis.
bool is_basis(std::span<const Vector> vectors);

std::string format_matrix(const Matrix& M);

} // namespace leonard

#endif
