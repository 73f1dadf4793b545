#pragma once

// Dense exact matrices over Q or a number field.

#include "godeaux/field.hpp"
#include "godeaux/modp.hpp"

#include <vector>

namespace godeaux {

using Vector = std::vector<Scalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, FieldPtr field = nullptr);
    static Matrix identity(int n, FieldPtr field = nullptr);
    /// Rows must have equal length; the field is the common field of all entries.
    static Matrix from_rows(const std::vector<Vector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    const Scalar& operator()(int i, int j) const { return a_[index(i, j)]; }
    /// Stores v, promoting the matrix field if needed (mixed fields throw).
    void set(int i, int j, const Scalar& v);

    Vector row(int i) const;
    void append_row(const Vector& r);
    void append_rows(const Matrix& m);
    Matrix transpose() const;

    /// True when every entry is rational.
    bool is_rational() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Vector apply(const Vector& v) const;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

    int rows_ = 0, cols_ = 0;
    FieldPtr field_;
    std::vector<Scalar> a_;
};

/// Rank by fraction-free elimination (integer Bareiss over Q after clearing
/// row denominators; pivoted elimination over number fields).
int matrix_rank(const Matrix& m);

/// Right kernel basis in reduced row echelon form: each vector's first nonzero
/// entry is 1 and no two vectors share a leading position.
std::vector<Vector> kernel_basis(const Matrix& m);

Scalar determinant(const Matrix& m);
Matrix inverse(const Matrix& m);

/// Integer rows after clearing each row's denominators (Q matrices only).
std::vector<std::vector<Integer>> integer_rows(const Matrix& m);

/// Entrywise reduction of a rational matrix; throws DomainError if p divides a denominator.
modp::Matrix reduce_mod_p(const Matrix& m, modp::u64 p);

/// Brings a basis (as rows) into reduced row echelon form over its field.
std::vector<Vector> rref_rows(std::vector<Vector> rows);

Scalar dot(const Vector& a, const Vector& b);

}  // namespace godeaux
