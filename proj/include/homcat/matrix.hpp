#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

namespace homcat {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries.
/// All homological computations in this library reduce to exact
/// integer linear algebra on these.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Matrix(int rows, int cols, std::initializer_list<Int> entries)
        : rows_(rows), cols_(cols), a_(entries) {
        assert(static_cast<int>(a_.size()) == rows * cols);
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix transpose() const;

    /// Columns [c0, c1) as a new matrix.
    Matrix columns(int c0, int c1) const;
    /// Rows [r0, r1) as a new matrix.
    Matrix row_block(int r0, int r1) const;
    /// [*this | o] side by side.
    Matrix hconcat(const Matrix& o) const;
    /// *this stacked on top of o.
    Matrix vconcat(const Matrix& o) const;

    Matrix column(int j) const { return columns(j, j + 1); }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    /// row i += c * row j
    void add_row(int i, int j, const Int& c);
    /// col i += c * col j
    void add_col(int i, int j, const Int& c);
    void scale_row(int i, const Int& c);
    void scale_col(int j, const Int& c);

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

/// Result of the Smith normal form decomposition: u * m * v == d with
/// u, v unimodular and d diagonal with d(i,i) | d(i+1,i+1).
/// u_inv and v_inv are the tracked inverses (u * u_inv == id).
struct SmithForm {
    Matrix u, d, v;
    Matrix u_inv, v_inv;
    int rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const Matrix& m);

/// Basis of the integer kernel {x : m x = 0}, one column per basis vector.
Matrix integer_kernel(const Matrix& m);

/// Solve m x = b over the integers. Returns false when no integral
/// solution exists.
bool solve_integer(const Matrix& m, const Matrix& b, Matrix& x);

}  // namespace homcat
