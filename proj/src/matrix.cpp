#include "homcat/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace homcat {

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Matrix Matrix::columns(int c0, int c1) const {
    Matrix r(rows_, c1 - c0);
    for (int i = 0; i < rows_; ++i)
        for (int j = c0; j < c1; ++j) r(i, j - c0) = (*this)(i, j);
    return r;
}

Matrix Matrix::row_block(int r0, int r1) const {
    Matrix r(r1 - r0, cols_);
    for (int i = r0; i < r1; ++i)
        for (int j = 0; j < cols_; ++j) r(i - r0, j) = (*this)(i, j);
    return r;
}

Matrix Matrix::hconcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hconcat row mismatch");
    Matrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

Matrix Matrix::vconcat(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vconcat col mismatch");
    Matrix r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
    return r;
}

void Matrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void Matrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void Matrix::add_row(int i, int j, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void Matrix::add_col(int i, int j, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void Matrix::scale_row(int i, const Int& c) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) *= c;
}

void Matrix::scale_col(int j, const Int& c) {
    for (int k = 0; k < rows_; ++k) (*this)(k, j) *= c;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << (*this)(i, j);
        }
    }
    os << "]";
    return os.str();
}

namespace {

// Elementary operations on d are mirrored on the transformation
// matrices so that u * m_original * v == d stays invariant.
struct SnfState {
    Matrix d, u, v, u_inv, v_inv;

    void row_swap(int i, int j) {
        d.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void col_swap(int i, int j) {
        d.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    // row i += c * row j
    void row_add(int i, int j, const Int& c) {
        d.add_row(i, j, c);
        u.add_row(i, j, c);
        u_inv.add_col(j, i, -c);
    }
    // col i += c * col j
    void col_add(int i, int j, const Int& c) {
        d.add_col(i, j, c);
        v.add_col(i, j, c);
        v_inv.add_row(j, i, -c);
    }
    void row_negate(int i) {
        d.scale_row(i, -1);
        u.scale_row(i, -1);
        u_inv.scale_col(i, -1);
    }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Diagonalize the trailing block starting at position t0, assuming the
// leading t0 x t0 part is already diagonal and rows/cols >= t0 vanish
// outside the trailing block. Returns the diagonal rank.
int eliminate_from(SnfState& s, int t0) {
    const int rows = s.d.rows(), cols = s.d.cols();
    const int n = std::min(rows, cols);
    int t = t0;
    for (; t < n; ++t) {
        // Nonzero entry of least absolute value in the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (s.d(i, j) != 0 &&
                    (pi < 0 || abs_int(s.d(i, j)) < abs_int(s.d(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;  // trailing block is zero
        s.row_swap(t, pi);
        s.col_swap(t, pj);

        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < rows; ++i) {
                if (s.d(i, t) == 0) continue;
                Int q = s.d(i, t) / s.d(t, t);
                s.row_add(i, t, -q);
                if (s.d(i, t) != 0) {  // remainder is a smaller pivot
                    s.row_swap(t, i);
                    again = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (s.d(t, j) == 0) continue;
                Int q = s.d(t, j) / s.d(t, t);
                s.col_add(j, t, -q);
                if (s.d(t, j) != 0) {
                    s.col_swap(t, j);
                    again = true;
                }
            }
        }
        if (s.d(t, t) < 0) s.row_negate(t);
    }
    return t;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    SnfState s{m, Matrix::identity(rows), Matrix::identity(cols), Matrix::identity(rows),
               Matrix::identity(cols)};

    int rank = eliminate_from(s, 0);

    // Enforce the divisibility chain d(i,i) | d(i+1,i+1): fold the
    // offending entry into column i and re-diagonalize from i.
    for (;;) {
        int bad = -1;
        for (int i = 0; i + 1 < rank; ++i)
            if (s.d(i + 1, i + 1) % s.d(i, i) != 0) {
                bad = i;
                break;
            }
        if (bad < 0) break;
        s.col_add(bad, bad + 1, 1);
        rank = eliminate_from(s, bad);
    }

    SmithForm out{std::move(s.u), std::move(s.d), std::move(s.v), std::move(s.u_inv),
                  std::move(s.v_inv), rank};
    return out;
}

Matrix integer_kernel(const Matrix& m) {
    if (m.cols() == 0) return Matrix(m.cols(), 0);
    if (m.rows() == 0) return Matrix::identity(m.cols());
    SmithForm s = smith_normal_form(m);
    // m v e_j = u_inv d e_j = 0 exactly for the zero diagonal columns.
    return s.v.columns(s.rank, m.cols());
}

bool solve_integer(const Matrix& m, const Matrix& b, Matrix& x) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve shape mismatch");
    SmithForm s = smith_normal_form(m);
    Matrix c = s.u * b;  // d y = c with x = v y
    Matrix y(m.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        for (int i = 0; i < m.rows(); ++i) {
            Int di = (i < std::min(m.rows(), m.cols())) ? s.d(i, i) : Int(0);
            if (di == 0) {
                if (c(i, j) != 0) return false;
            } else {
                if (c(i, j) % di != 0) return false;
                if (i < m.cols()) y(i, j) = c(i, j) / di;
            }
        }
    }
    x = s.v * y;
    return true;
}

}  // namespace homcat
