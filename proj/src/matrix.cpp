#include "godeaux/matrix.hpp"

#include <algorithm>

namespace godeaux {

Matrix::Matrix(int rows, int cols, FieldPtr field)
    : rows_(rows), cols_(cols), field_(std::move(field)),
      a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(field_)) {
    if (rows < 0 || cols < 0) throw DomainError("matrix: negative dimension");
}

Matrix Matrix::identity(int n, FieldPtr field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.a_[m.index(i, i)] = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(0, static_cast<int>(rows[0].size()));
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void Matrix::set(int i, int j, const Scalar& v) {
    if (v.field() && v.field() != field_) field_ = common_field(field_, v.field());
    a_[index(i, j)] = v;
}

Vector Matrix::row(int i) const {
    return Vector(a_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
                  a_.begin() + static_cast<std::ptrdiff_t>(index(i, 0) + cols_));
}

void Matrix::append_row(const Vector& r) {
    if (static_cast<int>(r.size()) != cols_) {
        if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
        else throw DomainError("matrix: row length mismatch");
    }
    for (const auto& v : r)
        if (v.field() && v.field() != field_) field_ = common_field(field_, v.field());
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

void Matrix::append_rows(const Matrix& m) {
    if (m.rows_ == 0) return;
    if (rows_ == 0 && cols_ == 0) cols_ = m.cols_;
    if (m.cols_ != cols_) throw DomainError("matrix: column count mismatch");
    field_ = common_field(field_, m.field_);
    a_.insert(a_.end(), m.a_.begin(), m.a_.end());
    rows_ += m.rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.a_[t.index(j, i)] = a_[index(i, j)];
    return t;
}

bool Matrix::is_rational() const {
    for (const auto& v : a_)
        if (!v.is_rational()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_, common_field(a.field_, b.field_));
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) c.a_[c.index(i, j)] += x * y;
            }
        }
    return c;
}

Vector Matrix::apply(const Vector& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DomainError("matrix-vector product: dimension mismatch");
    Vector out(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Scalar& x = a_[index(i, j)];
            if (!x.is_zero() && !v[j].is_zero()) out[i] += x * v[j];
        }
    return out;
}

Scalar dot(const Vector& a, const Vector& b) {
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        Integer den = 1;
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& v = m(i, j).rational();
            if (v.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
        }
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& v = m(i, j).rational();
            if (v == 0) continue;
            out[i][j] = v.get_num() * (den / v.get_den());
        }
    }
    return out;
}

modp::Matrix reduce_mod_p(const Matrix& m, modp::u64 p) {
    modp::Matrix r(p, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = modp::reduce(m(i, j).rational(), p);
    return r;
}

namespace {

// Fraction-free (Bareiss) forward elimination in place. Pivot: first nonzero
// entry in the current column at or below the current row. Returns pivot
// columns; rows beyond the rank are zero afterwards.
std::vector<int> bareiss(std::vector<std::vector<Integer>>& a, int cols, int* swaps = nullptr) {
    const int rows = static_cast<int>(a.size());
    std::vector<int> piv;
    Integer prev = 1, t;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(a[i][col]) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            if (swaps) ++*swaps;
        }
        const Integer& pv = a[r][col];
        for (int i = r + 1; i < rows; ++i) {
            auto& ri = a[i];
            const auto& rr = a[r];
            const bool lead_zero = sgn(ri[col]) == 0;
            for (int j = col + 1; j < cols; ++j) {
                if (lead_zero) {
                    if (sgn(ri[j]) == 0) continue;
                    mpz_mul(t.get_mpz_t(), pv.get_mpz_t(), ri[j].get_mpz_t());
                } else {
                    mpz_mul(t.get_mpz_t(), pv.get_mpz_t(), ri[j].get_mpz_t());
                    mpz_submul(t.get_mpz_t(), ri[col].get_mpz_t(), rr[j].get_mpz_t());
                }
                mpz_divexact(ri[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            ri[col] = 0;
        }
        prev = pv;
        piv.push_back(col);
        ++r;
    }
    return piv;
}

// Kernel of a rational matrix: one vector per free column.
std::vector<Vector> q_kernel(const Matrix& m) {
    auto a = integer_rows(m);
    const int cols = m.cols();
    auto piv = bareiss(a, cols);
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<Vector> out;
    Rational acc, t;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> x(cols);
        x[f] = 1;
        for (int i = static_cast<int>(piv.size()) - 1; i >= 0; --i) {
            const int pc = piv[i];
            acc = 0;
            for (int j = pc + 1; j < cols; ++j) {
                if (sgn(x[j]) == 0 || sgn(a[i][j]) == 0) continue;
                mpq_set_z(t.get_mpq_t(), a[i][j].get_mpz_t());
                acc += t * x[j];
            }
            x[pc] = -acc / a[i][pc];
        }
        Vector v;
        v.reserve(cols);
        for (auto& c : x) v.emplace_back(c);
        out.push_back(std::move(v));
    }
    return out;
}

// Gaussian elimination over the matrix field (any field). Returns pivots; rows
// are reduced (pivot 1, zeros above and below) when `full` is set.
std::vector<int> field_echelon(std::vector<Vector>& a, int cols, bool full, Scalar* det = nullptr) {
    const int rows = static_cast<int>(a.size());
    std::vector<int> piv;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][col].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            if (det) *det = -*det;
        }
        if (det) *det *= a[r][col];
        Scalar iv = a[r][col].inverse();
        const int width = static_cast<int>(a[r].size());
        for (int j = col; j < width; ++j)
            if (!a[r][j].is_zero()) a[r][j] *= iv;
        for (int i = full ? 0 : r + 1; i < rows; ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            Scalar f = a[i][col];
            for (int j = col; j < width; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        piv.push_back(col);
        ++r;
    }
    return piv;
}

std::vector<Vector> field_kernel(std::vector<Vector> a, int cols, const FieldPtr& field) {
    auto piv = field_echelon(a, cols, true);
    std::vector<char> is_piv(cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<Vector> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Vector v(cols, Scalar::zero(field));
        v[f] = Scalar::one(field);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vector> rows_of(const Matrix& m) {
    std::vector<Vector> r;
    r.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) r.push_back(m.row(i));
    return r;
}

// Kernel vectors (not yet canonical) using rational rows first.
std::vector<Vector> raw_kernel(const Matrix& m) {
    if (m.cols() == 0) return {};
    if (m.is_rational()) return q_kernel(m);
    Matrix rat(0, m.cols());
    std::vector<Vector> nf_rows;
    for (int i = 0; i < m.rows(); ++i) {
        Vector r = m.row(i);
        bool rational = std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_rational(); });
        if (rational) {
            for (auto& s : r) s = Scalar(s.rational());
            rat.append_row(r);
        } else nf_rows.push_back(std::move(r));
    }
    std::vector<Vector> K;
    if (rat.rows() > 0) K = q_kernel(rat);
    else
        for (int j = 0; j < m.cols(); ++j) {
            Vector e(m.cols(), Scalar(0));
            e[j] = Scalar(1);
            K.push_back(std::move(e));
        }
    if (K.empty()) return {};
    const int k = static_cast<int>(K.size());
    std::vector<Vector> reduced;
    reduced.reserve(nf_rows.size());
    for (const auto& r : nf_rows) {
        Vector rr(k, Scalar::zero(m.field()));
        for (int c = 0; c < k; ++c) rr[c] = dot(r, K[c]);
        reduced.push_back(std::move(rr));
    }
    auto W = field_kernel(std::move(reduced), k, m.field());
    std::vector<Vector> out;
    for (const auto& w : W) {
        Vector v(m.cols(), Scalar::zero(m.field()));
        for (int c = 0; c < k; ++c) {
            if (w[c].is_zero()) continue;
            for (int j = 0; j < m.cols(); ++j)
                if (!K[c][j].is_zero()) v[j] += w[c] * K[c][j];
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<Vector> rref_rows(std::vector<Vector> rows) {
    if (rows.empty()) return rows;
    const int cols = static_cast<int>(rows[0].size());
    auto piv = field_echelon(rows, cols, true);
    rows.resize(piv.size());
    return rows;
}

int matrix_rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.is_rational()) {
        auto a = integer_rows(m);
        return static_cast<int>(bareiss(a, m.cols()).size());
    }
    return m.cols() - static_cast<int>(raw_kernel(m).size());
}

std::vector<Vector> kernel_basis(const Matrix& m) { return rref_rows(raw_kernel(m)); }

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return Scalar::one(m.field());
    if (m.is_rational()) {
        std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
        Rational scale = 1;
        for (int i = 0; i < n; ++i) {
            Integer den = 1;
            for (int j = 0; j < n; ++j)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
            scale /= den;
            for (int j = 0; j < n; ++j) a[i][j] = m(i, j).rational().get_num() * (den / m(i, j).rational().get_den());
        }
        int swaps = 0;
        auto piv = bareiss(a, n, &swaps);
        if (static_cast<int>(piv.size()) < n) return Scalar(0);
        Rational d(a[n - 1][n - 1]);
        d *= scale;
        if (swaps % 2) d = -d;
        return Scalar(d);
    }
    auto a = rows_of(m);
    Scalar det = Scalar::one(m.field());
    auto piv = field_echelon(a, n, false, &det);
    if (static_cast<int>(piv.size()) < n) return Scalar::zero(m.field());
    return det;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
    const int n = m.rows();
    std::vector<Vector> a = rows_of(m);
    for (int i = 0; i < n; ++i) {
        a[i].resize(2 * n, Scalar::zero(m.field()));
        a[i][n + i] = Scalar::one(m.field());
    }
    auto piv = field_echelon(a, n, true);
    if (static_cast<int>(piv.size()) < n) throw DomainError("matrix is singular");
    Matrix inv(n, n, m.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.set(i, j, a[i][n + j]);
    return inv;
}

}  // namespace godeaux
