#pragma once

#include <stdexcept>
#include <vector>

#include "phinforge/rational.hpp"

namespace phinforge {

/// Dense matrix over an exact field type F.
/// F must provide: default ctor (= 0), F(long long)-style 0/1 via Mat helpers,
/// +,-,*, is_zero(), inverse().
template <class F>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n, const F& one) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const F& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Mat scaled(const F& c) const {
        Mat r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool operator==(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < data_.size(); ++i)
            if (!(data_[i] - o.data_[i]).is_zero()) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
        Mat r(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
        return r;
    }

    Mat columns(const std::vector<int>& cs) const {
        std::vector<int> rs(rows_);
        for (int i = 0; i < rows_; ++i) rs[i] = i;
        return submatrix(rs, cs);
    }

    static Mat hconcat(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("shape mismatch");
        Mat r(a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }

    Mat pow(unsigned long long e, const F& one) const {
        if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
        Mat r = identity(rows_, one);
        Mat b = *this;
        while (e) {
            if (e & 1ULL) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

private:
    int rows_, cols_;
    std::vector<F> data_;
};

/// Row echelon form in place; returns pivot column indices.
template <class F>
std::vector<int> row_echelon(Mat<F>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        F inv = m(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
int rank(Mat<F> m) {
    return static_cast<int>(row_echelon(m).size());
}

/// Basis of the right kernel, as columns.
template <class F>
Mat<F> kernel_basis(Mat<F> m, const F& one) {
    int n = m.cols();
    std::vector<int> pivots = row_echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat<F> ker(n, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        ker(fc, static_cast<int>(k)) = one;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            ker(pivots[pi], static_cast<int>(k)) = F() - m(static_cast<int>(pi), fc);
    }
    return ker;
}

/// Columns of m spanning its column space (a maximal independent subset).
template <class F>
Mat<F> image_basis(const Mat<F>& m) {
    Mat<F> e = m;
    std::vector<int> pivots = row_echelon(e);
    return m.columns(pivots);
}

/// Solves A x = b; returns false when inconsistent.
template <class F>
bool solve(const Mat<F>& a, const Mat<F>& b, Mat<F>& x, const F& one) {
    Mat<F> aug = Mat<F>::hconcat(a, b);
    std::vector<int> pivots = row_echelon(aug);
    for (int c : pivots)
        if (c >= a.cols()) return false;
    x = Mat<F>(a.cols(), b.cols());
    (void)one;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (int j = 0; j < b.cols(); ++j)
            x(pivots[pi], j) = aug(static_cast<int>(pi), a.cols() + j);
    return true;
}

template <class F>
F determinant(Mat<F> m, const F& one) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    F det = one;
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) { sel = i; break; }
        if (sel < 0) return F();
        if (sel != c) {
            for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
            det = F() - det;
        }
        det = det * m(c, c);
        F inv = m(c, c).inverse();
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            F f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

/// span(a) == span(b), both given by columns.
template <class F>
bool same_span(const Mat<F>& a, const Mat<F>& b) {
    if (a.rows() != b.rows()) return false;
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    return rank(Mat<F>::hconcat(a, b)) == ra;
}

/// span(sub) contained in span(big)?
template <class F>
bool span_contains(const Mat<F>& big, const Mat<F>& sub) {
    if (big.rows() != sub.rows()) return false;
    return rank(Mat<F>::hconcat(big, sub)) == rank(big);
}

/// Basis of span(a) ∩ span(b).
template <class F>
Mat<F> span_intersection(const Mat<F>& a, const Mat<F>& b, const F& one) {
    if (a.cols() == 0 || b.cols() == 0) return Mat<F>(a.rows(), 0);
    Mat<F> ker = kernel_basis(Mat<F>::hconcat(a, b), one);
    Mat<F> coeff(a.cols(), ker.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < ker.cols(); ++j) coeff(i, j) = ker(i, j);
    Mat<F> inter = a * coeff;
    return image_basis(inter);
}

}  // namespace phinforge
