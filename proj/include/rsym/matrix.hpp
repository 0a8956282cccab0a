#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rsym/error.hpp"

namespace rsym {

// Dense matrix over an exact field type F (Cyclo, RatFun, MultiRatFun).
// Since F keeps canonical forms, straight Gauss-Jordan elimination stays
// exact and normalized after every pivot.  Operations needing the field's
// unit take it explicitly (MultiRatFun's unit carries a variable count).
template <class F>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, F fill = F()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(int n, const F& one) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F& operator()(int i, int j) { return data_[i * cols_ + j]; }
    const F& operator()(int i, int j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw invariant_error("matrix dimension mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const F& b = o(k, j);
                    if (b.is_zero()) continue;
                    r(i, j) += a * b;
                }
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    Mat map(const std::function<F(const F&)>& f) const {
        Mat r = *this;
        for (F& x : r.data_) x = f(x);
        return r;
    }

    template <class G>
    Mat<G> map_to(const std::function<G(const F&)>& f) const {
        Mat<G> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    Mat block(int r0, int c0, int nr, int nc) const {
        Mat b(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(int r0, int c0, const Mat& b) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    // Gauss-Jordan with first-nonzero pivoting; throws math_error("singular
    // matrix") when rank-deficient.
    Mat inverse(const F& one) const {
        if (rows_ != cols_) throw invariant_error("inverse of non-square matrix");
        int n = rows_;
        Mat a = *this;
        Mat inv = identity(n, one);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (!a(i, col).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw math_error("singular matrix");
            if (piv != col) {
                for (int j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            }
            F d = a(col, col);
            for (int j = 0; j < n; ++j) {
                a(col, j) /= d;
                inv(col, j) /= d;
            }
            for (int i = 0; i < n; ++i) {
                if (i == col) continue;
                F f = a(i, col);
                if (f.is_zero()) continue;
                for (int j = 0; j < n; ++j) {
                    a(i, j) -= f * a(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    bool is_zero() const {
        for (const F& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_identity(const F& one) const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (i == j && !((*this)(i, j) == one)) return false;
                if (i != j && !(*this)(i, j).is_zero()) return false;
            }
        return true;
    }

  private:
    int rows_, cols_;
    std::vector<F> data_;
};

}  // namespace rsym
