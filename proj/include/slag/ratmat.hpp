#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "slag/rational.hpp"

namespace slag {

using RatVec = std::vector<Rational>;

/// Small dense matrix over exact rationals.  Only what the exact lattice
/// paths need: products, transpose, and Gauss-Jordan inversion.
class RatMat {
  public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    RatMat transpose() const {
        RatMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend RatMat operator*(const RatMat& a, const RatMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMat: shape mismatch in product");
        RatMat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.num() == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend RatMat operator+(const RatMat& a, const RatMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RatMat: shape mismatch in sum");
        RatMat c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }

    friend RatMat operator-(const RatMat& a, const RatMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RatMat: shape mismatch in difference");
        RatMat c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
        return c;
    }

    friend RatMat operator*(const Rational& s, const RatMat& m) {
        RatMat c(m.rows_, m.cols_);
        for (size_t i = 0; i < m.a_.size(); ++i) c.a_[i] = s * m.a_[i];
        return c;
    }

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Gauss-Jordan inverse.  Throws std::domain_error on a singular input.
    RatMat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("RatMat: inverse of non-square matrix");
        int n = rows_;
        RatMat work(*this), inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (work(r, col).num() != 0) { pivot = r; break; }
            if (pivot < 0) throw std::domain_error("RatMat: singular matrix");
            if (pivot != col) {
                for (int j = 0; j < n; ++j) {
                    std::swap(work(pivot, j), work(col, j));
                    std::swap(inv(pivot, j), inv(col, j));
                }
            }
            Rational p = work(col, col);
            for (int j = 0; j < n; ++j) {
                work(col, j) /= p;
                inv(col, j) /= p;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                Rational f = work(r, col);
                if (f.num() == 0) continue;
                for (int j = 0; j < n; ++j) {
                    work(r, j) -= f * work(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

}  // namespace slag
