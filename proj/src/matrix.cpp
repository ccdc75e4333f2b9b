#include "theta/matrix.hpp"

namespace theta {

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (c_ != o.r_) throw ShapeMismatch("matrix product shape mismatch");
    ExactMatrix p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const GaussRat& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                if (o(k, j).is_zero()) continue;
                p(i, j) += a * o(k, j);
            }
        }
    return p;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("matrix sum shape mismatch");
    ExactMatrix s(r_, c_);
    for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
    return s;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw ShapeMismatch("matrix difference shape mismatch");
    ExactMatrix s(r_, c_);
    for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - o.e_[i];
    return s;
}

ExactMatrix ExactMatrix::scaled(const GaussRat& c) const {
    ExactMatrix s(r_, c_);
    for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] * c;
    return s;
}

int ExactMatrix::rank() const {
    ExactMatrix m = *this;
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
        int pivot = -1;
        for (int i = rank; i < r_; ++i)
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < c_; ++j) std::swap(m(rank, j), m(pivot, j));
        GaussRat inv = GaussRat(1) / m(rank, col);
        for (int j = col; j < c_; ++j) m(rank, j) *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == rank || m(i, col).is_zero()) continue;
            GaussRat f = m(i, col);
            for (int j = col; j < c_; ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

ExactMatrix ExactMatrix::inverse() const {
    if (r_ != c_) throw ShapeMismatch("inverse of non-square matrix");
    ExactMatrix m = *this, inv = identity(r_);
    for (int col = 0; col < c_; ++col) {
        int pivot = -1;
        for (int i = col; i < r_; ++i)
            if (!m(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw ShapeMismatch("matrix is singular");
        for (int j = 0; j < c_; ++j) {
            std::swap(m(col, j), m(pivot, j));
            std::swap(inv(col, j), inv(pivot, j));
        }
        GaussRat d = GaussRat(1) / m(col, col);
        for (int j = 0; j < c_; ++j) {
            m(col, j) *= d;
            inv(col, j) *= d;
        }
        for (int i = 0; i < r_; ++i) {
            if (i == col || m(i, col).is_zero()) continue;
            GaussRat f = m(i, col);
            for (int j = 0; j < c_; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

bool ExactMatrix::is_symmetric() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool ExactMatrix::is_alternating() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i) {
        if (!(*this)(i, i).is_zero()) return false;
        for (int j = i + 1; j < c_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
    return true;
}

} // namespace theta
