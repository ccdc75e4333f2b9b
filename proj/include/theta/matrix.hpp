#pragma once

#include "theta/rational.hpp"

#include <stdexcept>
#include <vector>

namespace theta {

struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// dense matrix over the Gaussian rationals; all arithmetic exact
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols) {}

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = GaussRat(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    GaussRat& operator()(int i, int j) { return e_[size_t(i) * c_ + j]; }
    const GaussRat& operator()(int i, int j) const { return e_[size_t(i) * c_ + j]; }

    bool operator==(const ExactMatrix& o) const {
        return r_ == o.r_ && c_ == o.c_ && e_ == o.e_;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const GaussRat& c) const;

    int rank() const;
    // inverse of a square invertible matrix; throws on singular input
    ExactMatrix inverse() const;

    bool is_symmetric() const;
    bool is_alternating() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<GaussRat> e_;
};

} // namespace theta
