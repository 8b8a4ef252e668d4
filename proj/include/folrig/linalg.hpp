#pragma once

#include <map>
#include <optional>
#include <vector>

#include "folrig/field.hpp"

namespace folrig {

// Dense matrix over FieldElem; exact Gaussian elimination throughout.
class FMatrix {
public:
    FMatrix() : rows_(0), cols_(0) {}
    FMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static FMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldElem& at(int i, int j) { return a_[i * cols_ + j]; }
    const FieldElem& at(int i, int j) const { return a_[i * cols_ + j]; }

    FMatrix operator*(const FMatrix& o) const;
    FMatrix operator+(const FMatrix& o) const;
    FMatrix operator-(const FMatrix& o) const;
    FMatrix scale(const FieldElem& c) const;
    FMatrix transpose() const;
    bool operator==(const FMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    FieldElem trace() const;
    bool is_zero() const;

    int rank() const;
    FieldElem det() const;

    // one solution of A x = b with free variables set to 0; nullopt if inconsistent
    std::optional<std::vector<FieldElem>> solve(const std::vector<FieldElem>& b) const;
    // basis of the kernel
    std::vector<std::vector<FieldElem>> nullspace() const;

private:
    int rows_, cols_;
    std::vector<FieldElem> a_;
};

// rank of a sparse matrix given as rows {col -> value}; used for the large
// coboundary matrices where dense elimination would churn
int sparse_rank(std::vector<std::map<int, FieldElem>> rows);

}  // namespace folrig
