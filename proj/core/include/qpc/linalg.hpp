#pragma once

#include "qpc/cyc.hpp"

#include <optional>
#include <vector>

namespace qpc {

using CycVec = std::vector<CycNum>;

/// Dense matrix over Q(w) with exact Gaussian elimination.
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CycMatrix identity(size_t n);
    static CycMatrix from_columns(const std::vector<CycVec>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    CycNum& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const CycNum& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    CycVec row(size_t r) const;
    CycVec column(size_t c) const;

    CycMatrix operator*(const CycMatrix& o) const;
    CycVec operator*(const CycVec& v) const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix scaled(const CycNum& s) const;
    CycMatrix transposed() const;
    CycMatrix conjugated() const;
    CycMatrix pow(size_t e) const;

    bool operator==(const CycMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool is_zero() const;

    size_t rank() const;
    /// Basis of the right nullspace, as columns.
    std::vector<CycVec> nullspace() const;
    std::optional<CycMatrix> inverse() const;
    /// One solution of A x = b, if the system is consistent.
    std::optional<CycVec> solve(const CycVec& b) const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<CycNum> data_;
};

CycNum dot(const CycVec& a, const CycVec& b);
CycVec vec_add(const CycVec& a, const CycVec& b);
CycVec vec_scaled(const CycVec& a, const CycNum& s);
bool vec_is_zero(const CycVec& v);

/// Stacks vectors as the rows of a matrix.
CycMatrix rows_matrix(const std::vector<CycVec>& rows);

/// Rank of the span of a set of vectors.
size_t span_rank(const std::vector<CycVec>& vecs);

/// Reduces a spanning set to a basis (first independent vectors kept).
std::vector<CycVec> span_basis(const std::vector<CycVec>& vecs);

/// True if v lies in the span of basis.
bool in_span(const std::vector<CycVec>& basis, const CycVec& v);

/// Coordinates of v in the given (independent) basis, if it lies in the span.
std::optional<CycVec> coordinates_in(const std::vector<CycVec>& basis, const CycVec& v);

} // namespace qpc
