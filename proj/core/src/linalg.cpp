#include "qpc/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace qpc {

CycMatrix CycMatrix::identity(size_t n) {
    CycMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycNum::one();
    return m;
}

CycMatrix CycMatrix::from_columns(const std::vector<CycVec>& cols) {
    if (cols.empty()) return CycMatrix();
    CycMatrix m(cols[0].size(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        assert(cols[c].size() == m.rows_);
        for (size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

CycVec CycMatrix::row(size_t r) const {
    CycVec v(cols_);
    for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

CycVec CycMatrix::column(size_t c) const {
    CycVec v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    assert(cols_ == o.rows_);
    CycMatrix m(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const CycNum& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const CycNum& b = o.at(k, j);
                if (!b.is_zero()) m.at(i, j) += a * b;
            }
        }
    return m;
}

CycVec CycMatrix::operator*(const CycVec& v) const {
    assert(cols_ == v.size());
    CycVec out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    CycMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
    return m;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    CycMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
    return m;
}

CycMatrix CycMatrix::scaled(const CycNum& s) const {
    CycMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
    return m;
}

CycMatrix CycMatrix::transposed() const {
    CycMatrix m(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

CycMatrix CycMatrix::conjugated() const {
    CycMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].conj();
    return m;
}

CycMatrix CycMatrix::pow(size_t e) const {
    assert(rows_ == cols_);
    CycMatrix acc = identity(rows_);
    for (size_t i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

bool CycMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<size_t> echelon(CycMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        CycNum inv = m.at(r, c).inv();
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            CycNum f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

size_t CycMatrix::rank() const {
    CycMatrix m = *this;
    return echelon(m).size();
}

std::vector<CycVec> CycMatrix::nullspace() const {
    CycMatrix m = *this;
    std::vector<size_t> pivots = echelon(m);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<CycVec> basis;
    for (size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        CycVec v(cols_);
        v[fc] = CycNum::one();
        for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m.at(pr, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<CycMatrix> CycMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    CycMatrix aug(rows_, 2 * cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = CycNum::one();
    }
    std::vector<size_t> pivots = echelon(aug);
    // a singular matrix still yields rows_ pivots, but some fall in the
    // identity half of the augmentation
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    CycMatrix inv(rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

std::optional<CycVec> CycMatrix::solve(const CycVec& b) const {
    assert(b.size() == rows_);
    CycMatrix aug(rows_, cols_ + 1);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[r];
    }
    std::vector<size_t> pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt; // inconsistent
    CycVec x(cols_);
    for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(pr, cols_);
    return x;
}

CycNum dot(const CycVec& a, const CycVec& b) {
    assert(a.size() == b.size());
    CycNum s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

CycVec vec_add(const CycVec& a, const CycVec& b) {
    assert(a.size() == b.size());
    CycVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
    return v;
}

CycVec vec_scaled(const CycVec& a, const CycNum& s) {
    CycVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = a[i] * s;
    return v;
}

bool vec_is_zero(const CycVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

CycMatrix rows_matrix(const std::vector<CycVec>& rows) {
    if (rows.empty()) return CycMatrix();
    CycMatrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        assert(rows[r].size() == m.cols());
        for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

size_t span_rank(const std::vector<CycVec>& vecs) {
    if (vecs.empty()) return 0;
    return rows_matrix(vecs).rank();
}

std::vector<CycVec> span_basis(const std::vector<CycVec>& vecs) {
    std::vector<CycVec> basis;
    size_t r = 0;
    for (const auto& v : vecs) {
        basis.push_back(v);
        size_t nr = span_rank(basis);
        if (nr == r)
            basis.pop_back();
        else
            r = nr;
    }
    return basis;
}

bool in_span(const std::vector<CycVec>& basis, const CycVec& v) {
    if (vec_is_zero(v)) return true;
    std::vector<CycVec> ext = basis;
    ext.push_back(v);
    return span_rank(ext) == span_rank(basis);
}

std::optional<CycVec> coordinates_in(const std::vector<CycVec>& basis, const CycVec& v) {
    CycMatrix m = CycMatrix::from_columns(basis);
    if (m.rows() == 0) return vec_is_zero(v) ? std::optional<CycVec>(CycVec{}) : std::nullopt;
    return m.solve(v);
}

} // namespace qpc
