#include "qpc/qplane.hpp"

#include <cassert>
#include <sstream>

namespace qpc {

PlaneElt PlaneElt::monomial(int r, int s, CycNum coeff) {
    PlaneElt e;
    e.c_[index(r, s)] = std::move(coeff);
    return e;
}

bool PlaneElt::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

PlaneElt PlaneElt::operator-() const {
    PlaneElt e;
    for (int i = 0; i < 9; ++i) e.c_[i] = -c_[i];
    return e;
}

PlaneElt& PlaneElt::operator+=(const PlaneElt& o) {
    for (int i = 0; i < 9; ++i) c_[i] += o.c_[i];
    return *this;
}

PlaneElt& PlaneElt::operator-=(const PlaneElt& o) {
    for (int i = 0; i < 9; ++i) c_[i] -= o.c_[i];
    return *this;
}

PlaneElt PlaneElt::scaled(const CycNum& s) const {
    PlaneElt e;
    for (int i = 0; i < 9; ++i) e.c_[i] = c_[i] * s;
    return e;
}

PlaneElt PlaneElt::from_vec(const CycVec& v) {
    assert(v.size() == 9);
    PlaneElt e;
    for (int i = 0; i < 9; ++i) e.c_[i] = v[i];
    return e;
}

std::string PlaneElt::basis_name(int idx) {
    int r = idx / 3, s = idx % 3;
    if (r == 0 && s == 0) return "1";
    std::string out;
    if (r == 1) out += "x";
    if (r == 2) out += "x^2";
    if (r > 0 && s > 0) out += "*";
    if (s == 1) out += "y";
    if (s == 2) out += "y^2";
    return out;
}

std::string PlaneElt::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 9; ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i != 0) os << "*" << basis_name(i);
        first = false;
    }
    if (first) return "0";
    return os.str();
}

PlaneElt plane_mul(const PlaneElt& u, const PlaneElt& v) {
    PlaneElt out;
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
            const CycNum& cu = u.coeff(r, s);
            if (cu.is_zero()) continue;
            for (int t = 0; t < 3; ++t)
                for (int w = 0; w < 3; ++w) {
                    const CycNum& cv = v.coeff(t, w);
                    if (cv.is_zero()) continue;
                    // (x^r y^s)(x^t y^w) = q^{-s t} x^{r+t} y^{s+w}
                    out.coeff(r + t, s + w) += cu * cv * CycNum::q_pow(-s * t);
                }
        }
    return out;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < 3; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

Mat3 mat3_identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.at(i, i) = CycNum::one();
    return m;
}

namespace {

Mat3 x_matrix() {
    Mat3 m;
    m.at(0, 0) = CycNum::one();
    m.at(1, 1) = CycNum::q_pow(-1);
    m.at(2, 2) = CycNum::q_pow(-2);
    return m;
}

Mat3 y_matrix() {
    Mat3 m;
    m.at(0, 1) = CycNum::one();
    m.at(1, 2) = CycNum::one();
    m.at(2, 0) = CycNum::one();
    return m;
}

// to_matrix on the nine basis monomials, computed once.
const std::array<Mat3, 9>& basis_matrices() {
    static const std::array<Mat3, 9> table = [] {
        std::array<Mat3, 9> t;
        for (int r = 0; r < 3; ++r) {
            for (int s = 0; s < 3; ++s) {
                Mat3 m = mat3_identity();
                for (int i = 0; i < r; ++i) m = mat3_mul(m, x_matrix());
                for (int i = 0; i < s; ++i) m = mat3_mul(m, y_matrix());
                t[r * 3 + s] = m;
            }
        }
        return t;
    }();
    return table;
}

// Inverse of the 9x9 change of basis monomials -> flattened matrices.
const CycMatrix& monomial_decomposition() {
    static const CycMatrix inv = [] {
        CycMatrix b(9, 9);
        for (int col = 0; col < 9; ++col)
            for (int ent = 0; ent < 9; ++ent) b.at(ent, col) = basis_matrices()[col].e[ent];
        auto i = b.inverse();
        assert(i.has_value() && "monomial basis must span M_3");
        return *i;
    }();
    return inv;
}

} // namespace

Mat3 to_matrix(const PlaneElt& u) {
    Mat3 out;
    for (int i = 0; i < 9; ++i) {
        if (u[i].is_zero()) continue;
        const Mat3& bm = basis_matrices()[i];
        for (int e = 0; e < 9; ++e) out.e[e] += u[i] * bm.e[e];
    }
    return out;
}

PlaneElt from_matrix(const Mat3& m) {
    CycVec flat(m.e.begin(), m.e.end());
    CycVec coords = monomial_decomposition() * flat;
    return PlaneElt::from_vec(coords);
}

} // namespace qpc
