#pragma once

#include "qpc/cyc.hpp"
#include "qpc/linalg.hpp"

#include <array>
#include <string>

namespace qpc {

/// Element of the reduced quantum plane M = M_3(C), generated by x, y with
/// xy = q yx and x^3 = y^3 = 1, in the nine-dimensional basis x^r y^s.
/// Slot index is r*3 + s with r, s in {0,1,2}.
class PlaneElt {
public:
    PlaneElt() = default;

    static constexpr int dim = 9;
    static int index(int r, int s) { return ((r % 3 + 3) % 3) * 3 + ((s % 3 + 3) % 3); }

    static PlaneElt zero() { return PlaneElt(); }
    static PlaneElt unit() { return monomial(0, 0); }
    static PlaneElt x() { return monomial(1, 0); }
    static PlaneElt y() { return monomial(0, 1); }
    static PlaneElt monomial(int r, int s, CycNum coeff = CycNum::one());

    CycNum& coeff(int r, int s) { return c_[index(r, s)]; }
    const CycNum& coeff(int r, int s) const { return c_[index(r, s)]; }
    CycNum& operator[](int i) { return c_[i]; }
    const CycNum& operator[](int i) const { return c_[i]; }

    bool is_zero() const;
    PlaneElt operator-() const;
    PlaneElt& operator+=(const PlaneElt& o);
    PlaneElt& operator-=(const PlaneElt& o);
    friend PlaneElt operator+(PlaneElt a, const PlaneElt& b) { return a += b; }
    friend PlaneElt operator-(PlaneElt a, const PlaneElt& b) { return a -= b; }
    friend bool operator==(const PlaneElt& a, const PlaneElt& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PlaneElt& a, const PlaneElt& b) { return !(a == b); }

    PlaneElt scaled(const CycNum& s) const;

    CycVec to_vec() const { return CycVec(c_.begin(), c_.end()); }
    static PlaneElt from_vec(const CycVec& v);

    /// Renders as a sum of coeff*x^r*y^s terms ("0" when zero).
    std::string str() const;

    static std::string basis_name(int idx);

private:
    std::array<CycNum, 9> c_{};
};

/// Normal-ordered product: y^s x^t = q^{-s t} x^t y^s, exponents mod 3.
PlaneElt plane_mul(const PlaneElt& u, const PlaneElt& v);

/// 3x3 matrix over Q(w).
struct Mat3 {
    std::array<CycNum, 9> e{};
    CycNum& at(int r, int c) { return e[r * 3 + c]; }
    const CycNum& at(int r, int c) const { return e[r * 3 + c]; }
    friend bool operator==(const Mat3& a, const Mat3& b) { return a.e == b.e; }
    friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }
};

Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Mat3 mat3_identity();

/// The representation x -> diag(1, q^-1, q^-2), y -> cyclic shift, extended
/// linearly. An exact algebra isomorphism onto M_3.
Mat3 to_matrix(const PlaneElt& u);

/// Inverse of to_matrix (the fixed 9x9 change of basis is inverted once).
PlaneElt from_matrix(const Mat3& m);

} // namespace qpc
