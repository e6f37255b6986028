#pragma once

#include "qpc/wz.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qpc {

/// Number of formal space-time coordinates of the symbolic de Rham factor.
inline constexpr int xi_vars = 4;

/// Polynomial in xi_vars commuting variables t0..t3 over Q(w).
class Poly {
public:
    using Expo = std::array<int, xi_vars>;

    Poly() = default;
    static Poly constant(const CycNum& c);
    static Poly variable(int i);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    CycNum constant_value() const; // 0 for the zero polynomial

    Poly& operator+=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    Poly scaled(const CycNum& s) const;

    Poly derivative(int i) const;

    const std::map<Expo, CycNum>& terms() const { return terms_; }
    std::string str() const;

private:
    void add_term(const Expo& e, const CycNum& c);
    std::map<Expo, CycNum> terms_;
};

/// Exterior form over the xi_vars coordinates: sorted index subsets with
/// polynomial coefficients.
class ExtForm {
public:
    using Subset = std::vector<int>;

    ExtForm() = default;
    static ExtForm scalar(Poly p);
    static ExtForm scalar(const CycNum& c) { return scalar(Poly::constant(c)); }
    /// dt_i as a one-form.
    static ExtForm dt(int i);

    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    int degree() const; // of a homogeneous nonzero form
    ExtForm component(int degree) const;

    ExtForm& operator+=(const ExtForm& o);
    friend ExtForm operator+(ExtForm a, const ExtForm& b) { return a += b; }
    friend ExtForm operator*(const ExtForm& a, const ExtForm& b);
    friend bool operator==(const ExtForm& a, const ExtForm& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ExtForm& a, const ExtForm& b) { return !(a == b); }
    ExtForm scaled(const CycNum& s) const;

    /// De Rham differential.
    ExtForm d() const;

    void add_term(Subset sub, Poly p); // antisymmetrizes, drops repeats
    const std::map<Subset, Poly>& terms() const { return terms_; }
    std::string str() const;

private:
    std::map<Subset, Poly> terms_;
};

/// Element of Xi = Lambda (x) Omega_WZ: an ExtForm coefficient on each of
/// the 36 Omega_WZ basis slots (WZForm::to_vec indexing).
class XiElt {
public:
    XiElt() = default;
    static XiElt from_wz(const WZForm& w);
    static XiElt from_ext(const ExtForm& e);

    ExtForm& slot(int i) { return c_[i]; }
    const ExtForm& slot(int i) const { return c_[i]; }
    /// Omega-degree of slot i (0, 1, 1, 2 cyclically).
    static int wz_degree(int slot) { return slot % 4 == 0 ? 0 : (slot % 4 == 3 ? 2 : 1); }

    bool is_zero() const;
    bool is_homogeneous() const; // in total grade
    int grade() const;           // of a homogeneous nonzero element
    XiElt component(int total_grade) const;

    XiElt& operator+=(const XiElt& o);
    XiElt& operator-=(const XiElt& o);
    friend XiElt operator+(XiElt a, const XiElt& b) { return a += b; }
    friend XiElt operator-(XiElt a, const XiElt& b) { return a -= b; }
    friend bool operator==(const XiElt& a, const XiElt& b) { return a.c_ == b.c_; }
    friend bool operator!=(const XiElt& a, const XiElt& b) { return !(a == b); }
    XiElt scaled(const CycNum& s) const;

    std::string str() const;

private:
    std::array<ExtForm, 36> c_;
};

/// Graded product: (w1 (x) r1)(w2 (x) r2) = (-1)^{deg r1 deg w2} w1 w2 (x) r1 r2.
XiElt xi_mul(const XiElt& u, const XiElt& v);

/// Total differential d (x) id + (-1)^{Lambda-degree} id (x) d.
XiElt xi_d(const XiElt& u);

/// Grade-1 elements as a triplet {a_mu, phi_x, phi_y} with
/// constant-coefficient components.
struct XiOneForm {
    std::array<PlaneElt, xi_vars> a_mu;
    PlaneElt phi_x, phi_y;

    friend bool operator==(const XiOneForm& a, const XiOneForm& b) {
        return a.a_mu == b.a_mu && a.phi_x == b.phi_x && a.phi_y == b.phi_y;
    }
};

XiElt pack_oneform(const XiOneForm& t);
/// Throws std::invalid_argument unless the input is homogeneous of total
/// grade 1 with constant de Rham coefficients.
XiOneForm unpack_oneform(const XiElt& u);

/// Components by total grade (index = grade, length xi_vars + 3).
std::vector<XiElt> xi_grade_decompose(const XiElt& u);

/// The three blocks of a grade-2 element.
struct Xi2Blocks {
    XiElt lambda2_omega0;
    XiElt lambda1_omega1;
    XiElt lambda0_omega2;
};
Xi2Blocks xi2_blocks(const XiElt& u);

} // namespace qpc
