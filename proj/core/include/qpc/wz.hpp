#pragma once

#include "qpc/qplane.hpp"
#include "qpc/repr.hpp"
#include "qpc/rewrite.hpp"

#include <string>
#include <vector>

namespace qpc {

/// Element of the Wess-Zumino calculus Omega = M + M dx + M dy + M dxdy,
/// in left-coefficient normal form (functions left, differentials right).
struct WZForm {
    PlaneElt d0;  // degree 0
    PlaneElt d1x; // coefficient of dx
    PlaneElt d1y; // coefficient of dy
    PlaneElt d2;  // coefficient of dx dy

    static WZForm scalar(PlaneElt f) { return {std::move(f), {}, {}, {}}; }
    static WZForm dx(PlaneElt f = PlaneElt::unit()) { return {{}, std::move(f), {}, {}}; }
    static WZForm dy(PlaneElt f = PlaneElt::unit()) { return {{}, {}, std::move(f), {}}; }
    static WZForm dxdy(PlaneElt f = PlaneElt::unit()) { return {{}, {}, {}, std::move(f)}; }

    bool is_zero() const;
    /// The form has entries in a single degree, or is zero.
    bool is_homogeneous() const;
    /// Degree of a homogeneous nonzero form.
    int degree() const;
    WZForm component(int degree) const;

    WZForm& operator+=(const WZForm& o);
    WZForm& operator-=(const WZForm& o);
    friend WZForm operator+(WZForm a, const WZForm& b) { return a += b; }
    friend WZForm operator-(WZForm a, const WZForm& b) { return a -= b; }
    friend bool operator==(const WZForm& a, const WZForm& b);
    friend bool operator!=(const WZForm& a, const WZForm& b) { return !(a == b); }
    WZForm scaled(const CycNum& s) const;

    /// 36-vector: slot 4*m + k with m the plane basis index and
    /// k in {0: scalar, 1: dx, 2: dy, 3: dxdy}.
    CycVec to_vec() const;
    static WZForm from_vec(const CycVec& v);

    std::string str() const;
};

/// Graded product in left-coefficient normal form. The rules pushing
/// differentials right past coordinates are derived at startup by inverting
/// the defining commutation relations.
WZForm wz_mul(const WZForm& u, const WZForm& v);

/// The differential: d(x) = dx, d(y) = dy, d(dx) = d(dy) = 0, graded Leibniz.
WZForm wz_d(const WZForm& u);

/// The four-dimensional H-module on span{1, dx, dy, dx dy}.
const HModule& xi_module();

/// The 36-dimensional H-module on Omega (tensor of the plane module with
/// xi_module; indexing matches WZForm::to_vec).
const HModule& omega_module();

/// Action of h (coefficient vector in the H basis) on a form.
WZForm h_act_form(const CycVec& h, const WZForm& u);

/// One row of a generator-action table on one-forms.
struct OmegaTableRow {
    std::string label;
    WZForm arg, K, Xp, Xm;
};

struct OmegaTables {
    std::vector<OmegaTableRow> t3o2; // basis {x^2 y, x y^2, 1} (x) {dx, dy}
    std::vector<OmegaTableRow> t3e2; // basis {x, y, x^2 y^2} (x) {dx, dy}
    std::vector<OmegaTableRow> t3i2; // basis {x^2, x y, y^2} (x) {dx, dy}
};

/// The three 6x3 generator-action tables on Omega^1, computed from the
/// generator action (never tabulated).
OmegaTables omega_tables();

struct Omega2IsoReport {
    bool pass = true;
    bool dxdy_invariant = true;
    std::vector<std::string> failures;
};

/// Checks that dx dy is H-invariant and z -> z dx dy intertwines the actions
/// on M and Omega^2.
Omega2IsoReport omega2_iso();

/// Rewriting system over letters x, y, X (= dx), Y (= dy) pushing
/// differentials right; used for confluence checks.
rewrite::System wz_word_system();

/// Reduces a word over {x, y, X, Y} and converts the result to a WZForm.
/// Words of degree > 2 reduce to zero.
WZForm wz_reduce_word(const std::string& word, rewrite::Strategy strategy);

} // namespace qpc
