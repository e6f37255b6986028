#pragma once

#include "qpc/hopf.hpp"
#include "qpc/qplane.hpp"
#include "qpc/wz.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpc {

/// Antilinear involution on a based space: v -> images * conj(v).
struct StarMap {
    std::string target; // "F", "H", "M", "Omega"
    CycMatrix images;   // column j = image of basis element j

    CycVec apply(const CycVec& v) const;
    bool is_involution() const;
};

/// Star on F: a, b, c, d are all self-adjoint; antimultiplicative extension.
const StarMap& star_F();

/// Star on H: K* = K, Xp* = -q^{-1} Xp, Xm* = -q Xm.
const StarMap& star_H();

/// Star on M with x* = alpha x, y* = alpha y. The default alpha = 1 is the
/// one used everywhere else; other unit values are for exploration only.
StarMap star_M_with_alpha(const CycNum& alpha);
const StarMap& star_M();
PlaneElt star_plane(const PlaneElt& z);

/// Star on Omega_WZ: star_M on coefficients together with the solved
/// dx* = dx, dy* = dy, extended antimultiplicatively.
const StarMap& star_Omega();
WZForm star_form(const WZForm& u);

struct SweepReport {
    bool pass = true;
    std::vector<std::string> failures;
};

/// <h*, f> = conj(<h, (S f)*>) on all 27 x 27 basis pairs.
SweepReport verify_star_duality();

/// h(z*) = ((S h)* z)* for the three generators of H and all basis elements
/// of M or Omega.
SweepReport verify_action_star_M();
SweepReport verify_action_star_Omega();

/// Solves for a grade-preserving star on forms: general ansatz for dx*, dy*
/// in Omega^1, constrained by compatibility with the H-action and by the
/// starred commutation relation of x with dx. Throws std::runtime_error when
/// the solution space is not a line.
StarMap solve_star_on_forms();

struct GramReport {
    CycMatrix gram;                         // 9 x 9, basis x^r y^s
    CycVec one_z;                           // the solved (1, x^r y^s) row
    std::vector<int> nonvanishing_one_z;    // indices with (1, z) != 0
    size_t presolution_dim = 0;             // before (xy,xy) = 1
};

/// Invariant scalar product on M: solves the star-representation conditions
/// exactly and normalizes by (xy, xy) = 1.
GramReport solve_invariant_gram();

/// Sesquilinear evaluation against the solved Gram matrix (antilinear in the
/// first slot).
CycNum gram_pair(const PlaneElt& u, const PlaneElt& v);

/// eps(h)(u,v) = ((S h_1)* u, h_2 v) on all basis h of H and all 81 pairs.
SweepReport verify_gram_invariance();

struct AltInvarianceReport {
    size_t alt_dim = 0;     // expected 0
    size_t unstarred_dim = 0;  // expected >= 1
    bool normalization_inconsistent = false;
    bool pass = false;
};

/// The alternative invariance convention admits only the zero scalar product.
AltInvarianceReport check_alt_invariance();

struct HermitianFamily {
    std::string name;
    std::vector<WZForm> generators;
};

struct HermitianReport {
    std::vector<HermitianFamily> families;
    bool all_hermitian = true;
    bool spans_real_oneforms = false; // with their imaginary multiples
    std::vector<std::string> failures;
};

/// The hermitian one-form families; verifies omega* = omega for each
/// generator form and the real-span property.
HermitianReport hermitian_oneforms();

} // namespace qpc
