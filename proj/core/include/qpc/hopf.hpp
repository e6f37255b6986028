#pragma once

#include "qpc/cyc.hpp"
#include "qpc/linalg.hpp"
#include "qpc/rewrite.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qpc {

/// Element of A tensor A, sparse on basis pairs.
using TensorElt = std::map<std::pair<int, int>, CycNum>;

void tensor_add(TensorElt& t, int i, int j, const CycNum& c);

/// Structure constants of a 27-dimensional Hopf algebra over Q(w), built once
/// and immutable afterwards. Elements are dense 27-vectors on the fixed
/// monomial basis.
struct HopfData {
    static constexpr int dim = 27;

    std::string name;
    std::vector<std::string> basis_names;      // size 27
    int unit_index = 0;
    // mul[i*27+j]: product of basis i and basis j, sparse.
    std::vector<std::vector<std::pair<int, CycNum>>> mul;
    std::vector<TensorElt> coproduct;          // per basis element
    std::vector<CycVec> antipode;              // per basis element, dense 27
    std::vector<CycNum> counit;                // per basis element

    CycVec multiply(const CycVec& u, const CycVec& v) const;
    CycVec antipode_of(const CycVec& u) const;
    CycNum counit_of(const CycVec& u) const;
    TensorElt coproduct_of(const CycVec& u) const;
    TensorElt tensor_multiply(const TensorElt& a, const TensorElt& b) const;
    CycVec basis_vec(int i) const;
    CycVec unit_vec() const { return basis_vec(unit_index); }
};

/// Basis index helpers: both algebras use exponent triples (i,j,k) in Z3^3.
inline constexpr int hopf_index(int i, int j, int k) { return i * 9 + j * 3 + k; }

/// F: quotient of Fun(SL_q(2,R)) with a^3 = 1, b^3 = c^3 = 0, basis a^i b^j c^k.
/// The generator d is eliminated through the q-determinant: d = a^2 + q a^2 b c.
const HopfData& algebra_F();

/// H: quotient of U_q(sl2) with Xp^3 = Xm^3 = 0, K^3 = 1, basis Xp^i Xm^j K^k.
const HopfData& algebra_H();

/// Generator indices.
namespace gen {
inline constexpr int F_a = hopf_index(1, 0, 0);
inline constexpr int F_b = hopf_index(0, 1, 0);
inline constexpr int F_c = hopf_index(0, 0, 1);
inline constexpr int H_Xp = hopf_index(1, 0, 0);
inline constexpr int H_Xm = hopf_index(0, 1, 0);
inline constexpr int H_K = hopf_index(0, 0, 1);
} // namespace gen

/// The eliminated generator d of F, as an element in the a^i b^j c^k basis.
CycVec F_d_element();

/// Rewriting systems used to build the tensors; exposed for confluence tests.
rewrite::System F_word_system();
rewrite::System H_word_system();

/// Duality pairing <h, f> on basis indices (27x27 table built once) and its
/// bilinear extension.
const CycMatrix& pairing_matrix();
size_t pairing_rank();
CycNum pair_basis(int h, int f);
CycNum pair_elts(const CycVec& h, const CycVec& f);

/// Hopf-axiom verification report.
struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::string counterexample; // basis indices rendered, empty when passing
};

struct HopfReport {
    std::string algebra;
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
};

/// Exact check of associativity, coassociativity, counit laws, antipode laws,
/// and the (anti)homomorphism properties of the structure maps, on full bases.
HopfReport verify_hopf(const HopfData& hd);

} // namespace qpc
