#pragma once

#include "qpc/hopf.hpp"
#include "qpc/linalg.hpp"
#include "qpc/qplane.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpc {

/// Element of M tensor F, sparse on (plane basis, F basis) pairs.
using MFTensor = std::map<std::pair<int, int>, CycNum>;

/// Right coaction delta_R extended multiplicatively from
/// delta_R(x) = x(x)a + y(x)c, delta_R(y) = x(x)b + y(x)d.
MFTensor coact_right(const PlaneElt& z);
/// Mirror of the left coaction (column convention); not used downstream.
MFTensor coact_left(const PlaneElt& z);
MFTensor mf_mul(const MFTensor& u, const MFTensor& v);

/// Left action of H on M: act(h, z) = (id (x) <h,.>) o coact_right(z).
PlaneElt act(const CycVec& h, const PlaneElt& z);
/// 9x9 matrix of a basis element of H acting on M.
const CycMatrix& plane_action_matrix(int h_basis);

/// The 9x3 table of K, Xp, Xm acting on the plane monomials.
struct ActionTable {
    std::vector<int> row_order; // plane basis indices, published row order
    std::vector<PlaneElt> K, Xp, Xm;
};
ActionTable action_table();

/// A finite-dimensional H-module given by the three generator matrices.
struct HModule {
    size_t dim = 0;
    CycMatrix K, Xp, Xm;
    std::vector<std::string> basis_labels;

    /// Matrix of an arbitrary element of H (linear extension over monomials).
    CycMatrix action_of(const CycVec& h) const;
    CycMatrix generator(int which) const; // 0=K, 1=Xp, 2=Xm

    /// Verifies the algebra relations (K invertible, K^3 = 1, Xpm^3 = 0,
    /// K Xpm = q^pm2 Xpm K, commutator). Throws std::invalid_argument.
    void check_relations() const;
};

/// The 9-dim module M itself.
const HModule& plane_module();

struct NonInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Restricts the ambient action to the span of the given vectors.
/// Throws NonInvariantError naming generator and offending vector.
HModule module_from_action(const std::vector<CycVec>& basis, const HModule& ambient,
                           std::vector<std::string> labels = {});

/// Tensor product module via the coproduct conventions of H.
HModule tensor_module(const HModule& A, const HModule& B);

/// The 27-dim left regular representation of H.
HModule regular_rep_H();

/// Isomorphism-invariant classification key, all entries exact.
struct Fingerprint {
    size_t dim = 0;
    size_t k_mult[3] = {0, 0, 0}; // multiplicities of eigenvalues 1, q, q^2
    size_t rank_xp = 0, rank_xm = 0, rank_xp2 = 0, rank_xm2 = 0, rank_xpxm = 0;
    size_t joint_kernel_dim = 0;

    bool operator==(const Fingerprint& o) const;
    std::string str() const;
};
Fingerprint fingerprint(const HModule& m);

/// Projective-line parameter of the 3-dim families, lambda = l1/l2 in CP^1.
struct Lambda {
    CycNum value;
    bool infinite = false;
    std::string str() const;
};

struct RepLabel {
    std::string tag; // one of 1, 2, 3_i, 3_e, 3_o, 4_e, 5_o, 6_e, 6_o
    std::optional<Lambda> lambda;
    std::string str() const;
};

struct UnknownFingerprintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reference modules for the known indecomposable types, built once.
const std::map<std::string, HModule>& reference_modules();

/// Matches the module's fingerprint against the reference list; extracts
/// lambda for the 3_e / 3_o families. Throws UnknownFingerprintError.
RepLabel classify(const HModule& m);

/// Basis of the Jacobson radical of H (as 27-vectors), via the trace form
/// of the regular representation (exact, characteristic zero).
const std::vector<CycVec>& radical_of_H();

/// rad(M) = (rad H) . M and soc-type annihilator {v : (rad H) v = 0},
/// returned as vector spans in the module's coordinates.
std::vector<CycVec> radical_submodule(const HModule& m);
std::vector<CycVec> radical_annihilator(const HModule& m);

/// Decomposition verification: invariance of each part, independence,
/// completeness, and classification against the claimed labels.
struct DecompPart {
    std::string claimed_tag;
    std::vector<CycVec> basis;
};
struct DecompReport {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<RepLabel> labels;
};
DecompReport verify_decomposition(const HModule& m, const std::vector<DecompPart>& parts);

/// Basis of Hom_H(A, B) as dim(B) x dim(A) matrices.
std::vector<CycMatrix> hom_space(const HModule& A, const HModule& B);

} // namespace qpc
