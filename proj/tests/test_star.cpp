#include <doctest.h>

#include <qpc/repr.hpp>
#include <qpc/star.hpp>
#include <qpc/wz.hpp>

using namespace qpc;

TEST_CASE("stars are involutive") {
    CHECK(star_F().is_involution());
    CHECK(star_H().is_involution());
    CHECK(star_M().is_involution());
    CHECK(star_Omega().is_involution());
}

TEST_CASE("generator values") {
    CycNum q = CycNum::q(), q2 = q * q;
    const HopfData& H = algebra_H();
    // K* = K, Xp* = -q^-1 Xp, Xm* = -q Xm
    CHECK(star_H().apply(H.basis_vec(gen::H_K)) == H.basis_vec(gen::H_K));
    CycVec xp(27), xm(27);
    xp[gen::H_Xp] = -q2;
    xm[gen::H_Xm] = -q;
    CHECK(star_H().apply(H.basis_vec(gen::H_Xp)) == xp);
    CHECK(star_H().apply(H.basis_vec(gen::H_Xm)) == xm);
    // a, b, c are self-adjoint in F
    for (int g : {gen::F_a, gen::F_b, gen::F_c})
        CHECK(star_F().apply(algebra_F().basis_vec(g)) == algebra_F().basis_vec(g));
    // x* = x, y* = y, so (x^r y^s)* = q^{-rs} x^r y^s
    CHECK(star_plane(PlaneElt::x()) == PlaneElt::x());
    CHECK(star_plane(PlaneElt::y()) == PlaneElt::y());
    CHECK(star_plane(PlaneElt::monomial(1, 1)) == PlaneElt::monomial(1, 1, q2));
    CHECK(star_plane(PlaneElt::monomial(2, 1)) == PlaneElt::monomial(2, 1, q));
}

TEST_CASE("alternative module star scales the generators") {
    CycNum w = CycNum::q();
    StarMap s = star_M_with_alpha(w);
    CHECK(s.is_involution());
    CHECK(s.apply(PlaneElt::x().to_vec()) == PlaneElt::x().scaled(w).to_vec());
}

TEST_CASE("star exchanges the algebras through the pairing") {
    SweepReport rep = verify_star_duality();
    for (const auto& f : rep.failures) { INFO(f); CHECK(false); }
    CHECK(rep.pass);
}

TEST_CASE("action is compatible with the module star") {
    CHECK(verify_action_star_M().pass);
    CHECK(verify_action_star_Omega().pass);
}

TEST_CASE("star on forms is forced") {
    StarMap s = solve_star_on_forms();
    CHECK(s.apply(WZForm::dx().to_vec()) == WZForm::dx().to_vec());
    CHECK(s.apply(WZForm::dy().to_vec()) == WZForm::dy().to_vec());
    // (dx dy)* = dy* dx* = dy dx = -q dx dy
    CHECK(star_form(WZForm::dxdy()) ==
          WZForm::dxdy(PlaneElt::monomial(0, 0, -CycNum::q())));
    // d commutes with star up to the grading sign
    for (int i = 0; i < 36; ++i) {
        CycVec v(36);
        v[i] = CycNum::one();
        WZForm f = WZForm::from_vec(v);
        int p = f.degree();
        CHECK(wz_d(star_form(f)) ==
              star_form(wz_d(f)).scaled(p % 2 ? -CycNum::one() : CycNum::one()));
    }
}

TEST_CASE("invariant scalar product") {
    GramReport g = solve_invariant_gram();
    CHECK(g.presolution_dim == 1);
    CHECK(g.nonvanishing_one_z == std::vector<int>{8});
    CHECK(g.one_z[8] == CycNum(-1, -1)); // q^2
    CHECK(gram_pair(PlaneElt::monomial(1, 1), PlaneElt::monomial(1, 1)) == CycNum::one());
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            CHECK(g.gram.at(i, j) == g.gram.at(j, i).conj());
            bool partner = (j / 3) == 2 - i / 3 && (j % 3) == 2 - i % 3;
            CHECK(g.gram.at(i, j).is_zero() == !partner);
        }
    CHECK(verify_gram_invariance().pass);
}

TEST_CASE("the alternative invariance admits only zero") {
    AltInvarianceReport rep = check_alt_invariance();
    CHECK(rep.alt_dim == 0);
    CHECK(rep.unstarred_dim == 1);
    CHECK(rep.normalization_inconsistent);
    CHECK(rep.pass);
}

TEST_CASE("hermitian one-form families") {
    HermitianReport rep = hermitian_oneforms();
    for (const auto& f : rep.failures) { INFO(f); CHECK(false); }
    CHECK(rep.all_hermitian);
    CHECK(rep.spans_real_oneforms);
    size_t total = 0;
    for (const auto& fam : rep.families) {
        total += fam.generators.size();
        for (const auto& g : fam.generators) CHECK(star_form(g) == g);
    }
    CHECK(total == 18);
}
