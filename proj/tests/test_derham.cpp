#include <doctest.h>

#include <qpc/derham.hpp>

#include <random>

using namespace qpc;

namespace {
std::mt19937 rng(7);

CycNum rnd_cyc() { return CycNum(int(rng() % 5) - 2, int(rng() % 5) - 2); }

Poly rnd_poly() {
    Poly p = Poly::constant(rnd_cyc());
    for (int t = 0; t < 2; ++t) {
        Poly m = Poly::constant(rnd_cyc());
        m = m * Poly::variable(rng() % xi_vars);
        if (rng() % 2) m = m * Poly::variable(rng() % xi_vars);
        p += m;
    }
    return p;
}

XiElt rnd_xi() {
    XiElt u;
    for (int t = 0; t < 5; ++t) {
        int slot = rng() % 36;
        ExtForm e;
        ExtForm::Subset sub;
        int deg = rng() % 3;
        while (int(sub.size()) < deg) sub.push_back(rng() % xi_vars);
        e.add_term(sub, rnd_poly());
        u.slot(slot) += e;
    }
    return u;
}
} // namespace

TEST_CASE("exterior algebra basics") {
    CycNum one = CycNum::one();
    XiElt d0 = XiElt::from_ext(ExtForm::dt(0)), d1 = XiElt::from_ext(ExtForm::dt(1));
    CHECK(xi_mul(d0, d1) == xi_mul(d1, d0).scaled(-one));
    CHECK(xi_mul(d0, d0).is_zero());
    XiElt wdx = XiElt::from_wz(WZForm::dx());
    CHECK(xi_mul(d0, wdx) == xi_mul(wdx, d0).scaled(-one));
    CHECK(xi_mul(XiElt::from_wz(WZForm::scalar(PlaneElt::x())),
                 XiElt::from_wz(WZForm::scalar(PlaneElt::y()))) ==
          XiElt::from_wz(WZForm::scalar(PlaneElt::monomial(1, 1))));
}

TEST_CASE("differential basics") {
    CHECK(xi_d(XiElt::from_wz(WZForm::scalar(PlaneElt::x()))) ==
          XiElt::from_wz(WZForm::dx()));
    XiElt p = XiElt::from_ext(ExtForm::scalar(Poly::variable(2) * Poly::variable(2)));
    ExtForm expect;
    expect.add_term({2}, Poly::variable(2).scaled(CycNum(2)));
    CHECK(xi_d(p) == XiElt::from_ext(expect));
}

TEST_CASE("d^2 = 0, Leibniz, associativity, randomized") {
    for (int t = 0; t < 30; ++t) {
        XiElt u = rnd_xi(), v = rnd_xi(), w = rnd_xi();
        CHECK(xi_d(xi_d(u)).is_zero());
        CHECK(xi_mul(xi_mul(u, v), w) == xi_mul(u, xi_mul(v, w)));
        for (int g = 0; g <= xi_vars + 2; ++g) {
            XiElt ug = u.component(g);
            if (ug.is_zero()) continue;
            CHECK(xi_d(xi_mul(ug, v)) ==
                  xi_mul(xi_d(ug), v) +
                      xi_mul(ug, xi_d(v)).scaled(g % 2 ? -CycNum::one() : CycNum::one()));
        }
    }
}

TEST_CASE("grade additivity") {
    for (int t = 0; t < 20; ++t) {
        XiElt u = rnd_xi().component(rng() % 4), v = rnd_xi().component(rng() % 4);
        if (u.is_zero() || v.is_zero()) continue;
        XiElt p = xi_mul(u, v);
        if (!p.is_zero()) {
            CHECK(p.is_homogeneous());
            CHECK(p.grade() == u.grade() + v.grade());
        }
    }
}

TEST_CASE("one-form triplet round trip") {
    for (int t = 0; t < 20; ++t) {
        XiOneForm tri;
        for (int mu = 0; mu < xi_vars; ++mu)
            for (int m = 0; m < 9; ++m) tri.a_mu[mu][m] = rnd_cyc();
        for (int m = 0; m < 9; ++m) {
            tri.phi_x[m] = rnd_cyc();
            tri.phi_y[m] = rnd_cyc();
        }
        CHECK(unpack_oneform(pack_oneform(tri)) == tri);
    }
    CHECK(pack_oneform(XiOneForm{}).is_zero());
    XiOneForm tri;
    tri.phi_x[0] = CycNum::one();
    CHECK(pack_oneform(tri) == XiElt::from_wz(WZForm::dx()));
    CHECK_THROWS_AS(unpack_oneform(XiElt::from_wz(WZForm::dxdy())), std::invalid_argument);
}

TEST_CASE("grade-2 elements split into the three blocks") {
    XiElt u = XiElt::from_wz(WZForm::dxdy());
    Xi2Blocks b = xi2_blocks(u);
    CHECK(b.lambda0_omega2 == u);
    CHECK(b.lambda1_omega1.is_zero());
    CHECK(b.lambda2_omega0.is_zero());

    ExtForm e2;
    e2.add_term({0, 1}, Poly::constant(CycNum::one()));
    XiElt v = XiElt::from_ext(e2);
    b = xi2_blocks(v);
    CHECK(b.lambda2_omega0 == v);
    CHECK(b.lambda0_omega2.is_zero());

    XiElt m = xi_mul(XiElt::from_ext(ExtForm::dt(0)), XiElt::from_wz(WZForm::dx()));
    b = xi2_blocks(m);
    CHECK(b.lambda1_omega1 == m);

    XiElt mix = u + v + m;
    Xi2Blocks bm = xi2_blocks(mix);
    CHECK(bm.lambda2_omega0 + bm.lambda1_omega1 + bm.lambda0_omega2 == mix);
}
