#include <doctest.h>

#include <qpc/qplane.hpp>

using namespace qpc;

namespace {
PlaneElt mono(int r, int s, const CycNum& c = CycNum::one()) {
    return PlaneElt::monomial(r, s, c);
}
} // namespace

TEST_CASE("defining relations") {
    PlaneElt x = PlaneElt::x(), y = PlaneElt::y();
    CHECK(plane_mul(x, y) == plane_mul(y, x).scaled(CycNum::q()));
    CHECK(plane_mul(plane_mul(x, x), x) == PlaneElt::unit());
    CHECK(plane_mul(plane_mul(y, y), y) == PlaneElt::unit());
}

TEST_CASE("monomial product picks up q^{-st}") {
    // (x^r y^s)(x^t y^u) = q^{-st} x^{r+t} y^{s+u}
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
            for (int t = 0; t < 3; ++t)
                for (int u = 0; u < 3; ++u)
                    CHECK(plane_mul(mono(r, s), mono(t, u)) ==
                          mono((r + t) % 3, (s + u) % 3, CycNum::q_pow(-s * t)));
}

TEST_CASE("matrix oracle") {
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            PlaneElt u, v;
            u[i] = CycNum::one();
            v[j] = CycNum::one();
            CHECK(to_matrix(plane_mul(u, v)) == mat3_mul(to_matrix(u), to_matrix(v)));
        }
    // the representation is faithful on the basis
    for (int i = 0; i < 9; ++i) {
        PlaneElt u;
        u[i] = CycNum::one();
        CHECK(from_matrix(to_matrix(u)) == u);
    }
}

TEST_CASE("indexing and names") {
    CHECK(PlaneElt::index(2, 1) == 7);
    CHECK(PlaneElt::basis_name(0) == "1");
    CHECK(PlaneElt::basis_name(8) == "x^2*y^2");
    CHECK(mono(1, 1).str() == "(1)*x*y");
}
