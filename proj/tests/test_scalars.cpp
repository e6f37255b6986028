#include <doctest.h>

#include <qpc/cyc.hpp>
#include <qpc/linalg.hpp>

using namespace qpc;

TEST_CASE("cyclotomic arithmetic") {
    CycNum w = CycNum::q();
    CHECK(w * w == CycNum(-1, -1));          // w^2 = -1 - w
    CHECK(w * w * w == CycNum::one());       // w^3 = 1
    CHECK(CycNum::one() + w + w * w == CycNum::zero());
    CHECK(CycNum::q_pow(-1) == w * w);
    CHECK(CycNum::q_pow(5) == CycNum::q_pow(2));
    CHECK((CycNum(2, 3) - CycNum(2, 3)).is_zero());
}

TEST_CASE("conjugation and inverses") {
    CycNum w = CycNum::q();
    CHECK(w.conj() == w * w);                // conj swaps the primitive roots
    CHECK(w.conj().conj() == w);
    CycNum z(3, -2);
    CHECK(z * z.inv() == CycNum::one());
    // |z|^2 = z conj(z) lands in the rational subfield
    CycNum n = z * z.conj();
    CHECK(n.c1() == Rational(0));
    CHECK(n.c0() > 0);
}

TEST_CASE("string round trip") {
    CycNum z(Rational(5, 3), Rational(-7, 2));
    CHECK(CycNum::parse(z.str()) == z);
    CHECK(CycNum::parse(CycNum::zero().str()) == CycNum::zero());
}

TEST_CASE("exact linear algebra") {
    CycNum w = CycNum::q();
    CycMatrix m(2, 2);
    m.at(0, 0) = w;
    m.at(0, 1) = CycNum::one();
    m.at(1, 0) = CycNum::one();
    m.at(1, 1) = w * w;
    CHECK(m.rank() == 1);                    // det = w^3 - 1 = 0
    CHECK(m.nullspace().size() == 1);
    CHECK(!m.inverse().has_value());

    m.at(1, 1) = w;
    CHECK(m.rank() == 2);
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((*inv * m) == CycMatrix::identity(2));

    CycVec rhs = {CycNum::one(), w};
    auto sol = m.solve(rhs);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == rhs);
}

TEST_CASE("span helpers") {
    CycVec a = {CycNum::one(), CycNum::zero(), CycNum::q()};
    CycVec b = {CycNum::zero(), CycNum::one(), CycNum::one()};
    std::vector<CycVec> spanv = {a, b};
    CHECK(span_rank(spanv) == 2);
    CycVec c(3);
    for (int i = 0; i < 3; ++i) c[i] = a[i] + b[i] * CycNum::q();
    CHECK(in_span(spanv, c));
    auto co = coordinates_in(spanv, c);
    REQUIRE(co.has_value());
    CHECK((*co)[0] == CycNum::one());
    CHECK((*co)[1] == CycNum::q());
    CycVec d = {CycNum::one(), CycNum::one(), CycNum::zero()};
    CHECK(!in_span(spanv, d));
}
