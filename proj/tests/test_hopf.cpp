#include <doctest.h>

#include <qpc/hopf.hpp>

using namespace qpc;

TEST_CASE("all Hopf axioms hold on the 27-element bases") {
    for (const HopfData* hd : {&algebra_F(), &algebra_H()}) {
        HopfReport rep = verify_hopf(*hd);
        for (const auto& ax : rep.checks) {
            INFO(ax.axiom, " ", ax.counterexample);
            CHECK(ax.pass);
        }
    }
}

TEST_CASE("generator relations in F") {
    const HopfData& F = algebra_F();
    auto b = [&](int g) { return F.basis_vec(g); };
    // ab = q ba, bc = cb, b^3 = 0, a^3 = 1
    CycVec ab = F.multiply(b(gen::F_a), b(gen::F_b));
    CycVec ba = F.multiply(b(gen::F_b), b(gen::F_a));
    for (auto& c : ba) c = c * CycNum::q();
    CHECK(ab == ba);
    CHECK(F.multiply(b(gen::F_b), b(gen::F_c)) == F.multiply(b(gen::F_c), b(gen::F_b)));
    CycVec b3 = F.multiply(F.multiply(b(gen::F_b), b(gen::F_b)), b(gen::F_b));
    CHECK(vec_is_zero(b3));
    CycVec a3 = F.multiply(F.multiply(b(gen::F_a), b(gen::F_a)), b(gen::F_a));
    CHECK(a3 == F.basis_vec(0));
}

TEST_CASE("generator relations in H") {
    const HopfData& H = algebra_H();
    auto b = [&](int g) { return H.basis_vec(g); };
    CycNum q = CycNum::q();
    // K Xp = q^2 Xp K, K Xm = q Xm K, K^3 = 1, Xp^3 = Xm^3 = 0
    CycVec kxp = H.multiply(b(gen::H_K), b(gen::H_Xp));
    CycVec xpk = H.multiply(b(gen::H_Xp), b(gen::H_K));
    for (auto& c : xpk) c = c * q * q;
    CHECK(kxp == xpk);
    CycVec k3 = H.multiply(H.multiply(b(gen::H_K), b(gen::H_K)), b(gen::H_K));
    CHECK(k3 == H.basis_vec(0));
    CycVec xp3 = H.multiply(H.multiply(b(gen::H_Xp), b(gen::H_Xp)), b(gen::H_Xp));
    CHECK(vec_is_zero(xp3));
    // [Xp, Xm] = (K - K^2)/(q - q^2)
    CycVec lhs = H.multiply(b(gen::H_Xp), b(gen::H_Xm));
    CycVec mm = H.multiply(b(gen::H_Xm), b(gen::H_Xp));
    for (size_t i = 0; i < lhs.size(); ++i) lhs[i] -= mm[i];
    CycVec k2 = H.multiply(b(gen::H_K), b(gen::H_K));
    CycVec rhs = b(gen::H_K);
    CycNum den = (q - q * q).inv();
    for (size_t i = 0; i < rhs.size(); ++i) rhs[i] = (rhs[i] - k2[i]) * den;
    CHECK(lhs == rhs);
}

TEST_CASE("pairing on generators") {
    const HopfData& F = algebra_F();
    const HopfData& H = algebra_H();
    CycVec d = F_d_element();
    CHECK(pair_elts(H.basis_vec(gen::H_K), F.basis_vec(gen::F_a)) == CycNum::q());
    CHECK(pair_elts(H.basis_vec(gen::H_K), d) == CycNum::q_pow(-1));
    CHECK(pair_elts(H.basis_vec(gen::H_Xp), F.basis_vec(gen::F_b)) == CycNum::one());
    CHECK(pair_elts(H.basis_vec(gen::H_Xm), F.basis_vec(gen::F_c)) == CycNum::one());
    CHECK(pair_elts(H.basis_vec(gen::H_Xp), F.basis_vec(gen::F_c)).is_zero());
    CHECK(pair_elts(H.basis_vec(gen::H_Xm), d).is_zero());
}

TEST_CASE("pairing rank") {
    CHECK(pairing_rank() == 27);
}

TEST_CASE("word rewriting is strategy independent") {
    const std::pair<rewrite::System, std::string> systems[] = {
        {F_word_system(), "abc"}, {H_word_system(), "pmk"}};
    for (const auto& [sys, alphabet] : systems) {
        std::vector<std::string> words = {""};
        size_t start = 0;
        for (int len = 1; len <= 3; ++len) {
            size_t end = words.size();
            for (size_t i = start; i < end; ++i)
                for (char ch : alphabet) words.push_back(words[i] + ch);
            start = end;
        }
        for (const auto& w : words)
            CHECK(sys.reduce_word(w, rewrite::Strategy::Leftmost) ==
                  sys.reduce_word(w, rewrite::Strategy::Rightmost));
    }
}
