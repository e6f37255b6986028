#include <doctest.h>

#include <qpc/repr.hpp>

using namespace qpc;

namespace {
PlaneElt mono(int r, int s, const CycNum& c = CycNum::one()) {
    return PlaneElt::monomial(r, s, c);
}
} // namespace

TEST_CASE("generator action on monomials") {
    CycNum q = CycNum::q(), q2 = q * q;
    const HopfData& H = algebra_H();
    auto K = H.basis_vec(gen::H_K);
    auto Xp = H.basis_vec(gen::H_Xp);
    auto Xm = H.basis_vec(gen::H_Xm);

    CHECK(act(K, mono(1, 0)) == mono(1, 0, q));
    CHECK(act(K, mono(0, 1)) == mono(0, 1, q2));
    CHECK(act(Xp, mono(0, 1)) == mono(1, 0));
    CHECK(act(Xm, mono(1, 0)) == mono(0, 1));
    CHECK(act(Xp, mono(1, 0)).is_zero());
    CHECK(act(Xm, mono(0, 1)).is_zero());
    CHECK(act(Xp, mono(2, 2)) == mono(0, 1, -q));
    CHECK(act(Xm, mono(2, 2)) == mono(1, 0, -q));
    CHECK(act(Xp, mono(2, 1)) == mono(0, 0, q2));
    CHECK(act(Xm, mono(1, 2)) == mono(0, 0, q2));
    // unit is invariant
    for (int h = 0; h < 27; ++h)
        CHECK(act(H.basis_vec(h), PlaneElt::unit()) ==
              PlaneElt::unit().scaled(H.counit[h]));
}

TEST_CASE("coaction is an algebra map and counital") {
    for (int zi = 0; zi < 9; ++zi) {
        PlaneElt z;
        z[zi] = CycNum::one();
        // (id (x) eps) delta_R = id
        MFTensor t = coact_right(z);
        PlaneElt back;
        for (const auto& [key, c] : t)
            back += PlaneElt::monomial(key.first / 3, key.first % 3,
                                       c * algebra_F().counit[key.second]);
        CHECK(back == z);
        for (int wi = 0; wi < 9; ++wi) {
            PlaneElt w;
            w[wi] = CycNum::one();
            CHECK(coact_right(plane_mul(z, w)) == mf_mul(coact_right(z), coact_right(w)));
        }
    }
}

TEST_CASE("action and coaction agree through the pairing") {
    const HopfData& H = algebra_H();
    for (int h = 0; h < 27; ++h) {
        CycMatrix m = plane_action_matrix(h);
        for (int zi = 0; zi < 9; ++zi) {
            PlaneElt z;
            z[zi] = CycNum::one();
            PlaneElt direct = act(H.basis_vec(h), z);
            for (int r = 0; r < 9; ++r) CHECK(m.at(r, zi) == direct[r]);
        }
    }
}

TEST_CASE("reference modules classify to themselves") {
    for (const auto& [tag, mod] : reference_modules()) {
        RepLabel l = classify(mod);
        INFO(tag, " -> ", l.str());
        CHECK(l.tag == tag);
    }
}

TEST_CASE("fingerprints separate the reference modules") {
    std::vector<std::string> fps;
    for (const auto& [tag, mod] : reference_modules()) fps.push_back(fingerprint(mod).str());
    for (size_t i = 0; i < fps.size(); ++i)
        for (size_t j = i + 1; j < fps.size(); ++j) CHECK(fps[i] != fps[j]);
}

TEST_CASE("plane decomposes into the three 3-dim summands") {
    auto pv = [](std::initializer_list<int> ix) {
        std::vector<CycVec> out;
        for (int i : ix) {
            CycVec v(9);
            v[i] = CycNum::one();
            out.push_back(v);
        }
        return out;
    };
    std::vector<DecompPart> parts = {
        {"3_i", pv({6, 4, 2})}, {"3_e", pv({3, 1, 8})}, {"3_o", pv({7, 0, 5})}};
    DecompReport rep = verify_decomposition(plane_module(), parts);
    for (const auto& f : rep.failures) { INFO(f); CHECK(false); }
    CHECK(rep.pass);
    REQUIRE(rep.labels.size() == 3);
    REQUIRE(rep.labels[1].lambda.has_value());
    CHECK(!rep.labels[1].lambda->infinite);
    CHECK(rep.labels[1].lambda->value == CycNum::one());
    REQUIRE(rep.labels[2].lambda.has_value());
    CHECK(!rep.labels[2].lambda->infinite);
    CHECK(rep.labels[2].lambda->value == -CycNum::one());
}

TEST_CASE("tensor product decompositions") {
    const auto& refs = reference_modules();
    HModule t = tensor_module(refs.at("3_i"), refs.at("2"));
    CHECK(classify(t).tag == "6_e");
    CHECK(radical_of_H().size() == 13);
    CHECK(radical_submodule(refs.at("6_e")).size() == 4);
}

TEST_CASE("non-invariant spans are rejected") {
    // {1, x} is not stable under the action
    std::vector<CycVec> bad;
    for (int i : {0, 3}) {
        CycVec v(9);
        v[i] = CycNum::one();
        bad.push_back(v);
    }
    CHECK_THROWS_AS(module_from_action(bad, plane_module()), NonInvariantError);
}
