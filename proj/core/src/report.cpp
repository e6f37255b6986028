#include "qpc/report.hpp"

#include "qpc/derham.hpp"
#include "qpc/hopf.hpp"
#include "qpc/qplane.hpp"
#include "qpc/repr.hpp"
#include "qpc/star.hpp"
#include "qpc/wz.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qpc {

namespace {

using nlohmann::json;

const CycNum kQ = CycNum::q();

// --- shared fixtures -------------------------------------------------------

PlaneElt mono(int r, int s, const CycNum& c = CycNum::one()) {
    return PlaneElt::monomial(r, s, c);
}

WZForm fdx(int r, int s, const CycNum& c = CycNum::one()) {
    return WZForm::dx(mono(r, s, c));
}

WZForm fdy(int r, int s, const CycNum& c = CycNum::one()) {
    return WZForm::dy(mono(r, s, c));
}

struct ActionRow {
    int r, s;
    PlaneElt K, Xp, Xm;
};

// Transcription of the published generator-action table on M
// (rows x^2, xy, y^2, x, y, x^2y^2, x^2y, xy^2, 1).
const std::vector<ActionRow>& expected_action_rows() {
    static const std::vector<ActionRow> rows = [] {
        CycNum q = kQ, q2 = kQ * kQ, one = CycNum::one();
        return std::vector<ActionRow>{
            {2, 0, mono(2, 0, q2), PlaneElt(), mono(1, 1, -q2)},
            {1, 1, mono(1, 1), mono(2, 0, q), mono(0, 2, q)},
            {0, 2, mono(0, 2, q), mono(1, 1, -q2), PlaneElt()},
            {1, 0, mono(1, 0, q), PlaneElt(), mono(0, 1)},
            {0, 1, mono(0, 1, q2), mono(1, 0), PlaneElt()},
            {2, 2, mono(2, 2), mono(0, 1, -q), mono(1, 0, -q)},
            {2, 1, mono(2, 1, q), mono(0, 0, q2), mono(1, 2, -one)},
            {1, 2, mono(1, 2, q2), mono(2, 1, -one), mono(0, 0, q2)},
            {0, 0, mono(0, 0), PlaneElt(), PlaneElt()},
        };
    }();
    return rows;
}

struct OmegaRowExpect {
    WZForm K, Xp, Xm;
};

// Transcriptions of the three published one-form tables, in the row order
// produced by omega_tables().
const std::vector<OmegaRowExpect>& expected_omega_rows(int which) {
    static const std::array<std::vector<OmegaRowExpect>, 3> tables = [] {
        CycNum q = kQ, q2 = kQ * kQ, one = CycNum::one();
        std::array<std::vector<OmegaRowExpect>, 3> t;
        // basis {x^2 y, x y^2, 1} (x) {dx, dy}
        t[0] = {
            {fdx(2, 1, q2), fdx(0, 0, q2), fdx(1, 2, -q2) + fdy(2, 1)},
            {fdx(1, 2), fdx(2, 1, -one), fdx(0, 0, q) + fdy(1, 2)},
            {fdx(0, 0, q), WZForm{}, fdy(0, 0)},
            {fdy(2, 1), fdy(0, 0, q2) + fdx(2, 1, q), fdy(1, 2, -q)},
            {fdy(1, 2, q), fdy(2, 1, -one) + fdx(1, 2, q2), fdy(0, 0)},
            {fdy(0, 0, q2), fdx(0, 0), WZForm{}},
        };
        // basis {x, y, x^2 y^2} (x) {dx, dy}
        t[1] = {
            {fdx(1, 0, q2), WZForm{}, fdx(0, 1, q2) + fdy(1, 0)},
            {fdx(0, 1), fdx(1, 0), fdy(0, 1)},
            {fdx(2, 2, q), fdx(0, 1, -q), fdx(1, 0, -one) + fdy(2, 2)},
            {fdy(1, 0), fdx(1, 0, q), fdy(0, 1, q)},
            {fdy(0, 1, q), fdy(1, 0) + fdx(0, 1, q2), WZForm{}},
            {fdy(2, 2, q2), fdy(0, 1, -q) + fdx(2, 2), fdy(1, 0, -q2)},
        };
        // basis {x^2, x y, y^2} (x) {dx, dy}
        t[2] = {
            {fdx(2, 0), WZForm{}, fdx(1, 1, -q) + fdy(2, 0)},
            {fdx(1, 1, q), fdx(2, 0, q), fdx(0, 2) + fdy(1, 1)},
            {fdx(0, 2, q2), fdx(1, 1, -q2), fdy(0, 2)},
            {fdy(2, 0, q), fdx(2, 0, q2), fdy(1, 1, -one)},
            {fdy(1, 1, q2), fdy(2, 0, q) + fdx(1, 1), fdy(0, 2, q2)},
            {fdy(0, 2), fdy(1, 1, -q2) + fdx(0, 2, q), WZForm{}},
        };
        return t;
    }();
    return tables[which];
}

CycVec one_form_coords(const WZForm& f) {
    // coordinates inside the 18-dimensional Omega^1 block (2m, 2m+1)
    CycVec v(18);
    for (int m = 0; m < 9; ++m) {
        v[2 * m] = f.d1x[m];
        v[2 * m + 1] = f.d1y[m];
    }
    return v;
}

const HModule& omega1_module() {
    static const HModule m = [] {
        std::vector<CycVec> basis;
        for (int m9 = 0; m9 < 9; ++m9)
            for (int k = 1; k <= 2; ++k) {
                CycVec v(36);
                v[4 * m9 + k] = CycNum::one();
                basis.push_back(std::move(v));
            }
        std::vector<std::string> labels;
        for (int m9 = 0; m9 < 9; ++m9) {
            labels.push_back(PlaneElt::basis_name(m9) + " dx");
            labels.push_back(PlaneElt::basis_name(m9) + " dy");
        }
        return module_from_action(basis, omega_module(), labels);
    }();
    return m;
}

// Published bases for the Omega^1 decompositions.
std::vector<DecompPart> omega1_decomp_parts() {
    CycNum q = kQ, q2 = kQ * kQ, one = CycNum::one();
    auto v = [](const WZForm& f) { return one_form_coords(f); };
    std::vector<DecompPart> parts;
    // from 3_o (x) 2 = 3_i + 3_e
    parts.push_back({"3_i",
                     {v(fdx(2, 1, q) - fdy(0, 0)),
                      v(fdy(2, 1, -one) + fdx(1, 2, q2)),
                      v(fdx(0, 0, -q) + fdy(1, 2, q))}});
    parts.push_back({"3_e",
                     {v(fdy(0, 0)), v(fdy(2, 1) + fdx(1, 2, q)), v(fdx(0, 0))}});
    // from 3_e (x) 2 = 3_i + 3_o
    parts.push_back({"3_i",
                     {v(fdy(0, 1)), v(fdy(1, 0, q) + fdx(0, 1)), v(fdx(1, 0))}});
    parts.push_back({"3_o",
                     {v(fdy(2, 2) - fdx(1, 0)),
                      v(fdy(1, 0, -q) + fdx(0, 1, q2)),
                      v(fdy(0, 1) - fdx(2, 2, q2))}});
    // from 3_i (x) 2 = 6_e
    std::vector<CycVec> six;
    for (auto [r, s] : {std::pair{2, 0}, {1, 1}, {0, 2}}) {
        six.push_back(v(fdx(r, s)));
        six.push_back(v(fdy(r, s)));
    }
    parts.push_back({"6_e", six});
    return parts;
}

PlaneElt rnd_plane(std::mt19937& rng) {
    PlaneElt z;
    for (int m = 0; m < 9; ++m)
        z[m] = CycNum(int(rng() % 7) - 3, int(rng() % 7) - 3);
    return z;
}

WZForm rnd_form(std::mt19937& rng, int deg) {
    WZForm f;
    switch (deg) {
        case 0: f.d0 = rnd_plane(rng); break;
        case 1:
            f.d1x = rnd_plane(rng);
            f.d1y = rnd_plane(rng);
            break;
        default: f.d2 = rnd_plane(rng); break;
    }
    return f;
}

// --- check registry --------------------------------------------------------

struct Ctx {
    bool pass = true;
    std::ostringstream detail;
    int fail_count = 0;

    void fail(const std::string& msg) {
        pass = false;
        if (++fail_count <= 5) {
            if (detail.tellp() > 0) detail << "; ";
            detail << msg;
        }
    }
    void note(const std::string& msg) {
        if (detail.tellp() > 0) detail << "; ";
        detail << msg;
    }
    void require(bool ok, const std::string& msg) {
        if (!ok) fail(msg);
    }
};

struct Check {
    const char* suite;
    const char* name;
    std::function<void(Ctx&)> run;
};

void c_matrix_oracle(Ctx& c) {
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            PlaneElt u, v;
            u[i] = CycNum::one();
            v[j] = CycNum::one();
            if (to_matrix(plane_mul(u, v)) != mat3_mul(to_matrix(u), to_matrix(v)))
                c.fail("product mismatch at basis (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
            if (from_matrix(to_matrix(u)) != u) c.fail("round trip fails at " + u.str());
        }
    PlaneElt x = PlaneElt::x(), y = PlaneElt::y();
    c.require(plane_mul(x, y) == plane_mul(y, x).scaled(kQ), "xy != q yx");
    c.require(plane_mul(plane_mul(x, x), x) == PlaneElt::unit(), "x^3 != 1");
    c.require(plane_mul(plane_mul(y, y), y) == PlaneElt::unit(), "y^3 != 1");
}

void c_hopf_axioms(Ctx& c, const HopfData& hd) {
    HopfReport rep = verify_hopf(hd);
    for (const auto& ax : rep.checks)
        if (!ax.pass) c.fail(ax.axiom + " fails at " + ax.counterexample);
}

void c_pairing_generators(Ctx& c) {
    const HopfData& F = algebra_F();
    const HopfData& H = algebra_H();
    CycVec d = F_d_element();
    struct Entry {
        int h;
        const CycVec f;
        CycNum expect;
        const char* label;
    };
    std::vector<Entry> entries = {
        {gen::H_K, F.basis_vec(gen::F_a), kQ, "<K,a>"},
        {gen::H_K, F.basis_vec(gen::F_b), CycNum::zero(), "<K,b>"},
        {gen::H_K, F.basis_vec(gen::F_c), CycNum::zero(), "<K,c>"},
        {gen::H_K, d, CycNum::q_pow(-1), "<K,d>"},
        {gen::H_Xp, F.basis_vec(gen::F_a), CycNum::zero(), "<X+,a>"},
        {gen::H_Xp, F.basis_vec(gen::F_b), CycNum::one(), "<X+,b>"},
        {gen::H_Xp, F.basis_vec(gen::F_c), CycNum::zero(), "<X+,c>"},
        {gen::H_Xp, d, CycNum::zero(), "<X+,d>"},
        {gen::H_Xm, F.basis_vec(gen::F_a), CycNum::zero(), "<X-,a>"},
        {gen::H_Xm, F.basis_vec(gen::F_b), CycNum::zero(), "<X-,b>"},
        {gen::H_Xm, F.basis_vec(gen::F_c), CycNum::one(), "<X-,c>"},
        {gen::H_Xm, d, CycNum::zero(), "<X-,d>"},
    };
    for (const auto& e : entries)
        if (pair_elts(H.basis_vec(e.h), e.f) != e.expect)
            c.fail(std::string(e.label) + " = " +
                   pair_elts(H.basis_vec(e.h), e.f).str());
}

void c_pairing_duality(Ctx& c) {
    const HopfData& F = algebra_F();
    const HopfData& H = algebra_H();
    // <h1 h2, f> = <h1 (x) h2, Delta f>
    for (int h1 = 0; h1 < 27 && c.fail_count < 5; ++h1)
        for (int h2 = 0; h2 < 27; ++h2) {
            CycVec prod = H.multiply(H.basis_vec(h1), H.basis_vec(h2));
            for (int f = 0; f < 27; ++f) {
                CycNum lhs = pair_elts(prod, F.basis_vec(f));
                CycNum rhs;
                for (const auto& [key, cf] : F.coproduct[f])
                    rhs += cf * pair_basis(h1, key.first) * pair_basis(h2, key.second);
                if (lhs != rhs)
                    c.fail("mul side fails at (" + H.basis_names[h1] + ", " +
                           H.basis_names[h2] + ", " + F.basis_names[f] + ")");
            }
        }
    // <Delta h, f1 (x) f2> = <h, f1 f2>
    for (int f1 = 0; f1 < 27 && c.fail_count < 5; ++f1)
        for (int f2 = 0; f2 < 27; ++f2) {
            CycVec prod = F.multiply(F.basis_vec(f1), F.basis_vec(f2));
            for (int h = 0; h < 27; ++h) {
                CycNum lhs;
                for (const auto& [key, ch] : H.coproduct[h])
                    lhs += ch * pair_basis(key.first, f1) * pair_basis(key.second, f2);
                CycNum rhs = pair_elts(H.basis_vec(h), prod);
                if (lhs != rhs)
                    c.fail("comul side fails at (" + H.basis_names[h] + ", " +
                           F.basis_names[f1] + ", " + F.basis_names[f2] + ")");
            }
        }
}

void c_pairing_rank(Ctx& c) {
    size_t r = pairing_rank();
    c.note("rank = " + std::to_string(r) + " (nondegenerate)");
    c.require(r == 27, "rank changed from the frozen value 27");
}

void c_word_confluence(Ctx& c, const rewrite::System& sys, const std::string& alphabet) {
    std::vector<std::string> words = {""};
    size_t start = 0;
    for (int len = 1; len <= 4; ++len) {
        size_t end = words.size();
        for (size_t i = start; i < end; ++i)
            for (char ch : alphabet) words.push_back(words[i] + ch);
        start = end;
    }
    for (const auto& w : words) {
        if (w.empty()) continue;
        auto l = sys.reduce_word(w, rewrite::Strategy::Leftmost);
        auto r = sys.reduce_word(w, rewrite::Strategy::Rightmost);
        if (l != r) c.fail("strategies disagree on '" + w + "'");
    }
}

void c_action_table(Ctx& c) {
    ActionTable t = action_table();
    const auto& rows = expected_action_rows();
    for (size_t i = 0; i < rows.size(); ++i) {
        std::string z = PlaneElt::basis_name(t.row_order[i]);
        if (t.K[i] != rows[i].K) c.fail("K on " + z);
        if (t.Xp[i] != rows[i].Xp) c.fail("X+ on " + z);
        if (t.Xm[i] != rows[i].Xm) c.fail("X- on " + z);
    }
}

void c_module_algebra(Ctx& c) {
    const HopfData& H = algebra_H();
    for (int h = 0; h < 27 && c.fail_count < 5; ++h) {
        // h(1) = eps(h) 1
        PlaneElt unit_img = act(H.basis_vec(h), PlaneElt::unit());
        if (unit_img != PlaneElt::unit().scaled(H.counit[h]))
            c.fail("h(1) != eps(h) 1 at h=" + H.basis_names[h]);
        for (int zi = 0; zi < 9; ++zi)
            for (int wi = 0; wi < 9; ++wi) {
                PlaneElt z, w;
                z[zi] = CycNum::one();
                w[wi] = CycNum::one();
                PlaneElt lhs = act(H.basis_vec(h), plane_mul(z, w));
                PlaneElt rhs;
                for (const auto& [key, cf] : H.coproduct[h])
                    rhs += plane_mul(act(H.basis_vec(key.first), z),
                                     act(H.basis_vec(key.second), w))
                               .scaled(cf);
                if (lhs != rhs)
                    c.fail("law fails at h=" + H.basis_names[h] + ", z=" +
                           PlaneElt::basis_name(zi) + ", w=" + PlaneElt::basis_name(wi));
            }
    }
}

void c_coaction_multiplicative(Ctx& c) {
    for (int zi = 0; zi < 9; ++zi)
        for (int wi = 0; wi < 9; ++wi) {
            PlaneElt z, w;
            z[zi] = CycNum::one();
            w[wi] = CycNum::one();
            if (coact_right(plane_mul(z, w)) != mf_mul(coact_right(z), coact_right(w)))
                c.fail("delta_R not multiplicative at (" + PlaneElt::basis_name(zi) + ", " +
                       PlaneElt::basis_name(wi) + ")");
        }
}

void c_plane_decomposition(Ctx& c) {
    auto pv = [](std::initializer_list<int> ix) {
        std::vector<CycVec> out;
        for (int i : ix) {
            CycVec v(9);
            v[i] = CycNum::one();
            out.push_back(std::move(v));
        }
        return out;
    };
    std::vector<DecompPart> parts = {
        {"3_i", pv({6, 4, 2})}, {"3_e", pv({3, 1, 8})}, {"3_o", pv({7, 0, 5})}};
    DecompReport rep = verify_decomposition(plane_module(), parts);
    for (const auto& f : rep.failures) c.fail(f);
    if (rep.pass) {
        std::ostringstream os;
        os << "M = ";
        for (size_t i = 0; i < rep.labels.size(); ++i)
            os << (i ? " + " : "") << rep.labels[i].str();
        c.note(os.str());
    }
}

void c_reference_classification(Ctx& c) {
    for (const auto& [tag, mod] : reference_modules()) {
        RepLabel l = classify(mod);
        if (l.tag != tag) c.fail(tag + " classifies as " + l.str());
    }
    c.note("lambda(3_e ref) = " + classify(reference_modules().at("3_e")).lambda->str() +
           ", lambda(3_o ref) = " + classify(reference_modules().at("3_o")).lambda->str() +
           " (sign conventions fixed by this library)");
}

void c_wz_relations(Ctx& c) {
    CycNum q = kQ, q2 = kQ * kQ, one = CycNum::one();
    WZForm X = WZForm::scalar(PlaneElt::x()), Y = WZForm::scalar(PlaneElt::y());
    WZForm dX = WZForm::dx(), dY = WZForm::dy();
    c.require(wz_mul(X, dX) == wz_mul(dX, X).scaled(q2), "x dx != q^2 dx x");
    c.require(wz_mul(X, dY) == wz_mul(dY, X).scaled(q) + wz_mul(dX, Y).scaled(q2 - one),
              "x dy relation");
    c.require(wz_mul(Y, dX) == wz_mul(dX, Y).scaled(q), "y dx != q dx y");
    c.require(wz_mul(Y, dY) == wz_mul(dY, Y).scaled(q2), "y dy != q^2 dy y");
    c.require(wz_mul(dX, dX).is_zero(), "dx^2 != 0");
    c.require(wz_mul(dY, dY).is_zero(), "dy^2 != 0");
    c.require((wz_mul(dX, dY) + wz_mul(dY, dX).scaled(q2)).is_zero(),
              "dx dy + q^2 dy dx != 0");
    c.require(wz_mul(dX, X) == WZForm::dx(mono(1, 0, q)), "dx x != q x dx");
    c.require(wz_mul(dY, dX) == WZForm::dxdy(mono(0, 0, -q)), "dy dx != -q dx dy");
}

void c_wz_d(Ctx& c) {
    for (int i = 0; i < 36; ++i) {
        CycVec v(36);
        v[i] = CycNum::one();
        if (!wz_d(wz_d(WZForm::from_vec(v))).is_zero())
            c.fail("d^2 != 0 on basis slot " + std::to_string(i));
    }
    WZForm x2 = WZForm::scalar(mono(2, 0)), y2 = WZForm::scalar(mono(0, 2));
    c.require((wz_mul(wz_d(x2), WZForm::scalar(PlaneElt::x())) + wz_mul(x2, WZForm::dx()))
                  .is_zero(),
              "d(x^3) != 0");
    c.require((wz_mul(wz_d(y2), WZForm::scalar(PlaneElt::y())) + wz_mul(y2, WZForm::dy()))
                  .is_zero(),
              "d(y^3) != 0");
}

void c_wz_leibniz(Ctx& c) {
    std::mt19937 rng(20240901);
    for (int t = 0; t < 1000 && c.fail_count < 5; ++t) {
        int du = t % 3, dv = (t / 3) % 3;
        WZForm u = rnd_form(rng, du), v = rnd_form(rng, dv);
        WZForm lhs = wz_d(wz_mul(u, v));
        WZForm rhs = wz_mul(wz_d(u), v) +
                     wz_mul(u, wz_d(v)).scaled(du % 2 ? -CycNum::one() : CycNum::one());
        if (lhs != rhs) c.fail("Leibniz fails at trial " + std::to_string(t));
    }
}

void c_wz_assoc(Ctx& c) {
    std::mt19937 rng(20240902);
    for (int t = 0; t < 200 && c.fail_count < 5; ++t) {
        WZForm u = rnd_form(rng, t % 3), v = rnd_form(rng, (t / 3) % 3),
               w = rnd_form(rng, (t / 9) % 3);
        if (wz_mul(wz_mul(u, v), w) != wz_mul(u, wz_mul(v, w)))
            c.fail("associativity fails at trial " + std::to_string(t));
    }
}

void c_wz_confluence(Ctx& c) {
    std::vector<std::string> words = {""};
    size_t start = 0;
    for (int len = 1; len <= 4; ++len) {
        size_t end = words.size();
        for (size_t i = start; i < end; ++i)
            for (char ch : std::string("xyXY")) words.push_back(words[i] + ch);
        start = end;
    }
    for (const auto& w : words) {
        if (w.empty()) continue;
        WZForm l = wz_reduce_word(w, rewrite::Strategy::Leftmost);
        WZForm r = wz_reduce_word(w, rewrite::Strategy::Rightmost);
        if (l != r) c.fail("strategies disagree on '" + w + "'");
        WZForm prod = WZForm::scalar(PlaneElt::unit());
        for (char ch : w)
            prod = wz_mul(prod, ch == 'x'   ? WZForm::scalar(PlaneElt::x())
                                : ch == 'y' ? WZForm::scalar(PlaneElt::y())
                                : ch == 'X' ? WZForm::dx()
                                            : WZForm::dy());
        if (l != prod) c.fail("word reduction disagrees with wz_mul on '" + w + "'");
    }
}

void c_omega_tables(Ctx& c) {
    OmegaTables t = omega_tables();
    const std::vector<OmegaTableRow>* tabs[3] = {&t.t3o2, &t.t3e2, &t.t3i2};
    const char* names[3] = {"3_o(x)2", "3_e(x)2", "3_i(x)2"};
    for (int w = 0; w < 3; ++w) {
        const auto& expect = expected_omega_rows(w);
        for (size_t i = 0; i < 6; ++i) {
            const auto& row = (*tabs[w])[i];
            if (row.K != expect[i].K) c.fail(std::string(names[w]) + " K on " + row.label);
            if (row.Xp != expect[i].Xp) c.fail(std::string(names[w]) + " X+ on " + row.label);
            if (row.Xm != expect[i].Xm) c.fail(std::string(names[w]) + " X- on " + row.label);
        }
    }
}

void c_omega1_decomposition(Ctx& c) {
    DecompReport rep = verify_decomposition(omega1_module(), omega1_decomp_parts());
    for (const auto& f : rep.failures) c.fail(f);
    if (rep.pass) {
        std::ostringstream os;
        os << "Omega^1 = ";
        for (size_t i = 0; i < rep.labels.size(); ++i)
            os << (i ? " + " : "") << rep.labels[i].str();
        c.note(os.str());
    }
}

void c_six_e_chain(Ctx& c) {
    // inside 6_e = {x^2, xy, y^2} (x) {dx, dy}: 0 < 2 < 3_e < 4_e < 6_e
    CycNum q = kQ, q2 = kQ * kQ;
    std::vector<CycVec> six;
    for (auto [r, s] : {std::pair{2, 0}, {1, 1}, {0, 2}}) {
        six.push_back(one_form_coords(fdx(r, s)));
        six.push_back(one_form_coords(fdy(r, s)));
    }
    HModule m6 = module_from_action(six, omega1_module());
    auto coords6 = [&](const WZForm& f) {
        auto co = coordinates_in(six, one_form_coords(f));
        if (!co) throw std::logic_error("six_e_chain: vector outside 6_e");
        return *co;
    };
    std::vector<CycVec> two = {coords6(fdy(2, 0, -q2) + fdx(1, 1)),
                               coords6(fdy(1, 1, -q) + fdx(0, 2))};
    // a generic member of the one-parameter family of 3-dim submodules
    std::vector<CycVec> three = two;
    three.push_back(coords6(fdx(2, 0) + fdy(0, 2)));
    std::vector<CycVec> four = radical_submodule(m6);
    c.require(four.size() == 4, "rad(6_e) is not 4-dimensional");
    try {
        HModule m2 = module_from_action(two, m6);
        c.require(classify(m2).tag == "2", "middle 2 misclassifies");
        HModule m3 = module_from_action(three, m6);
        RepLabel l3 = classify(m3);
        c.require(l3.tag == "3_e", "3_e^lambda layer misclassifies");
        if (l3.lambda) c.note("3_e^lambda layer in 6_e has lambda = " + l3.lambda->str());
        HModule m4 = module_from_action(four, m6);
        c.require(classify(m4).tag == "4_e", "rad(6_e) misclassifies");
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
    for (const auto& v : two)
        if (!in_span(four, v)) c.fail("2 is not inside 4_e");
    for (const auto& v : three)
        if (!in_span(four, v)) c.fail("3_e^lambda is not inside 4_e");
}

void c_omega2_iso(Ctx& c) {
    Omega2IsoReport rep = omega2_iso();
    for (const auto& f : rep.failures) c.fail(f);
}

void c_star_involutions(Ctx& c) {
    c.require(star_F().is_involution(), "star_F not involutive");
    c.require(star_H().is_involution(), "star_H not involutive");
    c.require(star_M().is_involution(), "star_M not involutive");
    c.require(star_Omega().is_involution(), "star_Omega not involutive");
    // antihomomorphism sweeps
    const HopfData& F = algebra_F();
    const HopfData& H = algebra_H();
    for (int i = 0; i < 27 && c.fail_count < 5; ++i)
        for (int j = 0; j < 27; ++j) {
            CycVec lf = star_F().apply(F.multiply(F.basis_vec(i), F.basis_vec(j)));
            CycVec rf = F.multiply(star_F().apply(F.basis_vec(j)), star_F().apply(F.basis_vec(i)));
            for (int t = 0; t < 27; ++t) lf[t] -= rf[t];
            if (!vec_is_zero(lf))
                c.fail("(fg)* != g* f* in F at (" + std::to_string(i) + "," + std::to_string(j) +
                       ")");
            CycVec lh = star_H().apply(H.multiply(H.basis_vec(i), H.basis_vec(j)));
            CycVec rh = H.multiply(star_H().apply(H.basis_vec(j)), star_H().apply(H.basis_vec(i)));
            for (int t = 0; t < 27; ++t) lh[t] -= rh[t];
            if (!vec_is_zero(lh))
                c.fail("(gh)* != h* g* in H at (" + std::to_string(i) + "," + std::to_string(j) +
                       ")");
        }
    for (int i = 0; i < 36 && c.fail_count < 5; ++i)
        for (int j = 0; j < 36; ++j) {
            CycVec vi(36), vj(36);
            vi[i] = CycNum::one();
            vj[j] = CycNum::one();
            WZForm u = WZForm::from_vec(vi), v = WZForm::from_vec(vj);
            if (star_form(wz_mul(u, v)) != wz_mul(star_form(v), star_form(u)))
                c.fail("(uv)* != v* u* in Omega at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
        }
}

void c_star_duality(Ctx& c) {
    SweepReport rep = verify_star_duality();
    for (const auto& f : rep.failures) c.fail(f);
}

void c_action_star_M(Ctx& c) {
    SweepReport rep = verify_action_star_M();
    for (const auto& f : rep.failures) c.fail(f);
}

void c_star_on_forms(Ctx& c) {
    try {
        StarMap s = solve_star_on_forms();
        CycVec dxv = WZForm::dx().to_vec();
        CycVec dyv = WZForm::dy().to_vec();
        c.require(s.apply(dxv) == dxv, "dx* != dx");
        c.require(s.apply(dyv) == dyv, "dy* != dy");
        c.note("unique solution dx* = dx, dy* = dy");
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
}

void c_action_star_Omega(Ctx& c) {
    SweepReport rep = verify_action_star_Omega();
    for (const auto& f : rep.failures) c.fail(f);
}

void c_d_star(Ctx& c) {
    for (int m = 0; m < 9; ++m) {
        PlaneElt z;
        z[m] = CycNum::one();
        if (star_form(wz_d(WZForm::scalar(z))) != wz_d(WZForm::scalar(star_plane(z))))
            c.fail("(dz)* != d(z*) at z=" + PlaneElt::basis_name(m));
    }
    for (int i = 0; i < 36; ++i) {
        CycVec v(36);
        v[i] = CycNum::one();
        WZForm w = WZForm::from_vec(v);
        int p = w.degree();
        WZForm lhs = wz_d(star_form(w));
        WZForm rhs = star_form(wz_d(w)).scaled(p % 2 ? -CycNum::one() : CycNum::one());
        if (lhs != rhs) c.fail("d(w*) != (-1)^p (dw)* on slot " + std::to_string(i));
    }
}

void c_gram_solve(Ctx& c) {
    try {
        GramReport rep = solve_invariant_gram();
        c.require(rep.presolution_dim == 1, "pre-normalization dimension != 1");
        c.require(rep.nonvanishing_one_z == std::vector<int>{8},
                  "(1, z) nonvanishing pattern is not {x^2 y^2}");
        c.require(gram_pair(mono(1, 1), mono(1, 1)) == CycNum::one(), "(xy, xy) != 1");
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j)
                if (rep.gram.at(i, j) != rep.gram.at(j, i).conj()) {
                    c.fail("Gram matrix is not conjugate-symmetric");
                    i = j = 9;
                }
        c.note("(1, x^2 y^2) = " + rep.one_z[8].str());
        // pairing pattern: (x^r y^s, x^t y^u) != 0 iff t = r+2, u = s+2 mod 3
        bool pattern = true;
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                bool expect = (j / 3) == 2 - i / 3 && (j % 3) == 2 - i % 3;
                if (rep.gram.at(i, j).is_zero() == expect) pattern = false;
            }
        c.require(pattern, "nonvanishing pairs are not the antidiagonal partners");
        c.note("nonzero entries pair x^r y^s with x^{2-r} y^{2-s}");
    } catch (const std::exception& e) {
        c.fail(e.what());
    }
}

void c_gram_invariance(Ctx& c) {
    SweepReport rep = verify_gram_invariance();
    for (const auto& f : rep.failures) c.fail(f);
}

void c_gram_alt(Ctx& c) {
    AltInvarianceReport rep = check_alt_invariance();
    c.require(rep.alt_dim == 0,
              "alternative invariance admits " + std::to_string(rep.alt_dim) + " dims of solutions");
    c.require(rep.unstarred_dim >= 1, "dropping the alternative condition leaves no solutions");
    c.require(rep.normalization_inconsistent, "alternative condition plus (xy,xy)=1 is not inconsistent");
    c.note("solution dim with star-then-antipode = " + std::to_string(rep.alt_dim) +
           ", with antipode-then-star = " + std::to_string(rep.unstarred_dim));
}

void c_hermitian(Ctx& c) {
    HermitianReport rep = hermitian_oneforms();
    for (const auto& f : rep.failures) c.fail(f);
    if (rep.all_hermitian && rep.spans_real_oneforms)
        c.note("18 generator forms, all hermitian; real span is the full 36-dim space");
}

XiElt rnd_xi(std::mt19937& rng) {
    XiElt u;
    for (int t = 0; t < 5; ++t) {
        int slot = rng() % 36;
        ExtForm e;
        ExtForm::Subset sub;
        int deg = rng() % 3;
        while (int(sub.size()) < deg) sub.push_back(rng() % xi_vars);
        Poly p = Poly::constant(CycNum(int(rng() % 5) - 2, int(rng() % 5) - 2));
        for (int kk = 0; kk < int(rng() % 3); ++kk) p = p * Poly::variable(rng() % xi_vars);
        e.add_term(sub, p);
        u.slot(slot) += e;
    }
    return u;
}

void c_xi_d(Ctx& c) {
    std::mt19937 rng(20240903);
    for (int t = 0; t < 50 && c.fail_count < 5; ++t) {
        XiElt u = rnd_xi(rng), v = rnd_xi(rng);
        if (!xi_d(xi_d(u)).is_zero()) c.fail("d^2 != 0 at trial " + std::to_string(t));
        for (int g = 0; g <= xi_vars + 2; ++g) {
            XiElt ug = u.component(g);
            if (ug.is_zero()) continue;
            XiElt lhs = xi_d(xi_mul(ug, v));
            XiElt rhs = xi_mul(xi_d(ug), v) +
                        xi_mul(ug, xi_d(v)).scaled(g % 2 ? -CycNum::one() : CycNum::one());
            if (lhs != rhs) c.fail("graded Leibniz fails at trial " + std::to_string(t));
        }
    }
}

void c_xi_mul(Ctx& c) {
    std::mt19937 rng(20240904);
    for (int t = 0; t < 40 && c.fail_count < 5; ++t) {
        XiElt u = rnd_xi(rng), v = rnd_xi(rng), w = rnd_xi(rng);
        if (xi_mul(xi_mul(u, v), w) != xi_mul(u, xi_mul(v, w)))
            c.fail("associativity fails at trial " + std::to_string(t));
        XiElt uh = u.component(rng() % 4), vh = v.component(rng() % 4);
        if (!uh.is_zero() && !vh.is_zero()) {
            XiElt p = xi_mul(uh, vh);
            if (!p.is_zero() && (!p.is_homogeneous() || p.grade() != uh.grade() + vh.grade()))
                c.fail("grade additivity fails at trial " + std::to_string(t));
        }
    }
    XiElt d0 = XiElt::from_ext(ExtForm::dt(0)), d1 = XiElt::from_ext(ExtForm::dt(1));
    c.require(xi_mul(d0, d1) == xi_mul(d1, d0).scaled(-CycNum::one()), "dt0 dt1 do not anticommute");
    XiElt wdx = XiElt::from_wz(WZForm::dx());
    c.require(xi_mul(d0, wdx) == xi_mul(wdx, d0).scaled(-CycNum::one()),
              "graded tensor sign is wrong");
}

void c_xi_pack(Ctx& c) {
    std::mt19937 rng(20240905);
    for (int t = 0; t < 25; ++t) {
        XiOneForm tri;
        for (int mu = 0; mu < xi_vars; ++mu) tri.a_mu[mu] = rnd_plane(rng);
        tri.phi_x = rnd_plane(rng);
        tri.phi_y = rnd_plane(rng);
        XiElt packed = pack_oneform(tri);
        if (!packed.is_zero() && packed.grade() != 1) c.fail("packed triplet has wrong grade");
        if (unpack_oneform(packed) != tri) c.fail("round trip fails at trial " + std::to_string(t));
    }
    bool threw = false;
    try {
        unpack_oneform(XiElt::from_wz(WZForm::dxdy()));
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    c.require(threw, "unpack accepts grade-2 input");
    c.note("Xi^1 triplet slots: " + std::to_string(xi_vars * 9 + 2 * 9));
}

void c_xi_blocks(Ctx& c) {
    std::mt19937 rng(20240906);
    for (int t = 0; t < 25; ++t) {
        XiElt u = rnd_xi(rng).component(2);
        Xi2Blocks b = xi2_blocks(u);
        if (b.lambda2_omega0 + b.lambda1_omega1 + b.lambda0_omega2 != u)
            c.fail("blocks do not sum back at trial " + std::to_string(t));
        for (int i = 0; i < 36; ++i) {
            if (XiElt::wz_degree(i) != 0 && !b.lambda2_omega0.slot(i).is_zero())
                c.fail("Lambda^2 block leaks WZ degree");
            if (XiElt::wz_degree(i) != 2 && !b.lambda0_omega2.slot(i).is_zero())
                c.fail("Omega^2 block leaks WZ degree");
        }
    }
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = {
        {"hopf", "hopf-axioms-F", [](Ctx& c) { c_hopf_axioms(c, algebra_F()); }},
        {"hopf", "hopf-axioms-H", [](Ctx& c) { c_hopf_axioms(c, algebra_H()); }},
        {"hopf", "pairing-generators", c_pairing_generators},
        {"hopf", "pairing-duality", c_pairing_duality},
        {"hopf", "pairing-rank", c_pairing_rank},
        {"hopf", "confluence-F-words",
         [](Ctx& c) { c_word_confluence(c, F_word_system(), "abc"); }},
        {"hopf", "confluence-H-words",
         [](Ctx& c) { c_word_confluence(c, H_word_system(), "pmk"); }},
        {"action", "matrix-oracle", c_matrix_oracle},
        {"action", "action-table", c_action_table},
        {"action", "module-algebra-law", c_module_algebra},
        {"action", "coaction-multiplicative", c_coaction_multiplicative},
        {"action", "plane-decomposition", c_plane_decomposition},
        {"action", "reference-classification", c_reference_classification},
        {"wz", "wz-relations", c_wz_relations},
        {"wz", "wz-differential", c_wz_d},
        {"wz", "wz-leibniz-random", c_wz_leibniz},
        {"wz", "wz-associativity", c_wz_assoc},
        {"wz", "wz-confluence", c_wz_confluence},
        {"wz", "omega-tables", c_omega_tables},
        {"wz", "omega1-decomposition", c_omega1_decomposition},
        {"wz", "six-e-chain", c_six_e_chain},
        {"wz", "omega2-iso", c_omega2_iso},
        {"star", "star-involutions", c_star_involutions},
        {"star", "star-duality", c_star_duality},
        {"star", "action-star-M", c_action_star_M},
        {"star", "star-on-forms", c_star_on_forms},
        {"star", "action-star-Omega", c_action_star_Omega},
        {"star", "d-star-compatibility", c_d_star},
        {"gram", "gram-solve", c_gram_solve},
        {"gram", "gram-invariance", c_gram_invariance},
        {"gram", "gram-alt-invariance", c_gram_alt},
        {"gram", "hermitian-forms", c_hermitian},
        {"derham", "xi-differential", c_xi_d},
        {"derham", "xi-product", c_xi_mul},
        {"derham", "xi-oneform-triplet", c_xi_pack},
        {"derham", "xi2-blocks", c_xi_blocks},
    };
    return checks;
}

} // namespace

const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> suites = {"hopf", "action", "wz",
                                                    "star", "gram", "derham"};
    return suites;
}

std::vector<CheckResult> run_checks(const std::string& suite,
                                    void (*on_result)(const CheckResult&)) {
    bool all = suite == "all";
    if (!all) {
        bool known = false;
        for (const auto& s : check_suites()) known = known || s == suite;
        if (!known) throw std::invalid_argument("unknown suite: " + suite);
    }
    std::vector<CheckResult> out;
    for (const auto& ch : registry()) {
        if (!all && suite != ch.suite) continue;
        Ctx ctx;
        auto t0 = std::chrono::steady_clock::now();
        ch.run(ctx);
        auto t1 = std::chrono::steady_clock::now();
        CheckResult r;
        r.suite = ch.suite;
        r.name = ch.name;
        r.pass = ctx.pass;
        r.detail = ctx.detail.str();
        r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// --- tables ----------------------------------------------------------------

std::string render_grid(const std::vector<std::vector<std::string>>& cells) {
    std::vector<size_t> width;
    for (const auto& row : cells)
        for (size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::ostringstream os;
    for (size_t r = 0; r < cells.size(); ++r) {
        for (size_t i = 0; i < cells[r].size(); ++i) {
            os << cells[r][i];
            if (i + 1 < cells[r].size())
                os << std::string(width[i] - cells[r][i].size(), ' ') << "  | ";
        }
        os << "\n";
        if (r == 0) {
            size_t total = 0;
            for (size_t w : width) total += w + 5;
            os << std::string(total > 5 ? total - 5 : total, '-') << "\n";
        }
    }
    return os.str();
}

std::vector<std::vector<std::string>> action_table_cells() {
    ActionTable t = action_table();
    std::vector<std::vector<std::string>> cells = {{"z", "K", "X+", "X-"}};
    for (size_t i = 0; i < t.row_order.size(); ++i)
        cells.push_back({PlaneElt::basis_name(t.row_order[i]), t.K[i].str(), t.Xp[i].str(),
                         t.Xm[i].str()});
    return cells;
}

std::vector<std::vector<std::string>> omega_table_cells(const std::vector<OmegaTableRow>& rows) {
    std::vector<std::vector<std::string>> cells = {{"omega", "K", "X+", "X-"}};
    for (const auto& r : rows)
        cells.push_back({r.label, r.K.str(), r.Xp.str(), r.Xm.str()});
    return cells;
}

const std::vector<OmegaTableRow>& omega_table_by_name(const std::string& name) {
    static const OmegaTables t = omega_tables();
    if (name == "omega-3o2") return t.t3o2;
    if (name == "omega-3e2") return t.t3e2;
    return t.t3i2;
}

std::vector<std::vector<std::string>> pairing_cells() {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head = {"<h,f>"};
    for (int f = 0; f < 27; ++f) head.push_back(algebra_F().basis_names[f]);
    cells.push_back(std::move(head));
    for (int h = 0; h < 27; ++h) {
        std::vector<std::string> row = {algebra_H().basis_names[h]};
        for (int f = 0; f < 27; ++f) row.push_back(pair_basis(h, f).str());
        cells.push_back(std::move(row));
    }
    return cells;
}

std::vector<std::vector<std::string>> gram_cells() {
    GramReport rep = solve_invariant_gram();
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head = {"(u,v)"};
    for (int j = 0; j < 9; ++j) head.push_back(PlaneElt::basis_name(j));
    cells.push_back(std::move(head));
    for (int i = 0; i < 9; ++i) {
        std::vector<std::string> row = {PlaneElt::basis_name(i)};
        for (int j = 0; j < 9; ++j) row.push_back(rep.gram.at(i, j).str());
        cells.push_back(std::move(row));
    }
    return cells;
}

std::vector<std::vector<std::string>> table_cells(const std::string& name) {
    if (name == "action-4.2") return action_table_cells();
    if (name == "omega-3o2" || name == "omega-3e2" || name == "omega-3i2")
        return omega_table_cells(omega_table_by_name(name));
    if (name == "pairing") return pairing_cells();
    if (name == "gram") return gram_cells();
    throw std::invalid_argument("unknown table: " + name);
}

} // namespace

const std::vector<std::string>& table_names() {
    static const std::vector<std::string> names = {"action-4.2", "omega-3o2", "omega-3e2",
                                                   "omega-3i2",  "pairing",   "gram"};
    return names;
}

std::string render_table_text(const std::string& name) {
    std::string out = render_grid(table_cells(name));
    if (name == "pairing")
        out += "rank = " + std::to_string(pairing_rank()) + "\n";
    return out;
}

std::string render_table_json(const std::string& name) {
    auto cells = table_cells(name);
    json j;
    j["table"] = name;
    j["columns"] = cells[0];
    json rows = json::array();
    for (size_t r = 1; r < cells.size(); ++r) rows.push_back(cells[r]);
    j["rows"] = std::move(rows);
    if (name == "pairing") j["rank"] = pairing_rank();
    return j.dump(2) + "\n";
}

namespace {

void diagram_for(std::ostream& os, const HModule& amb, const std::vector<CycVec>& basis,
                 const std::vector<std::string>& names) {
    // text arrows: solid -> for X+, dashed ..> for X-
    for (size_t i = 0; i < basis.size(); ++i) {
        auto render = [&](const CycVec& img) {
            auto co = coordinates_in(basis, img);
            if (!co) return std::string("(outside)");
            std::string s;
            for (size_t j = 0; j < co->size(); ++j) {
                if ((*co)[j].is_zero()) continue;
                if (!s.empty()) s += " + ";
                s += "(" + (*co)[j].str() + ") " + names[j];
            }
            return s.empty() ? std::string("0") : s;
        };
        os << "  " << names[i] << " --X+--> " << render(amb.Xp * basis[i]) << "\n";
        os << "  " << names[i] << " ..X-..> " << render(amb.Xm * basis[i]) << "\n";
    }
}

} // namespace

std::string markdown_report() {
    std::ostringstream os;
    os << "# Verification report: quantum symmetries of M3(C) at a cube root of unity\n\n";
    os << "All values below are computed exactly over Q(w), w = exp(2 pi i/3), q = w.\n\n";

    os << "## The reduced quantum plane\n\n";
    os << "M is generated by x, y with xy = q yx and x^3 = y^3 = 1; it is isomorphic to\n"
          "M_3(C) via x -> diag(1, q^-1, q^-2) and y -> the cyclic shift matrix.\n"
          "The product on the x^r y^s basis matches 3x3 matrix multiplication on all\n"
          "81 basis pairs.\n\n";

    os << "## The dual Hopf algebras\n\n";
    os << "F (a quotient of Fun(SL_q(2)) with a^3 = 1, b^3 = c^3 = 0) and H (a quotient\n"
          "of U_q(sl2) with K^3 = 1, Xp^3 = Xm^3 = 0) both pass every Hopf-algebra axiom\n"
          "on their full 27-element bases.\n\n";
    os << "Duality pairing rank: " << pairing_rank()
       << " (the pairing is nondegenerate).\n\n";

    os << "## Action of H on M\n\n";
    os << "```\n" << render_table_text("action-4.2") << "```\n\n";
    os << "M decomposes as 3_i + 3_e + 3_o:\n\n";
    {
        auto pv = [](std::initializer_list<int> ix) {
            std::vector<CycVec> out;
            for (int i : ix) {
                CycVec v(9);
                v[i] = CycNum::one();
                out.push_back(std::move(v));
            }
            return out;
        };
        os << "```\n3_i:\n";
        diagram_for(os, plane_module(), pv({6, 4, 2}), {"x^2", "x*y", "y^2"});
        os << "3_e:\n";
        diagram_for(os, plane_module(), pv({3, 1, 8}), {"x", "y", "x^2*y^2"});
        os << "3_o:\n";
        diagram_for(os, plane_module(), pv({7, 0, 5}), {"x^2*y", "1", "x*y^2"});
        os << "```\n\n";
        os << "Computed parameters of the plane summands: lambda(3_e) = "
           << classify(reference_modules().at("3_e")).lambda->str() << ", lambda(3_o) = "
           << classify(reference_modules().at("3_o")).lambda->str()
           << " (extraction convention chosen here).\n\n";
    }

    os << "## One-forms\n\n";
    for (const auto& name : {"omega-3o2", "omega-3e2", "omega-3i2"})
        os << "### " << name << "\n\n```\n" << render_table_text(name) << "```\n\n";
    {
        DecompReport rep = verify_decomposition(omega1_module(), omega1_decomp_parts());
        os << "Omega^1 decomposes as";
        for (size_t i = 0; i < rep.labels.size(); ++i)
            os << (i ? " + " : " ") << rep.labels[i].str();
        os << " (all parts verified: " << (rep.pass ? "pass" : "FAIL") << ").\n\n";
        auto parts = omega1_decomp_parts();
        static const char* part_titles[] = {"3_i in 3_o(x)2", "3_e in 3_o(x)2",
                                            "3_i in 3_e(x)2", "3_o in 3_e(x)2",
                                            "6_e = 3_i(x)2"};
        os << "```\n";
        for (size_t p = 0; p < parts.size(); ++p) {
            os << part_titles[p] << ":\n";
            std::vector<std::string> names;
            for (size_t i = 0; i < parts[p].basis.size(); ++i)
                names.push_back("v" + std::to_string(i + 1));
            diagram_for(os, omega1_module(), parts[p].basis, names);
        }
        os << "```\n\n";
    }
    os << "Omega^2 = M dx dy with dx dy invariant, so it decomposes exactly like M.\n\n";

    os << "## Stars\n\n";
    os << "a* = a, b* = b, c* = c, d* = d on F; K* = K, Xp* = -q^-1 Xp, Xm* = -q Xm on H;\n"
          "x* = x, y* = y on M (alpha = 1). The unique grade-preserving star on forms\n"
          "compatible with the action is dx* = dx, dy* = dy, and d(omega*) = (-1)^p\n"
          "(d omega)* holds on every basis form.\n\n";

    os << "## Invariant scalar product\n\n";
    {
        GramReport rep = solve_invariant_gram();
        os << "The star-representation conditions leave a one-dimensional solution space;\n"
              "(xy, xy) = 1 fixes it. (1, x^r y^s) = 0 except (1, x^2 y^2) = "
           << rep.one_z[8].str()
           << ".\nNonzero entries pair x^r y^s with x^{2-r} y^{2-s}.\n\n";
        os << "```\n" << render_table_text("gram") << "```\n\n";
    }
    {
        AltInvarianceReport rep = check_alt_invariance();
        os << "Requiring invariance with star applied before the antipode admits only the\n"
              "zero product (solution dimension "
           << rep.alt_dim << "; the antipode-then-star form leaves " << rep.unstarred_dim
           << ").\n\n";
    }

    os << "## Hermitian one-forms\n\n";
    {
        HermitianReport rep = hermitian_oneforms();
        for (const auto& fam : rep.families) {
            os << "- " << fam.name << ":";
            for (size_t i = 0; i < fam.generators.size(); ++i)
                os << (i ? " , " : " ") << fam.generators[i].str();
            os << "\n";
        }
        os << "\nAll " << 18 << " generator forms satisfy omega* = omega ("
           << (rep.all_hermitian ? "pass" : "FAIL")
           << "); together with their imaginary multiples they span the real 36-dimensional\n"
              "space of one-forms ("
           << (rep.spans_real_oneforms ? "pass" : "FAIL") << ").\n\n";
    }

    os << "## Pairing table\n\n```\n" << render_table_text("pairing") << "```\n\n";

    os << "## Graded tensor complex\n\n";
    os << "Xi = Lambda (x) Omega_WZ over " << xi_vars
       << " formal coordinates carries d = d (x) id + (-1)^deg id (x) d (the sign is the\n"
          "unique choice with d^2 = 0); grade-1 elements are triplets {a_mu, phi_x, phi_y}\n"
          "with "
       << xi_vars * 9 + 2 * 9
       << " scalar slots, and grade-2 elements split into the three blocks\n"
          "Lambda^2(x)Omega^0, Lambda^1(x)Omega^1, Lambda^0(x)Omega^2.\n";
    return os.str();
}

} // namespace qpc
