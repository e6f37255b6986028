#include "qpc/hopf.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qpc {

void tensor_add(TensorElt& t, int i, int j, const CycNum& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

CycVec HopfData::basis_vec(int i) const {
    CycVec v(dim);
    v[i] = CycNum::one();
    return v;
}

CycVec HopfData::multiply(const CycVec& u, const CycVec& v) const {
    CycVec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (v[j].is_zero()) continue;
            CycNum f = u[i] * v[j];
            for (const auto& [k, c] : mul[i * dim + j]) out[k] += f * c;
        }
    }
    return out;
}

CycVec HopfData::antipode_of(const CycVec& u) const {
    CycVec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (u[i].is_zero()) continue;
        for (int k = 0; k < dim; ++k) out[k] += u[i] * antipode[i][k];
    }
    return out;
}

CycNum HopfData::counit_of(const CycVec& u) const {
    CycNum out;
    for (int i = 0; i < dim; ++i) out += u[i] * counit[i];
    return out;
}

TensorElt HopfData::coproduct_of(const CycVec& u) const {
    TensorElt out;
    for (int i = 0; i < dim; ++i) {
        if (u[i].is_zero()) continue;
        for (const auto& [key, c] : coproduct[i]) tensor_add(out, key.first, key.second, u[i] * c);
    }
    return out;
}

TensorElt HopfData::tensor_multiply(const TensorElt& a, const TensorElt& b) const {
    TensorElt out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            CycNum f = ca * cb;
            for (const auto& [l1, c1] : mul[ka.first * dim + kb.first])
                for (const auto& [l2, c2] : mul[ka.second * dim + kb.second])
                    tensor_add(out, l1, l2, f * c1 * c2);
        }
    return out;
}

namespace {

const CycNum kQ = CycNum::q();

std::string exp_word(char l1, int e1, char l2, int e2, char l3, int e3) {
    std::string w;
    w.append(e1, l1);
    w.append(e2, l2);
    w.append(e3, l3);
    return w;
}

// Converts a reduced word element to a dense basis vector.
CycVec word_to_vec(const rewrite::WordElt& e, const std::array<char, 3>& letters) {
    CycVec v(HopfData::dim);
    for (const auto& [w, c] : e) {
        int cnt[3] = {0, 0, 0};
        size_t seen = 0;
        for (int l = 0; l < 3; ++l) {
            while (seen < w.size() && w[seen] == letters[l]) {
                ++cnt[l];
                ++seen;
            }
        }
        if (seen != w.size() || cnt[0] > 2 || cnt[1] > 2 || cnt[2] > 2)
            throw std::runtime_error("hopf: word not in normal form: '" + w + "'");
        v[hopf_index(cnt[0], cnt[1], cnt[2])] += c;
    }
    return v;
}

struct GeneratorMaps {
    // Coproduct of each generator letter as (left word, right word, coeff).
    std::map<char, std::vector<std::tuple<std::string, std::string, CycNum>>> coproduct;
    // Antipode of each generator letter as a word element.
    std::map<char, rewrite::WordElt> antipode;
    std::map<char, CycNum> counit;
};

HopfData build_algebra(const std::string& name, const std::array<char, 3>& letters,
                       const rewrite::System& sys, const GeneratorMaps& gm,
                       const std::vector<std::string>& basis_names) {
    HopfData hd;
    hd.name = name;
    hd.basis_names = basis_names;
    hd.unit_index = hopf_index(0, 0, 0);

    auto word_of = [&](int idx) {
        return exp_word(letters[0], idx / 9, letters[1], (idx / 3) % 3, letters[2], idx % 3);
    };

    // Multiplication: concatenate basis words and rewrite to normal form.
    hd.mul.resize(HopfData::dim * HopfData::dim);
    for (int i = 0; i < HopfData::dim; ++i)
        for (int j = 0; j < HopfData::dim; ++j) {
            CycVec v = word_to_vec(sys.reduce_word(word_of(i) + word_of(j)), letters);
            for (int k = 0; k < HopfData::dim; ++k)
                if (!v[k].is_zero()) hd.mul[i * HopfData::dim + j].emplace_back(k, v[k]);
        }

    // Counit: multiplicative on letters.
    hd.counit.resize(HopfData::dim);
    for (int i = 0; i < HopfData::dim; ++i) {
        CycNum c = CycNum::one();
        for (char l : word_of(i)) c *= gm.counit.at(l);
        hd.counit[i] = c;
    }

    // Coproduct: homomorphic extension, products taken in A tensor A.
    auto letter_coproduct = [&](char l) {
        TensorElt t;
        for (const auto& [wl, wr, c] : gm.coproduct.at(l)) {
            CycVec vl = word_to_vec(sys.reduce_word(wl), letters);
            CycVec vr = word_to_vec(sys.reduce_word(wr), letters);
            for (int ia = 0; ia < HopfData::dim; ++ia)
                for (int ib = 0; ib < HopfData::dim; ++ib)
                    tensor_add(t, ia, ib, c * vl[ia] * vr[ib]);
        }
        return t;
    };
    hd.coproduct.resize(HopfData::dim);
    for (int i = 0; i < HopfData::dim; ++i) {
        TensorElt t;
        tensor_add(t, hd.unit_index, hd.unit_index, CycNum::one());
        for (char l : word_of(i)) t = hd.tensor_multiply(t, letter_coproduct(l));
        hd.coproduct[i] = std::move(t);
    }

    // Antipode: antihomomorphic extension, S(l1 l2 ... ln) = S(ln)...S(l1).
    hd.antipode.resize(HopfData::dim);
    for (int i = 0; i < HopfData::dim; ++i) {
        std::string w = word_of(i);
        CycVec acc = hd.unit_vec();
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            acc = hd.multiply(acc, word_to_vec(sys.reduce(gm.antipode.at(*it)), letters));
        hd.antipode[i] = std::move(acc);
    }
    return hd;
}

std::vector<std::string> make_basis_names(const std::string& g1, const std::string& g2,
                                          const std::string& g3) {
    auto pow_name = [](const std::string& g, int e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return g;
        return g + "^" + std::to_string(e);
    };
    std::vector<std::string> names(HopfData::dim);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                std::string n;
                for (const std::string& part :
                     {pow_name(g1, i), pow_name(g2, j), pow_name(g3, k)}) {
                    if (part.empty()) continue;
                    if (!n.empty()) n += "*";
                    n += part;
                }
                names[hopf_index(i, j, k)] = n.empty() ? "1" : n;
            }
    return names;
}

rewrite::WordElt word_elt(std::initializer_list<std::pair<std::string, CycNum>> terms) {
    rewrite::WordElt e;
    for (const auto& [w, c] : terms) e.emplace(w, c);
    return e;
}

} // namespace

rewrite::System F_word_system() {
    // Product relations of Fun(SL_q(2)) restricted to {a, b, c} (d eliminated),
    // plus the quotient a^3 = 1, b^3 = c^3 = 0.
    rewrite::System sys;
    sys.rules = {
        {"ba", {{"ab", CycNum::q_pow(-1)}}},
        {"ca", {{"ac", CycNum::q_pow(-1)}}},
        {"cb", {{"bc", CycNum::one()}}},
        {"aaa", {{"", CycNum::one()}}},
        {"bbb", {}},
        {"ccc", {}},
    };
    return sys;
}

rewrite::System H_word_system() {
    // p = Xp, m = Xm, k = K. Normal order Xp^i Xm^j K^k.
    // Xm Xp = Xp Xm - (K - K^2)/(q - q^2), from [Xp, Xm] = (K - K^-1)/(q - q^-1).
    CycNum inv_qdiff = (kQ - kQ * kQ).inv();
    rewrite::System sys;
    sys.rules = {
        {"kp", {{"pk", kQ * kQ}}},
        {"km", {{"mk", kQ}}},
        {"mp", {{"pm", CycNum::one()}, {"k", -inv_qdiff}, {"kk", inv_qdiff}}},
        {"ppp", {}},
        {"mmm", {}},
        {"kkk", {{"", CycNum::one()}}},
    };
    return sys;
}

CycVec F_d_element() {
    // From the q-determinant relation ad - q bc = 1 and a^3 = 1:
    // d = a^2 (1 + q b c) = a^2 + q a^2 b c.
    CycVec v(HopfData::dim);
    v[hopf_index(2, 0, 0)] = CycNum::one();
    v[hopf_index(2, 1, 1)] = kQ;
    return v;
}

namespace {

GeneratorMaps F_generator_maps() {
    GeneratorMaps gm;
    // Coproducts involve d; substitute d = a^2 + q a^2 b c.
    gm.coproduct['a'] = {{"a", "a", CycNum::one()}, {"b", "c", CycNum::one()}};
    gm.coproduct['b'] = {{"a", "b", CycNum::one()},
                         {"b", "aa", CycNum::one()},
                         {"b", "aabc", kQ}};
    gm.coproduct['c'] = {{"c", "a", CycNum::one()},
                         {"aa", "c", CycNum::one()},
                         {"aabc", "c", kQ}};
    gm.antipode['a'] = word_elt({{"aa", CycNum::one()}, {"aabc", kQ}}); // S a = d
    gm.antipode['b'] = word_elt({{"b", -CycNum::q_pow(-1)}});
    gm.antipode['c'] = word_elt({{"c", -kQ}});
    gm.counit = {{'a', CycNum::one()}, {'b', CycNum::zero()}, {'c', CycNum::zero()}};
    return gm;
}

GeneratorMaps H_generator_maps() {
    GeneratorMaps gm;
    gm.coproduct['p'] = {{"p", "", CycNum::one()}, {"k", "p", CycNum::one()}};
    gm.coproduct['m'] = {{"m", "kk", CycNum::one()}, {"", "m", CycNum::one()}};
    gm.coproduct['k'] = {{"k", "k", CycNum::one()}};
    gm.antipode['p'] = word_elt({{"kkp", -CycNum::one()}}); // S Xp = -K^-1 Xp
    gm.antipode['m'] = word_elt({{"mk", -CycNum::one()}});  // S Xm = -Xm K
    gm.antipode['k'] = word_elt({{"kk", CycNum::one()}});   // S K = K^-1 = K^2
    gm.counit = {{'p', CycNum::zero()}, {'m', CycNum::zero()}, {'k', CycNum::one()}};
    return gm;
}

} // namespace

const HopfData& algebra_F() {
    static const HopfData hd = build_algebra("F", {'a', 'b', 'c'}, F_word_system(),
                                             F_generator_maps(), make_basis_names("a", "b", "c"));
    return hd;
}

const HopfData& algebra_H() {
    static const HopfData hd = build_algebra("H", {'p', 'm', 'k'}, H_word_system(),
                                             H_generator_maps(),
                                             make_basis_names("Xp", "Xm", "K"));
    return hd;
}

namespace {

// Pairing of an H word against an F basis monomial, by iterated coproducts.
// The generator table is <K,a> = q, <K,d> = q^-1, <Xp,b> = 1, <Xm,c> = 1 and
// zero otherwise; published versions of this pairing list "<X+,d> = 0" twice, the second
// occurrence is read as <Xm,d> = 0 (both values are forced to 0 here anyway
// because d never appears in the reduced basis words).
class PairingTable {
public:
    PairingTable() : F_(algebra_F()) {}

    CycNum pair(const std::string& hw, int f_idx) {
        auto key = std::make_pair(hw, f_idx);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        CycNum val = compute(hw, f_idx);
        memo_.emplace(key, val);
        return val;
    }

private:
    CycNum compute(const std::string& hw, int f_idx) {
        const std::string fw = f_word(f_idx);
        if (hw.empty()) return algebra_F().counit[f_idx]; // <1, f> = eps(f)
        if (fw.empty()) {                                  // <h, 1> = eps(h)
            for (char l : hw)
                if (l != 'k') return CycNum::zero();
            return CycNum::one();
        }
        if (hw.size() == 1) {
            if (fw.size() == 1) return generator_pair(hw[0], fw[0]);
            // <g, f1 f2...> = sum <g1, f1><g2, f2...> over the coproduct of g.
            int head = f_letter_index(fw[0]);
            int tail = f_idx_of_word(fw.substr(1));
            CycNum acc;
            for (const auto& [g1, g2, c] : h_gen_coproduct(hw[0]))
                acc += c * pair(g1, head) * pair(g2, tail);
            return acc;
        }
        // <g w', f> = sum <g, f(1)> <w', f(2)>.
        std::string head(1, hw[0]);
        std::string rest = hw.substr(1);
        CycNum acc;
        for (const auto& [key, c] : F_.coproduct[f_idx])
            acc += c * pair(head, key.first) * pair(rest, key.second);
        return acc;
    }

    static CycNum generator_pair(char h, char f) {
        if (h == 'k' && f == 'a') return kQ;
        if (h == 'p' && f == 'b') return CycNum::one();
        if (h == 'm' && f == 'c') return CycNum::one();
        return CycNum::zero();
    }

    static std::vector<std::tuple<std::string, std::string, CycNum>> h_gen_coproduct(char g) {
        switch (g) {
            case 'k': return {{"k", "k", CycNum::one()}};
            case 'p': return {{"p", "", CycNum::one()}, {"k", "p", CycNum::one()}};
            default: return {{"m", "kk", CycNum::one()}, {"", "m", CycNum::one()}};
        }
    }

    static std::string f_word(int idx) {
        return exp_word('a', idx / 9, 'b', (idx / 3) % 3, 'c', idx % 3);
    }
    static int f_letter_index(char l) {
        return l == 'a' ? gen::F_a : (l == 'b' ? gen::F_b : gen::F_c);
    }
    static int f_idx_of_word(const std::string& w) {
        int cnt[3] = {0, 0, 0};
        for (char l : w) ++cnt[l == 'a' ? 0 : (l == 'b' ? 1 : 2)];
        return hopf_index(cnt[0], cnt[1], cnt[2]);
    }

    const HopfData& F_;
    std::map<std::pair<std::string, int>, CycNum> memo_;
};

} // namespace

const CycMatrix& pairing_matrix() {
    static const CycMatrix gram = [] {
        PairingTable pt;
        CycMatrix m(HopfData::dim, HopfData::dim);
        for (int h = 0; h < HopfData::dim; ++h) {
            std::string hw = exp_word('p', h / 9, 'm', (h / 3) % 3, 'k', h % 3);
            for (int f = 0; f < HopfData::dim; ++f) m.at(h, f) = pt.pair(hw, f);
        }
        return m;
    }();
    return gram;
}

size_t pairing_rank() {
    static const size_t r = pairing_matrix().rank();
    return r;
}

CycNum pair_basis(int h, int f) { return pairing_matrix().at(h, f); }

CycNum pair_elts(const CycVec& h, const CycVec& f) {
    const CycMatrix& g = pairing_matrix();
    CycNum acc;
    for (int i = 0; i < HopfData::dim; ++i) {
        if (h[i].is_zero()) continue;
        for (int j = 0; j < HopfData::dim; ++j)
            if (!f[j].is_zero()) acc += h[i] * f[j] * g.at(i, j);
    }
    return acc;
}

bool HopfReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string idx_pair(const HopfData& hd, int i, int j) {
    return hd.basis_names[i] + ", " + hd.basis_names[j];
}

using TripleElt = std::map<std::tuple<int, int, int>, CycNum>;

void triple_add(TripleElt& t, int a, int b, int c, const CycNum& v) {
    if (v.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

} // namespace

HopfReport verify_hopf(const HopfData& hd) {
    const int n = HopfData::dim;
    HopfReport rep;
    rep.algebra = hd.name;

    auto record = [&](const std::string& axiom, bool pass, const std::string& cex) {
        rep.checks.push_back({axiom, pass, pass ? "" : cex});
    };

    // Associativity on all basis triples.
    {
        bool pass = true;
        std::string cex;
        for (int i = 0; i < n && pass; ++i)
            for (int j = 0; j < n && pass; ++j) {
                const auto& pij = hd.mul[i * n + j];
                for (int l = 0; l < n && pass; ++l) {
                    CycVec lhs(n), rhs(n);
                    for (const auto& [m, c] : pij)
                        for (const auto& [k, c2] : hd.mul[m * n + l]) lhs[k] += c * c2;
                    for (const auto& [m, c] : hd.mul[j * n + l])
                        for (const auto& [k, c2] : hd.mul[i * n + m]) rhs[k] += c * c2;
                    if (lhs != rhs) {
                        pass = false;
                        cex = idx_pair(hd, i, j) + ", " + hd.basis_names[l];
                    }
                }
            }
        record("associativity", pass, cex);
    }

    // Unit element.
    {
        bool pass = true;
        std::string cex;
        for (int i = 0; i < n && pass; ++i) {
            if (hd.multiply(hd.unit_vec(), hd.basis_vec(i)) != hd.basis_vec(i) ||
                hd.multiply(hd.basis_vec(i), hd.unit_vec()) != hd.basis_vec(i)) {
                pass = false;
                cex = hd.basis_names[i];
            }
        }
        record("unit", pass, cex);
    }

    // Coassociativity on all basis elements.
    {
        bool pass = true;
        std::string cex;
        for (int i = 0; i < n && pass; ++i) {
            TripleElt lhs, rhs;
            for (const auto& [key, c] : hd.coproduct[i]) {
                for (const auto& [k2, c2] : hd.coproduct[key.first])
                    triple_add(lhs, k2.first, k2.second, key.second, c * c2);
                for (const auto& [k2, c2] : hd.coproduct[key.second])
                    triple_add(rhs, key.first, k2.first, k2.second, c * c2);
            }
            if (lhs != rhs) {
                pass = false;
                cex = hd.basis_names[i];
            }
        }
        record("coassociativity", pass, cex);
    }

    // Counit laws (eps x id) o Delta = id = (id x eps) o Delta.
    {
        bool pass = true;
        std::string cex;
        for (int i = 0; i < n && pass; ++i) {
            CycVec left(n), right(n);
            for (const auto& [key, c] : hd.coproduct[i]) {
                left[key.second] += c * hd.counit[key.first];
                right[key.first] += c * hd.counit[key.second];
            }
            if (left != hd.basis_vec(i) || right != hd.basis_vec(i)) {
                pass = false;
                cex = hd.basis_names[i];
            }
        }
        record("counit laws", pass, cex);
    }

    // Antipode laws m(S x id)Delta = unit * eps = m(id x S)Delta.
    {
        bool pass = true;
        std::string cex;
        for (int i = 0; i < n && pass; ++i) {
            CycVec left(n), right(n);
            for (const auto& [key, c] : hd.coproduct[i]) {
                CycVec l = hd.multiply(hd.antipode[key.first], hd.basis_vec(key.second));
                CycVec r = hd.multiply(hd.basis_vec(key.first), hd.antipode[key.second]);
                for (int k = 0; k < n; ++k) {
                    left[k] += c * l[k];
                    right[k] += c * r[k];
                }
            }
            CycVec expect(n);
            expect[hd.unit_index] = hd.counit[i];
            if (left != expect || right != expect) {
                pass = false;
                cex = hd.basis_names[i];
            }
        }
        record("antipode laws", pass, cex);
    }

    // Coproduct is an algebra homomorphism on all basis pairs.
    {
        bool pass = true;
        std::string cex;
        for (int i = 0; i < n && pass; ++i)
            for (int j = 0; j < n && pass; ++j) {
                TensorElt lhs = hd.coproduct_of(hd.multiply(hd.basis_vec(i), hd.basis_vec(j)));
                TensorElt rhs = hd.tensor_multiply(hd.coproduct[i], hd.coproduct[j]);
                if (lhs != rhs) {
                    pass = false;
                    cex = idx_pair(hd, i, j);
                }
            }
        record("coproduct homomorphism", pass, cex);
    }

    // Counit is an algebra homomorphism.
    {
        bool pass = true;
        std::string cex;
        for (int i = 0; i < n && pass; ++i)
            for (int j = 0; j < n && pass; ++j) {
                if (hd.counit_of(hd.multiply(hd.basis_vec(i), hd.basis_vec(j))) !=
                    hd.counit[i] * hd.counit[j]) {
                    pass = false;
                    cex = idx_pair(hd, i, j);
                }
            }
        record("counit homomorphism", pass, cex);
    }

    // Antipode is an algebra antihomomorphism.
    {
        bool pass = true;
        std::string cex;
        for (int i = 0; i < n && pass; ++i)
            for (int j = 0; j < n && pass; ++j) {
                CycVec lhs = hd.antipode_of(hd.multiply(hd.basis_vec(i), hd.basis_vec(j)));
                CycVec rhs = hd.multiply(hd.antipode[j], hd.antipode[i]);
                if (lhs != rhs) {
                    pass = false;
                    cex = idx_pair(hd, i, j);
                }
            }
        record("antipode antihomomorphism", pass, cex);
    }

    return rep;
}

} // namespace qpc
