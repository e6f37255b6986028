#include "qpc/repr.hpp"

#include <cassert>
#include <sstream>

namespace qpc {

namespace {

const CycNum kQ = CycNum::q();

void mf_add(MFTensor& t, int m, int f, const CycNum& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(m, f);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

MFTensor mf_from(std::initializer_list<std::tuple<PlaneElt, CycVec>> terms) {
    MFTensor t;
    for (const auto& [m, f] : terms)
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < HopfData::dim; ++j) mf_add(t, i, j, m[i] * f[j]);
    return t;
}

} // namespace

MFTensor mf_mul(const MFTensor& u, const MFTensor& v) {
    const HopfData& F = algebra_F();
    MFTensor out;
    for (const auto& [ku, cu] : u)
        for (const auto& [kv, cv] : v) {
            int r = ku.first / 3, s = ku.first % 3;
            int t = kv.first / 3, w = kv.first % 3;
            CycNum pc = CycNum::q_pow(-s * t);
            int pidx = PlaneElt::index(r + t, s + w);
            CycNum f = cu * cv * pc;
            for (const auto& [fk, fc] : F.mul[ku.second * HopfData::dim + kv.second])
                mf_add(out, pidx, fk, f * fc);
        }
    return out;
}

MFTensor coact_right(const PlaneElt& z) {
    const HopfData& F = algebra_F();
    // delta_R(x) = x (x) a + y (x) c,  delta_R(y) = x (x) b + y (x) d.
    static const MFTensor dx = mf_from({{PlaneElt::x(), algebra_F().basis_vec(gen::F_a)},
                                        {PlaneElt::y(), algebra_F().basis_vec(gen::F_c)}});
    static const MFTensor dy = mf_from({{PlaneElt::x(), algebra_F().basis_vec(gen::F_b)},
                                        {PlaneElt::y(), F_d_element()}});
    MFTensor out;
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
            const CycNum& c = z.coeff(r, s);
            if (c.is_zero()) continue;
            MFTensor acc;
            mf_add(acc, 0, F.unit_index, CycNum::one());
            for (int i = 0; i < r; ++i) acc = mf_mul(acc, dx);
            for (int i = 0; i < s; ++i) acc = mf_mul(acc, dy);
            for (const auto& [k, v] : acc) mf_add(out, k.first, k.second, c * v);
        }
    return out;
}

MFTensor coact_left(const PlaneElt& z) {
    const HopfData& F = algebra_F();
    // delta_L(x) = a (x) x + b (x) y, stored with the plane factor first.
    static const MFTensor dx = mf_from({{PlaneElt::x(), algebra_F().basis_vec(gen::F_a)},
                                        {PlaneElt::y(), algebra_F().basis_vec(gen::F_b)}});
    static const MFTensor dy = mf_from({{PlaneElt::x(), algebra_F().basis_vec(gen::F_c)},
                                        {PlaneElt::y(), F_d_element()}});
    MFTensor out;
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
            const CycNum& c = z.coeff(r, s);
            if (c.is_zero()) continue;
            MFTensor acc;
            mf_add(acc, 0, F.unit_index, CycNum::one());
            for (int i = 0; i < r; ++i) acc = mf_mul(acc, dx);
            for (int i = 0; i < s; ++i) acc = mf_mul(acc, dy);
            for (const auto& [k, v] : acc) mf_add(out, k.first, k.second, c * v);
        }
    return out;
}

const CycMatrix& plane_action_matrix(int h_basis) {
    static const std::vector<CycMatrix> table = [] {
        std::vector<CycMatrix> t(HopfData::dim, CycMatrix(9, 9));
        for (int z = 0; z < 9; ++z) {
            MFTensor co = coact_right(PlaneElt::from_vec([&] {
                CycVec v(9);
                v[z] = CycNum::one();
                return v;
            }()));
            for (const auto& [key, c] : co)
                for (int h = 0; h < HopfData::dim; ++h) {
                    CycNum p = pair_basis(h, key.second);
                    if (!p.is_zero()) t[h].at(key.first, z) += c * p;
                }
        }
        return t;
    }();
    return table[h_basis];
}

PlaneElt act(const CycVec& h, const PlaneElt& z) {
    CycVec out(9);
    CycVec zv = z.to_vec();
    for (int i = 0; i < HopfData::dim; ++i) {
        if (h[i].is_zero()) continue;
        CycVec img = plane_action_matrix(i) * zv;
        for (int k = 0; k < 9; ++k) out[k] += h[i] * img[k];
    }
    return PlaneElt::from_vec(out);
}

ActionTable action_table() {
    ActionTable t;
    t.row_order = {6, 4, 2, 3, 1, 8, 7, 5, 0}; // x^2, xy, y^2, x, y, x^2y^2, x^2y, xy^2, 1
    const auto& H = algebra_H();
    for (int r : t.row_order) {
        PlaneElt z;
        z[r] = CycNum::one();
        t.K.push_back(act(H.basis_vec(gen::H_K), z));
        t.Xp.push_back(act(H.basis_vec(gen::H_Xp), z));
        t.Xm.push_back(act(H.basis_vec(gen::H_Xm), z));
    }
    return t;
}

CycMatrix HModule::generator(int which) const {
    switch (which) {
        case 0: return K;
        case 1: return Xp;
        default: return Xm;
    }
}

CycMatrix HModule::action_of(const CycVec& h) const {
    CycMatrix out(dim, dim);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const CycNum& c = h[hopf_index(i, j, k)];
                if (c.is_zero()) continue;
                CycMatrix m = Xp.pow(i) * Xm.pow(j) * K.pow(k);
                out = out + m.scaled(c);
            }
    return out;
}

void HModule::check_relations() const {
    CycMatrix id = CycMatrix::identity(dim);
    CycMatrix zero(dim, dim);
    if (K.pow(3) != id) throw std::invalid_argument("HModule: K^3 != 1");
    if (Xp.pow(3) != zero) throw std::invalid_argument("HModule: Xp^3 != 0");
    if (Xm.pow(3) != zero) throw std::invalid_argument("HModule: Xm^3 != 0");
    if (K * Xp != (Xp * K).scaled(kQ * kQ))
        throw std::invalid_argument("HModule: K Xp != q^2 Xp K");
    if (K * Xm != (Xm * K).scaled(CycNum::q_pow(-2)))
        throw std::invalid_argument("HModule: K Xm != q^-2 Xm K");
    CycMatrix comm = Xp * Xm - Xm * Xp;
    CycMatrix expect = (K - K.pow(2)).scaled((kQ - kQ * kQ).inv());
    if (comm != expect) throw std::invalid_argument("HModule: commutator relation fails");
}

const HModule& plane_module() {
    static const HModule m = [] {
        HModule mod;
        mod.dim = 9;
        mod.K = plane_action_matrix(gen::H_K);
        mod.Xp = plane_action_matrix(gen::H_Xp);
        mod.Xm = plane_action_matrix(gen::H_Xm);
        for (int i = 0; i < 9; ++i) mod.basis_labels.push_back(PlaneElt::basis_name(i));
        mod.check_relations();
        return mod;
    }();
    return m;
}

HModule module_from_action(const std::vector<CycVec>& basis, const HModule& ambient,
                           std::vector<std::string> labels) {
    const char* names[3] = {"K", "Xp", "Xm"};
    HModule out;
    out.dim = basis.size();
    if (span_rank(basis) != basis.size())
        throw std::invalid_argument("module_from_action: basis vectors are dependent");
    CycMatrix mats[3];
    for (int g = 0; g < 3; ++g) {
        CycMatrix gm = ambient.generator(g);
        CycMatrix restricted(out.dim, out.dim);
        for (size_t j = 0; j < basis.size(); ++j) {
            CycVec img = gm * basis[j];
            auto coords = coordinates_in(basis, img);
            if (!coords)
                throw NonInvariantError(std::string("module_from_action: image of basis vector ") +
                                        std::to_string(j) + " under " + names[g] +
                                        " leaves the span");
            for (size_t i = 0; i < basis.size(); ++i) restricted.at(i, j) = (*coords)[i];
        }
        mats[g] = std::move(restricted);
    }
    out.K = std::move(mats[0]);
    out.Xp = std::move(mats[1]);
    out.Xm = std::move(mats[2]);
    if (labels.empty())
        for (size_t i = 0; i < out.dim; ++i) labels.push_back("v" + std::to_string(i));
    out.basis_labels = std::move(labels);
    out.check_relations();
    return out;
}

HModule tensor_module(const HModule& A, const HModule& B) {
    size_t n = A.dim * B.dim;
    auto kron = [&](const CycMatrix& a, const CycMatrix& b) {
        CycMatrix m(n, n);
        for (size_t i = 0; i < A.dim; ++i)
            for (size_t j = 0; j < A.dim; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (size_t k = 0; k < B.dim; ++k)
                    for (size_t l = 0; l < B.dim; ++l)
                        m.at(i * B.dim + k, j * B.dim + l) = a.at(i, j) * b.at(k, l);
            }
        return m;
    };
    HModule out;
    out.dim = n;
    CycMatrix idA = CycMatrix::identity(A.dim), idB = CycMatrix::identity(B.dim);
    out.K = kron(A.K, B.K);
    // Delta Xp = Xp (x) 1 + K (x) Xp ;  Delta Xm = Xm (x) K^-1 + 1 (x) Xm.
    out.Xp = kron(A.Xp, idB) + kron(A.K, B.Xp);
    out.Xm = kron(A.Xm, B.K.pow(2)) + kron(idA, B.Xm);
    for (size_t i = 0; i < A.dim; ++i)
        for (size_t k = 0; k < B.dim; ++k)
            out.basis_labels.push_back(A.basis_labels[i] + " (x) " + B.basis_labels[k]);
    out.check_relations();
    return out;
}

HModule regular_rep_H() {
    const HopfData& H = algebra_H();
    auto left_mult = [&](int g) {
        CycMatrix m(HopfData::dim, HopfData::dim);
        for (int j = 0; j < HopfData::dim; ++j)
            for (const auto& [k, c] : H.mul[g * HopfData::dim + j]) m.at(k, j) = c;
        return m;
    };
    HModule out;
    out.dim = HopfData::dim;
    out.K = left_mult(gen::H_K);
    out.Xp = left_mult(gen::H_Xp);
    out.Xm = left_mult(gen::H_Xm);
    out.basis_labels = H.basis_names;
    out.check_relations();
    return out;
}

bool Fingerprint::operator==(const Fingerprint& o) const {
    return dim == o.dim && k_mult[0] == o.k_mult[0] && k_mult[1] == o.k_mult[1] &&
           k_mult[2] == o.k_mult[2] && rank_xp == o.rank_xp && rank_xm == o.rank_xm &&
           rank_xp2 == o.rank_xp2 && rank_xm2 == o.rank_xm2 && rank_xpxm == o.rank_xpxm &&
           joint_kernel_dim == o.joint_kernel_dim;
}

std::string Fingerprint::str() const {
    std::ostringstream os;
    os << "dim=" << dim << " K-mult(1,q,q^2)=(" << k_mult[0] << "," << k_mult[1] << ","
       << k_mult[2] << ")"
       << " rk(Xp,Xm,Xp^2,Xm^2,XpXm)=(" << rank_xp << "," << rank_xm << "," << rank_xp2 << ","
       << rank_xm2 << "," << rank_xpxm << ")"
       << " jointker=" << joint_kernel_dim;
    return os.str();
}

Fingerprint fingerprint(const HModule& m) {
    Fingerprint fp;
    fp.dim = m.dim;
    CycMatrix id = CycMatrix::identity(m.dim);
    for (int e = 0; e < 3; ++e)
        fp.k_mult[e] = m.dim - (m.K - id.scaled(CycNum::q_pow(e))).rank();
    fp.rank_xp = m.Xp.rank();
    fp.rank_xm = m.Xm.rank();
    fp.rank_xp2 = m.Xp.pow(2).rank();
    fp.rank_xm2 = m.Xm.pow(2).rank();
    fp.rank_xpxm = (m.Xp * m.Xm).rank();
    CycMatrix stacked(2 * m.dim, m.dim);
    for (size_t r = 0; r < m.dim; ++r)
        for (size_t c = 0; c < m.dim; ++c) {
            stacked.at(r, c) = m.Xp.at(r, c);
            stacked.at(m.dim + r, c) = m.Xm.at(r, c);
        }
    fp.joint_kernel_dim = m.dim - stacked.rank();
    return fp;
}

std::string Lambda::str() const {
    if (infinite) return "inf";
    return value.str();
}

std::string RepLabel::str() const {
    if (lambda) return tag + "(lambda=" + lambda->str() + ")";
    return tag;
}

const std::vector<CycVec>& radical_of_H() {
    static const std::vector<CycVec> rad = [] {
        const HopfData& H = algebra_H();
        // Left multiplication matrices of all basis elements.
        std::vector<CycMatrix> L(HopfData::dim, CycMatrix(HopfData::dim, HopfData::dim));
        for (int i = 0; i < HopfData::dim; ++i)
            for (int j = 0; j < HopfData::dim; ++j)
                for (const auto& [k, c] : H.mul[i * HopfData::dim + j]) L[i].at(k, j) = c;
        // Dickson: in characteristic zero the radical is the kernel of the
        // trace form T(x, y) = tr(L_x L_y).
        CycMatrix T(HopfData::dim, HopfData::dim);
        for (int i = 0; i < HopfData::dim; ++i)
            for (int j = 0; j < HopfData::dim; ++j) {
                CycMatrix prod = L[i] * L[j];
                CycNum tr;
                for (int d = 0; d < HopfData::dim; ++d) tr += prod.at(d, d);
                T.at(i, j) = tr;
            }
        return T.nullspace();
    }();
    return rad;
}

std::vector<CycVec> radical_submodule(const HModule& m) {
    std::vector<CycVec> vecs;
    for (const auto& r : radical_of_H()) {
        CycMatrix rho = m.action_of(r);
        for (size_t j = 0; j < m.dim; ++j) {
            CycVec col = rho.column(j);
            if (!vec_is_zero(col)) vecs.push_back(std::move(col));
        }
    }
    return span_basis(vecs);
}

std::vector<CycVec> radical_annihilator(const HModule& m) {
    const auto& rad = radical_of_H();
    CycMatrix stacked(rad.size() * m.dim, m.dim);
    for (size_t ri = 0; ri < rad.size(); ++ri) {
        CycMatrix rho = m.action_of(rad[ri]);
        for (size_t r = 0; r < m.dim; ++r)
            for (size_t c = 0; c < m.dim; ++c) stacked.at(ri * m.dim + r, c) = rho.at(r, c);
    }
    return stacked.nullspace();
}

namespace {

std::vector<CycVec> plane_span(std::initializer_list<int> idxs) {
    std::vector<CycVec> out;
    for (int i : idxs) {
        CycVec v(9);
        v[i] = CycNum::one();
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

const std::map<std::string, HModule>& reference_modules() {
    static const std::map<std::string, HModule> refs = [] {
        std::map<std::string, HModule> r;
        const HModule& M = plane_module();
        r["1"] = module_from_action(plane_span({0}), M, {"1"});
        r["2"] = module_from_action(plane_span({3, 1}), M, {"x", "y"});
        r["3_i"] = module_from_action(plane_span({6, 4, 2}), M, {"x^2", "x*y", "y^2"});
        r["3_e"] = module_from_action(plane_span({3, 1, 8}), M, {"x", "y", "x^2*y^2"});
        r["3_o"] = module_from_action(plane_span({7, 0, 5}), M, {"x^2*y", "1", "x*y^2"});
        HModule m6e = tensor_module(r.at("3_i"), r.at("2"));
        r["4_e"] = module_from_action(radical_submodule(m6e), m6e);
        assert(r.at("4_e").dim == 4);
        r["6_e"] = std::move(m6e);

        // 6_o is the projective cover of the trivial module; it splits off
        // 3_i (x) 3_i as the complement of the 3_i summand.
        HModule t9 = tensor_module(r.at("3_i"), r.at("3_i"));
        auto embeds = hom_space(r.at("3_i"), t9);
        assert(!embeds.empty());
        const CycMatrix& phi = embeds.front();
        assert(phi.rank() == 3);
        auto projs = hom_space(t9, r.at("3_i"));
        const CycMatrix* psi = nullptr;
        for (const auto& p : projs)
            if (!(p * phi).is_zero()) {
                psi = &p;
                break;
            }
        assert(psi && "3_i must split off 3_i (x) 3_i");
        HModule m6o = module_from_action(psi->nullspace(), t9);
        assert(m6o.dim == 6);
        r["5_o"] = module_from_action(radical_submodule(m6o), m6o);
        assert(r.at("5_o").dim == 5);
        r["6_o"] = std::move(m6o);

        // The classification key must separate every label.
        std::vector<std::pair<std::string, Fingerprint>> fps;
        for (const auto& [tag, mod] : r) fps.emplace_back(tag, fingerprint(mod));
        for (size_t i = 0; i < fps.size(); ++i)
            for (size_t j = i + 1; j < fps.size(); ++j)
                if (fps[i].second == fps[j].second)
                    throw std::logic_error("reference fingerprints collide: " + fps[i].first +
                                           " vs " + fps[j].first);
        return r;
    }();
    return refs;
}

namespace {

std::vector<CycVec> k_eigenvectors(const HModule& m, int qexp) {
    CycMatrix shifted = m.K - CycMatrix::identity(m.dim).scaled(CycNum::q_pow(qexp));
    return shifted.nullspace();
}

Lambda ratio_lambda(const CycNum& num, const CycNum& den) {
    if (den.is_zero()) {
        if (num.is_zero())
            throw UnknownFingerprintError("lambda extraction: degenerate (0:0) direction");
        return Lambda{CycNum::zero(), true};
    }
    return Lambda{num * den.inv(), false};
}

// lambda for a 3-dim module of type 3_e: the socle is the irreducible 2,
// the quotient line lifts to a K-eigenvector w; Xp w and Xm w land in the
// socle on the canonical pair (u1 = Xp u2, u2), and lambda is the ratio of
// the two coefficients (invariant under all remaining basis freedom).
Lambda lambda_3e(const HModule& m) {
    std::vector<CycVec> soc = radical_submodule(m);
    if (soc.size() != 2) throw UnknownFingerprintError("3_e: radical is not 2-dimensional");
    // K-eigenvector off the socle.
    CycVec w;
    for (int e = 0; e < 3 && w.empty(); ++e)
        for (const auto& v : k_eigenvectors(m, e))
            if (!in_span(soc, v)) {
                w = v;
                break;
            }
    if (w.empty()) throw UnknownFingerprintError("3_e: no eigenvector off the socle");
    // Canonical socle pair.
    CycVec u2;
    for (int e = 0; e < 3 && u2.empty(); ++e)
        for (const auto& v : k_eigenvectors(m, e))
            if (in_span(soc, v) && !vec_is_zero(m.Xp * v)) {
                u2 = v;
                break;
            }
    if (u2.empty()) throw UnknownFingerprintError("3_e: socle has no Xp-active eigenvector");
    CycVec u1 = m.Xp * u2;
    std::vector<CycVec> pair = {u1, u2};
    auto pc = coordinates_in(pair, m.Xp * w);
    auto mc = coordinates_in(pair, m.Xm * w);
    if (!pc || !mc) throw UnknownFingerprintError("3_e: generator images leave the socle");
    return ratio_lambda((*pc)[0] + (*pc)[1], (*mc)[0] + (*mc)[1]);
}

// lambda for a 3-dim module of type 3_o: the socle is the trivial line u0;
// pick the K-eigenvector w with Xm w outside the socle, then
// lambda = [Xp w : Xm^2 w] in units of u0.
Lambda lambda_3o(const HModule& m) {
    std::vector<CycVec> soc = radical_submodule(m);
    if (soc.size() != 1) throw UnknownFingerprintError("3_o: radical is not 1-dimensional");
    CycVec w;
    for (int e = 0; e < 3 && w.empty(); ++e)
        for (const auto& v : k_eigenvectors(m, e))
            if (!in_span(soc, v) && !in_span(soc, m.Xm * v)) {
                w = v;
                break;
            }
    if (w.empty()) throw UnknownFingerprintError("3_o: no suitable middle eigenvector");
    auto num = coordinates_in(soc, m.Xp * w);
    auto den = coordinates_in(soc, m.Xm * (m.Xm * w));
    if (!num || !den) throw UnknownFingerprintError("3_o: generator images leave the socle");
    return ratio_lambda((*num)[0], (*den)[0]);
}

} // namespace

RepLabel classify(const HModule& m) {
    Fingerprint fp = fingerprint(m);
    for (const auto& [tag, ref] : reference_modules()) {
        if (!(fp == fingerprint(ref))) continue;
        RepLabel label{tag, std::nullopt};
        if (tag == "3_e") label.lambda = lambda_3e(m);
        if (tag == "3_o") label.lambda = lambda_3o(m);
        return label;
    }
    throw UnknownFingerprintError("classify: no reference matches " + fp.str());
}

DecompReport verify_decomposition(const HModule& m, const std::vector<DecompPart>& parts) {
    DecompReport rep;
    std::vector<CycVec> all;
    size_t total = 0;
    for (size_t p = 0; p < parts.size(); ++p) {
        total += parts[p].basis.size();
        for (const auto& v : parts[p].basis) all.push_back(v);
        try {
            HModule sub = module_from_action(parts[p].basis, m);
            RepLabel label = classify(sub);
            rep.labels.push_back(label);
            if (label.tag != parts[p].claimed_tag) {
                rep.pass = false;
                rep.failures.push_back("part " + std::to_string(p) + " classifies as " +
                                       label.str() + ", claimed " + parts[p].claimed_tag);
            }
        } catch (const std::exception& e) {
            rep.pass = false;
            rep.labels.push_back(RepLabel{"?", std::nullopt});
            rep.failures.push_back("part " + std::to_string(p) + ": " + e.what());
        }
    }
    if (total != m.dim || span_rank(all) != m.dim) {
        rep.pass = false;
        rep.failures.push_back("parts do not sum directly to the whole space");
    }
    return rep;
}

std::vector<CycMatrix> hom_space(const HModule& A, const HModule& B) {
    size_t na = A.dim, nb = B.dim, nu = na * nb; // unknowns T[r][c], r < nb, c < na
    CycMatrix sys(3 * nb * na, nu);
    size_t eq = 0;
    for (int g = 0; g < 3; ++g) {
        CycMatrix ga = A.generator(g), gb = B.generator(g);
        for (size_t i = 0; i < nb; ++i)
            for (size_t j = 0; j < na; ++j, ++eq) {
                // (T ga - gb T)[i][j] = 0
                for (size_t c = 0; c < na; ++c) sys.at(eq, i * na + c) += ga.at(c, j);
                for (size_t r = 0; r < nb; ++r) sys.at(eq, r * na + j) -= gb.at(i, r);
            }
    }
    std::vector<CycMatrix> out;
    for (const auto& v : sys.nullspace()) {
        CycMatrix T(nb, na);
        for (size_t r = 0; r < nb; ++r)
            for (size_t c = 0; c < na; ++c) T.at(r, c) = v[r * na + c];
        out.push_back(std::move(T));
    }
    return out;
}

} // namespace qpc
