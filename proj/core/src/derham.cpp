#include "qpc/derham.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpc {

Poly Poly::constant(const CycNum& c) {
    Poly p;
    p.add_term(Expo{}, c);
    return p;
}

Poly Poly::variable(int i) {
    Poly p;
    Expo e{};
    e[i] = 1;
    p.add_term(e, CycNum::one());
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{});
}

CycNum Poly::constant_value() const {
    auto it = terms_.find(Expo{});
    return it == terms_.end() ? CycNum::zero() : it->second;
}

void Poly::add_term(const Expo& e, const CycNum& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Poly::Expo e;
            for (int i = 0; i < xi_vars; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly Poly::scaled(const CycNum& s) const {
    Poly out;
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
}

Poly Poly::derivative(int i) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Expo de = e;
        --de[i];
        out.add_term(de, c * CycNum(e[i]));
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < xi_vars; ++i)
            if (e[i] > 0) {
                os << "*t" << i;
                if (e[i] > 1) os << "^" << e[i];
            }
    }
    return os.str();
}

namespace {

// Sorts indices, returning the permutation sign, or 0 on a repeat.
int sort_sign(std::vector<int>& v) {
    int sign = 1;
    for (size_t i = 1; i < v.size(); ++i)
        for (size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
            if (v[j - 1] == v[j]) return 0;
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

} // namespace

ExtForm ExtForm::scalar(Poly p) {
    ExtForm f;
    f.add_term({}, std::move(p));
    return f;
}

ExtForm ExtForm::dt(int i) {
    ExtForm f;
    f.add_term({i}, Poly::constant(CycNum::one()));
    return f;
}

bool ExtForm::is_homogeneous() const {
    if (terms_.empty()) return true;
    size_t deg = terms_.begin()->first.size();
    for (const auto& [sub, p] : terms_)
        if (sub.size() != deg) return false;
    return true;
}

int ExtForm::degree() const {
    if (terms_.empty() || !is_homogeneous())
        throw std::logic_error("ExtForm: no single degree");
    return int(terms_.begin()->first.size());
}

ExtForm ExtForm::component(int degree) const {
    ExtForm out;
    for (const auto& [sub, p] : terms_)
        if (int(sub.size()) == degree) out.terms_.emplace(sub, p);
    return out;
}

void ExtForm::add_term(Subset sub, Poly p) {
    int sign = sort_sign(sub);
    if (sign == 0 || p.is_zero()) return;
    if (sign < 0) p = p.scaled(-CycNum::one());
    auto it = terms_.find(sub);
    if (it == terms_.end()) {
        terms_.emplace(std::move(sub), std::move(p));
    } else {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExtForm& ExtForm::operator+=(const ExtForm& o) {
    for (const auto& [sub, p] : o.terms_) add_term(sub, p);
    return *this;
}

ExtForm operator*(const ExtForm& a, const ExtForm& b) {
    ExtForm out;
    for (const auto& [sa, pa] : a.terms())
        for (const auto& [sb, pb] : b.terms()) {
            ExtForm::Subset sub = sa;
            sub.insert(sub.end(), sb.begin(), sb.end());
            out.add_term(std::move(sub), pa * pb);
        }
    return out;
}

ExtForm ExtForm::scaled(const CycNum& s) const {
    ExtForm out;
    for (const auto& [sub, p] : terms_) out.add_term(sub, p.scaled(s));
    return out;
}

ExtForm ExtForm::d() const {
    ExtForm out;
    for (const auto& [sub, p] : terms_)
        for (int i = 0; i < xi_vars; ++i) {
            Poly dp = p.derivative(i);
            if (dp.is_zero()) continue;
            Subset ds;
            ds.reserve(sub.size() + 1);
            ds.push_back(i);
            ds.insert(ds.end(), sub.begin(), sub.end());
            out.add_term(std::move(ds), std::move(dp));
        }
    return out;
}

std::string ExtForm::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [sub, p] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << p.str() << "]";
        for (int i : sub) os << " dt" << i;
    }
    return os.str();
}

XiElt XiElt::from_wz(const WZForm& w) {
    XiElt out;
    CycVec v = w.to_vec();
    for (int i = 0; i < 36; ++i)
        if (!v[i].is_zero()) out.c_[i] = ExtForm::scalar(v[i]);
    return out;
}

XiElt XiElt::from_ext(const ExtForm& e) {
    XiElt out;
    // slot 0 is the plane unit with trivial WZ part
    out.c_[0] = e;
    return out;
}

bool XiElt::is_zero() const {
    for (const auto& e : c_)
        if (!e.is_zero()) return false;
    return true;
}

bool XiElt::is_homogeneous() const {
    int g = -1;
    for (int i = 0; i < 36; ++i)
        for (const auto& [sub, p] : c_[i].terms()) {
            int total = int(sub.size()) + wz_degree(i);
            if (g == -1) g = total;
            else if (g != total) return false;
        }
    return true;
}

int XiElt::grade() const {
    if (is_zero() || !is_homogeneous()) throw std::logic_error("XiElt: no single grade");
    for (int i = 0; i < 36; ++i)
        if (!c_[i].is_zero()) return c_[i].terms().begin()->first.size() + wz_degree(i);
    return 0;
}

XiElt XiElt::component(int total_grade) const {
    XiElt out;
    for (int i = 0; i < 36; ++i)
        out.c_[i] = c_[i].component(total_grade - wz_degree(i));
    return out;
}

XiElt& XiElt::operator+=(const XiElt& o) {
    for (int i = 0; i < 36; ++i) c_[i] += o.c_[i];
    return *this;
}

XiElt& XiElt::operator-=(const XiElt& o) {
    for (int i = 0; i < 36; ++i) c_[i] += o.c_[i].scaled(-CycNum::one());
    return *this;
}

XiElt XiElt::scaled(const CycNum& s) const {
    XiElt out;
    for (int i = 0; i < 36; ++i) out.c_[i] = c_[i].scaled(s);
    return out;
}

std::string XiElt::str() const {
    std::ostringstream os;
    bool any = false;
    static const char* wz_names[4] = {"", " dx", " dy", " dx dy"};
    for (int i = 0; i < 36; ++i) {
        if (c_[i].is_zero()) continue;
        if (any) os << " + ";
        any = true;
        os << "(" << c_[i].str() << ") (x) " << PlaneElt::basis_name(i / 4) << wz_names[i % 4];
    }
    return any ? os.str() : "0";
}

namespace {

// Products of the 36 WZ basis elements, built once.
const WZForm& wz_basis_product(int i, int j) {
    static const std::vector<WZForm> table = [] {
        std::vector<WZForm> t;
        t.reserve(36 * 36);
        for (int i = 0; i < 36; ++i) {
            CycVec vi(36);
            vi[i] = CycNum::one();
            WZForm fi = WZForm::from_vec(vi);
            for (int j = 0; j < 36; ++j) {
                CycVec vj(36);
                vj[j] = CycNum::one();
                t.push_back(wz_mul(fi, WZForm::from_vec(vj)));
            }
        }
        return t;
    }();
    return table[i * 36 + j];
}

const WZForm& wz_basis_d(int i) {
    static const std::vector<WZForm> table = [] {
        std::vector<WZForm> t;
        for (int i = 0; i < 36; ++i) {
            CycVec v(36);
            v[i] = CycNum::one();
            t.push_back(wz_d(WZForm::from_vec(v)));
        }
        return t;
    }();
    return table[i];
}

} // namespace

XiElt xi_mul(const XiElt& u, const XiElt& v) {
    XiElt out;
    for (int i = 0; i < 36; ++i) {
        if (u.slot(i).is_zero()) continue;
        int r1 = XiElt::wz_degree(i);
        for (int j = 0; j < 36; ++j) {
            if (v.slot(j).is_zero()) continue;
            const WZForm& prod = wz_basis_product(i, j);
            if (prod.is_zero()) continue;
            CycVec pv = prod.to_vec();
            // sign (-1)^{deg r1 * deg w2} per Lambda-degree of each v term
            for (const auto& [sub, p] : v.slot(j).terms()) {
                bool flip = (r1 * int(sub.size())) % 2 != 0;
                for (const auto& [subu, pu] : u.slot(i).terms()) {
                    ExtForm::Subset ws = subu;
                    ws.insert(ws.end(), sub.begin(), sub.end());
                    Poly pp = pu * p;
                    if (flip) pp = pp.scaled(-CycNum::one());
                    for (int k = 0; k < 36; ++k)
                        if (!pv[k].is_zero()) out.slot(k).add_term(ws, pp.scaled(pv[k]));
                }
            }
        }
    }
    return out;
}

XiElt xi_d(const XiElt& u) {
    XiElt out;
    for (int i = 0; i < 36; ++i) {
        if (u.slot(i).is_zero()) continue;
        // de Rham part
        out.slot(i) += u.slot(i).d();
        // WZ part, signed by the Lambda-degree of each term
        const WZForm& dw = wz_basis_d(i);
        if (dw.is_zero()) continue;
        CycVec dv = dw.to_vec();
        for (const auto& [sub, p] : u.slot(i).terms()) {
            Poly sp = sub.size() % 2 ? p.scaled(-CycNum::one()) : p;
            for (int k = 0; k < 36; ++k)
                if (!dv[k].is_zero()) out.slot(k).add_term(sub, sp.scaled(dv[k]));
        }
    }
    return out;
}

XiElt pack_oneform(const XiOneForm& t) {
    XiElt out;
    for (int mu = 0; mu < xi_vars; ++mu)
        for (int m = 0; m < 9; ++m)
            if (!t.a_mu[mu][m].is_zero()) {
                ExtForm e;
                e.add_term({mu}, Poly::constant(t.a_mu[mu][m]));
                out.slot(4 * m + 0) += e;
            }
    out += XiElt::from_wz(WZForm::dx(t.phi_x) + WZForm::dy(t.phi_y));
    return out;
}

XiOneForm unpack_oneform(const XiElt& u) {
    if (!u.is_zero() && (!u.is_homogeneous() || u.grade() != 1))
        throw std::invalid_argument("unpack_oneform: input is not of total grade 1");
    XiOneForm t;
    for (int m = 0; m < 9; ++m) {
        for (const auto& [sub, p] : u.slot(4 * m).terms()) {
            // grade 1 with wz degree 0: de Rham one-forms
            if (!p.is_constant())
                throw std::invalid_argument("unpack_oneform: non-constant coefficient");
            t.a_mu[sub[0]][m] = p.constant_value();
        }
        auto scalar_of = [m](const ExtForm& e) {
            CycNum out;
            for (const auto& [sub, p] : e.terms()) {
                if (!p.is_constant())
                    throw std::invalid_argument("unpack_oneform: non-constant coefficient");
                out += p.constant_value();
            }
            return out;
        };
        t.phi_x[m] = scalar_of(u.slot(4 * m + 1));
        t.phi_y[m] = scalar_of(u.slot(4 * m + 2));
    }
    return t;
}

std::vector<XiElt> xi_grade_decompose(const XiElt& u) {
    std::vector<XiElt> out;
    for (int g = 0; g <= xi_vars + 2; ++g) out.push_back(u.component(g));
    return out;
}

Xi2Blocks xi2_blocks(const XiElt& u) {
    Xi2Blocks b;
    XiElt two = u.component(2);
    for (int i = 0; i < 36; ++i) {
        switch (XiElt::wz_degree(i)) {
            case 0: b.lambda2_omega0.slot(i) = two.slot(i); break;
            case 1: b.lambda1_omega1.slot(i) = two.slot(i); break;
            case 2: b.lambda0_omega2.slot(i) = two.slot(i); break;
        }
    }
    return b;
}

} // namespace qpc
