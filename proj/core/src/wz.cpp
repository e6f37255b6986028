#include "qpc/wz.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qpc {

namespace {

const CycNum kQ = CycNum::q();

// Coefficients for moving a differential right past a coordinate:
//   dx x = c.dx_x  x dx
//   dx y = c.dx_y  y dx
//   dy y = c.dy_y  y dy
//   dy x = c.dy_x_xdy  x dy + c.dy_x_ydx  y dx
// They are obtained by inverting the linear system given by the defining
// relations (coordinates on the left), not transcribed by hand.
struct PushRules {
    CycNum dx_x, dx_y, dy_y, dy_x_xdy, dy_x_ydx;
    CycNum two_form_swap; // dy dx = two_form_swap * dx dy
};

const PushRules& push_rules() {
    static const PushRules r = [] {
        // Rows express {x dx, x dy, y dx, y dy} in terms of
        // {dx x, dy x, dx y, dy y}:
        //   x dx = q^2 dx x
        //   x dy = q dy x + (q^2 - 1) dx y
        //   y dx = q dx y
        //   y dy = q^2 dy y
        CycMatrix A(4, 4);
        A.at(0, 0) = CycNum::q_pow(2);
        A.at(1, 1) = kQ;
        A.at(1, 2) = CycNum::q_pow(2) - CycNum::one();
        A.at(2, 2) = kQ;
        A.at(3, 3) = CycNum::q_pow(2);
        CycMatrix B = A.inverse().value();
        PushRules out;
        out.dx_x = B.at(0, 0);
        out.dy_x_xdy = B.at(1, 1);
        out.dy_x_ydx = B.at(1, 2);
        out.dx_y = B.at(2, 2);
        out.dy_y = B.at(3, 3);
        // dx dy + q^2 dy dx = 0
        out.two_form_swap = -CycNum::q_pow(-2);
        return out;
    }();
    return r;
}

// dx g = push_dx(g) dx: pure rescaling of each monomial.
PlaneElt push_dx(const PlaneElt& g) {
    const PushRules& c = push_rules();
    PlaneElt out;
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
            const CycNum& v = g.coeff(r, s);
            if (v.is_zero()) continue;
            CycNum f = CycNum::one();
            for (int i = 0; i < r; ++i) f *= c.dx_x;
            for (int i = 0; i < s; ++i) f *= c.dx_y;
            out.coeff(r, s) = v * f;
        }
    return out;
}

// dy g = first dx + second dy.
std::pair<PlaneElt, PlaneElt> push_dy(const PlaneElt& g) {
    const PushRules& c = push_rules();
    PlaneElt outdx, outdy;
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) {
            const CycNum& v = g.coeff(r, s);
            if (v.is_zero()) continue;
            // Fold the monomial letters through the one-form state P dx + R dy.
            PlaneElt P, R = PlaneElt::unit();
            for (int i = 0; i < r; ++i) {
                PlaneElt nP = plane_mul(P, PlaneElt::x()).scaled(c.dx_x) +
                              plane_mul(R, PlaneElt::y()).scaled(c.dy_x_ydx);
                PlaneElt nR = plane_mul(R, PlaneElt::x()).scaled(c.dy_x_xdy);
                P = std::move(nP);
                R = std::move(nR);
            }
            for (int i = 0; i < s; ++i) {
                P = plane_mul(P, PlaneElt::y()).scaled(c.dx_y);
                R = plane_mul(R, PlaneElt::y()).scaled(c.dy_y);
            }
            outdx += P.scaled(v);
            outdy += R.scaled(v);
        }
    return {outdx, outdy};
}

} // namespace

bool WZForm::is_zero() const {
    return d0.is_zero() && d1x.is_zero() && d1y.is_zero() && d2.is_zero();
}

bool WZForm::is_homogeneous() const {
    int grades = (d0.is_zero() ? 0 : 1) + (d1x.is_zero() && d1y.is_zero() ? 0 : 1) +
                 (d2.is_zero() ? 0 : 1);
    return grades <= 1;
}

int WZForm::degree() const {
    if (!is_homogeneous() || is_zero()) throw std::logic_error("WZForm: no single degree");
    if (!d0.is_zero()) return 0;
    if (!d2.is_zero()) return 2;
    return 1;
}

WZForm WZForm::component(int degree) const {
    switch (degree) {
        case 0: return scalar(d0);
        case 1: return {{}, d1x, d1y, {}};
        case 2: return dxdy(d2);
        default: return {};
    }
}

WZForm& WZForm::operator+=(const WZForm& o) {
    d0 += o.d0;
    d1x += o.d1x;
    d1y += o.d1y;
    d2 += o.d2;
    return *this;
}

WZForm& WZForm::operator-=(const WZForm& o) {
    d0 -= o.d0;
    d1x -= o.d1x;
    d1y -= o.d1y;
    d2 -= o.d2;
    return *this;
}

bool operator==(const WZForm& a, const WZForm& b) {
    return a.d0 == b.d0 && a.d1x == b.d1x && a.d1y == b.d1y && a.d2 == b.d2;
}

WZForm WZForm::scaled(const CycNum& s) const {
    return {d0.scaled(s), d1x.scaled(s), d1y.scaled(s), d2.scaled(s)};
}

CycVec WZForm::to_vec() const {
    CycVec v(36);
    for (int m = 0; m < 9; ++m) {
        v[4 * m + 0] = d0[m];
        v[4 * m + 1] = d1x[m];
        v[4 * m + 2] = d1y[m];
        v[4 * m + 3] = d2[m];
    }
    return v;
}

WZForm WZForm::from_vec(const CycVec& v) {
    if (v.size() != 36) throw std::invalid_argument("WZForm::from_vec: need 36 entries");
    WZForm u;
    for (int m = 0; m < 9; ++m) {
        u.d0[m] = v[4 * m + 0];
        u.d1x[m] = v[4 * m + 1];
        u.d1y[m] = v[4 * m + 2];
        u.d2[m] = v[4 * m + 3];
    }
    return u;
}

std::string WZForm::str() const {
    std::ostringstream os;
    bool any = false;
    auto emit = [&](const PlaneElt& p, const char* suffix) {
        if (p.is_zero()) return;
        if (any) os << " + ";
        os << "(" << p.str() << ")" << suffix;
        any = true;
    };
    emit(d0, "");
    emit(d1x, " dx");
    emit(d1y, " dy");
    emit(d2, " dx dy");
    return any ? os.str() : "0";
}

WZForm wz_mul(const WZForm& u, const WZForm& v) {
    const CycNum& swap = push_rules().two_form_swap;
    WZForm out;
    // degree 0 of u multiplies everything on the left
    if (!u.d0.is_zero()) {
        out.d0 += plane_mul(u.d0, v.d0);
        out.d1x += plane_mul(u.d0, v.d1x);
        out.d1y += plane_mul(u.d0, v.d1y);
        out.d2 += plane_mul(u.d0, v.d2);
    }
    if (!u.d1x.is_zero()) {
        // f dx * (g0 + gx dx + gy dy) = f (dx g0) dx + f (dx gy) dx dy
        out.d1x += plane_mul(u.d1x, push_dx(v.d0));
        out.d2 += plane_mul(u.d1x, push_dx(v.d1y));
    }
    if (!u.d1y.is_zero()) {
        // f dy * g0 = f (dy g0)
        auto [p0, r0] = push_dy(v.d0);
        out.d1x += plane_mul(u.d1y, p0);
        out.d1y += plane_mul(u.d1y, r0);
        // f dy * gx dx: only the dy component of (dy gx) survives, swapped
        auto [px, rx] = push_dy(v.d1x);
        (void)px;
        out.d2 += plane_mul(u.d1y, rx).scaled(swap);
        // f dy * gy dy: only the dx component of (dy gy) survives
        auto [py, ry] = push_dy(v.d1y);
        (void)ry;
        out.d2 += plane_mul(u.d1y, py);
    }
    if (!u.d2.is_zero() && !v.d0.is_zero()) {
        // f dx dy * g = f (dx (dy g)_dy) dx dy
        auto [p, r] = push_dy(v.d0);
        (void)p;
        out.d2 += plane_mul(u.d2, push_dx(r));
    }
    return out;
}

namespace {

// d on a basis monomial, by Leibniz recursion on the word x^r y^s.
WZForm d_monomial(int r, int s) {
    if (r == 0 && s == 0) return {};
    if (r > 0) {
        WZForm rest = WZForm::scalar(PlaneElt::monomial(r - 1, s));
        return wz_mul(WZForm::dx(), rest) +
               wz_mul(WZForm::scalar(PlaneElt::x()), d_monomial(r - 1, s));
    }
    WZForm rest = WZForm::scalar(PlaneElt::monomial(0, s - 1));
    return wz_mul(WZForm::dy(), rest) +
           wz_mul(WZForm::scalar(PlaneElt::y()), d_monomial(0, s - 1));
}

const WZForm& d_basis(int idx) {
    static const std::array<WZForm, 9> table = [] {
        std::array<WZForm, 9> t;
        for (int r = 0; r < 3; ++r)
            for (int s = 0; s < 3; ++s) t[PlaneElt::index(r, s)] = d_monomial(r, s);
        return t;
    }();
    return table[idx];
}

WZForm d_scalar(const PlaneElt& f) {
    WZForm out;
    for (int m = 0; m < 9; ++m)
        if (!f[m].is_zero()) out += d_basis(m).scaled(f[m]);
    return out;
}

} // namespace

WZForm wz_d(const WZForm& u) {
    WZForm out = d_scalar(u.d0);
    // d(f dx) = df dx, d(f dy) = df dy (d kills dx, dy); top degree dies.
    out += wz_mul(d_scalar(u.d1x), WZForm::dx());
    out += wz_mul(d_scalar(u.d1y), WZForm::dy());
    return out;
}

const HModule& xi_module() {
    static const HModule m = [] {
        HModule mod;
        mod.dim = 4;
        mod.K = CycMatrix(4, 4);
        mod.Xp = CycMatrix(4, 4);
        mod.Xm = CycMatrix(4, 4);
        // basis {1, dx, dy, dx dy}
        mod.K.at(0, 0) = CycNum::one();
        mod.K.at(1, 1) = kQ;
        mod.K.at(2, 2) = CycNum::q_pow(-1);
        mod.K.at(3, 3) = CycNum::one();
        mod.Xp.at(1, 2) = CycNum::one(); // X+ dy = dx
        mod.Xm.at(2, 1) = CycNum::one(); // X- dx = dy
        mod.basis_labels = {"1", "dx", "dy", "dx dy"};
        mod.check_relations();
        return mod;
    }();
    return m;
}

const HModule& omega_module() {
    static const HModule m = tensor_module(plane_module(), xi_module());
    return m;
}

WZForm h_act_form(const CycVec& h, const WZForm& u) {
    return WZForm::from_vec(omega_module().action_of(h) * u.to_vec());
}

namespace {

std::vector<OmegaTableRow> one_form_table(const std::array<std::pair<int, int>, 3>& monos) {
    const HopfData& H = algebra_H();
    std::vector<OmegaTableRow> rows;
    for (int block = 0; block < 2; ++block)
        for (const auto& [r, s] : monos) {
            PlaneElt f = PlaneElt::monomial(r, s);
            OmegaTableRow row;
            row.arg = block == 0 ? WZForm::dx(f) : WZForm::dy(f);
            row.label = f.str() + (block == 0 ? " dx" : " dy");
            row.K = h_act_form(H.basis_vec(gen::H_K), row.arg);
            row.Xp = h_act_form(H.basis_vec(gen::H_Xp), row.arg);
            row.Xm = h_act_form(H.basis_vec(gen::H_Xm), row.arg);
            rows.push_back(std::move(row));
        }
    return rows;
}

} // namespace

OmegaTables omega_tables() {
    OmegaTables t;
    t.t3o2 = one_form_table({{{2, 1}, {1, 2}, {0, 0}}});
    t.t3e2 = one_form_table({{{1, 0}, {0, 1}, {2, 2}}});
    t.t3i2 = one_form_table({{{2, 0}, {1, 1}, {0, 2}}});
    return t;
}

Omega2IsoReport omega2_iso() {
    Omega2IsoReport rep;
    const HopfData& H = algebra_H();
    const int gens[3] = {gen::H_K, gen::H_Xp, gen::H_Xm};
    const char* names[3] = {"K", "X+", "X-"};
    WZForm top = WZForm::dxdy();
    for (int g = 0; g < 3; ++g) {
        WZForm expect = g == 0 ? top : WZForm{};
        if (h_act_form(H.basis_vec(gens[g]), top) != expect) {
            rep.pass = rep.dxdy_invariant = false;
            rep.failures.push_back(std::string(names[g]) + " does not fix dx dy");
        }
    }
    for (int g = 0; g < 3; ++g)
        for (int m = 0; m < 9; ++m) {
            PlaneElt z;
            z[m] = CycNum::one();
            WZForm lhs = h_act_form(H.basis_vec(gens[g]), WZForm::dxdy(z));
            WZForm rhs = WZForm::dxdy(act(H.basis_vec(gens[g]), z));
            if (lhs != rhs) {
                rep.pass = false;
                rep.failures.push_back(std::string(names[g]) + " fails to intertwine on " +
                                       PlaneElt::basis_name(m) + " dx dy");
            }
        }
    return rep;
}

rewrite::System wz_word_system() {
    const PushRules& c = push_rules();
    rewrite::System sys;
    auto rule = [&](std::string lhs, std::vector<std::pair<std::string, CycNum>> rhs) {
        sys.rules.push_back({std::move(lhs), std::move(rhs)});
    };
    rule("yx", {{"xy", CycNum::q_pow(-1)}});
    rule("Xx", {{"xX", c.dx_x}});
    rule("Xy", {{"yX", c.dx_y}});
    rule("Yy", {{"yY", c.dy_y}});
    rule("Yx", {{"xY", c.dy_x_xdy}, {"yX", c.dy_x_ydx}});
    rule("YX", {{"XY", c.two_form_swap}});
    rule("XX", {});
    rule("YY", {});
    rule("xxx", {{"", CycNum::one()}});
    rule("yyy", {{"", CycNum::one()}});
    return sys;
}

WZForm wz_reduce_word(const std::string& word, rewrite::Strategy strategy) {
    static const rewrite::System sys = wz_word_system();
    rewrite::WordElt reduced = sys.reduce({{word, CycNum::one()}}, strategy);
    WZForm out;
    for (const auto& [w, coeff] : reduced) {
        int r = 0, s = 0;
        std::string tail;
        for (char ch : w) {
            if (ch == 'x' && tail.empty() && s == 0) ++r;
            else if (ch == 'y' && tail.empty()) ++s;
            else if (ch == 'X' || ch == 'Y') tail += ch;
            else throw std::logic_error("wz_reduce_word: word not in normal form: " + w);
        }
        PlaneElt f = PlaneElt::monomial(r, s, coeff);
        if (tail.empty()) out += WZForm::scalar(f);
        else if (tail == "X") out += WZForm::dx(f);
        else if (tail == "Y") out += WZForm::dy(f);
        else if (tail == "XY") out += WZForm::dxdy(f);
        else throw std::logic_error("wz_reduce_word: unexpected differential tail: " + w);
    }
    return out;
}

} // namespace qpc
