#include "qpc/cyc.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qpc {

CycNum CycNum::q_pow(long e) {
    long r = e % 3;
    if (r < 0) r += 3;
    switch (r) {
        case 0: return one();
        case 1: return q();
        default: return CycNum(Rational(-1), Rational(-1)); // w^2 = -1 - w
    }
}

CycNum& CycNum::operator+=(const CycNum& o) {
    c0_ += o.c0_;
    c1_ += o.c1_;
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    // (a0 + a1 w)(b0 + b1 w) = a0 b0 + (a0 b1 + a1 b0) w + a1 b1 w^2,
    // then w^2 = -1 - w.
    Rational t = c1_ * o.c1_;
    Rational r0 = c0_ * o.c0_ - t;
    Rational r1 = c0_ * o.c1_ + c1_ * o.c0_ - t;
    c0_ = std::move(r0);
    c1_ = std::move(r1);
    return *this;
}

CycNum CycNum::inv() const {
    if (is_zero()) throw std::domain_error("CycNum: division by zero");
    CycNum cj = conj();
    CycNum n = (*this) * cj; // rational norm
    Rational nr = n.c0_;
    return CycNum(cj.c0_ / nr, cj.c1_ / nr);
}

std::complex<double> CycNum::embed() const {
    static const std::complex<double> w(-0.5, std::sqrt(3.0) / 2.0);
    auto d = [](const Rational& r) {
        return static_cast<double>(boost::multiprecision::numerator(r)) /
               static_cast<double>(boost::multiprecision::denominator(r));
    };
    return d(c0_) + d(c1_) * w;
}

namespace {

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace

std::string CycNum::str() const {
    if (is_zero()) return "0";
    if (c1_ == 0) return rat_str(c0_);
    std::string wterm = rat_str(c1_ < 0 ? Rational(-c1_) : c1_) + "*w";
    if (c0_ == 0) return (c1_ < 0 ? "-" : "") + wterm;
    return rat_str(c0_) + (c1_ < 0 ? " - " : " + ") + wterm;
}

namespace {

// Parses one signed rational term, optionally followed by "*w" or bare "w".
struct TermParser {
    const std::string& s;
    size_t pos = 0;

    explicit TermParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    [[noreturn]] void fail() {
        throw std::invalid_argument("CycNum: cannot parse '" + s + "'");
    }

    Int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail();
        return Int(s.substr(start, pos - start));
    }

    // term := [sign] ( w | rat [*w] ), rat := int [/ int]
    void parse_term(Rational& out0, Rational& out1, bool first) {
        skip_ws();
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -1;
            ++pos;
            skip_ws();
        } else if (!first) {
            fail();
        }
        if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            out1 += sign;
            return;
        }
        Int num = parse_int();
        Int den = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            den = parse_int();
            if (den == 0) fail();
            skip_ws();
        }
        Rational r(num, den);
        if (sign < 0) r = -r;
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
            if (pos >= s.size() || s[pos] != 'w') fail();
            ++pos;
            out1 += r;
        } else if (pos < s.size() && s[pos] == 'w') {
            ++pos;
            out1 += r;
        } else {
            out0 += r;
        }
    }
};

} // namespace

CycNum CycNum::parse(const std::string& text) {
    TermParser p(text);
    Rational r0, r1;
    if (p.done()) p.fail();
    p.parse_term(r0, r1, true);
    while (!p.done()) p.parse_term(r0, r1, false);
    return CycNum(r0, r1);
}

} // namespace qpc
