#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace qpc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of the cyclotomic field Q(w), w a primitive cube root of unity,
/// stored as c0 + c1*w with w^2 rewritten to -1 - w. All arithmetic is exact.
class CycNum {
public:
    CycNum() = default;
    CycNum(int v) : c0_(v) {}
    CycNum(Rational r) : c0_(std::move(r)) {}
    CycNum(Rational r0, Rational r1) : c0_(std::move(r0)), c1_(std::move(r1)) {}

    static CycNum zero() { return CycNum(); }
    static CycNum one() { return CycNum(1); }
    /// The distinguished root of unity q = w.
    static CycNum q() { return CycNum(Rational(0), Rational(1)); }
    /// q^e for any integer exponent (reduced mod 3).
    static CycNum q_pow(long e);

    const Rational& c0() const { return c0_; }
    const Rational& c1() const { return c1_; }

    bool is_zero() const { return c0_ == 0 && c1_ == 0; }
    bool is_rational() const { return c1_ == 0; }

    CycNum operator-() const { return CycNum(-c0_, -c1_); }
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend bool operator==(const CycNum& a, const CycNum& b) {
        return a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// The field automorphism w -> w^2 = -1 - w (complex conjugation).
    CycNum conj() const { return CycNum(c0_ - c1_, -c1_); }

    /// Multiplicative inverse, via the rational norm a * conj(a).
    /// Throws std::domain_error on zero.
    CycNum inv() const;

    /// Numeric embedding w -> exp(2*pi*i/3). Display only.
    std::complex<double> embed() const;

    /// Renders in the literal format `p/q + r/s*w`.
    std::string str() const;

    /// Parses the literal format (omitted terms and integer shorthand accepted).
    /// Throws std::invalid_argument on malformed input.
    static CycNum parse(const std::string& text);

private:
    Rational c0_;
    Rational c1_;
};

inline CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
inline CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
inline CycNum cyc_conj(const CycNum& a) { return a.conj(); }
inline CycNum cyc_inv(const CycNum& a) { return a.inv(); }

} // namespace qpc
