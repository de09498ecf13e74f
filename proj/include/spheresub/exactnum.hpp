#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>

#include "spheresub/geom.hpp"

namespace spheresub {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "-3", "1.25" (decimals are exact) into a rational.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) return Rational(s);
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(s);
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
    if (ip.empty()) ip = "0";
    for (char ch : ip + fp)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw Error("bad rational literal: " + s);
    BigInt num(ip.empty() ? "0" : ip);
    BigInt den = 1;
    for (char ch : fp) {
        num = num * 10 + (ch - '0');
        den *= 10;
    }
    Rational r(num, den);
    return neg ? -r : r;
}

inline std::string rational_str(const Rational& r) { return r.str(); }

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re = 0, im = 0;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long v) : re(v) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    auto operator<=>(const GaussianRational& o) const {
        if (auto c = re <=> o.re; c != 0) return c;
        return im <=> o.im;
    }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    GaussianRational operator/(const GaussianRational& o) const {
        Rational n2 = o.norm2();
        if (n2 == 0) throw Error("division by zero Gaussian rational");
        GaussianRational p = (*this) * o.conj();
        return {p.re / n2, p.im / n2};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    C64 to_c64() const { return {re.convert_to<double>(), im.convert_to<double>()}; }
};

inline std::string to_string(const GaussianRational& g) {
    if (g.im == 0) return rational_str(g.re);
    std::string imag = (g.im == 1) ? "" : (g.im == -1 ? "-" : rational_str(g.im));
    imag += "i";
    if (g.re == 0) return imag;
    return rational_str(g.re) + (g.im > 0 ? "+" : "") + imag;
}

/// Parses "re", "re,im" with rational or decimal components.
inline GaussianRational parse_gaussian(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {parse_rational(s), Rational(0)};
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

/// Nearest rational with denominator <= max_den (Stern-Brocot walk).
inline Rational reconstruct_rational(double x, long max_den = 1000000) {
    if (!std::isfinite(x)) throw Error("cannot reconstruct non-finite value");
    bool neg = x < 0;
    double v = std::abs(x);
    BigInt ip(static_cast<long long>(v));
    double frac = v - std::floor(v);
    // continued fraction expansion of the fractional part
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double f = frac;
    for (int it = 0; it < 40; ++it) {
        if (q1 > max_den) break;
        long long a = (f > 1e-18) ? static_cast<long long>(1.0 / f) : 0;
        if (f <= 1e-18) break;
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 <= 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double r = 1.0 / f - double(a);
        if (std::abs(double(p1) / double(q1) - frac) < 1e-15) break;
        f = r;
    }
    Rational best;
    double err_best = 1e300;
    for (auto [p, q] : {std::pair{p1, q1}, std::pair{p0, q0}}) {
        if (q == 0) continue;
        double err = std::abs(double(p) / double(q) - frac);
        if (err < err_best) {
            err_best = err;
            best = Rational(p, q);
        }
    }
    Rational r = Rational(ip) + best;
    return neg ? -r : r;
}

inline GaussianRational reconstruct_gaussian(const C64& z, long max_den = 1000000) {
    return {reconstruct_rational(z.real(), max_den), reconstruct_rational(z.imag(), max_den)};
}

} // namespace spheresub
