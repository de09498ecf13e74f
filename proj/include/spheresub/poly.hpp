#pragma once

#include <vector>

#include "spheresub/exactnum.hpp"
#include "spheresub/geom.hpp"

namespace spheresub {

// Dense polynomials, coefficients highest degree first. A binary
// (homogeneous) form of degree d is stored with exactly d+1 coefficients,
// leading zeros meaning roots at infinity.

template <class T>
using Poly = std::vector<T>;

namespace polyops {

inline bool is_zero(const C64& c, double tol = 0.0) { return std::abs(c) <= tol; }
inline bool is_zero(const GaussianRational& g, double = 0.0) { return g.is_zero(); }

template <class T>
Poly<T> trimmed(const Poly<T>& p, double tol = 0.0) {
    size_t i = 0;
    while (i + 1 < p.size() && is_zero(p[i], tol)) ++i;
    return Poly<T>(p.begin() + long(i), p.end());
}

template <class T>
bool all_zero(const Poly<T>& p, double tol = 0.0) {
    for (const auto& c : p)
        if (!is_zero(c, tol)) return false;
    return true;
}

template <class T>
T eval(const Poly<T>& p, const T& z) {
    T acc = T(0);
    for (const auto& c : p) acc = acc * z + c;
    return acc;
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
    if (p.size() <= 1) return {T(0)};
    size_t n = p.size() - 1; // degree
    Poly<T> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = p[i] * T(long(n - i));
    return d;
}

template <class T>
Poly<T> add(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> out(std::max(a.size(), b.size()), T(0));
    for (size_t i = 0; i < a.size(); ++i) out[out.size() - a.size() + i] = a[i];
    for (size_t i = 0; i < b.size(); ++i)
        out[out.size() - b.size() + i] = out[out.size() - b.size() + i] + b[i];
    return out;
}

template <class T>
Poly<T> scale(const Poly<T>& a, const T& s) {
    Poly<T> out = a;
    for (auto& c : out) c = c * s;
    return out;
}

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> out(a.size() + b.size() - 1, T(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

/// Quotient and remainder of exact division (field coefficients).
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a_in, const Poly<T>& b_in) {
    Poly<T> a = trimmed(a_in), b = trimmed(b_in);
    if (b.size() == 1 && is_zero(b[0])) throw Error("polynomial division by zero");
    if (a.size() < b.size()) return {{T(0)}, a};
    Poly<T> q(a.size() - b.size() + 1, T(0));
    Poly<T> r = a;
    for (size_t i = 0; i + b.size() <= r.size(); ++i) {
        T f = r[i] / b[0];
        q[i] = f;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] - f * b[j];
    }
    Poly<T> rem(r.end() - long(b.size()) + 1, r.end());
    return {q, trimmed(rem)};
}

/// Greatest common divisor up to scalar (Euclid); exact coefficients only.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    a = trimmed(a);
    b = trimmed(b);
    while (!(b.size() == 1 && is_zero(b[0]))) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!is_zero(a[0])) { // normalize monic
        T lead = a[0];
        for (auto& c : a) c = c / lead;
    }
    return a;
}

// ---- binary (homogeneous) forms ----

/// Evaluates the degree-(n-1) form with coefficients p at (a, b):
/// sum p[i] a^(d-i) b^i.
template <class T>
T eval_form(const Poly<T>& p, const T& a, const T& b) {
    size_t d = p.size() - 1;
    std::vector<T> bp(d + 1);
    bp[0] = T(1);
    for (size_t i = 1; i <= d; ++i) bp[i] = bp[i - 1] * b;
    T acc = T(0);
    for (size_t i = 0; i <= d; ++i) acc = acc * a + p[i] * bp[i];
    return acc;
}

/// Partial derivative of a binary form with respect to the first variable.
template <class T>
Poly<T> form_da(const Poly<T>& p) {
    size_t d = p.size() - 1;
    if (d == 0) return {T(0)};
    Poly<T> out(d, T(0));
    for (size_t i = 0; i < d; ++i) out[i] = p[i] * T(long(d - i));
    return out;
}

/// Partial derivative of a binary form with respect to the second variable.
template <class T>
Poly<T> form_db(const Poly<T>& p) {
    size_t d = p.size() - 1;
    if (d == 0) return {T(0)};
    Poly<T> out(d, T(0));
    for (size_t i = 1; i <= d; ++i) out[i - 1] = p[i] * T(long(i));
    return out;
}

/// Substitutes the pair (N, D) of degree-e forms into a degree-d form:
/// result(x, y) = sum p[i] N(x,y)^(d-i) D(x,y)^i, a form of degree d*e.
template <class T>
Poly<T> form_compose(const Poly<T>& p, const Poly<T>& N, const Poly<T>& D) {
    size_t d = p.size() - 1;
    std::vector<Poly<T>> npow(d + 1), dpow(d + 1);
    npow[0] = {T(1)};
    dpow[0] = {T(1)};
    for (size_t i = 1; i <= d; ++i) {
        npow[i] = mul(npow[i - 1], N);
        dpow[i] = mul(dpow[i - 1], D);
    }
    Poly<T> out = {T(0)};
    for (size_t i = 0; i <= d; ++i) {
        Poly<T> term = scale(mul(npow[d - i], dpow[i]), p[i]);
        out = add(out, term);
    }
    // pad to exact degree d*e
    size_t want = d * (N.size() - 1) + 1;
    while (out.size() < want) out.insert(out.begin(), T(0));
    return out;
}

/// Taylor coefficients of p about c (constant term first), via repeated
/// synthetic division.
template <class T>
std::vector<T> taylor_at(const Poly<T>& p, const T& c) {
    std::vector<T> work(p.begin(), p.end());
    std::vector<T> out;
    for (size_t k = 0; k < p.size(); ++k) {
        // divide work by (z - c): remainder is the next Taylor coefficient
        T acc = T(0);
        for (auto& w : work) {
            acc = acc * c + w;
            w = acc;
        }
        out.push_back(work.back());
        work.pop_back();
    }
    return out;
}

} // namespace polyops

} // namespace spheresub
