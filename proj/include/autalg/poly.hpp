#ifndef AUTALG_POLY_HPP
#define AUTALG_POLY_HPP

#include <string>
#include <vector>

#include "error.hpp"

namespace autalg {

// Dense univariate polynomials over an exact field, coefficients ascending
// (c[0] + c[1] x + ...).  Invariant: no trailing zero coefficients; the zero
// polynomial is the empty vector.

template <class F>
using Poly = std::vector<typename F::elem>;

template <class F>
void poly_trim(const F& K, Poly<F>& a) {
    while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

template <class F>
int poly_deg(const Poly<F>& a) {
    return (int)a.size() - 1;  // zero poly -> -1
}

template <class F>
Poly<F> poly_x(const F& K) {
    return Poly<F>{K.zero(), K.one()};
}

template <class F>
Poly<F> poly_const(const F& K, typename F::elem c) {
    Poly<F> r{c};
    poly_trim(K, r);
    return r;
}

template <class F>
bool poly_eq(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!K.eq(a[i], b[i])) return false;
    return true;
}

template <class F>
Poly<F> poly_add(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_sub(const F& K, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
    poly_trim(K, r);
    return r;
}

template <class F>
Poly<F> poly_scale(const F& K, const Poly<F>& a, typename F::elem c) {
    if (K.is_zero(c)) return {};
    Poly<F> r(a.size(), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.mul(a[i], c);
    return r;
}

template <class F>
Poly<F> poly_mul(const F& K, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    poly_trim(K, r);
    return r;
}

/// quotient/remainder; divisor must be nonzero
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& K, Poly<F> a, const Poly<F>& b) {
    if (b.empty()) fail("DivisionByZero", "polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    typename F::elem lead_inv = K.inv(b.back());
    Poly<F> q(a.size() - b.size() + 1, K.zero());
    for (int i = (int)a.size() - (int)b.size(); i >= 0; --i) {
        typename F::elem c = K.mul(a[i + b.size() - 1], lead_inv);
        if (K.is_zero(c)) continue;
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i + j] = K.sub(a[i + j], K.mul(c, b[j]));
    }
    poly_trim(K, a);
    poly_trim(K, q);
    return {q, a};
}

template <class F>
Poly<F> poly_mod(const F& K, const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(K, a, b).second;
}

template <class F>
Poly<F> poly_make_monic(const F& K, const Poly<F>& a) {
    if (a.empty()) return a;
    return poly_scale(K, a, K.inv(a.back()));
}

/// monic gcd
template <class F>
Poly<F> poly_gcd(const F& K, Poly<F> a, Poly<F> b) {
    while (!b.empty()) {
        Poly<F> r = poly_mod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(K, a);
}

template <class F>
typename F::elem poly_eval(const F& K, const Poly<F>& a, typename F::elem x) {
    typename F::elem acc = K.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = K.add(K.mul(acc, x), a[i]);
    return acc;
}

template <class F>
Poly<F> poly_mulmod(const F& K, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
    return poly_mod(K, poly_mul(K, a, b), m);
}

/// a^e mod m, exponent fits in uint64
template <class F>
Poly<F> poly_powmod(const F& K, Poly<F> a, std::uint64_t e, const Poly<F>& m) {
    Poly<F> r = poly_const(K, K.one());
    a = poly_mod(K, a, m);
    while (e) {
        if (e & 1) r = poly_mulmod(K, r, a, m);
        a = poly_mulmod(K, a, a, m);
        e >>= 1;
    }
    return r;
}

template <class F>
std::string poly_to_string(const F& K, const Poly<F>& a, const std::string& var = "x") {
    if (a.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || !K.eq(a[i], K.one())) s += K.to_string(a[i]);
        if (i > 0) {
            if (!K.eq(a[i], K.one())) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace autalg

#endif
