#ifndef AUTALG_POLYFACTOR_HPP
#define AUTALG_POLYFACTOR_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "poly.hpp"
#include "rationals.hpp"

namespace autalg {

// Factor-finding over finite fields: distinct-degree sieve for the smallest
// irreducible factor, Cantor-Zassenhaus splitting, root extraction, and a
// Rabin irreducibility test.  Everything is deterministic given the caller's
// generator state.

template <class F>
Poly<F> poly_powmod_big(const F& K, Poly<F> a, bigint e, const Poly<F>& m) {
    Poly<F> r = poly_const(K, K.one());
    a = poly_mod(K, a, m);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mulmod(K, r, a, m);
        a = poly_mulmod(K, a, a, m);
        e >>= 1;
    }
    return r;
}

template <class F>
Poly<F> poly_random(const F& K, int deg_bound, std::mt19937_64& rng) {
    Poly<F> r(deg_bound, K.zero());
    for (auto& c : r) c = K.element(rng() % K.size());
    poly_trim(K, r);
    return r;
}

/// split a product of distinct degree-d irreducibles until one factor remains
template <class F>
Poly<F> poly_edf_extract(const F& K, Poly<F> g, int d, std::mt19937_64& rng) {
    while (poly_deg<F>(g) > d) {  // loop until a single factor survives
        Poly<F> r = poly_random(K, poly_deg<F>(g), rng);
        if (poly_deg<F>(r) < 0) continue;
        Poly<F> h;
        if (K.characteristic() == 2) {
            // trace map sum r^(2^i), i < k*d
            bigint q = K.size();
            int bits = 0;
            for (bigint t = q; t > 1; t >>= 1) ++bits;
            Poly<F> acc = poly_mod(K, r, g), pw = acc;
            for (int i = 1; i < bits * d; ++i) {
                pw = poly_mulmod(K, pw, pw, g);
                acc = poly_add(K, acc, pw);
            }
            h = acc;
        } else {
            bigint e = 1;
            for (int i = 0; i < d; ++i) e *= bigint(K.size());
            e = (e - 1) / 2;
            h = poly_powmod_big(K, r, e, g);
            h = poly_sub(K, h, poly_const(K, K.one()));
        }
        Poly<F> t = poly_gcd(K, h, g);
        int dt = poly_deg<F>(t);
        if (dt <= 0 || dt >= poly_deg<F>(g)) continue;
        Poly<F> other = poly_divmod(K, g, t).first;
        g = (dt <= poly_deg<F>(other)) ? t : other;
        if (poly_deg<F>(g) == d) break;
    }
    return poly_make_monic(K, g);
}

/// smallest-degree monic irreducible factor of c (finite fields, deg c >= 1)
template <class F>
Poly<F> poly_min_irreducible_factor(const F& K, const Poly<F>& c0, std::mt19937_64& rng) {
    Poly<F> c = poly_make_monic(K, c0);
    if (poly_deg<F>(c) < 1) fail("DimensionMismatch", "constant polynomial has no irreducible factor");
    std::uint64_t q = K.size();
    Poly<F> w = poly_x(K);  // x^(q^d) mod c, built incrementally
    int n = poly_deg<F>(c);
    for (int d = 1; d <= n; ++d) {
        w = poly_powmod(K, w, q, c);
        Poly<F> g = poly_gcd(K, poly_sub(K, w, poly_x(K)), c);
        if (poly_deg<F>(g) > 0) {
            if (poly_deg<F>(g) == d) return g;
            return poly_edf_extract(K, g, d, rng);
        }
    }
    return c;  // unreachable for deg >= 1, kept for safety
}

/// Rabin test: c irreducible over GF(q)?
template <class F>
bool poly_irreducible(const F& K, const Poly<F>& c0) {
    Poly<F> c = poly_make_monic(K, c0);
    int n = poly_deg<F>(c);
    if (n < 1) return false;
    if (n == 1) return true;
    std::uint64_t q = K.size();
    // prime divisors of n
    std::vector<int> primes;
    int m = n;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) { primes.push_back(d); while (m % d == 0) m /= d; }
    if (m > 1) primes.push_back(m);

    bigint qn = 1;
    for (int i = 0; i < n; ++i) qn *= bigint(q);
    Poly<F> xq = poly_powmod_big(K, poly_x(K), qn, c);
    if (!poly_eq(K, xq, poly_mod(K, poly_x(K), c))) return false;
    for (int t : primes) {
        bigint e = 1;
        for (int i = 0; i < n / t; ++i) e *= bigint(q);
        Poly<F> w = poly_powmod_big(K, poly_x(K), e, c);
        Poly<F> g = poly_gcd(K, poly_sub(K, w, poly_x(K)), c);
        if (poly_deg<F>(g) != 0) return false;
    }
    return true;
}

/// distinct roots of c in GF(q) (no multiplicities), ascending canonical order
template <class F>
std::vector<typename F::elem> poly_roots(const F& K, const Poly<F>& c) {
    std::vector<typename F::elem> roots;
    if (poly_deg<F>(c) < 1) return roots;
    std::uint64_t q = K.size();
    if (q <= 4096) {
        for (std::uint64_t i = 0; i < q; ++i) {
            typename F::elem x = K.element(i);
            if (K.is_zero(poly_eval(K, c, x))) roots.push_back(x);
        }
        return roots;
    }
    // strip to the product of distinct linear factors, then split
    Poly<F> xq = poly_powmod_big(K, poly_x(K), bigint(q), c);
    Poly<F> lin = poly_gcd(K, poly_sub(K, xq, poly_x(K)), c);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);  // internal, fixed: results are value-determined
    std::vector<Poly<F>> stack{lin};
    while (!stack.empty()) {
        Poly<F> g = stack.back();
        stack.pop_back();
        int dg = poly_deg<F>(g);
        if (dg <= 0) continue;
        if (dg == 1) {
            roots.push_back(K.neg(g[0]));  // monic x + c -> root -c
            continue;
        }
        Poly<F> piece = poly_edf_extract(K, g, 1, rng);
        roots.push_back(K.neg(piece[0]));
        stack.push_back(poly_divmod(K, g, piece).first);
    }
    std::sort(roots.begin(), roots.end(),
              [&](const auto& a, const auto& b) { return K.index_of(a) < K.index_of(b); });
    return roots;
}

/// rational roots of c in Q, via the rational root theorem.  Divisor
/// enumeration factors by trial division up to 1e6; a surviving composite
/// cofactor contributes only itself, so pathological constants may
/// under-report (callers treat a short list as decomposition failure).
inline std::vector<bigrat> poly_roots_rational(const BigRational& K, Poly<BigRational> c) {
    std::vector<bigrat> roots;
    poly_trim(K, c);
    if (poly_deg<BigRational>(c) < 1) return roots;

    // clear denominators
    bigint scale = 1;
    for (const auto& q : c) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(q));
    std::vector<bigint> a(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        a[i] = boost::multiprecision::numerator(c[i] * bigrat(scale));

    std::size_t low = 0;
    while (low < a.size() && a[low] == 0) ++low;
    if (low > 0) roots.push_back(bigrat(0));

    auto divisors = [](bigint n) {
        std::vector<bigint> fs;  // prime factors with multiplicity
        if (n < 0) n = -n;
        for (bigint d = 2; d * d <= n && d <= 1000000; ++d)
            while (n % d == 0) { fs.push_back(d); n /= d; }
        if (n > 1) fs.push_back(n);
        std::vector<bigint> divs{1};
        for (std::size_t i = 0; i < fs.size();) {
            std::size_t j = i;
            while (j < fs.size() && fs[j] == fs[i]) ++j;
            std::size_t reps = j - i;
            std::vector<bigint> next;
            for (const auto& d : divs) {
                bigint pw = 1;
                for (std::size_t k = 0; k <= reps; ++k) { next.push_back(d * pw); pw *= fs[i]; }
            }
            divs = std::move(next);
            i = j;
        }
        std::sort(divs.begin(), divs.end());
        divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
        return divs;
    };

    bigint a0 = a[low], alead = a.back();
    auto rs = divisors(a0), ss = divisors(alead);
    for (const auto& r : rs)
        for (const auto& s : ss) {
            if (boost::multiprecision::gcd(r, s) != 1) continue;
            for (int sign : {1, -1}) {
                bigrat cand(sign * r, s);
                if (K.is_zero(poly_eval(K, c, cand))) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace autalg

#endif
