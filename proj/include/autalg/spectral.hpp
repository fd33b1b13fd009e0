#ifndef AUTALG_SPECTRAL_HPP
#define AUTALG_SPECTRAL_HPP

#include <algorithm>
#include <vector>

#include "matrix.hpp"
#include "polyfactor.hpp"
#include "rationals.hpp"

namespace autalg {

template <class F>
Subspace<F> eigenspace(const F& K, const Mat<F>& m, const typename F::elem& lam) {
    if (m.rows != m.cols) fail("DimensionMismatch", "eigenspace of non-square matrix");
    Mat<F> shifted = m;
    for (std::size_t i = 0; i < m.rows; ++i)
        shifted.at(i, i) = K.sub(shifted.at(i, i), lam);
    return mat_kernel(K, shifted);
}

namespace detail {

template <class F>
std::vector<typename F::elem> eigenvalues_by_roots(const F& K, const Mat<F>& m) {
    Poly<F> cp = charpoly(K, m);
    return poly_roots(K, cp);
}

// Small fields: scan every element.  Large fields and Q go through the
// characteristic polynomial.
template <class F>
std::vector<typename F::elem> eigenvalues_impl(const F& K, const Mat<F>& m) {
    if (K.finite() && K.size() <= 121) {
        std::vector<typename F::elem> out;
        for (std::uint64_t i = 0; i < K.size(); ++i) {
            auto lam = K.element(i);
            if (eigenspace(K, m, lam).dim() > 0) out.push_back(lam);
        }
        return out;
    }
    return eigenvalues_by_roots(K, m);
}

inline std::vector<BigRational::elem> eigenvalues_impl(const BigRational& K, const Mat<BigRational>& m) {
    Poly<BigRational> cp = charpoly(K, m);
    return poly_roots_rational(K, cp);
}

} // namespace detail

/// All field elements lam with a nonzero eigenspace.  Over Q only rational
/// eigenvalues are reported (the constructions only ever place field scalars
/// on the diagonal).  Sorted in the field's canonical order.
template <class F>
std::vector<typename F::elem> eigenvalues(const F& K, const Mat<F>& m) {
    if (m.rows != m.cols) fail("DimensionMismatch", "eigenvalues of non-square matrix");
    auto out = detail::eigenvalues_impl(K, m);
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return K.less(a, b); });
    return out;
}

} // namespace autalg

#endif
