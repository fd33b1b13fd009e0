#ifndef AUTALG_TESTS_HELPERS_HPP
#define AUTALG_TESTS_HELPERS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "autalg/algebra.hpp"
#include "autalg/matrix.hpp"

namespace autalg_tests {

template <class F>
autalg::Mat<F> make_mat(const F& K, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
    autalg::Mat<F> m = autalg::mat_zero(K, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = K.from_int(rows[i][j]);
    return m;
}

template <class F>
autalg::Vec<F> make_vec(const F& K, const std::vector<std::int64_t>& vals) {
    autalg::Vec<F> v;
    v.reserve(vals.size());
    for (auto x : vals) v.push_back(K.from_int(x));
    return v;
}

template <class F>
autalg::Algebra<F> make_algebra(const F& K, const std::vector<std::string>& names,
                                const std::vector<std::array<std::int64_t, 4>>& ents) {
    autalg::Algebra<F> A;
    A.K = K;
    A.basis = names;
    for (const auto& e : ents)
        A.entries.push_back({static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]),
                             static_cast<std::size_t>(e[2]), K.from_int(e[3])});
    autalg::algebra_canonicalize(A);
    return A;
}

template <class F>
autalg::Poly<F> make_poly(const F& K, const std::vector<std::int64_t>& asc) {
    autalg::Poly<F> p;
    p.reserve(asc.size());
    for (auto x : asc) p.push_back(K.from_int(x));
    autalg::poly_trim(K, p);
    return p;
}

} // namespace autalg_tests

#endif
