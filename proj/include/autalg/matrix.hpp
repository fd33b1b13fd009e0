#ifndef AUTALG_MATRIX_HPP
#define AUTALG_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poly.hpp"

namespace autalg {

/// Dense row-major matrix over a field object K.  Linear maps act on column
/// vectors, so column j is the image of the j-th basis vector.
template <class F>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<typename F::elem> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, typename F::elem fill)
        : rows(r), cols(c), a(r * c, std::move(fill)) {}

    typename F::elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const typename F::elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

template <class F>
using Vec = std::vector<typename F::elem>;

template <class F>
Mat<F> mat_zero(const F& K, std::size_t r, std::size_t c) {
    return Mat<F>(r, c, K.zero());
}

template <class F>
Mat<F> mat_identity(const F& K, std::size_t n) {
    Mat<F> m = mat_zero(K, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K.one();
    return m;
}

template <class F>
bool mat_eq(const F& K, const Mat<F>& a, const Mat<F>& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.a.size(); ++i)
        if (!K.eq(a.a[i], b.a[i])) return false;
    return true;
}

/// Lexicographic row-major comparison; gives the canonical output order for
/// enumerated matrix lists.
template <class F>
bool mat_less(const F& K, const Mat<F>& a, const Mat<F>& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    if (a.cols != b.cols) return a.cols < b.cols;
    for (std::size_t i = 0; i < a.a.size(); ++i) {
        if (K.less(a.a[i], b.a[i])) return true;
        if (K.less(b.a[i], a.a[i])) return false;
    }
    return false;
}

template <class F>
Mat<F> mat_add(const F& K, const Mat<F>& a, const Mat<F>& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        fail("DimensionMismatch", "matrix addition shape mismatch");
    Mat<F> r = a;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = K.add(r.a[i], b.a[i]);
    return r;
}

template <class F>
Mat<F> mat_sub(const F& K, const Mat<F>& a, const Mat<F>& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        fail("DimensionMismatch", "matrix subtraction shape mismatch");
    Mat<F> r = a;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = K.sub(r.a[i], b.a[i]);
    return r;
}

template <class F>
Mat<F> mat_scale(const F& K, const typename F::elem& s, const Mat<F>& a) {
    Mat<F> r = a;
    for (auto& x : r.a) x = K.mul(s, x);
    return r;
}

template <class F>
Mat<F> mat_mul(const F& K, const Mat<F>& a, const Mat<F>& b) {
    if (a.cols != b.rows) fail("DimensionMismatch", "matrix product shape mismatch");
    Mat<F> r = mat_zero(K, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const auto& aik = a.at(i, k);
            if (K.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = K.add(r.at(i, j), K.mul(aik, b.at(k, j)));
        }
    return r;
}

template <class F>
Vec<F> mat_vec(const F& K, const Mat<F>& m, const Vec<F>& v) {
    if (m.cols != v.size()) fail("DimensionMismatch", "matrix-vector shape mismatch");
    Vec<F> r(m.rows, K.zero());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!K.is_zero(m.at(i, j))) r[i] = K.add(r[i], K.mul(m.at(i, j), v[j]));
    return r;
}

template <class F>
Mat<F> mat_transpose(const Mat<F>& m) {
    Mat<F> r;
    r.rows = m.cols;
    r.cols = m.rows;
    r.a.resize(m.a.size(), m.a.empty() ? typename F::elem{} : m.a[0]);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

template <class F>
Mat<F> mat_pow(const F& K, Mat<F> base, std::uint64_t e) {
    if (base.rows != base.cols) fail("DimensionMismatch", "power of non-square matrix");
    Mat<F> acc = mat_identity(K, base.rows);
    while (e) {
        if (e & 1) acc = mat_mul(K, acc, base);
        base = mat_mul(K, base, base);
        e >>= 1;
    }
    return acc;
}

template <class F>
typename F::elem mat_trace(const F& K, const Mat<F>& m) {
    if (m.rows != m.cols) fail("DimensionMismatch", "trace of non-square matrix");
    auto t = K.zero();
    for (std::size_t i = 0; i < m.rows; ++i) t = K.add(t, m.at(i, i));
    return t;
}

template <class F>
bool vec_eq(const F& K, const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!K.eq(a[i], b[i])) return false;
    return true;
}

template <class F>
bool vec_is_zero(const F& K, const Vec<F>& v) {
    for (const auto& x : v)
        if (!K.is_zero(x)) return false;
    return true;
}

/// In-place reduced row echelon form.  Returns the pivot columns in order.
template <class F>
std::vector<std::size_t> rref_inplace(const F& K, Mat<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && K.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        auto piv_inv = K.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = K.mul(piv_inv, m.at(row, j));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || K.is_zero(m.at(i, col))) continue;
            auto f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t mat_rank(const F& K, Mat<F> m) {
    return rref_inplace(K, m).size();
}

template <class F>
typename F::elem mat_det(const F& K, Mat<F> m) {
    if (m.rows != m.cols) fail("DimensionMismatch", "determinant of non-square matrix");
    auto det = K.one();
    std::size_t n = m.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && K.is_zero(m.at(sel, col))) ++sel;
        if (sel == n) return K.zero();
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            det = K.neg(det);
        }
        det = K.mul(det, m.at(col, col));
        auto piv_inv = K.inv(m.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (K.is_zero(m.at(i, col))) continue;
            auto f = K.mul(piv_inv, m.at(i, col));
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) = K.sub(m.at(i, j), K.mul(f, m.at(col, j)));
        }
    }
    return det;
}

template <class F>
Mat<F> mat_inverse(const F& K, const Mat<F>& m) {
    if (m.rows != m.cols) fail("DimensionMismatch", "inverse of non-square matrix");
    std::size_t n = m.rows;
    Mat<F> aug = mat_zero(K, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = K.one();
    }
    auto pivots = rref_inplace(K, aug);
    if (pivots.size() != n || (n > 0 && pivots.back() >= n))
        fail("SingularMatrix", "matrix is not invertible");
    Mat<F> inv = mat_zero(K, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

/// Division-free characteristic polynomial det(x·id − m), monic, ascending
/// coefficients (Berkowitz iteration over leading principal minors).
template <class F>
Poly<F> charpoly(const F& K, const Mat<F>& m) {
    if (m.rows != m.cols) fail("DimensionMismatch", "charpoly of non-square matrix");
    std::size_t n = m.rows;
    std::vector<typename F::elem> C{K.one()};  // descending coefficients
    if (n > 0) C = {K.one(), K.neg(m.at(0, 0))};
    for (std::size_t k = 2; k <= n; ++k) {
        // leading k×k block split as [[B, S], [R, a]]
        Vec<F> t(k - 1, K.zero());
        for (std::size_t i = 0; i < k - 1; ++i) t[i] = m.at(i, k - 1);
        std::vector<typename F::elem> q;  // q[i] = R·B^i·S
        q.reserve(k - 1);
        for (std::size_t step = 0; step + 1 < k; ++step) {
            auto dot = K.zero();
            for (std::size_t j = 0; j < k - 1; ++j)
                dot = K.add(dot, K.mul(m.at(k - 1, j), t[j]));
            q.push_back(dot);
            if (step + 2 < k) {
                Vec<F> nt(k - 1, K.zero());
                for (std::size_t i = 0; i < k - 1; ++i)
                    for (std::size_t j = 0; j < k - 1; ++j)
                        if (!K.is_zero(m.at(i, j)))
                            nt[i] = K.add(nt[i], K.mul(m.at(i, j), t[j]));
                t = std::move(nt);
            }
        }
        auto neg_a = K.neg(m.at(k - 1, k - 1));
        std::vector<typename F::elem> Cn(k + 1, K.zero());
        for (std::size_t i = 0; i <= k; ++i) {
            auto acc = K.zero();
            if (i < k) acc = C[i];
            if (i >= 1 && i - 1 < k) acc = K.add(acc, K.mul(neg_a, C[i - 1]));
            for (std::size_t j = 0; j + 2 <= i; ++j)
                acc = K.sub(acc, K.mul(q[i - j - 2], C[j]));
            Cn[i] = acc;
        }
        C = std::move(Cn);
    }
    Poly<F> p(C.rbegin(), C.rend());
    poly_trim(K, p);
    return p;
}

/// Row span in canonical (reduced row echelon, no zero rows) form.
template <class F>
struct Subspace {
    std::size_t ambient = 0;
    Mat<F> basis;  // dim() rows, ambient columns

    std::size_t dim() const { return basis.rows; }
};

template <class F>
Subspace<F> subspace_zero(const F& K, std::size_t ambient) {
    Subspace<F> s;
    s.ambient = ambient;
    s.basis = mat_zero(K, 0, ambient);
    return s;
}

template <class F>
Subspace<F> subspace_from_rows(const F& K, std::size_t ambient, const std::vector<Vec<F>>& rows) {
    Mat<F> m = mat_zero(K, rows.size(), ambient);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != ambient)
            fail("DimensionMismatch", "subspace generator has wrong length");
        for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = rows[i][j];
    }
    std::size_t rank = rref_inplace(K, m).size();
    Subspace<F> s;
    s.ambient = ambient;
    s.basis = mat_zero(K, rank, ambient);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < ambient; ++j) s.basis.at(i, j) = m.at(i, j);
    return s;
}

template <class F>
Subspace<F> subspace_full(const F& K, std::size_t ambient) {
    Subspace<F> s;
    s.ambient = ambient;
    s.basis = mat_identity(K, ambient);
    return s;
}

template <class F>
bool subspace_eq(const F& K, const Subspace<F>& a, const Subspace<F>& b) {
    return a.ambient == b.ambient && mat_eq(K, a.basis, b.basis);
}

/// Reduce v against the echelon basis; the remainder is zero iff v lies in
/// the span.
template <class F>
Vec<F> subspace_reduce(const F& K, const Subspace<F>& s, Vec<F> v) {
    if (v.size() != s.ambient) fail("DimensionMismatch", "membership test shape mismatch");
    for (std::size_t i = 0; i < s.basis.rows; ++i) {
        std::size_t piv = 0;
        while (piv < s.ambient && K.is_zero(s.basis.at(i, piv))) ++piv;
        if (piv == s.ambient) continue;
        if (K.is_zero(v[piv])) continue;
        auto f = v[piv];
        for (std::size_t j = piv; j < s.ambient; ++j)
            v[j] = K.sub(v[j], K.mul(f, s.basis.at(i, j)));
    }
    return v;
}

template <class F>
bool subspace_contains(const F& K, const Subspace<F>& s, const Vec<F>& v) {
    return vec_is_zero(K, subspace_reduce(K, s, v));
}

template <class F>
bool subspace_leq(const F& K, const Subspace<F>& a, const Subspace<F>& b) {
    for (std::size_t i = 0; i < a.basis.rows; ++i) {
        Vec<F> row(a.ambient);
        for (std::size_t j = 0; j < a.ambient; ++j) row[j] = a.basis.at(i, j);
        if (!subspace_contains(K, b, row)) return false;
    }
    return true;
}

/// Kernel of m as a subspace of the column-vector domain F^cols.
template <class F>
Subspace<F> mat_kernel(const F& K, Mat<F> m) {
    std::size_t nvars = m.cols;
    auto pivots = rref_inplace(K, m);
    std::vector<bool> is_pivot(nvars, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec<F>> gens;
    for (std::size_t free = 0; free < nvars; ++free) {
        if (is_pivot[free]) continue;
        Vec<F> v(nvars, K.zero());
        v[free] = K.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = K.neg(m.at(r, free));
        gens.push_back(std::move(v));
    }
    return subspace_from_rows(K, nvars, gens);
}

enum class SolveKind { Empty, Unique, Family };

template <class F>
struct AffineSolution {
    SolveKind kind = SolveKind::Empty;
    Vec<F> particular;       // valid unless Empty
    Subspace<F> homogeneous; // solution directions; zero-dimensional when Unique
};

/// Complete solution set of constraints·x = rhs.
template <class F>
AffineSolution<F> solve_affine(const F& K, const Mat<F>& constraints, const Vec<F>& rhs) {
    if (constraints.rows != rhs.size())
        fail("DimensionMismatch", "right-hand side length mismatch");
    std::size_t nvars = constraints.cols;
    Mat<F> aug = mat_zero(K, constraints.rows, nvars + 1);
    for (std::size_t i = 0; i < constraints.rows; ++i) {
        for (std::size_t j = 0; j < nvars; ++j) aug.at(i, j) = constraints.at(i, j);
        aug.at(i, nvars) = rhs[i];
    }
    auto pivots = rref_inplace(K, aug);
    AffineSolution<F> out;
    if (!pivots.empty() && pivots.back() == nvars) {
        out.kind = SolveKind::Empty;
        return out;
    }
    out.particular.assign(nvars, K.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out.particular[pivots[r]] = aug.at(r, nvars);
    out.homogeneous = mat_kernel(K, constraints);
    out.kind = out.homogeneous.dim() == 0 ? SolveKind::Unique : SolveKind::Family;
    return out;
}

/// Smallest subspace containing the seeds and stable under every operator
/// (worklist closure with echelon insertion; at most `ambient` insertions).
template <class F>
Subspace<F> spin(const F& K, const std::vector<Vec<F>>& seeds, const std::vector<Mat<F>>& operators) {
    std::size_t ambient = 0;
    if (!seeds.empty()) ambient = seeds[0].size();
    else if (!operators.empty()) ambient = operators[0].rows;
    for (const auto& op : operators)
        if (op.rows != op.cols || op.rows != ambient)
            fail("DimensionMismatch", "spin operator shape mismatch");

    // rows kept in reduced echelon form, indexed by pivot column
    std::vector<Vec<F>> rows;
    std::vector<std::size_t> pivcol;
    std::vector<Vec<F>> work(seeds);
    auto insert = [&](Vec<F> v) -> bool {
        if (v.size() != ambient) fail("DimensionMismatch", "spin seed shape mismatch");
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!K.is_zero(v[pivcol[i]])) {
                auto f = v[pivcol[i]];
                for (std::size_t j = 0; j < ambient; ++j)
                    v[j] = K.sub(v[j], K.mul(f, rows[i][j]));
            }
        std::size_t piv = 0;
        while (piv < ambient && K.is_zero(v[piv])) ++piv;
        if (piv == ambient) return false;
        auto s = K.inv(v[piv]);
        for (std::size_t j = piv; j < ambient; ++j) v[j] = K.mul(s, v[j]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!K.is_zero(rows[i][piv])) {
                auto f = rows[i][piv];
                for (std::size_t j = 0; j < ambient; ++j)
                    rows[i][j] = K.sub(rows[i][j], K.mul(f, v[j]));
            }
        rows.push_back(std::move(v));
        pivcol.push_back(piv);
        return true;
    };
    while (!work.empty()) {
        Vec<F> v = std::move(work.back());
        work.pop_back();
        Vec<F> copy = v;
        if (!insert(std::move(copy))) continue;
        if (rows.size() == ambient) return subspace_full(K, ambient);  // closure is everything
        for (const auto& op : operators) work.push_back(mat_vec(K, op, v));
    }
    return subspace_from_rows(K, ambient, rows);
}

/// Unique g* with pairing(g·v, w) = pairing(v, g*·w) for all v, w, where the
/// pairing is v^T·P·w.  Requires P invertible; g* = P^{-1}·g^T·P.
template <class F>
Mat<F> adjoint(const F& K, const Mat<F>& g, const Mat<F>& pairing) {
    if (pairing.rows != pairing.cols || g.rows != g.cols || g.rows != pairing.rows)
        fail("DimensionMismatch", "adjoint shape mismatch");
    Mat<F> pinv;
    try {
        pinv = mat_inverse(K, pairing);
    } catch (const Error&) {
        fail("DegeneratePairing", "pairing matrix is singular");
    }
    return mat_mul(K, pinv, mat_mul(K, mat_transpose<F>(g), pairing));
}

} // namespace autalg

#endif
