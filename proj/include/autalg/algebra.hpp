#ifndef AUTALG_ALGEBRA_HPP
#define AUTALG_ALGEBRA_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fieldspec.hpp"
#include "matrix.hpp"
#include "spectral.hpp"

namespace autalg {

/// One sparse entry of the multiplication tensor: b_i · b_j = Σ_k c·b_k.
template <class F>
struct StructureEntry {
    std::size_t i = 0, j = 0, k = 0;
    typename F::elem c{};
};

/// Basis-range annotation.  Leaves partition [0, dim); dotted names encode
/// nesting (a leaf "core.A.deg1" lives inside the subalgebra "core.A" inside
/// "core").  Roles:
///   unit-line       the span of a designated left identity (forced pointwise)
///   generator       maps on this block are enumerated freely
///   generated       reached by products of generator blocks
///   pairing-linked  determined through a bilinear pairing with another block
///   plain           enumerated freely, no special structure
template <class F>
struct BlockInfo {
    std::string name;
    std::size_t lo = 0, hi = 0;  // half-open index range
    std::string role = "plain";
    std::optional<typename F::elem> eigenvalue;  // R_e eigenvalue inside the parent
    std::string linked_to;  // pairing-linked only: source block name
    Mat<F> pairing;         // rows = this block, cols = source block

    std::size_t dim() const { return hi - lo; }
};

template <class F>
struct Algebra {
    F K;
    std::vector<std::string> basis;
    std::vector<StructureEntry<F>> entries;  // sorted by (i,j,k), nonzero coefficients
    std::vector<BlockInfo<F>> blocks;        // optional; when present, leaves partition the basis
    std::string construction;                // meta
    std::vector<std::pair<std::string, std::string>> params;  // meta, ordered

    std::size_t dim() const { return basis.size(); }
};

namespace detail {
template <class F>
bool entry_key_less(const StructureEntry<F>& a, const StructureEntry<F>& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
}
} // namespace detail

/// Sort entries, merge duplicate keys additively, drop zero coefficients,
/// range-check indices.  Builders call this once after pushing raw entries.
template <class F>
void algebra_canonicalize(Algebra<F>& A) {
    std::size_t n = A.dim();
    for (const auto& e : A.entries)
        if (e.i >= n || e.j >= n || e.k >= n)
            fail("SchemaViolation", "structure index out of range");
    std::stable_sort(A.entries.begin(), A.entries.end(), detail::entry_key_less<F>);
    std::vector<StructureEntry<F>> out;
    out.reserve(A.entries.size());
    for (auto& e : A.entries) {
        if (!out.empty() && out.back().i == e.i && out.back().j == e.j && out.back().k == e.k)
            out.back().c = A.K.add(out.back().c, e.c);
        else
            out.push_back(e);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const StructureEntry<F>& e) { return A.K.is_zero(e.c); }),
              out.end());
    A.entries = std::move(out);
}

/// Leaf blocks of the (possibly nested) block annotation: blocks that are not
/// proper prefixes of another block name.  All stored blocks are leaves by
/// convention; this simply validates and returns them in range order.
template <class F>
std::vector<const BlockInfo<F>*> block_leaves(const Algebra<F>& A) {
    std::vector<const BlockInfo<F>*> out;
    for (const auto& b : A.blocks) out.push_back(&b);
    std::sort(out.begin(), out.end(),
              [](const BlockInfo<F>* x, const BlockInfo<F>* y) { return x->lo < y->lo; });
    return out;
}

template <class F>
void algebra_validate(const Algebra<F>& A) {
    std::size_t n = A.dim();
    if (n == 0) fail("SchemaViolation", "algebra dimension must be positive");
    for (std::size_t t = 0; t < A.entries.size(); ++t) {
        const auto& e = A.entries[t];
        if (e.i >= n || e.j >= n || e.k >= n)
            fail("SchemaViolation", "structure index out of range at entry " + std::to_string(t));
        if (A.K.is_zero(e.c))
            fail("SchemaViolation", "zero coefficient stored at entry " + std::to_string(t));
        if (t > 0 && !detail::entry_key_less<F>(A.entries[t - 1], e))
            fail("SchemaViolation", "structure entries not in strict (i,j,k) order at entry " +
                                        std::to_string(t));
    }
    if (!A.blocks.empty()) {
        auto leaves = block_leaves(A);
        std::size_t at = 0;
        for (const auto* b : leaves) {
            if (b->lo != at || b->hi <= b->lo || b->hi > n)
                fail("SchemaViolation", "block ranges do not partition the basis at '" + b->name + "'");
            at = b->hi;
            if (b->role != "unit-line" && b->role != "generator" && b->role != "generated" &&
                b->role != "pairing-linked" && b->role != "plain")
                fail("SchemaViolation", "unknown block role '" + b->role + "'");
            if (b->role == "pairing-linked") {
                if (b->linked_to.empty())
                    fail("SchemaViolation", "pairing-linked block '" + b->name + "' has no source");
                if (b->pairing.rows != b->dim())
                    fail("SchemaViolation", "pairing row count mismatch in '" + b->name + "'");
            }
        }
        if (at != n) fail("SchemaViolation", "block ranges do not cover the basis");
    }
}

template <class F>
Vec<F> basis_vector(const Algebra<F>& A, std::size_t i) {
    Vec<F> v(A.dim(), A.K.zero());
    v[i] = A.K.one();
    return v;
}

/// b_i · b_j straight from the sorted entry list.
template <class F>
Vec<F> basis_product(const Algebra<F>& A, std::size_t i, std::size_t j) {
    Vec<F> r(A.dim(), A.K.zero());
    StructureEntry<F> key{i, j, 0, A.K.zero()};
    auto it = std::lower_bound(A.entries.begin(), A.entries.end(), key, detail::entry_key_less<F>);
    for (; it != A.entries.end() && it->i == i && it->j == j; ++it) r[it->k] = it->c;
    return r;
}

template <class F>
Vec<F> multiply(const Algebra<F>& A, const Vec<F>& x, const Vec<F>& y) {
    if (x.size() != A.dim() || y.size() != A.dim())
        fail("DimensionMismatch", "product operand has wrong length");
    Vec<F> r(A.dim(), A.K.zero());
    for (const auto& e : A.entries) {
        if (A.K.is_zero(x[e.i]) || A.K.is_zero(y[e.j])) continue;
        r[e.k] = A.K.add(r[e.k], A.K.mul(A.K.mul(x[e.i], y[e.j]), e.c));
    }
    return r;
}

enum class Side { Left, Right };

/// Matrix of x ↦ v·x (left) or x ↦ x·v (right).
template <class F>
Mat<F> mult_operator(const Algebra<F>& A, const Vec<F>& v, Side side) {
    if (v.size() != A.dim()) fail("DimensionMismatch", "operator element has wrong length");
    Mat<F> m = mat_zero(A.K, A.dim(), A.dim());
    for (const auto& e : A.entries) {
        if (side == Side::Left) {
            if (!A.K.is_zero(v[e.i]))
                m.at(e.k, e.j) = A.K.add(m.at(e.k, e.j), A.K.mul(v[e.i], e.c));
        } else {
            if (!A.K.is_zero(v[e.j]))
                m.at(e.k, e.i) = A.K.add(m.at(e.k, e.i), A.K.mul(v[e.j], e.c));
        }
    }
    return m;
}

/// All left/right multiplication operators by basis vectors, L_0..L_{n-1}
/// followed by R_0..R_{n-1}.
template <class F>
std::vector<Mat<F>> basis_operators(const Algebra<F>& A) {
    std::size_t n = A.dim();
    std::vector<Mat<F>> ops(2 * n, mat_zero(A.K, n, n));
    for (const auto& e : A.entries) {
        ops[e.i].at(e.k, e.j) = A.K.add(ops[e.i].at(e.k, e.j), e.c);          // L_{b_i}
        ops[n + e.j].at(e.k, e.i) = A.K.add(ops[n + e.j].at(e.k, e.i), e.c);  // R_{b_j}
    }
    return ops;
}

/// Complete solution set of e·b_j = b_j for all j.
template <class F>
AffineSolution<F> left_identities(const Algebra<F>& A) {
    std::size_t n = A.dim();
    Mat<F> constraints = mat_zero(A.K, n * n, n);
    Vec<F> rhs(n * n, A.K.zero());
    for (const auto& e : A.entries)
        constraints.at(e.j * n + e.k, e.i) = A.K.add(constraints.at(e.j * n + e.k, e.i), e.c);
    for (std::size_t j = 0; j < n; ++j) rhs[j * n + j] = A.K.one();
    return solve_affine(A.K, constraints, rhs);
}

template <class F>
struct Eigenblock {
    typename F::elem eigenvalue;
    Subspace<F> space;
};

/// Eigenspace decomposition of right multiplication by a left identity e.
/// Succeeds iff ⟨e⟩ is exactly the eigenvalue-1 eigenspace, all other
/// eigenvalues are nonzero, and the eigenspaces sum directly to the whole
/// space.  The unit block comes first, the rest in canonical eigenvalue
/// order.  Throws DecompositionFails naming the defect otherwise.
template <class F>
std::vector<Eigenblock<F>> eigenblock_decomposition(const Algebra<F>& A, const Vec<F>& e) {
    std::size_t n = A.dim();
    for (std::size_t j = 0; j < n; ++j)
        if (!vec_eq(A.K, multiply(A, e, basis_vector(A, j)), basis_vector(A, j)))
            fail("DecompositionFails", "supplied vector is not a left identity");
    Mat<F> Re = mult_operator(A, e, Side::Right);
    auto evs = eigenvalues(A.K, Re);
    std::vector<Eigenblock<F>> out;
    Subspace<F> unit_line = subspace_from_rows(A.K, n, {e});
    std::size_t total = 0;
    bool saw_one = false;
    for (const auto& lam : evs) {
        Eigenblock<F> blk{lam, eigenspace(A.K, Re, lam)};
        if (A.K.eq(lam, A.K.one())) {
            saw_one = true;
            if (!subspace_eq(A.K, blk.space, unit_line))
                fail("DecompositionFails",
                     "eigenvalue-1 eigenspace is not exactly the unit line (dim " +
                         std::to_string(blk.space.dim()) + ")");
            total += blk.space.dim();
            out.insert(out.begin(), std::move(blk));
            continue;
        }
        if (A.K.is_zero(lam))
            fail("DecompositionFails", "zero eigenvalue of right multiplication by the unit");
        total += blk.space.dim();
        out.push_back(std::move(blk));
    }
    if (!saw_one)
        fail("DecompositionFails", "unit is not an eigenvalue-1 eigenvector");
    if (total != n)
        fail("DecompositionFails", "eigenspaces span dimension " + std::to_string(total) +
                                       " of " + std::to_string(n));
    return out;
}

template <class F>
struct AutomorphismCheck {
    bool ok = false;
    bool invertible = false;
    bool has_violation = false;
    std::size_t vi = 0, vj = 0;  // first violating basis pair when has_violation
};

/// g is an automorphism iff it is invertible and g(b_i·b_j) = g(b_i)·g(b_j)
/// for all basis pairs; reports the first violating pair.
template <class F>
AutomorphismCheck<F> is_automorphism(const Algebra<F>& A, const Mat<F>& g) {
    AutomorphismCheck<F> res;
    std::size_t n = A.dim();
    if (g.rows != n || g.cols != n)
        fail("DimensionMismatch", "automorphism candidate has wrong shape");
    res.invertible = mat_rank(A.K, g) == n;
    if (!res.invertible) return res;
    std::vector<Vec<F>> gcols(n, Vec<F>(n, A.K.zero()));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) gcols[j][i] = g.at(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<F> lhs = mat_vec(A.K, g, basis_product(A, i, j));
            Vec<F> rhs = multiply(A, gcols[i], gcols[j]);
            if (!vec_eq(A.K, lhs, rhs)) {
                res.has_violation = true;
                res.vi = i;
                res.vj = j;
                return res;
            }
        }
    res.ok = true;
    return res;
}

/// Smallest two-sided ideal containing v: the closure of {v} under all basis
/// left/right multiplications.
template <class F>
Subspace<F> ideal_generated_by(const Algebra<F>& A, const Vec<F>& v) {
    if (v.size() != A.dim()) fail("DimensionMismatch", "ideal seed has wrong length");
    if (vec_is_zero(A.K, v)) fail("ZeroVector", "ideal seed is zero");
    return spin(A.K, {v}, basis_operators(A));
}

enum class TraceKind { LL, RR, LR, RL };

template <class F>
struct TraceForm {
    Mat<F> gram;
    bool nondegenerate = false;
};

/// Gram matrix of (x,y) ↦ tr(X_x·Y_y) on the basis, X/Y ∈ {L, R} per kind.
template <class F>
TraceForm<F> trace_form(const Algebra<F>& A, TraceKind kind) {
    std::size_t n = A.dim();
    auto ops = basis_operators(A);
    auto pick = [&](bool left, std::size_t i) -> const Mat<F>& {
        return ops[left ? i : n + i];
    };
    bool xl = kind == TraceKind::LL || kind == TraceKind::LR;
    bool yl = kind == TraceKind::LL || kind == TraceKind::RL;
    TraceForm<F> tf;
    tf.gram = mat_zero(A.K, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Mat<F>& X = pick(xl, i);
            const Mat<F>& Y = pick(yl, j);
            auto acc = A.K.zero();
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    if (!A.K.is_zero(X.at(r, c)))
                        acc = A.K.add(acc, A.K.mul(X.at(r, c), Y.at(c, r)));
            tf.gram.at(i, j) = acc;
        }
    tf.nondegenerate = mat_rank(A.K, tf.gram) == n;
    return tf;
}

/// The multiplication tensor as an entry list — already the canonical sparse
/// form held by the algebra.
template <class F>
const std::vector<StructureEntry<F>>& export_tensor(const Algebra<F>& A) {
    return A.entries;
}

/// Whether g fixes the multiplication tensor under the natural GL(V) action
/// on V*⊗V*⊗V.  Computed through g^{-1} on the covariant slots, so it is an
/// independent code path from is_automorphism; the two must always agree.
template <class F>
bool stabilizes_tensor(const Algebra<F>& A, const Mat<F>& g) {
    std::size_t n = A.dim();
    if (g.rows != n || g.cols != n)
        fail("DimensionMismatch", "tensor action candidate has wrong shape");
    Mat<F> h;
    try {
        h = mat_inverse(A.K, g);
    } catch (const Error&) {
        return false;
    }
    std::vector<Vec<F>> hcols(n, Vec<F>(n, A.K.zero()));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) hcols[j][i] = h.at(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // (g·t)(b_i, b_j) = g·t(g^{-1}b_i, g^{-1}b_j), compared to t(b_i, b_j)
            Vec<F> moved = mat_vec(A.K, g, multiply(A, hcols[i], hcols[j]));
            if (!vec_eq(A.K, moved, basis_product(A, i, j))) return false;
        }
    return true;
}

/// Block-diagonal sum: products within each summand unchanged, cross products
/// zero.  Block metadata is kept, prefixed on name collision.
template <class F>
Algebra<F> direct_sum(const Algebra<F>& A, const Algebra<F>& B) {
    if (!(A.K == B.K)) fail("FieldMismatch", "direct sum over different fields");
    Algebra<F> S;
    S.K = A.K;
    S.basis = A.basis;
    S.basis.insert(S.basis.end(), B.basis.begin(), B.basis.end());
    S.entries = A.entries;
    std::size_t off = A.dim();
    for (auto e : B.entries) {
        e.i += off;
        e.j += off;
        e.k += off;
        S.entries.push_back(e);
    }
    bool collide = false;
    for (const auto& ba : A.blocks)
        for (const auto& bb : B.blocks)
            if (ba.name == bb.name) collide = true;
    for (auto b : A.blocks) {
        if (collide) b.name = "lhs." + b.name;
        if (collide && !b.linked_to.empty()) b.linked_to = "lhs." + b.linked_to;
        S.blocks.push_back(std::move(b));
    }
    for (auto b : B.blocks) {
        b.lo += off;
        b.hi += off;
        if (collide) b.name = "rhs." + b.name;
        if (collide && !b.linked_to.empty()) b.linked_to = "rhs." + b.linked_to;
        S.blocks.push_back(std::move(b));
    }
    algebra_canonicalize(S);
    return S;
}

template <class F>
Algebra<F> zero_algebra(const F& K, std::size_t n, const std::string& prefix = "z") {
    Algebra<F> A;
    A.K = K;
    for (std::size_t i = 0; i < n; ++i) A.basis.push_back(prefix + std::to_string(i));
    A.construction = "zero";
    return A;
}

/// Structural equality (field, basis, entries, blocks, meta).
template <class F>
bool algebra_eq(const Algebra<F>& A, const Algebra<F>& B) {
    if (!(A.K == B.K) || A.basis != B.basis || A.construction != B.construction ||
        A.params != B.params)
        return false;
    if (A.entries.size() != B.entries.size() || A.blocks.size() != B.blocks.size()) return false;
    for (std::size_t t = 0; t < A.entries.size(); ++t) {
        const auto &x = A.entries[t], &y = B.entries[t];
        if (x.i != y.i || x.j != y.j || x.k != y.k || !A.K.eq(x.c, y.c)) return false;
    }
    for (std::size_t t = 0; t < A.blocks.size(); ++t) {
        const auto &x = A.blocks[t], &y = B.blocks[t];
        if (x.name != y.name || x.lo != y.lo || x.hi != y.hi || x.role != y.role ||
            x.linked_to != y.linked_to)
            return false;
        if (x.eigenvalue.has_value() != y.eigenvalue.has_value()) return false;
        if (x.eigenvalue && !A.K.eq(*x.eigenvalue, *y.eigenvalue)) return false;
        if (x.pairing.rows != y.pairing.rows || x.pairing.cols != y.pairing.cols) return false;
        if (x.pairing.rows > 0 && !mat_eq(A.K, x.pairing, y.pairing)) return false;
    }
    return true;
}

} // namespace autalg

#endif
