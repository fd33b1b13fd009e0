#ifndef AUTALG_GRADED_HPP
#define AUTALG_GRADED_HPP

#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "matrix.hpp"

namespace autalg {

/// Tensor: degree-d monomials are words over the variables, product is
/// concatenation.  Symmetric: monomials are exponent vectors, product is the
/// plain polynomial product (exponents add, coefficient 1).
enum class GradedFlavor { Tensor, Symmetric };

struct GradedLayer {
    GradedFlavor flavor = GradedFlavor::Tensor;
    std::size_t nvars = 0, degree = 0;
    std::vector<std::vector<std::size_t>> monomials;       // canonical order
    std::map<std::vector<std::size_t>, std::size_t> index;  // monomial -> position

    std::size_t dim() const { return monomials.size(); }
};

namespace detail {
inline void symmetric_monomials(std::size_t nvars, std::size_t degree, std::size_t at,
                                std::vector<std::size_t>& cur,
                                std::vector<std::vector<std::size_t>>& out) {
    if (at + 1 == nvars) {
        cur[at] = degree;
        out.push_back(cur);
        return;
    }
    for (std::size_t p = degree + 1; p-- > 0;) {
        cur[at] = p;
        symmetric_monomials(nvars, degree - p, at + 1, cur, out);
    }
}
} // namespace detail

inline GradedLayer monomial_layer(GradedFlavor flavor, std::size_t nvars, std::size_t degree) {
    if (nvars == 0 || degree == 0) fail("SchemaViolation", "monomial layer needs nvars, degree >= 1");
    GradedLayer L;
    L.flavor = flavor;
    L.nvars = nvars;
    L.degree = degree;
    if (flavor == GradedFlavor::Tensor) {
        std::vector<std::size_t> word(degree, 0);
        while (true) {
            L.monomials.push_back(word);
            std::size_t p = degree;
            while (p > 0 && ++word[p - 1] == nvars) {
                word[p - 1] = 0;
                --p;
            }
            if (p == 0) break;
        }
    } else {
        std::vector<std::size_t> cur(nvars, 0);
        detail::symmetric_monomials(nvars, degree, 0, cur, L.monomials);
    }
    for (std::size_t t = 0; t < L.monomials.size(); ++t) L.index[L.monomials[t]] = t;
    return L;
}

inline std::vector<std::size_t> monomial_product(GradedFlavor flavor,
                                                 const std::vector<std::size_t>& a,
                                                 const std::vector<std::size_t>& b) {
    std::vector<std::size_t> m = a;
    if (flavor == GradedFlavor::Tensor) {
        m.insert(m.end(), b.begin(), b.end());
    } else {
        for (std::size_t t = 0; t < m.size(); ++t) m[t] += b[t];
    }
    return m;
}

inline std::string monomial_name(GradedFlavor flavor, const std::vector<std::string>& vnames,
                                 const std::vector<std::size_t>& mono) {
    std::string s;
    if (flavor == GradedFlavor::Tensor) {
        for (std::size_t t = 0; t < mono.size(); ++t) {
            if (t) s += "*";
            s += vnames[mono[t]];
        }
    } else {
        for (std::size_t v = 0; v < mono.size(); ++v) {
            if (mono[v] == 0) continue;
            if (!s.empty()) s += "*";
            s += vnames[v];
            if (mono[v] > 1) s += "^" + std::to_string(mono[v]);
        }
    }
    return s;
}

namespace detail {

// expand the image of one symmetric monomial under x_j -> g·x_j
template <class F>
std::map<std::vector<std::size_t>, typename F::elem> substitute_monomial(
    const F& K, const GradedLayer& L, const Mat<F>& g, std::size_t col,
    typename F::elem scale) {
    std::map<std::vector<std::size_t>, typename F::elem> poly;
    poly[std::vector<std::size_t>(L.nvars, 0)] = std::move(scale);
    const auto& alpha = L.monomials[col];
    for (std::size_t v = 0; v < L.nvars; ++v)
        for (std::size_t rep = 0; rep < alpha[v]; ++rep) {
            std::map<std::vector<std::size_t>, typename F::elem> next;
            for (const auto& [exp, coef] : poly)
                for (std::size_t u = 0; u < L.nvars; ++u) {
                    if (K.is_zero(g.at(u, v))) continue;
                    auto e2 = exp;
                    ++e2[u];
                    auto c2 = K.mul(coef, g.at(u, v));
                    auto it = next.find(e2);
                    if (it == next.end())
                        next.emplace(std::move(e2), c2);
                    else
                        it->second = K.add(it->second, c2);
                }
            poly = std::move(next);
        }
    return poly;
}

} // namespace detail

/// Action a degree-one map g induces on a whole monomial layer.
template <class F>
Mat<F> induced_action(const F& K, const GradedLayer& L, const Mat<F>& g) {
    if (g.rows != L.nvars || g.cols != L.nvars)
        fail("DimensionMismatch", "induced action needs a map on the degree-one space");
    Mat<F> m = mat_zero(K, L.dim(), L.dim());
    if (L.flavor == GradedFlavor::Tensor) {
        for (std::size_t col = 0; col < L.dim(); ++col) {
            const auto& w = L.monomials[col];
            for (std::size_t row = 0; row < L.dim(); ++row) {
                const auto& u = L.monomials[row];
                auto prod = K.one();
                for (std::size_t t = 0; t < L.degree && !K.is_zero(prod); ++t)
                    prod = K.mul(prod, g.at(u[t], w[t]));
                if (!K.is_zero(prod)) m.at(row, col) = prod;
            }
        }
        return m;
    }
    // symmetric: substitute x_j -> g·x_j and expand the polynomial product
    for (std::size_t col = 0; col < L.dim(); ++col) {
        auto poly = detail::substitute_monomial(K, L, g, col, K.one());
        for (const auto& [exp, coef] : poly) {
            if (K.is_zero(coef)) continue;
            m.at(L.index.at(exp), col) = coef;
        }
    }
    return m;
}

/// Image of one layer vector under the induced action; only the support
/// columns are expanded, so this stays cheap when v is sparse.
template <class F>
Vec<F> induced_image(const F& K, const GradedLayer& L, const Mat<F>& g, const Vec<F>& v) {
    if (g.rows != L.nvars || g.cols != L.nvars)
        fail("DimensionMismatch", "induced action needs a map on the degree-one space");
    if (v.size() != L.dim()) fail("DimensionMismatch", "vector does not live in the layer");
    Vec<F> out(L.dim(), K.zero());
    for (std::size_t col = 0; col < L.dim(); ++col) {
        if (K.is_zero(v[col])) continue;
        if (L.flavor == GradedFlavor::Tensor) {
            const auto& w = L.monomials[col];
            for (std::size_t row = 0; row < L.dim(); ++row) {
                const auto& u = L.monomials[row];
                auto prod = v[col];
                for (std::size_t t = 0; t < L.degree && !K.is_zero(prod); ++t)
                    prod = K.mul(prod, g.at(u[t], w[t]));
                if (!K.is_zero(prod)) out[row] = K.add(out[row], prod);
            }
            continue;
        }
        auto poly = detail::substitute_monomial(K, L, g, col, v[col]);
        for (const auto& [exp, coef] : poly) {
            if (K.is_zero(coef)) continue;
            auto& slot = out[L.index.at(exp)];
            slot = K.add(slot, coef);
        }
    }
    return out;
}

template <class F>
bool normalizes_subspace(const F& K, const Mat<F>& M, const Subspace<F>& S) {
    std::vector<Vec<F>> imgs;
    for (std::size_t r = 0; r < S.dim(); ++r) {
        Vec<F> v(S.ambient, K.zero());
        for (std::size_t c = 0; c < S.ambient; ++c) v[c] = S.basis.at(r, c);
        imgs.push_back(mat_vec(K, M, v));
    }
    Subspace<F> img = subspace_from_rows(K, S.ambient, imgs);
    return img.dim() == S.dim() && subspace_leq(K, img, S);
}

/// w ∈ ⟨v⟩ ∖ {0} for nonzero v.
template <class F>
bool on_line(const F& K, const Vec<F>& w, const Vec<F>& v) {
    if (vec_is_zero(K, v)) fail("ZeroVector", "line test needs a nonzero vector");
    if (vec_is_zero(K, w)) return false;
    std::size_t i0 = 0;
    while (K.is_zero(v[i0])) ++i0;
    auto lam = K.div(w[i0], v[i0]);
    for (std::size_t c = 0; c < v.size(); ++c)
        if (!K.eq(w[c], K.mul(lam, v[c]))) return false;
    return true;
}

/// M·v ∈ ⟨v⟩ ∖ {0} for nonzero v.
template <class F>
bool preserves_line(const F& K, const Mat<F>& M, const Vec<F>& v) {
    return on_line(K, mat_vec(K, M, v), v);
}

/// Quotient of a coordinate space by an echelonized subspace, with the
/// non-pivot coordinates as coset representatives.
template <class F>
struct QuotientPlan {
    std::size_t ambient = 0;
    Subspace<F> removed;              // reduced echelon basis
    std::vector<std::size_t> pivots;  // pivot coordinate per removed row
    std::vector<std::size_t> reps;    // surviving coordinates, ascending

    std::size_t dim() const { return reps.size(); }
};

template <class F>
QuotientPlan<F> make_quotient_plan(const F& K, std::size_t ambient, const Subspace<F>& S) {
    if (S.ambient != ambient) fail("DimensionMismatch", "quotient plan ambient mismatch");
    QuotientPlan<F> plan;
    plan.ambient = ambient;
    plan.removed = S;
    std::vector<bool> is_pivot(ambient, false);
    for (std::size_t r = 0; r < S.dim(); ++r) {
        std::size_t p = 0;
        while (p < ambient && K.is_zero(S.basis.at(r, p))) ++p;
        plan.pivots.push_back(p);
        is_pivot[p] = true;
    }
    for (std::size_t c = 0; c < ambient; ++c)
        if (!is_pivot[c]) plan.reps.push_back(c);
    return plan;
}

/// Coordinates of v + S on the representative monomials.
template <class F>
Vec<F> quotient_reduce(const F& K, const QuotientPlan<F>& plan, Vec<F> v) {
    if (v.size() != plan.ambient) fail("DimensionMismatch", "quotient reduce length mismatch");
    for (std::size_t r = 0; r < plan.removed.dim(); ++r) {
        auto f = v[plan.pivots[r]];
        if (K.is_zero(f)) continue;
        for (std::size_t c = 0; c < plan.ambient; ++c)
            v[c] = K.sub(v[c], K.mul(f, plan.removed.basis.at(r, c)));
    }
    Vec<F> out(plan.reps.size(), K.zero());
    for (std::size_t t = 0; t < plan.reps.size(); ++t) out[t] = v[plan.reps[t]];
    return out;
}

/// Map induced on the quotient by M; M must map the removed subspace into
/// itself for this to be well defined.
template <class F>
Mat<F> quotient_matrix(const F& K, const QuotientPlan<F>& plan, const Mat<F>& M) {
    if (M.rows != plan.ambient || M.cols != plan.ambient)
        fail("DimensionMismatch", "quotient matrix shape mismatch");
    if (plan.removed.dim() > 0 && !normalizes_subspace(K, M, plan.removed))
        fail("SubspaceNotPreserved", "map does not preserve the removed subspace");
    Mat<F> out = mat_zero(K, plan.dim(), plan.dim());
    for (std::size_t j = 0; j < plan.dim(); ++j) {
        Vec<F> col(plan.ambient, K.zero());
        for (std::size_t r = 0; r < plan.ambient; ++r) col[r] = M.at(r, plan.reps[j]);
        Vec<F> red = quotient_reduce(K, plan, std::move(col));
        for (std::size_t i = 0; i < plan.dim(); ++i) out.at(i, j) = red[i];
    }
    return out;
}

/// Nilpotent graded algebra on the layers of degree 1..r with the top layer
/// replaced by its quotient mod S (dropped entirely when S is everything).
/// Monomials multiply by concatenation/polynomial product; products beyond
/// the top degree vanish.
template <class F>
struct GradedParts {
    Algebra<F> alg;
    std::vector<GradedLayer> layers;    // retained layers, ascending degree
    std::vector<std::size_t> offsets;   // basis offset per retained layer
    QuotientPlan<F> plan;               // for the top layer when retained
    bool quotiented = false;            // plan removes something
    bool top_dropped = false;           // S was the whole top layer
    std::size_t full_degree = 0;        // r
};

template <class F>
GradedParts<F> build_graded_nilpotent(const F& K, GradedFlavor flavor,
                                      const std::vector<std::string>& vnames, std::size_t r,
                                      const Subspace<F>& S) {
    if (vnames.empty() || r == 0) fail("SchemaViolation", "graded build needs variables and degree");
    GradedParts<F> parts;
    parts.full_degree = r;
    std::size_t n = vnames.size();

    std::vector<GradedLayer> all;
    for (std::size_t d = 1; d <= r; ++d) all.push_back(monomial_layer(flavor, n, d));
    if (S.ambient != all.back().dim())
        fail("DimensionMismatch", "removed subspace lives in the wrong layer");
    parts.top_dropped = S.dim() == all.back().dim();
    parts.quotiented = !parts.top_dropped && S.dim() > 0;
    if (!parts.top_dropped) parts.plan = make_quotient_plan(K, all.back().dim(), S);

    Algebra<F>& A = parts.alg;
    A.K = K;
    std::size_t keep = parts.top_dropped ? r - 1 : r;
    if (keep == 0) fail("SchemaViolation", "quotient removes the whole algebra");
    for (std::size_t t = 0; t < keep; ++t) {
        parts.offsets.push_back(A.basis.size());
        const GradedLayer& L = all[t];
        bool top = t + 1 == r;
        if (top) {
            for (std::size_t idx : parts.plan.reps)
                A.basis.push_back(monomial_name(flavor, vnames, L.monomials[idx]));
        } else {
            for (const auto& mono : L.monomials)
                A.basis.push_back(monomial_name(flavor, vnames, mono));
        }
        BlockInfo<F> blk;
        blk.name = "deg" + std::to_string(t + 1);
        blk.lo = parts.offsets[t];
        blk.hi = A.basis.size();
        blk.role = t == 0 ? "generator" : "generated";
        A.blocks.push_back(std::move(blk));
        parts.layers.push_back(L);
    }

    for (std::size_t ti = 0; ti < keep; ++ti)
        for (std::size_t tj = 0; tj < keep; ++tj) {
            std::size_t dsum = ti + tj + 2;
            if (dsum > r || (dsum == r && parts.top_dropped)) continue;
            // factors with dsum <= r always sit below the top layer, so their
            // monomial lists coincide with the stored basis ranges
            const GradedLayer &Li = parts.layers[ti], &Lj = parts.layers[tj];
            const GradedLayer& Lk = all[dsum - 1];
            for (std::size_t a = 0; a < Li.dim(); ++a)
                for (std::size_t b = 0; b < Lj.dim(); ++b) {
                    auto mono = monomial_product(flavor, Li.monomials[a], Lj.monomials[b]);
                    std::size_t mk = Lk.index.at(mono);
                    std::size_t gi = parts.offsets[ti] + a, gj = parts.offsets[tj] + b;
                    if (dsum == r) {
                        Vec<F> amb(Lk.dim(), K.zero());
                        amb[mk] = K.one();
                        Vec<F> red = quotient_reduce(K, parts.plan, std::move(amb));
                        for (std::size_t t2 = 0; t2 < red.size(); ++t2)
                            if (!K.is_zero(red[t2]))
                                A.entries.push_back({gi, gj, parts.offsets[dsum - 1] + t2, red[t2]});
                    } else {
                        A.entries.push_back({gi, gj, parts.offsets[dsum - 1] + mk, K.one()});
                    }
                }
        }
    algebra_canonicalize(A);
    algebra_validate(A);
    return parts;
}

/// Block-diagonal extension of a degree-one map across all retained layers,
/// through the quotient on top.  Fails with SubspaceNotPreserved when g does
/// not fix the removed subspace (no well-defined extension exists then).
template <class F>
Mat<F> graded_extension(const F& K, const GradedParts<F>& parts, const Mat<F>& g) {
    std::size_t n = parts.alg.dim();
    Mat<F> out = mat_zero(K, n, n);
    for (std::size_t t = 0; t < parts.layers.size(); ++t) {
        Mat<F> m = induced_action(K, parts.layers[t], g);
        bool top = t + 1 == parts.full_degree;
        if (top && !parts.top_dropped) m = quotient_matrix(K, parts.plan, m);
        std::size_t off = parts.offsets[t];
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j)
                if (!K.is_zero(m.at(i, j))) out.at(off + i, off + j) = m.at(i, j);
    }
    return out;
}

} // namespace autalg

#endif
