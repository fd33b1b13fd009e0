#ifndef AUTALG_AUTGROUP_HPP
#define AUTALG_AUTGROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "graded.hpp"
#include "matrix.hpp"
#include "perm.hpp"
#include "spectral.hpp"

namespace autalg {

/// Nesting structure recovered from dotted leaf names: "C.L.e1" sits under
/// "C.L" under "C".  Only leaves are stored on the algebra; interior nodes are
/// implied.  Every node covers a contiguous basis range.
template <class F>
struct BlockNode {
    std::string path;  // dotted, empty at the root
    std::size_t lo = 0, hi = 0;
    const BlockInfo<F>* leaf = nullptr;
    std::vector<BlockNode<F>> children;

    bool is_leaf() const { return leaf != nullptr; }
    std::size_t dim() const { return hi - lo; }
};

namespace detail {

inline std::vector<std::string> split_path(const std::string& s) {
    std::vector<std::string> out;
    std::size_t at = 0;
    while (at <= s.size()) {
        std::size_t dot = s.find('.', at);
        if (dot == std::string::npos) {
            out.push_back(s.substr(at));
            break;
        }
        out.push_back(s.substr(at, dot - at));
        at = dot + 1;
    }
    return out;
}

template <class F>
void tree_insert(BlockNode<F>& node, const std::vector<std::string>& segs, std::size_t at,
                 const BlockInfo<F>* leaf) {
    if (node.is_leaf())
        fail("BlockMetadataMismatch", "block '" + leaf->name + "' nests inside leaf '" +
                                          node.leaf->name + "'");
    std::string full = node.path.empty() ? segs[at] : node.path + "." + segs[at];
    if (node.children.empty() || node.children.back().path != full) {
        for (const auto& c : node.children)
            if (c.path == full)
                fail("BlockMetadataMismatch", "block ranges under '" + full + "' are interleaved");
        BlockNode<F> child;
        child.path = full;
        node.children.push_back(std::move(child));
    }
    BlockNode<F>& child = node.children.back();
    if (at + 1 == segs.size()) {
        if (child.is_leaf() || !child.children.empty())
            fail("BlockMetadataMismatch", "block name '" + leaf->name + "' is reused");
        child.leaf = leaf;
        child.lo = leaf->lo;
        child.hi = leaf->hi;
        return;
    }
    tree_insert(child, segs, at + 1, leaf);
}

template <class F>
void tree_fix_ranges(BlockNode<F>& node) {
    if (node.is_leaf()) return;
    for (auto& c : node.children) tree_fix_ranges(c);
    node.lo = node.children.front().lo;
    node.hi = node.children.back().hi;
    for (std::size_t t = 0; t + 1 < node.children.size(); ++t)
        if (node.children[t].hi != node.children[t + 1].lo)
            fail("BlockMetadataMismatch",
                 "subtree '" + node.path + "' does not cover a contiguous range");
}

} // namespace detail

template <class F>
BlockNode<F> block_tree(const Algebra<F>& A) {
    if (A.blocks.empty()) fail("BlockMetadataMismatch", "algebra carries no block annotations");
    auto leaves = block_leaves(A);
    BlockNode<F> root;
    for (const auto* b : leaves) detail::tree_insert(root, detail::split_path(b->name), 0, b);
    detail::tree_fix_ranges(root);
    if (root.lo != 0 || root.hi != A.dim())
        fail("BlockMetadataMismatch", "blocks do not cover the basis");
    return root;
}

/// descend by dotted path; nullptr when absent
template <class F>
const BlockNode<F>* tree_find(const BlockNode<F>& node, const std::string& path) {
    if (node.path == path) return &node;
    for (const auto& c : node.children) {
        const std::string& p = c.path;
        if (p == path) return &c;
        if (path.size() > p.size() && path.compare(0, p.size(), p) == 0 && path[p.size()] == '.') {
            return tree_find(c, path);
        }
    }
    return nullptr;
}

enum class LeafKind { ForcedUnit, Scan, Pairing, Generated };

template <class F>
struct LeafPlanItem {
    const BlockInfo<F>* leaf = nullptr;
    LeafKind kind = LeafKind::Scan;
    std::size_t src_lo = 0, src_hi = 0;  // pairing source range
    Mat<F> pairing;                      // recomputed pairing matrix
};

template <class F>
struct BlockHypotheses {
    std::size_t unit = 0;
    std::vector<LeafPlanItem<F>> schedule;  // forced units, scans, then derived leaves
};

namespace detail {

/// frontier of a node: leaves, and non-leaf children that have their own unit
/// leaf directly below (those are subalgebras and recurse); unit-less interior
/// children are transparent and expand
template <class F>
void frontier_of(const BlockNode<F>& node, std::vector<const BlockNode<F>*>& out) {
    for (const auto& c : node.children) {
        if (c.is_leaf()) {
            out.push_back(&c);
            continue;
        }
        bool has_unit = false;
        for (const auto& g : c.children)
            if (g.is_leaf() && g.leaf->role == "unit-line") has_unit = true;
        if (has_unit)
            out.push_back(&c);
        else
            frontier_of(c, out);
    }
}

template <class F>
bool leaf_is_derived(const BlockInfo<F>& b) {
    return b.role == "pairing-linked" || b.role == "generated";
}

/// every leaf strictly below a subtree node
template <class F>
void collect_leaves(const BlockNode<F>& node, std::vector<const BlockNode<F>*>& out) {
    if (node.is_leaf()) {
        out.push_back(&node);
        return;
    }
    for (const auto& c : node.children) collect_leaves(c, out);
}

/// Check the spectral scaffolding of one subalgebra node and recurse.  The
/// node's products must stay inside its range, its designated unit must be the
/// unique left identity of the restricted structure, right multiplication by
/// that unit must scale every frontier block by a constant, and each
/// non-derived frontier block must be the entire eigenspace of its scalar —
/// that is what lets a unit-fixing automorphism be cut along the blocks.
/// Derived blocks (recovered from a pairing or from products) are exempt from
/// the eigenspace-exactness requirement.
template <class F>
void verify_node(const Algebra<F>& A, const BlockNode<F>& node, bool is_root) {
    const F& K = A.K;
    std::size_t lo = node.lo, m = node.dim();

    const BlockNode<F>* unit_node = nullptr;
    for (const auto& c : node.children)
        if (c.is_leaf() && c.leaf->role == "unit-line") {
            if (unit_node)
                fail("BlockMetadataMismatch", "two unit lines under '" + node.path + "'");
            unit_node = &c;
        }
    if (!unit_node)
        fail("BlockMetadataMismatch", "no unit line " +
                                          (is_root ? std::string("at the top level")
                                                   : "under '" + node.path + "'"));
    if (unit_node->dim() != 1)
        fail("BlockMetadataMismatch", "unit line '" + unit_node->leaf->name + "' is not a line");
    std::size_t u = unit_node->lo;

    // closure and the restricted copy
    Algebra<F> sub;
    sub.K = K;
    for (std::size_t i = 0; i < m; ++i) sub.basis.push_back(A.basis[lo + i]);
    if (is_root) {
        sub.entries = A.entries;
    } else {
        for (const auto& e : A.entries) {
            bool in_i = e.i >= lo && e.i < node.hi, in_j = e.j >= lo && e.j < node.hi;
            if (!in_i || !in_j) continue;
            if (e.k < lo || e.k >= node.hi)
                fail("BlockMetadataMismatch", "products of '" + node.path +
                                                  "' escape the subtree at (" +
                                                  std::to_string(e.i) + "," + std::to_string(e.j) +
                                                  ")");
            sub.entries.push_back({e.i - lo, e.j - lo, e.k - lo, e.c});
        }
    }

    auto sol = left_identities(sub);
    if (sol.kind != SolveKind::Unique)
        fail("NoUniqueLeftIdentity",
             (is_root ? std::string("the algebra") : "subalgebra '" + node.path + "'") +
                 (sol.kind == SolveKind::Empty ? " has no left identity"
                                               : " has a family of left identities"));
    if (!vec_eq(K, sol.particular, basis_vector(sub, u - lo)))
        fail("NoUniqueLeftIdentity", "left identity of " +
                                         (is_root ? std::string("the algebra")
                                                  : "'" + node.path + "'") +
                                         " is not the designated unit");

    Mat<F> Ru = mult_operator(sub, basis_vector(sub, u - lo), Side::Right);

    std::vector<const BlockNode<F>*> frontier;
    frontier_of(node, frontier);
    for (const auto* X : frontier) {
        bool free_block;
        typename F::elem lam;
        if (X == unit_node) {
            free_block = true;
            lam = K.one();
        } else {
            // constant scaling by the unit across the whole block
            lam = Ru.at(X->lo - lo, X->lo - lo);
            for (std::size_t i = X->lo; i < X->hi; ++i)
                for (std::size_t r = 0; r < m; ++r) {
                    auto want = r == i - lo ? lam : K.zero();
                    if (!K.eq(Ru.at(r, i - lo), want))
                        fail("BlockMetadataMismatch", "right multiplication by the unit is not "
                                                      "scalar on '" +
                                                          X->path + "'");
                }
            if (is_root) {
                // stored eigenvalues are all relative to the global unit
                std::vector<const BlockNode<F>*> leaves;
                collect_leaves(*X, leaves);
                for (const auto* L : leaves) {
                    if (!L->leaf->eigenvalue)
                        fail("BlockMetadataMismatch",
                             "block '" + L->leaf->name + "' declares no eigenvalue");
                    if (!K.eq(*L->leaf->eigenvalue, lam))
                        fail("BlockMetadataMismatch", "block '" + L->leaf->name +
                                                          "' declares eigenvalue " +
                                                          K.to_string(*L->leaf->eigenvalue) +
                                                          ", products give " + K.to_string(lam));
                }
            }
            free_block = !(X->is_leaf() && leaf_is_derived(*X->leaf));
        }
        if (free_block) {
            Subspace<F> eig = eigenspace(K, Ru, lam);
            if (eig.dim() != X->dim())
                fail("DecompositionFails",
                     "block '" + (X == unit_node ? unit_node->leaf->name : X->path) +
                         "' spans " + std::to_string(X->dim()) +
                         " of the " + std::to_string(eig.dim()) +
                         "-dimensional eigenspace at " + K.to_string(lam));
        }
        if (!X->is_leaf()) verify_node(A, *X, false);
    }
}

/// b_i * b_j lands on b_k and nowhere else
template <class F>
bool single_support_product(const Algebra<F>& A, std::size_t i, std::size_t j, std::size_t k) {
    Vec<F> v = basis_product(A, i, j);
    if (A.K.is_zero(v[k])) return false;
    for (std::size_t r = 0; r < v.size(); ++r)
        if (r != k && !A.K.is_zero(v[r])) return false;
    return true;
}

} // namespace detail

/// Validate everything the enumerator leans on and compute the leaf schedule:
/// unit lines are forced, plain/generator leaves are scanned, pairing-linked
/// leaves follow their source by the adjoint-inverse rule, generated leaves
/// follow from products.  Throws NoUniqueLeftIdentity / DecompositionFails /
/// BlockMetadataMismatch when the structure does not support the split.
template <class F>
BlockHypotheses<F> verify_block_hypotheses(const Algebra<F>& A) {
    const F& K = A.K;
    algebra_validate(A);
    {
        auto sol = left_identities(A);
        if (sol.kind != SolveKind::Unique)
            fail("NoUniqueLeftIdentity",
                 sol.kind == SolveKind::Empty ? "the algebra has no left identity"
                                              : "the algebra has a family of left identities");
    }
    BlockNode<F> tree = block_tree(A);
    detail::verify_node(A, tree, true);

    BlockHypotheses<F> hyp;
    for (const auto& c : tree.children)
        if (c.is_leaf() && c.leaf->role == "unit-line") hyp.unit = c.lo;

    std::vector<const BlockNode<F>*> leaves;
    detail::collect_leaves(tree, leaves);
    std::vector<LeafPlanItem<F>> derived;
    for (const auto* L : leaves) {
        LeafPlanItem<F> item;
        item.leaf = L->leaf;
        const std::string& role = L->leaf->role;
        if (role == "unit-line") {
            item.kind = LeafKind::ForcedUnit;
            hyp.schedule.push_back(std::move(item));
        } else if (role == "plain" || role == "generator") {
            item.kind = LeafKind::Scan;
            hyp.schedule.push_back(std::move(item));
        } else if (role == "generated") {
            item.kind = LeafKind::Generated;
            derived.push_back(std::move(item));
        } else {
            item.kind = LeafKind::Pairing;
            const BlockNode<F>* src = tree_find(tree, L->leaf->linked_to);
            if (!src || src == L)
                fail("BlockMetadataMismatch", "pairing source '" + L->leaf->linked_to +
                                                  "' of '" + L->leaf->name + "' not found");
            if (src->dim() != L->dim())
                fail("BlockMetadataMismatch", "pairing between '" + L->leaf->name + "' and '" +
                                                  L->leaf->linked_to + "' joins unequal ranks");
            item.src_lo = src->lo;
            item.src_hi = src->hi;

            // the common enclosing subtree owns the unit line the products hit
            const BlockNode<F>* lca = &tree;
            {
                auto a = detail::split_path(L->leaf->name);
                auto b = detail::split_path(L->leaf->linked_to);
                std::string prefix;
                for (std::size_t t = 0; t + 1 < a.size() && t + 1 < b.size() && a[t] == b[t]; ++t)
                    prefix += (t ? "." : "") + a[t];
                if (!prefix.empty()) lca = tree_find(tree, prefix);
            }
            std::size_t cu = hyp.unit;
            if (lca != &tree) {
                cu = A.dim();
                for (const auto& c : lca->children)
                    if (c.is_leaf() && c.leaf->role == "unit-line") cu = c.lo;
                if (cu == A.dim())
                    fail("BlockMetadataMismatch",
                         "no unit line between '" + L->leaf->name + "' and its source");
            }

            Mat<F> M = mat_zero(K, L->dim(), src->dim());
            for (std::size_t p = 0; p < L->dim(); ++p)
                for (std::size_t q = 0; q < src->dim(); ++q) {
                    Vec<F> v = basis_product(A, L->lo + p, src->lo + q);
                    for (std::size_t r = 0; r < v.size(); ++r)
                        if (r != cu && !K.is_zero(v[r]))
                            fail("BlockMetadataMismatch",
                                 "pairing products of '" + L->leaf->name +
                                     "' stray off the unit line");
                    M.at(p, q) = v[cu];
                }
            if (L->leaf->pairing.rows != M.rows || L->leaf->pairing.cols != M.cols ||
                !mat_eq(K, L->leaf->pairing, M))
                fail("BlockMetadataMismatch",
                     "stored pairing of '" + L->leaf->name + "' disagrees with the products");
            if (mat_rank(K, M) != M.rows)
                fail("BlockMetadataMismatch", "pairing of '" + L->leaf->name + "' is singular");
            item.pairing = std::move(M);
            derived.push_back(std::move(item));
        }
    }
    // Derived leaves in dependency order: a pairing waits for its whole
    // source range, a generated leaf for determining products of settled
    // coordinates.  Unreachable generated leaves are appended at the end so
    // verification succeeds; generation_plan is where they turn into errors.
    std::vector<bool> done(A.dim(), false);
    for (const auto& it : hyp.schedule)
        for (std::size_t i = it.leaf->lo; i < it.leaf->hi; ++i) done[i] = true;
    auto gen_ready = [&](const BlockInfo<F>* leaf) {
        for (std::size_t k = leaf->lo; k < leaf->hi; ++k) {
            bool hit = false;
            for (const auto& e : A.entries)
                if (e.k == k && done[e.i] && done[e.j] &&
                    detail::single_support_product(A, e.i, e.j, k)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };
    while (!derived.empty()) {
        bool progress = false;
        for (std::size_t t = 0; t < derived.size(); ++t) {
            bool ready;
            if (derived[t].kind == LeafKind::Pairing) {
                ready = true;
                for (std::size_t i = derived[t].src_lo; i < derived[t].src_hi; ++i)
                    if (!done[i]) ready = false;
            } else {
                ready = gen_ready(derived[t].leaf);
            }
            if (!ready) continue;
            for (std::size_t i = derived[t].leaf->lo; i < derived[t].leaf->hi; ++i) done[i] = true;
            hyp.schedule.push_back(std::move(derived[t]));
            derived.erase(derived.begin() + t);
            progress = true;
            break;
        }
        if (!progress) {
            for (const auto& d : derived)
                if (d.kind == LeafKind::Pairing)
                    fail("BlockMetadataMismatch", "pairing sources form a cycle");
            for (auto& d : derived) hyp.schedule.push_back(std::move(d));
            derived.clear();
        }
    }
    return hyp;
}

template <class F>
struct GenExpression {
    std::size_t target = 0;  // basis index reproduced by the product
    std::size_t i = 0, j = 0;
    typename F::elem c;      // b_i * b_j = c * b_target
};

template <class F>
struct GenerationPlan {
    std::vector<std::string> generator_blocks;   // scanned leaves, range order
    std::vector<GenExpression<F>> expressions;   // in derivation order
};

/// For every generated coordinate find one product of already-determined
/// coordinates that lands exactly on it (no other components).  Follows the
/// verified derivation schedule, so later layers may build on earlier
/// generated ones and on pairing-derived blocks.
template <class F>
GenerationPlan<F> generation_plan(const Algebra<F>& A) {
    BlockHypotheses<F> hyp = verify_block_hypotheses(A);
    GenerationPlan<F> plan;
    std::vector<bool> done(A.dim(), false);
    for (const auto& item : hyp.schedule) {
        if (item.kind == LeafKind::Scan) plan.generator_blocks.push_back(item.leaf->name);
        if (item.kind != LeafKind::Generated) {
            for (std::size_t i = item.leaf->lo; i < item.leaf->hi; ++i) done[i] = true;
            continue;
        }
        for (std::size_t k = item.leaf->lo; k < item.leaf->hi; ++k) {
            bool found = false;
            for (const auto& e : A.entries) {
                if (e.k != k || !done[e.i] || !done[e.j]) continue;
                if (!detail::single_support_product(A, e.i, e.j, k)) continue;
                plan.expressions.push_back({k, e.i, e.j, e.c});
                found = true;
                break;
            }
            if (!found)
                fail("NotGenerated", "no determining product reaches '" + A.basis[k] +
                                         "' in block '" + item.leaf->name + "'");
            done[k] = true;
        }
    }
    return plan;
}

template <class F>
struct AutomorphismSet {
    std::vector<Mat<F>> elements;  // sorted canonically
    std::size_t order = 0;
    std::string matched_form;      // set by match_expected
    std::size_t dual_mismatches = 0;
};

/// extra controls for the enumerator
template <class F>
struct EnumerationOptions {
    std::size_t workers = 1;
    bool dual_check_tensor = false;  // compare against the tensor-action test

    // optional pre-filter: once `leaf` is chosen as g, the action induced on
    // the degree-`degree` layer must keep the line through `line`
    struct LineHint {
        std::string leaf;
        GradedFlavor flavor = GradedFlavor::Symmetric;
        std::size_t degree = 0;
        Vec<F> line;
    };
    std::optional<LineHint> hint;
};

namespace detail {

inline std::uint64_t gl_order(std::uint64_t q, std::size_t d) {
    // (q^d - 1)(q^d - q)...(q^d - q^{d-1}), saturating
    std::uint64_t qd = 1;
    for (std::size_t t = 0; t < d; ++t) {
        if (qd > (std::uint64_t(1) << 62) / q) return UINT64_MAX;
        qd *= q;
    }
    std::uint64_t total = 1, pw = 1;
    for (std::size_t t = 0; t < d; ++t) {
        std::uint64_t factor = qd - pw;
        if (factor != 0 && total > UINT64_MAX / factor) return UINT64_MAX;
        total *= factor;
        pw *= q;
    }
    return total;
}

template <class F>
struct ScanSlot {
    std::size_t lo = 0, dim = 0;
    std::string name;
    std::uint64_t span = 1;  // q^(dim*dim)
};

/// one worker's share of the scan space: indices congruent to `shift` mod
/// `step`, decoded into slot matrices with singular slots skipped
template <class F, class Sink>
void scan_range(const F& K, const std::vector<ScanSlot<F>>& slots, std::uint64_t q,
                std::uint64_t total, std::uint64_t shift, std::uint64_t step, Sink&& sink) {
    std::size_t ncells = 0;
    for (const auto& s : slots) ncells += s.dim * s.dim;
    std::vector<std::uint64_t> digits(ncells, 0);
    std::vector<Mat<F>> mats;
    for (const auto& s : slots) mats.push_back(mat_zero(K, s.dim, s.dim));

    for (std::uint64_t idx = shift; idx < total; idx += step) {
        std::uint64_t v = idx;
        for (std::size_t t = 0; t < ncells; ++t) {
            digits[t] = v % q;
            v /= q;
        }
        std::size_t cell = 0;
        bool invertible = true;
        for (std::size_t s = 0; s < slots.size() && invertible; ++s) {
            Mat<F>& m = mats[s];
            for (std::size_t r = 0; r < slots[s].dim; ++r)
                for (std::size_t c = 0; c < slots[s].dim; ++c) m.at(r, c) = K.element(digits[cell++]);
            invertible = !K.is_zero(mat_det(K, m));
        }
        if (invertible) sink(mats);
    }
}

} // namespace detail

/// Every automorphism of a verified algebra: the unit lines are pinned, the
/// scanned blocks run over all invertible matrices, pairing-linked blocks are
/// forced through the adjoint-inverse rule, generated blocks through the
/// product expressions, and each completed map passes the full automorphism
/// test.  The output is complete by the eigenspace-exactness guarantees of
/// verify_block_hypotheses.
template <class F>
AutomorphismSet<F> enumerate_automorphisms(const Algebra<F>& A, const GenerationPlan<F>& plan,
                                           std::uint64_t budget = 500000000,
                                           const EnumerationOptions<F>& opts = {}) {
    const F& K = A.K;
    std::size_t n = A.dim();
    BlockHypotheses<F> hyp;
    try {
        hyp = verify_block_hypotheses(A);
    } catch (const Error& e) {
        fail("HypothesesNotVerified", e.what());
    }
    bool any_scan = false;
    for (const auto& item : hyp.schedule) any_scan = any_scan || item.kind == LeafKind::Scan;
    if (any_scan && !K.finite())
        fail("BudgetExceeded", "cannot sweep matrix blocks over an infinite field");

    std::vector<detail::ScanSlot<F>> slots;
    std::uint64_t q = K.finite() ? K.size() : 0, candidates = 1, total = 1;
    for (const auto& item : hyp.schedule) {
        if (item.kind != LeafKind::Scan) continue;
        detail::ScanSlot<F> s;
        s.lo = item.leaf->lo;
        s.dim = item.leaf->dim();
        s.name = item.leaf->name;
        for (std::size_t t = 0; t < s.dim * s.dim; ++t) {
            if (s.span > UINT64_MAX / q) fail("BudgetExceeded", "scan space overflows");
            s.span *= q;
        }
        std::uint64_t go = detail::gl_order(q, s.dim);
        candidates = (go == UINT64_MAX || candidates > UINT64_MAX / go) ? UINT64_MAX
                                                                        : candidates * go;
        if (total > UINT64_MAX / s.span) fail("BudgetExceeded", "scan space overflows");
        total *= s.span;
        slots.push_back(std::move(s));
    }
    if (candidates > budget)
        fail("BudgetExceeded", "candidate space has " +
                                   (candidates == UINT64_MAX ? std::string("more than 2^64")
                                                             : std::to_string(candidates)) +
                                   " elements, budget allows " + std::to_string(budget));

    // expressions grouped by target for the derivation pass
    std::vector<std::vector<GenExpression<F>>> by_leaf;
    {
        std::vector<bool> seen(n, false);
        for (const auto& item : hyp.schedule)
            if (item.kind != LeafKind::Generated)
                for (std::size_t i = item.leaf->lo; i < item.leaf->hi; ++i) seen[i] = true;
        std::size_t at = 0;
        for (const auto& item : hyp.schedule) {
            if (item.kind != LeafKind::Generated) continue;
            std::vector<GenExpression<F>> mine;
            for (std::size_t k = item.leaf->lo; k < item.leaf->hi; ++k) {
                if (at >= plan.expressions.size() || plan.expressions[at].target != k)
                    fail("NotGenerated", "expression plan does not cover block '" +
                                             item.leaf->name + "'");
                mine.push_back(plan.expressions[at++]);
            }
            by_leaf.push_back(std::move(mine));
        }
        if (at != plan.expressions.size())
            fail("NotGenerated", "expression plan has leftover targets");
    }

    std::optional<GradedLayer> hint_layer;
    std::size_t hint_slot = slots.size();
    if (opts.hint) {
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (slots[s].name == opts.hint->leaf) hint_slot = s;
        if (hint_slot == slots.size())
            fail("SchemaViolation", "hint names '" + opts.hint->leaf + "', not a scanned block");
        hint_layer = monomial_layer(opts.hint->flavor, slots[hint_slot].dim, opts.hint->degree);
        if (opts.hint->line.size() != hint_layer->dim())
            fail("DimensionMismatch", "hint line lives in the wrong layer");
    }

    std::size_t nw = opts.workers ? opts.workers : 1;
    std::vector<std::vector<Mat<F>>> found(nw);
    std::vector<std::uint64_t> mismatches(nw, 0);

    auto run_worker = [&](std::size_t w) {
        auto sink = [&](const std::vector<Mat<F>>& mats) {
            if (hint_layer) {
                Vec<F> img = induced_image(K, *hint_layer, mats[hint_slot], opts.hint->line);
                if (!on_line(K, img, opts.hint->line)) return;
            }
            Mat<F> sigma = mat_zero(K, n, n);
            std::size_t slot_at = 0, gen_at = 0;
            bool viable = true;
            for (const auto& item : hyp.schedule) {
                if (item.kind == LeafKind::ForcedUnit) {
                    sigma.at(item.leaf->lo, item.leaf->lo) = K.one();
                } else if (item.kind == LeafKind::Scan) {
                    const Mat<F>& m = mats[slot_at];
                    for (std::size_t r = 0; r < m.rows; ++r)
                        for (std::size_t c = 0; c < m.cols; ++c)
                            sigma.at(item.leaf->lo + r, item.leaf->lo + c) = m.at(r, c);
                    ++slot_at;
                } else if (item.kind == LeafKind::Pairing) {
                    std::size_t d = item.leaf->dim();
                    Mat<F> sq = mat_zero(K, d, d);
                    for (std::size_t r = 0; r < d; ++r)
                        for (std::size_t c = 0; c < d; ++c)
                            sq.at(r, c) = sigma.at(item.src_lo + r, item.src_lo + c);
                    Mat<F> forced;
                    try {
                        // sigma_P^T M sigma_Q = M  =>  sigma_P = M^{-T} sigma_Q^{-T} M^T
                        Mat<F> mt = mat_transpose(item.pairing);
                        forced = mat_mul(K, mat_inverse(K, mt),
                                         mat_mul(K, mat_transpose(mat_inverse(K, sq)), mt));
                    } catch (const Error&) {
                        viable = false;
                        break;
                    }
                    for (std::size_t r = 0; r < d; ++r)
                        for (std::size_t c = 0; c < d; ++c)
                            sigma.at(item.leaf->lo + r, item.leaf->lo + c) = forced.at(r, c);
                } else {
                    for (const auto& x : by_leaf[gen_at]) {
                        Vec<F> ci(n, K.zero()), cj(n, K.zero());
                        for (std::size_t r = 0; r < n; ++r) {
                            ci[r] = sigma.at(r, x.i);
                            cj[r] = sigma.at(r, x.j);
                        }
                        Vec<F> prod = multiply(A, ci, cj);
                        auto inv = K.inv(x.c);
                        for (std::size_t r = 0; r < n; ++r)
                            sigma.at(r, x.target) = K.mul(inv, prod[r]);
                    }
                    ++gen_at;
                }
            }
            if (!viable) return;
            bool ok = is_automorphism(A, sigma).ok;
            if (opts.dual_check_tensor && ok != stabilizes_tensor(A, sigma)) ++mismatches[w];
            if (ok) found[w].push_back(sigma);
        };
        detail::scan_range(K, slots, q, total, w, nw, sink);
    };

    if (nw == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < nw; ++w) pool.emplace_back(run_worker, w);
        for (auto& t : pool) t.join();
    }

    AutomorphismSet<F> out;
    for (auto& part : found)
        for (auto& m : part) out.elements.push_back(std::move(m));
    std::sort(out.elements.begin(), out.elements.end(),
              [&](const Mat<F>& a, const Mat<F>& b) { return mat_less(K, a, b); });
    out.order = out.elements.size();
    for (auto c : mismatches) out.dual_mismatches += c;
    return out;
}

/// Plain transparent-box sweep: every matrix over the field, no structure
/// used.  The cross-check oracle for the schedule-driven enumerator.
template <class F>
AutomorphismSet<F> brute_force_automorphisms(const Algebra<F>& A,
                                             std::uint64_t budget = 500000000) {
    const F& K = A.K;
    if (!K.finite()) fail("BudgetExceeded", "cannot sweep matrices over an infinite field");
    std::size_t n = A.dim();
    std::uint64_t q = K.size(), total = 1;
    for (std::size_t t = 0; t < n * n; ++t) {
        if (total > budget * 4 || total > UINT64_MAX / q)
            fail("BudgetExceeded", "matrix space exceeds the sweep budget");
        total *= q;
    }
    if (total > budget)
        fail("BudgetExceeded", "matrix space has " + std::to_string(total) +
                                   " elements, budget allows " + std::to_string(budget));
    AutomorphismSet<F> out;
    std::vector<std::uint64_t> digits(n * n, 0);
    Mat<F> m = mat_zero(K, n, n);
    while (true) {
        std::size_t cell = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = K.element(digits[cell++]);
        if (is_automorphism(A, m).ok) out.elements.push_back(m);
        std::size_t p = digits.size();
        while (p > 0 && ++digits[p - 1] == q) digits[--p] = 0;
        if (p == 0) break;
    }
    std::sort(out.elements.begin(), out.elements.end(),
              [&](const Mat<F>& a, const Mat<F>& b) { return mat_less(K, a, b); });
    out.order = out.elements.size();
    return out;
}

template <class F>
struct ExpectedForm {
    std::string name;
    std::vector<Mat<F>> elements;
};

namespace detail {

template <class F>
bool set_member(const F& K, const std::vector<Mat<F>>& sorted, const Mat<F>& m) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), m,
                               [&](const Mat<F>& a, const Mat<F>& b) { return mat_less(K, a, b); });
    return it != sorted.end() && mat_eq(K, *it, m);
}

} // namespace detail

/// Match the computed set against reference shapes: the elements must agree
/// one for one with some candidate form, and composition must stay inside the
/// set (so the identification is a group isomorphism, not just a bijection of
/// underlying sets).  Throws Mismatch when nothing fits.
template <class F>
void match_expected(const F& K, AutomorphismSet<F>& auts,
                    const std::vector<ExpectedForm<F>>& forms) {
    for (const auto& form : forms) {
        if (form.elements.size() != auts.elements.size()) continue;
        std::vector<Mat<F>> sorted = form.elements;
        std::sort(sorted.begin(), sorted.end(),
                  [&](const Mat<F>& a, const Mat<F>& b) { return mat_less(K, a, b); });
        bool same = true;
        for (std::size_t t = 0; same && t < sorted.size(); ++t)
            same = mat_eq(K, sorted[t], auts.elements[t]);
        if (!same) continue;
        for (const auto& x : auts.elements)
            for (const auto& y : auts.elements)
                if (!detail::set_member(K, auts.elements, mat_mul(K, x, y)))
                    fail("Mismatch", "matched form '" + form.name +
                                         "' is not closed under composition");
        auts.matched_form = form.name;
        return;
    }
    std::string tried;
    for (const auto& form : forms) {
        if (!tried.empty()) tried += ", ";
        tried += form.name + " (" + std::to_string(form.elements.size()) + ")";
    }
    fail("Mismatch", "automorphism set of order " + std::to_string(auts.order) +
                         " matches none of: " + tried);
}

/// Reference shape for a wrapped algebra: identity on the unit, the inner
/// automorphism on the carried copy, and the pairing-adjoint inverse on the
/// mirror block.
template <class F>
std::vector<Mat<F>> wrap_model_set(const Algebra<F>& W, const std::vector<Mat<F>>& inner) {
    const F& K = W.K;
    std::size_t n = W.dim();
    const BlockInfo<F>* zblk = nullptr;
    for (const auto& b : W.blocks)
        if (b.role == "pairing-linked" && b.name == "Z") zblk = &b;
    if (!zblk) fail("BlockMetadataMismatch", "not a wrapped algebra: no mirror block");
    std::size_t m = zblk->dim(), offZ = zblk->lo, offR = zblk->hi;
    Mat<F> Mt = mat_transpose(zblk->pairing);
    Mat<F> Mti = mat_inverse(K, Mt);
    std::vector<Mat<F>> out;
    for (const auto& g : inner) {
        if (g.rows != m) fail("DimensionMismatch", "inner automorphism has the wrong size");
        Mat<F> z = mat_mul(K, Mti, mat_mul(K, mat_transpose(mat_inverse(K, g)), Mt));
        Mat<F> sigma = mat_zero(K, n, n);
        sigma.at(0, 0) = K.one();
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                sigma.at(offZ + r, offZ + c) = z.at(r, c);
                sigma.at(offR + r, offR + c) = g.at(r, c);
            }
        out.push_back(std::move(sigma));
    }
    return out;
}

/// Reference shape for the etale extension: identity on the unit, the
/// permutation matrix on the degree-one block and on the etale block, induced
/// maps through the quotient on the higher layers.
template <class F>
std::vector<Mat<F>> etale_model_set(const Algebra<F>& E, const PermGroup& G) {
    const F& K = E.K;
    std::size_t dim = E.dim();
    std::size_t n = G.degree, r = G.order();
    std::string fl;
    for (const auto& kv : E.params)
        if (kv.first == "quotient_line") fl = kv.second;
    if (fl.empty()) fail("SchemaViolation", "algebra records no quotient line");
    Vec<F> f;
    std::size_t at = 0;
    while (at <= fl.size()) {
        std::size_t comma = fl.find(',', at);
        std::string tok = comma == std::string::npos ? fl.substr(at) : fl.substr(at, comma - at);
        f.push_back(K.parse(tok));
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    std::vector<GradedLayer> layers;
    for (std::size_t d = 1; d <= r; ++d) layers.push_back(monomial_layer(GradedFlavor::Symmetric, n, d));
    QuotientPlan<F> plan = make_quotient_plan(K, layers.back().dim(), subspace_from_rows(K, layers.back().dim(), {f}));

    std::vector<Mat<F>> out;
    for (const auto& sigma : G.elements) {
        Mat<F> g = perm_matrix(K, sigma);
        Mat<F> M = mat_zero(K, dim, dim);
        M.at(0, 0) = K.one();
        std::size_t off = 1;
        for (std::size_t t = 0; t < layers.size(); ++t) {
            Mat<F> act = induced_action(K, layers[t], g);
            if (t + 1 == layers.size()) act = quotient_matrix(K, plan, act);
            for (std::size_t i = 0; i < act.rows; ++i)
                for (std::size_t j = 0; j < act.cols; ++j) M.at(off + i, off + j) = act.at(i, j);
            off += act.rows;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) M.at(off + i, off + j) = g.at(i, j);
        out.push_back(std::move(M));
    }
    return out;
}

} // namespace autalg

#endif
