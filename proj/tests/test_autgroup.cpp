#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "autalg/autgroup.hpp"
#include "autalg/constructions.hpp"
#include "helpers.hpp"

using namespace autalg;
using autalg_tests::make_mat;
using autalg_tests::make_vec;

namespace {

template <class F>
BlockInfo<F> block(const F& K, std::string name, std::size_t lo, std::size_t hi,
                   std::string role, std::int64_t ev) {
    BlockInfo<F> b;
    b.name = std::move(name);
    b.lo = lo;
    b.hi = hi;
    b.role = std::move(role);
    b.eigenvalue = K.from_int(ev);
    return b;
}

// unit line plus a two-dimensional block of orthogonal idempotents; the only
// automorphisms are the identity and the swap
template <class F>
Algebra<F> idempotent_pair(const F& K) {
    Algebra<F> A;
    A.K = K;
    A.basis = {"e", "a", "b"};
    auto one = K.one(), al = K.from_int(2);
    A.entries = {{0, 0, 0, one}, {0, 1, 1, one}, {0, 2, 2, one}, {1, 0, 1, al},
                 {1, 1, 1, one}, {2, 0, 2, al},  {2, 2, 2, one}};
    A.blocks = {block(K, "unit", 0, 1, "unit-line", 1), block(K, "pair", 1, 3, "plain", 2)};
    return A;
}

template <class F>
bool contains(const F& K, const std::vector<Mat<F>>& sorted, const Mat<F>& m) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), m,
                               [&](const Mat<F>& x, const Mat<F>& y) { return mat_less(K, x, y); });
    return it != sorted.end() && mat_eq(K, *it, m);
}

template <class F>
void check_group_axioms(const F& K, const AutomorphismSet<F>& S) {
    REQUIRE(!S.elements.empty());
    std::size_t n = S.elements[0].rows;
    REQUIRE(contains(K, S.elements, mat_identity(K, n)));
    for (const auto& x : S.elements) {
        CHECK(contains(K, S.elements, mat_inverse(K, x)));
        for (const auto& y : S.elements) CHECK(contains(K, S.elements, mat_mul(K, x, y)));
    }
}

template <class F>
Mat<F> submatrix(const F& K, const Mat<F>& m, std::size_t lo, std::size_t d) {
    Mat<F> s = mat_zero(K, d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) s.at(r, c) = m.at(lo + r, lo + c);
    return s;
}

} // namespace

TEST_CASE("block hypotheses hold for the nested pipeline output") {
    PrimeField K(7);
    PermGroup S2 = parse_group("n=2; gens=(1 2)");
    auto rep = realize_finite_group(K, S2);
    REQUIRE(rep.all_passed());

    auto hyp = verify_block_hypotheses(rep.algebra);
    CHECK(hyp.unit == 0);
    REQUIRE(hyp.schedule.size() == 6);
    std::vector<std::string> order;
    for (const auto& item : hyp.schedule) order.push_back(item.leaf->name);
    CHECK(order == std::vector<std::string>{"unit", "R.unit", "R.A.deg1", "R.A.deg2", "R.En", "Z"});
    CHECK(hyp.schedule[0].kind == LeafKind::ForcedUnit);
    CHECK(hyp.schedule[2].kind == LeafKind::Scan);
    CHECK(hyp.schedule[3].kind == LeafKind::Generated);
    CHECK(hyp.schedule[4].kind == LeafKind::Pairing);
    CHECK(hyp.schedule[5].kind == LeafKind::Pairing);
    // the mirror block pairs against the whole wrapped copy
    CHECK(hyp.schedule[5].src_lo == 8);
    CHECK(hyp.schedule[5].src_hi == 15);

    // the relaxed zero-eigenvalue variant still verifies
    PrimeField K3(3);
    auto W0 = wrap_simple(rigid_algebra(K3, 2), K3.from_int(2), K3.zero(), WrapVariant::ZetaZero);
    CHECK_NOTHROW(verify_block_hypotheses(W0));
}

TEST_CASE("block hypotheses reject broken structures") {
    PrimeField K(5);

    Algebra<PrimeField> zero;
    zero.K = K;
    zero.basis = {"x", "y"};
    CHECK_THROWS_MATCHES(verify_block_hypotheses(zero), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("NoUniqueLeftIdentity") &&
                             Catch::Matchers::ContainsSubstring("no left identity")));

    Algebra<PrimeField> fam;
    fam.K = K;
    fam.basis = {"a", "b"};
    fam.entries = {{0, 0, 0, K.one()}, {0, 1, 1, K.one()}};
    CHECK_THROWS_MATCHES(verify_block_hypotheses(fam), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("family of left identities")));

    // two free lines inside one eigenspace cannot be told apart
    Algebra<PrimeField> shared;
    shared.K = K;
    shared.basis = {"e", "a", "b"};
    shared.entries = {{0, 0, 0, K.one()},     {0, 1, 1, K.one()},     {0, 2, 2, K.one()},
                      {1, 0, 1, K.from_int(2)}, {2, 0, 2, K.from_int(2)}};
    shared.blocks = {block(K, "unit", 0, 1, "unit-line", 1), block(K, "a", 1, 2, "plain", 2),
                     block(K, "b", 2, 3, "plain", 2)};
    CHECK_THROWS_MATCHES(verify_block_hypotheses(shared), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("DecompositionFails")));

    Algebra<PrimeField> wrong = shared;
    wrong.entries[4].c = K.from_int(3);  // b*e = 3b, but the block still claims 2
    CHECK_THROWS_MATCHES(verify_block_hypotheses(wrong), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("declares eigenvalue 2") &&
                             Catch::Matchers::ContainsSubstring("products give 3")));

    Algebra<PrimeField> skew = shared;
    skew.entries.insert(skew.entries.begin() + 4, {1, 0, 2, K.one()});  // a*e = 2a + b
    skew.blocks = {block(K, "unit", 0, 1, "unit-line", 1), block(K, "ab", 1, 3, "plain", 2)};
    CHECK_THROWS_MATCHES(verify_block_hypotheses(skew), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("not scalar")));

    // the exterior tower alone has no identity element at all
    CHECK_THROWS_MATCHES(verify_block_hypotheses(exterior_b(K, 2)), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("NoUniqueLeftIdentity")));

    // a left identity exists but no block declares the unit line
    Algebra<PrimeField> unmarked;
    unmarked.K = K;
    unmarked.basis = {"e", "a"};
    unmarked.entries = {{0, 0, 0, K.one()}, {0, 1, 1, K.one()}, {1, 0, 1, K.from_int(2)}};
    unmarked.blocks = {block(K, "all", 0, 2, "plain", 1)};
    CHECK_THROWS_MATCHES(verify_block_hypotheses(unmarked), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("no unit line")));

    auto W = wrap_simple(rigid_algebra(K, 2), K.from_int(2), K.from_int(3));
    Algebra<PrimeField> nosrc = W;
    nosrc.blocks[1].linked_to = "W";
    CHECK_THROWS_MATCHES(verify_block_hypotheses(nosrc), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("'W'") &&
                             Catch::Matchers::ContainsSubstring("not found")));

    Algebra<PrimeField> badpair = W;
    badpair.blocks[1].pairing.at(0, 1) = K.one();
    CHECK_THROWS_MATCHES(verify_block_hypotheses(badpair), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("disagrees with the products")));

    Algebra<PrimeField> reused;
    reused.K = K;
    reused.basis = {"e", "a"};
    reused.entries = {{0, 0, 0, K.one()}, {0, 1, 1, K.one()}, {1, 0, 1, K.from_int(2)}};
    reused.blocks = {block(K, "unit", 0, 1, "unit-line", 1), block(K, "unit", 1, 2, "plain", 2)};
    CHECK_THROWS_MATCHES(verify_block_hypotheses(reused), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("reused")));
}

TEST_CASE("generation plans for the constructions") {
    PrimeField K5(5), K7(7);

    auto rigid_plan = generation_plan(rigid_algebra(K5, 2));
    CHECK(rigid_plan.generator_blocks == std::vector<std::string>{"e1"});
    CHECK(rigid_plan.expressions.empty());

    auto C = algebra_c(K5, rigid_algebra(K5, 2), 2);
    auto c_plan = generation_plan(C);
    CHECK(c_plan.generator_blocks == std::vector<std::string>{"L.e1", "wedge1"});
    REQUIRE(c_plan.expressions.size() == 1);
    CHECK(c_plan.expressions[0].target == 5);  // u1^u2 = u1 * u2
    CHECK(c_plan.expressions[0].i == 3);
    CHECK(c_plan.expressions[0].j == 4);

    PermGroup S2 = parse_group("n=2; gens=(1 2)");
    auto E = algebra_e(K7, S2, make_vec(K7, {1, 2}), make_vec(K7, {2, 3, 4}));
    auto e_plan = generation_plan(E);
    CHECK(e_plan.generator_blocks == std::vector<std::string>{"A.deg1"});
    REQUIRE(e_plan.expressions.size() == 2);
    CHECK(e_plan.expressions[0].target == 3);  // v1*v2
    CHECK(e_plan.expressions[1].target == 4);  // v2^2 = v2 * v2
    CHECK(e_plan.expressions[1].i == 2);
    CHECK(e_plan.expressions[1].j == 2);

    auto rep = realize_finite_group(K7, S2);
    auto r_plan = generation_plan(rep.algebra);
    CHECK(r_plan.generator_blocks == std::vector<std::string>{"R.A.deg1"});
    REQUIRE(r_plan.expressions.size() == 2);
    CHECK(r_plan.expressions[0].target == 11);
    CHECK(r_plan.expressions[1].target == 12);

    Vec<PrimeField> mark(16, K7.zero());
    mark[10] = K7.one();  // v3 (x) v3 among the degree-two tensor monomials
    auto D = algebra_d(K7, rigid_algebra(K7, 2), 2, subspace_from_rows(K7, 16, {mark}), 2,
                       distinct_units(K7, 3), distinct_units(K7, 3));
    auto d_plan = generation_plan(D);
    CHECK(d_plan.generator_blocks == std::vector<std::string>{"C.L.e1", "C.wedge1"});
    CHECK(d_plan.expressions.size() == 16);  // 15 surviving tensors + the top wedge

    // a block marked generated that no product reaches
    Algebra<PrimeField> orphan;
    orphan.K = K5;
    orphan.basis = {"e", "a", "g"};
    orphan.entries = {{0, 0, 0, K5.one()},     {0, 1, 1, K5.one()},
                      {0, 2, 2, K5.one()},     {1, 0, 1, K5.from_int(2)},
                      {2, 0, 2, K5.from_int(3)}};
    orphan.blocks = {block(K5, "unit", 0, 1, "unit-line", 1), block(K5, "a", 1, 2, "plain", 2),
                     block(K5, "g", 2, 3, "generated", 3)};
    CHECK_NOTHROW(verify_block_hypotheses(orphan));
    CHECK_THROWS_MATCHES(generation_plan(orphan), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("NotGenerated") &&
                             Catch::Matchers::ContainsSubstring("'g'")));
}

TEST_CASE("schedule-driven enumeration agrees with the unstructured sweep") {
    PrimeField K5(5), K3(3);

    for (auto* Kp : {&K5, &K3}) {
        auto R = rigid_algebra(*Kp, 2);
        auto fast = enumerate_automorphisms(R, generation_plan(R));
        auto slow = brute_force_automorphisms(R);
        REQUIRE(fast.order == 1);
        REQUIRE(slow.order == 1);
        CHECK(mat_eq(*Kp, fast.elements[0], mat_identity(*Kp, 2)));
        CHECK(mat_eq(*Kp, slow.elements[0], fast.elements[0]));
    }

    auto P = idempotent_pair(K3);
    auto fast = enumerate_automorphisms(P, generation_plan(P));
    auto slow = brute_force_automorphisms(P);
    REQUIRE(fast.order == 2);
    REQUIRE(slow.order == 2);
    for (std::size_t t = 0; t < 2; ++t) CHECK(mat_eq(K3, fast.elements[t], slow.elements[t]));
    check_group_axioms(K3, fast);

    // the same split survives a quadratic scalar extension
    ExtField K9(3, 2, canonical_modulus(3, 2));
    auto P9 = idempotent_pair(K9);
    auto ext = enumerate_automorphisms(P9, generation_plan(P9));
    CHECK(ext.order == 2);
    check_group_axioms(K9, ext);
}

TEST_CASE("automorphisms of the wedge extension carry determinant one") {
    PrimeField K(5);
    auto C = algebra_c(K, rigid_algebra(K, 2), 2);
    auto plan = generation_plan(C);

    EnumerationOptions<PrimeField> opts;
    opts.dual_check_tensor = true;
    auto auts = enumerate_automorphisms(C, plan, 500000000, opts);
    CHECK(auts.order == 120);
    CHECK(auts.dual_mismatches == 0);
    check_group_axioms(K, auts);
    for (const auto& m : auts.elements) {
        CHECK(K.eq(m.at(0, 0), K.one()));
        CHECK(K.eq(m.at(1, 1), K.one()));  // the wrapped core is rigid
        CHECK(K.eq(m.at(2, 2), K.one()));
        CHECK(K.eq(mat_det(K, submatrix(K, m, 3, 2)), K.one()));
        CHECK(K.eq(m.at(5, 5), K.one()));  // top wedge = determinant
    }

    // worker partitioning must not change the canonical output
    EnumerationOptions<PrimeField> par;
    par.workers = 4;
    auto auts4 = enumerate_automorphisms(C, plan, 500000000, par);
    REQUIRE(auts4.order == auts.order);
    for (std::size_t t = 0; t < auts.order; ++t)
        CHECK(mat_eq(K, auts4.elements[t], auts.elements[t]));

    // a different scalar tuple leaves the count alone
    auto C2 = algebra_c(K, rigid_algebra(K, 2), 2, make_vec(K, {4, 2, 3}));
    CHECK(enumerate_automorphisms(C2, generation_plan(C2)).order == 120);
}

TEST_CASE("wrapped rigid core keeps the trivial group") {
    PrimeField K(5);
    auto R = rigid_algebra(K, 2);
    auto W = wrap_simple(R, K.from_int(2), K.from_int(3));
    auto auts = enumerate_automorphisms(W, generation_plan(W));
    REQUIRE(auts.order == 1);
    CHECK(mat_eq(K, auts.elements[0], mat_identity(K, 5)));

    // restriction to the wrapped block recovers exactly the core's group
    auto inner = brute_force_automorphisms(R);
    std::vector<Mat<PrimeField>> restricted;
    for (const auto& m : auts.elements) restricted.push_back(submatrix(K, m, 3, 2));
    REQUIRE(restricted.size() == inner.order);
    for (std::size_t t = 0; t < inner.order; ++t)
        CHECK(mat_eq(K, restricted[t], inner.elements[t]));

    auto model = wrap_model_set(W, inner.elements);
    match_expected(K, auts, {{"wrap(core)", model}});
    CHECK(auts.matched_form == "wrap(core)");
}

TEST_CASE("etale extension realizes the two-element group") {
    PrimeField K(7);
    PermGroup S2 = parse_group("n=2; gens=(1 2)");
    auto lam = make_vec(K, {1, 2});
    auto E = algebra_e(K, S2, lam, make_vec(K, {2, 3, 4}));

    auto plan = generation_plan(E);
    auto auts = enumerate_automorphisms(E, plan);
    REQUIRE(auts.order == 2);
    check_group_axioms(K, auts);
    match_expected(K, auts, {{"permutation-induced", etale_model_set(E, S2)}});
    CHECK(auts.matched_form == "permutation-induced");

    // pre-filtering candidates by the invariant line changes nothing
    EnumerationOptions<PrimeField> opts;
    opts.hint = {"A.deg1", GradedFlavor::Symmetric, 2, invariant_f(K, S2, lam)};
    auto hinted = enumerate_automorphisms(E, plan, 500000000, opts);
    REQUIRE(hinted.order == 2);
    for (std::size_t t = 0; t < 2; ++t) CHECK(mat_eq(K, hinted.elements[t], auts.elements[t]));

    // alternate scalars, same group
    auto E2 = algebra_e(K, S2, make_vec(K, {2, 4}), make_vec(K, {3, 2, 5}));
    CHECK(enumerate_automorphisms(E2, generation_plan(E2)).order == 2);
}

TEST_CASE("full pipeline output has the prescribed nested automorphisms") {
    PrimeField K(7);
    PermGroup S2 = parse_group("n=2; gens=(1 2)");
    auto rep = realize_finite_group(K, S2);
    REQUIRE(rep.algebra.dim() == 15);

    auto auts = enumerate_automorphisms(rep.algebra, generation_plan(rep.algebra));
    REQUIRE(auts.order == 2);
    check_group_axioms(K, auts);

    auto E = algebra_e(K, S2, make_vec(K, {1, 2}), make_vec(K, {2, 3, 4}));
    auto model = wrap_model_set(rep.algebra, etale_model_set(E, S2));
    match_expected(K, auts, {{"wrap(etale)", model}});
    CHECK(auts.matched_form == "wrap(etale)");

    // each element fixes the unit and restricts to an inner automorphism
    for (const auto& m : auts.elements) {
        CHECK(K.eq(m.at(0, 0), K.one()));
        CHECK(is_automorphism(E, submatrix(K, m, 8, 7)).ok);
    }
}

TEST_CASE("enumeration failure modes") {
    PrimeField K(5);
    auto C = algebra_c(K, rigid_algebra(K, 2), 2);
    auto plan = generation_plan(C);
    CHECK_THROWS_MATCHES(enumerate_automorphisms(C, plan, 100), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("BudgetExceeded") &&
                             Catch::Matchers::ContainsSubstring("1920") &&
                             Catch::Matchers::ContainsSubstring("100")));

    CHECK_THROWS_MATCHES(brute_force_automorphisms(C, 1000), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("BudgetExceeded")));

    BigRational Q;
    auto RQ = rigid_algebra(Q, 2);
    CHECK_THROWS_MATCHES(enumerate_automorphisms(RQ, generation_plan(RQ)), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("BudgetExceeded") &&
                             Catch::Matchers::ContainsSubstring("infinite field")));

    Algebra<PrimeField> zero;
    zero.K = K;
    zero.basis = {"x"};
    CHECK_THROWS_MATCHES(enumerate_automorphisms(zero, GenerationPlan<PrimeField>{}), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("HypothesesNotVerified") &&
                             Catch::Matchers::ContainsSubstring("no left identity")));
}

TEST_CASE("matching against expected forms") {
    PrimeField K(5);
    auto P5 = idempotent_pair(K);
    auto auts = enumerate_automorphisms(P5, generation_plan(P5));
    REQUIRE(auts.order == 2);

    std::vector<Mat<PrimeField>> swap_form = {
        mat_identity(K, 3),
        make_mat(K, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}),
    };
    match_expected(K, auts, {{"too-small", {mat_identity(K, 3)}}, {"swap", swap_form}});
    CHECK(auts.matched_form == "swap");

    CHECK_THROWS_MATCHES(match_expected(K, auts, {{"only-identity", {mat_identity(K, 3)}}}),
                         Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("Mismatch") &&
                             Catch::Matchers::ContainsSubstring("only-identity")));

    // a set that element-wise matches but is not composition-closed is refused
    AutomorphismSet<PrimeField> fake;
    fake.elements = {mat_identity(K, 2), make_mat(K, {{1, 0}, {0, 2}})};
    std::sort(fake.elements.begin(), fake.elements.end(),
              [&](const Mat<PrimeField>& a, const Mat<PrimeField>& b) { return mat_less(K, a, b); });
    fake.order = 2;
    CHECK_THROWS_MATCHES(match_expected(K, fake, {{"open", fake.elements}}), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("not closed under composition")));
}
