#include <catch2/catch_amalgamated.hpp>

#include <autalg/graded.hpp>

#include "helpers.hpp"

using namespace autalg;
using namespace autalg_tests;

TEST_CASE("monomial layers") {
    auto t22 = monomial_layer(GradedFlavor::Tensor, 2, 2);
    REQUIRE(t22.dim() == 4);
    CHECK(t22.monomials[0] == std::vector<std::size_t>{0, 0});
    CHECK(t22.monomials[1] == std::vector<std::size_t>{0, 1});
    CHECK(t22.monomials[2] == std::vector<std::size_t>{1, 0});
    CHECK(t22.monomials[3] == std::vector<std::size_t>{1, 1});
    CHECK(monomial_layer(GradedFlavor::Tensor, 3, 2).dim() == 9);

    auto s22 = monomial_layer(GradedFlavor::Symmetric, 2, 2);
    REQUIRE(s22.dim() == 3);
    CHECK(s22.monomials[0] == std::vector<std::size_t>{2, 0});
    CHECK(s22.monomials[1] == std::vector<std::size_t>{1, 1});
    CHECK(s22.monomials[2] == std::vector<std::size_t>{0, 2});
    CHECK(monomial_layer(GradedFlavor::Symmetric, 3, 3).dim() == 10);  // C(5,3)
    CHECK(s22.index.at({1, 1}) == 1);

    CHECK(monomial_name(GradedFlavor::Tensor, {"u0", "u1"}, {0, 1, 1}) == "u0*u1*u1");
    CHECK(monomial_name(GradedFlavor::Symmetric, {"x", "y"}, {2, 1}) == "x^2*y");
    CHECK(monomial_name(GradedFlavor::Symmetric, {"x", "y"}, {0, 3}) == "y^3");

    CHECK_THROWS_AS(monomial_layer(GradedFlavor::Tensor, 0, 1), Error);
}

TEST_CASE("monomial products") {
    CHECK(monomial_product(GradedFlavor::Tensor, {0, 1}, {1}) ==
          std::vector<std::size_t>{0, 1, 1});
    CHECK(monomial_product(GradedFlavor::Symmetric, {1, 0, 2}, {0, 1, 1}) ==
          std::vector<std::size_t>{1, 1, 3});
}

TEST_CASE("induced action on tensor layers is the Kronecker power") {
    PrimeField K(7);
    auto L = monomial_layer(GradedFlavor::Tensor, 2, 2);
    auto g = make_mat(K, {{1, 2}, {3, 4}});
    auto m = induced_action(K, L, g);

    // independent oracle: the Kronecker square assembled by hand
    Mat<PrimeField> kron = mat_zero(K, 4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d)
                    kron.at(2 * a + c, 2 * b + d) = K.mul(g.at(a, b), g.at(c, d));
    CHECK(mat_eq(K, m, kron));

    CHECK(mat_eq(K, induced_action(K, L, mat_identity(K, 2)), mat_identity(K, 4)));

    auto h = make_mat(K, {{0, 1}, {1, 1}});
    CHECK(mat_eq(K, induced_action(K, L, mat_mul(K, g, h)),
                 mat_mul(K, induced_action(K, L, g), induced_action(K, L, h))));
}

TEST_CASE("induced action on symmetric layers substitutes variables") {
    PrimeField K(5);
    auto L = monomial_layer(GradedFlavor::Symmetric, 2, 2);
    // x -> x, y -> x + y:  x^2 -> x^2,  xy -> x^2 + xy,  y^2 -> x^2 + 2xy + y^2
    auto m = induced_action(K, L, make_mat(K, {{1, 1}, {0, 1}}));
    CHECK(mat_eq(K, m, make_mat(K, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}})));

    PrimeField K7(7);
    auto L3 = monomial_layer(GradedFlavor::Symmetric, 2, 3);
    auto d = induced_action(K7, L3, make_mat(K7, {{2, 0}, {0, 3}}));
    // monomials x^3, x^2 y, x y^2, y^3 scale by 8, 12, 18, 27
    CHECK(mat_eq(K7, d, make_mat(K7, {{1, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 6}})));

    auto g = make_mat(K, {{1, 2}, {3, 4}});
    auto h = make_mat(K, {{0, 1}, {1, 1}});
    CHECK(mat_eq(K, induced_action(K, L, mat_mul(K, g, h)),
                 mat_mul(K, induced_action(K, L, g), induced_action(K, L, h))));
}

TEST_CASE("quotient plans pick non-pivot representatives") {
    PrimeField K(5);
    auto S = subspace_from_rows(K, 3, {make_vec(K, {1, 0, 4})});  // x^2 - y^2
    auto plan = make_quotient_plan(K, 3, S);
    CHECK(plan.dim() == 2);
    CHECK(plan.pivots == std::vector<std::size_t>{0});
    CHECK(plan.reps == std::vector<std::size_t>{1, 2});

    CHECK(vec_eq(K, quotient_reduce(K, plan, make_vec(K, {1, 0, 0})), make_vec(K, {0, 1})));
    CHECK(vec_eq(K, quotient_reduce(K, plan, make_vec(K, {0, 1, 0})), make_vec(K, {1, 0})));
    CHECK(vec_eq(K, quotient_reduce(K, plan, make_vec(K, {1, 0, 4})), make_vec(K, {0, 0})));

    // swapping the variables fixes S, and on the quotient [x^2] = [y^2]
    auto L = monomial_layer(GradedFlavor::Symmetric, 2, 2);
    auto sw = induced_action(K, L, make_mat(K, {{0, 1}, {1, 0}}));
    CHECK(mat_eq(K, quotient_matrix(K, plan, sw), mat_identity(K, 2)));

    auto sh = induced_action(K, L, make_mat(K, {{1, 1}, {0, 1}}));
    CHECK_THROWS_MATCHES(quotient_matrix(K, plan, sh), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == "SubspaceNotPreserved";
                         }));
}

TEST_CASE("graded nilpotent build: tensor square with one relation") {
    PrimeField K(5);
    auto S = subspace_from_rows(K, 4, {make_vec(K, {1, 0, 0, 0})});  // u0⊗u0
    auto parts = build_graded_nilpotent(K, GradedFlavor::Tensor, {"u0", "u1"}, 2, S);
    const auto& A = parts.alg;

    REQUIRE(A.dim() == 5);
    CHECK(A.basis == std::vector<std::string>{"u0", "u1", "u0*u1", "u1*u0", "u1*u1"});
    CHECK(parts.quotiented);
    CHECK(!parts.top_dropped);

    CHECK(vec_is_zero(K, basis_product(A, 0, 0)));  // u0·u0 dies in the quotient
    CHECK(vec_eq(K, basis_product(A, 0, 1), make_vec(K, {0, 0, 1, 0, 0})));
    CHECK(vec_eq(K, basis_product(A, 1, 0), make_vec(K, {0, 0, 0, 1, 0})));
    CHECK(vec_eq(K, basis_product(A, 1, 1), make_vec(K, {0, 0, 0, 0, 1})));
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(vec_is_zero(K, basis_product(A, 2, j)));  // top layer annihilates
        CHECK(vec_is_zero(K, basis_product(A, j, 4)));
    }

    REQUIRE(A.blocks.size() == 2);
    CHECK(A.blocks[0].name == "deg1");
    CHECK(A.blocks[0].role == "generator");
    CHECK(A.blocks[1].name == "deg2");
    CHECK(A.blocks[1].role == "generated");
    CHECK(A.blocks[1].lo == 2);
    CHECK(A.blocks[1].hi == 5);

    CHECK(left_identities(A).kind == SolveKind::Empty);

    // no relation: the product hits the full tensor square
    auto free_parts = build_graded_nilpotent(K, GradedFlavor::Tensor, {"u0", "u1"}, 2,
                                             subspace_zero(K, 4));
    CHECK(free_parts.alg.dim() == 6);
    CHECK(!free_parts.quotiented);
    CHECK(vec_eq(K, basis_product(free_parts.alg, 0, 0), make_vec(K, {0, 0, 1, 0, 0, 0})));

    // relation = whole layer: the top degree disappears
    auto dropped = build_graded_nilpotent(K, GradedFlavor::Tensor, {"u0", "u1"}, 2,
                                          subspace_full(K, 4));
    CHECK(dropped.top_dropped);
    CHECK(dropped.alg.dim() == 2);
    CHECK(dropped.alg.entries.empty());
}

TEST_CASE("graded nilpotent build: symmetric cube") {
    PrimeField K(7);
    std::size_t sym3 = 10;
    auto parts = build_graded_nilpotent(K, GradedFlavor::Symmetric, {"x", "y", "z"}, 3,
                                        subspace_zero(K, sym3));
    const auto& A = parts.alg;
    CHECK(A.dim() == 3 + 6 + 10);
    // x·(y·z) lands on the monomial xyz, as does (x·y)·z — partial associativity
    auto yz = multiply(A, basis_vector(A, 1), basis_vector(A, 2));
    auto xy = multiply(A, basis_vector(A, 0), basis_vector(A, 1));
    CHECK(vec_eq(K, multiply(A, basis_vector(A, 0), yz), multiply(A, xy, basis_vector(A, 2))));
    // commutative by construction
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j)
            CHECK(vec_eq(K, basis_product(A, i, j), basis_product(A, j, i)));
}

TEST_CASE("degree-one maps extend across the grading") {
    PrimeField K(5);
    auto S = subspace_from_rows(K, 4, {make_vec(K, {1, 0, 0, 0})});
    auto parts = build_graded_nilpotent(K, GradedFlavor::Tensor, {"u0", "u1"}, 2, S);

    auto ext = graded_extension(K, parts, make_mat(K, {{2, 0}, {0, 3}}));
    // diag(2,3) ⊕ diag(6,6,9) on the representatives u0u1, u1u0, u1u1
    CHECK(mat_eq(K, ext,
                 make_mat(K, {{2, 0, 0, 0, 0},
                              {0, 3, 0, 0, 0},
                              {0, 0, 1, 0, 0},
                              {0, 0, 0, 1, 0},
                              {0, 0, 0, 0, 4}})));
    CHECK(is_automorphism(parts.alg, ext).ok);

    // swapping u0,u1 moves u0⊗u0 off the relation line: no extension exists
    CHECK_THROWS_MATCHES(graded_extension(K, parts, make_mat(K, {{0, 1}, {1, 0}})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == "SubspaceNotPreserved";
                         }));

    // with no relation every invertible degree-one map extends, multiplicatively
    auto free_parts = build_graded_nilpotent(K, GradedFlavor::Tensor, {"u0", "u1"}, 2,
                                             subspace_zero(K, 4));
    auto g = make_mat(K, {{1, 2}, {3, 4}});
    auto h = make_mat(K, {{0, 1}, {1, 1}});
    CHECK(is_automorphism(free_parts.alg, graded_extension(K, free_parts, g)).ok);
    CHECK(mat_eq(K, graded_extension(K, free_parts, mat_mul(K, g, h)),
                 mat_mul(K, graded_extension(K, free_parts, g),
                         graded_extension(K, free_parts, h))));

    // symmetric flavor: substitution maps respect the polynomial product
    auto sym = build_graded_nilpotent(K, GradedFlavor::Symmetric, {"x", "y"}, 2,
                                      subspace_zero(K, 3));
    CHECK(is_automorphism(sym.alg, graded_extension(K, sym, make_mat(K, {{1, 1}, {0, 1}}))).ok);
}

TEST_CASE("subspace and line normalization checks") {
    PrimeField K(5);
    auto M = make_mat(K, {{1, 0}, {0, 2}});
    CHECK(normalizes_subspace(K, M, subspace_from_rows(K, 2, {make_vec(K, {1, 0})})));
    CHECK(!normalizes_subspace(K, M, subspace_from_rows(K, 2, {make_vec(K, {1, 1})})));
    CHECK(normalizes_subspace(K, M, subspace_full(K, 2)));

    CHECK(preserves_line(K, make_mat(K, {{2, 0}, {0, 2}}), make_vec(K, {1, 1})));
    CHECK(preserves_line(K, make_mat(K, {{0, 1}, {1, 0}}), make_vec(K, {1, 1})));
    CHECK(!preserves_line(K, make_mat(K, {{0, 1}, {1, 0}}), make_vec(K, {1, 0})));
    // singular map sending the line to zero does not normalize it
    CHECK(!preserves_line(K, mat_zero(K, 2, 2), make_vec(K, {1, 0})));
    CHECK_THROWS_AS(preserves_line(K, M, make_vec(K, {0, 0})), Error);
}
