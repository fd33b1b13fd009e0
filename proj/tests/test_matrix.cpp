#include <catch2/catch_amalgamated.hpp>

#include "autalg/matrix.hpp"
#include "autalg/prime_field.hpp"
#include "autalg/rationals.hpp"
#include "autalg/spectral.hpp"
#include "helpers.hpp"

using namespace autalg;
using namespace autalg_tests;

TEST_CASE("rref is canonical and idempotent") {
    PrimeField F5(5);
    // two generating sets with the same row span
    auto s1 = subspace_from_rows(F5, 3, {make_vec(F5, {1, 2, 3}), make_vec(F5, {0, 1, 4})});
    auto s2 = subspace_from_rows(F5, 3, {make_vec(F5, {2, 4, 6}), make_vec(F5, {1, 3, 2}), make_vec(F5, {1, 2, 3})});
    REQUIRE(s1.dim() == 2);
    CHECK(subspace_eq(F5, s1, s2));

    Mat<PrimeField> m = s1.basis;
    auto copy = m;
    rref_inplace(F5, copy);
    CHECK(mat_eq(F5, m, copy));
}

TEST_CASE("solve_affine produces complete solution sets") {
    PrimeField F5(5);
    auto id = mat_identity(F5, 2);
    auto b = make_vec(F5, {3, 4});

    auto sol = solve_affine(F5, id, b);
    REQUIRE(sol.kind == SolveKind::Unique);
    CHECK(vec_eq(F5, sol.particular, b));

    auto zero = mat_zero(F5, 2, 2);
    auto hom = solve_affine(F5, zero, make_vec(F5, {0, 0}));
    REQUIRE(hom.kind == SolveKind::Family);
    CHECK(hom.homogeneous.dim() == 2);
    CHECK(vec_is_zero(F5, hom.particular));

    auto none = solve_affine(F5, zero, make_vec(F5, {1, 0}));
    CHECK(none.kind == SolveKind::Empty);

    // consistent underdetermined system: x + y = 1 over F_5
    auto row = make_mat(F5, {{1, 1}});
    auto fam = solve_affine(F5, row, make_vec(F5, {1}));
    REQUIRE(fam.kind == SolveKind::Family);
    CHECK(fam.homogeneous.dim() == 1);
    CHECK(vec_eq(F5, mat_vec(F5, row, fam.particular), make_vec(F5, {1})));
}

TEST_CASE("kernel respects rank-nullity") {
    PrimeField F7(7);
    auto m = make_mat(F7, {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
    auto ker = mat_kernel(F7, m);
    CHECK(mat_rank(F7, m) + ker.dim() == 3);
    for (std::size_t i = 0; i < ker.basis.rows; ++i) {
        Vec<PrimeField> v(3);
        for (std::size_t j = 0; j < 3; ++j) v[j] = ker.basis.at(i, j);
        CHECK(vec_is_zero(F7, mat_vec(F7, m, v)));
    }
}

TEST_CASE("inverse and determinant") {
    PrimeField F7(7);
    auto m = make_mat(F7, {{1, 2}, {3, 4}});
    CHECK(mat_det(F7, m) == F7.from_int(-2));
    auto inv = mat_inverse(F7, m);
    CHECK(mat_eq(F7, mat_mul(F7, m, inv), mat_identity(F7, 2)));
    CHECK(mat_eq(F7, mat_mul(F7, inv, m), mat_identity(F7, 2)));

    auto sing = make_mat(F7, {{1, 2}, {2, 4}});
    CHECK(mat_det(F7, sing) == F7.zero());
    try {
        mat_inverse(F7, sing);
        FAIL("expected SingularMatrix");
    } catch (const Error& e) {
        CHECK(e.code() == "SingularMatrix");
    }

    auto n = make_mat(F7, {{0, 5}, {1, 6}});
    CHECK(F7.eq(mat_det(F7, mat_mul(F7, m, n)), F7.mul(mat_det(F7, m), mat_det(F7, n))));
}

TEST_CASE("characteristic polynomial (division-free vs elimination)") {
    PrimeField F7(7);
    // companion matrix of x^3 + 2x + 5
    auto comp = make_mat(F7, {{0, 0, -5}, {1, 0, -2}, {0, 1, 0}});
    CHECK(poly_eq(F7, charpoly(F7, comp), make_poly(F7, {5, 2, 0, 1})));

    // diag(1,2,3) over Q -> (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    BigRational Q;
    auto d = make_mat(Q, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    CHECK(poly_eq(Q, charpoly(Q, d), make_poly(Q, {-6, 11, -6, 1})));

    // det cross-check: det(m) = (-1)^n * charpoly(0); charpoly is division-free,
    // mat_det uses elimination, so the two paths are independent
    std::vector<Mat<PrimeField>> samples = {
        comp,
        make_mat(F7, {{1, 2, 3}, {4, 5, 6}, {6, 6, 2}}),
        make_mat(F7, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
        mat_zero(F7, 3, 3),
    };
    for (const auto& m : samples) {
        auto cp = charpoly(F7, m);
        auto c0 = poly_eval(F7, cp, F7.zero());
        auto expect = mat_det(F7, m);
        if (m.rows % 2 == 1) expect = F7.neg(expect);
        CHECK(F7.eq(c0, expect));
    }

    CHECK(poly_eq(F7, charpoly(F7, mat_identity(F7, 2)), make_poly(F7, {1, -2, 1})));
}

TEST_CASE("eigenspaces and eigenvalues") {
    PrimeField F5(5), F7(7);
    auto d = make_mat(F5, {{1, 0}, {0, 2}});

    auto e2 = eigenspace(F5, d, F5.from_int(2));
    REQUIRE(e2.dim() == 1);
    CHECK(e2.basis.at(0, 0) == F5.zero());
    CHECK(e2.basis.at(0, 1) == F5.one());
    CHECK(eigenspace(F5, d, F5.from_int(3)).dim() == 0);

    // companion matrix of x^2 + 1; -1 is not a square mod 7 (squares are 0,1,2,4)
    for (std::uint64_t a = 0; a < 7; ++a)
        CHECK(!F7.eq(F7.mul(a, a), F7.from_int(-1)));
    auto c = make_mat(F7, {{0, -1}, {1, 0}});
    CHECK(eigenvalues(F7, c).empty());

    auto ev = eigenvalues(F5, d);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == F5.one());
    CHECK(ev[1] == F5.from_int(2));

    // every reported eigenvector satisfies m v = lam v exactly
    for (const auto& lam : ev) {
        auto es = eigenspace(F5, d, lam);
        for (std::size_t i = 0; i < es.basis.rows; ++i) {
            Vec<PrimeField> v(2);
            for (std::size_t j = 0; j < 2; ++j) v[j] = es.basis.at(i, j);
            auto lhs = mat_vec(F5, d, v);
            Vec<PrimeField> rhs = v;
            for (auto& x : rhs) x = F5.mul(lam, x);
            CHECK(vec_eq(F5, lhs, rhs));
        }
    }

    // q = 127 > 121 exercises the characteristic-polynomial path
    PrimeField F127(127);
    auto big = make_mat(F127, {{3, 0, 0}, {0, 5, 0}, {0, 0, 5}});
    auto bev = eigenvalues(F127, big);
    REQUIRE(bev.size() == 2);
    CHECK(bev[0] == F127.from_int(3));
    CHECK(bev[1] == F127.from_int(5));
    CHECK(eigenspace(F127, big, F127.from_int(5)).dim() == 2);

    BigRational Q;
    auto swap2 = make_mat(Q, {{0, 1}, {1, 0}});
    auto qev = eigenvalues(Q, swap2);
    REQUIRE(qev.size() == 2);
    CHECK(qev[0] == Q.from_int(-1));
    CHECK(qev[1] == Q.from_int(1));

    auto half = mat_zero(Q, 1, 1);
    half.at(0, 0) = Q.parse("1/2");
    auto hev = eigenvalues(Q, half);
    REQUIRE(hev.size() == 1);
    CHECK(Q.to_string(hev[0]) == "1/2");
}

TEST_CASE("spin closure") {
    PrimeField F5(5);

    // two-dimensional algebra with basis (e, e1):
    //   e e = e, e e1 = e1, e1 e = 2 e1, e1 e1 = e1
    // left/right multiplication operators in that basis:
    auto Le = mat_identity(F5, 2);
    auto Le1 = make_mat(F5, {{0, 0}, {2, 1}});
    auto Re = make_mat(F5, {{1, 0}, {0, 2}});
    auto Re1 = make_mat(F5, {{0, 0}, {1, 1}});
    auto full = spin(F5, {make_vec(F5, {1, 0})}, {Le, Le1, Re, Re1});
    CHECK(full.dim() == 2);

    auto lone = spin(F5, {make_vec(F5, {3, 1, 0})}, {});
    REQUIRE(lone.dim() == 1);
    CHECK(lone.basis.at(0, 0) == F5.one());  // canonicalized leading 1

    // e_i e_j = delta_ij e_i on two generators: <e_1> is a proper stable subspace
    auto L1 = make_mat(F5, {{1, 0}, {0, 0}});
    auto L2 = make_mat(F5, {{0, 0}, {0, 1}});
    auto ideal = spin(F5, {make_vec(F5, {1, 0})}, {L1, L2, L1, L2});
    CHECK(ideal.dim() == 1);
    CHECK(subspace_contains(F5, ideal, make_vec(F5, {1, 0})));
    CHECK(!subspace_contains(F5, ideal, make_vec(F5, {0, 1})));

    // stability: M v stays inside the result for every operator and basis row
    std::vector<Mat<PrimeField>> ops = {Le, Le1, Re, Re1};
    auto closed = spin(F5, {make_vec(F5, {0, 1})}, ops);
    for (const auto& op : ops)
        for (std::size_t i = 0; i < closed.basis.rows; ++i) {
            Vec<PrimeField> v(2);
            for (std::size_t j = 0; j < 2; ++j) v[j] = closed.basis.at(i, j);
            CHECK(subspace_contains(F5, closed, mat_vec(F5, op, v)));
        }
}

TEST_CASE("adjoint with respect to a pairing") {
    PrimeField F7(7);
    auto id3 = mat_identity(F7, 3);

    // permutation 0->1->2->0 as a matrix (columns are images)
    auto sigma = make_mat(F7, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    auto star = adjoint(F7, sigma, id3);
    CHECK(mat_eq(F7, star, mat_inverse(F7, sigma)));
    CHECK(mat_eq(F7, mat_inverse(F7, star), sigma));

    auto diag = make_mat(F7, {{2, 0}, {0, 3}});
    CHECK(mat_eq(F7, adjoint(F7, diag, mat_identity(F7, 2)), diag));

    // symmetric invertible pairing: adjoint is an involution
    auto P = make_mat(F7, {{1, 2, 0}, {2, 0, 1}, {0, 1, 3}});
    REQUIRE(!F7.is_zero(mat_det(F7, P)));
    auto g = make_mat(F7, {{1, 4, 2}, {0, 1, 5}, {3, 0, 1}});
    auto gstar = adjoint(F7, g, P);
    CHECK(mat_eq(F7, adjoint(F7, gstar, P), g));

    // defining identity on all basis pairs, also for a non-symmetric pairing
    auto Pn = make_mat(F7, {{1, 1, 0}, {0, 1, 1}, {1, 0, 3}});
    REQUIRE(!F7.is_zero(mat_det(F7, Pn)));
    for (const auto& pairing : {P, Pn}) {
        auto gs = adjoint(F7, g, pairing);
        auto lhs = mat_mul(F7, mat_transpose<PrimeField>(mat_mul(F7, g, id3)), pairing);
        auto rhs = mat_mul(F7, pairing, gs);
        // pairing(g e_i, e_j) = (g^T P)[i][j]; pairing(e_i, g* e_j) = (P g*)[i][j]
        CHECK(mat_eq(F7, lhs, rhs));
    }

    try {
        adjoint(F7, g, mat_zero(F7, 3, 3));
        FAIL("expected DegeneratePairing");
    } catch (const Error& e) {
        CHECK(e.code() == "DegeneratePairing");
    }
}

TEST_CASE("subspace membership and comparison") {
    PrimeField F7(7);
    auto s = subspace_from_rows(F7, 3, {make_vec(F7, {1, 0, 2}), make_vec(F7, {0, 1, 3})});
    CHECK(subspace_contains(F7, s, make_vec(F7, {1, 1, 5})));
    CHECK(!subspace_contains(F7, s, make_vec(F7, {0, 0, 1})));
    auto sub = subspace_from_rows(F7, 3, {make_vec(F7, {2, 3, 6})});
    CHECK(subspace_leq(F7, sub, s));
    CHECK(!subspace_leq(F7, s, sub));
    CHECK(subspace_eq(F7, subspace_zero(F7, 3), subspace_from_rows(F7, 3, {})));
    CHECK(subspace_full(F7, 3).dim() == 3);
}

TEST_CASE("matrix utilities") {
    PrimeField F5(5);
    auto m = make_mat(F5, {{1, 1}, {0, 1}});
    CHECK(mat_eq(F5, mat_pow(F5, m, 5), make_mat(F5, {{1, 5}, {0, 1}})));
    CHECK(mat_trace(F5, m) == F5.from_int(2));
    CHECK(mat_less(F5, mat_zero(F5, 2, 2), m));
    CHECK(!mat_less(F5, m, m));
    auto t = mat_transpose<PrimeField>(make_mat(F5, {{1, 2, 3}, {4, 0, 1}}));
    CHECK(t.rows == 3);
    CHECK(t.at(0, 1) == F5.from_int(4));
}
