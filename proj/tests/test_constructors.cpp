#include <doctest.h>

#include "oracle.hpp"
#include "solvlen/constructors.hpp"
#include "solvlen/error.hpp"
#include "solvlen/series.hpp"

using namespace solvlen;

TEST_CASE("symmetric and cyclic groups") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(derived_series(symmetric_group(4)).derived_length() == 3);
  CHECK(cyclic_group(3).order() == 3);
  CHECK(derived_series(cyclic_group(3)).derived_length() == 1);
  CHECK(symmetric_group(1).order() == 1);
  CHECK_THROWS_AS(symmetric_group(0), Error);
  CHECK_THROWS_AS(cyclic_group(0), Error);
}

TEST_CASE("matrix actions realize GL(2,3) and its affine extension") {
  MatrixGroupSpec gl23;
  gl23.p = 3;
  gl23.dim = 2;
  gl23.generators = {{{1, 1}, {0, 1}}, {{1, 0}, {1, 1}}, {{2, 0}, {0, 1}}};

  PermutationGroup lin = matrix_to_perm(gl23, MatrixAction::linear_nonzero);
  CHECK(lin.degree() == 8);
  CHECK(lin.order() ==
        oracle::closure_elements(8, lin.generators(), 100).size());
  CHECK(lin.order() == 48);

  PermutationGroup aff = matrix_to_perm(gl23, MatrixAction::affine);
  CHECK(aff.degree() == 9);
  CHECK(aff.order() == 432);

  // Identity-only spec in affine mode: just the 3^2 translations.
  MatrixGroupSpec id_spec;
  id_spec.p = 3;
  id_spec.dim = 2;
  id_spec.generators = {{{1, 0}, {0, 1}}};
  CHECK(matrix_to_perm(id_spec, MatrixAction::affine).order() == 9);

  MatrixGroupSpec singular;
  singular.p = 3;
  singular.dim = 2;
  singular.generators = {{{1, 1}, {1, 1}}};
  CHECK_THROWS_AS(matrix_to_perm(singular, MatrixAction::linear_all), Error);

  MatrixGroupSpec too_big;
  too_big.p = 7;
  too_big.dim = 7;
  CHECK_THROWS_AS(matrix_to_perm(too_big, MatrixAction::linear_all), Error);

  MatrixGroupSpec not_prime;
  not_prime.p = 6;
  not_prime.dim = 2;
  CHECK_THROWS_AS(matrix_to_perm(not_prime, MatrixAction::linear_all), Error);
}

TEST_CASE("vector enumeration order is least-significant-first") {
  // v -> v + e0 over F3^2 maps index i to i+1 within each base-3 block.
  MatrixGroupSpec id_spec;
  id_spec.p = 3;
  id_spec.dim = 2;
  id_spec.generators = {};
  PermutationGroup t = matrix_to_perm(id_spec, MatrixAction::affine);
  REQUIRE(t.generators().size() == 2);
  const Perm& t0 = t.generators()[0]; // v -> v + e0
  CHECK(t0[0] == 1);
  CHECK(t0[1] == 2);
  CHECK(t0[2] == 0);
  CHECK(t0[3] == 4);
  const Perm& t1 = t.generators()[1]; // v -> v + e1
  CHECK(t1[0] == 3);
  CHECK(t1[3] == 6);
  CHECK(t1[6] == 0);
}

TEST_CASE("named groups have the published orders") {
  CHECK(named_group(NamedGroup::G8).order() == 48);
  CHECK(named_group(NamedGroup::G9).order() == 432);
  CHECK(named_group(NamedGroup::H7).order() == 21);
  CHECK(named_group(NamedGroup::A3).order() == 3);
  CHECK(named_group(NamedGroup::S2).order() == 2);
  CHECK(named_group(NamedGroup::S3).order() == 6);
  CHECK(named_group(NamedGroup::S4).order() == 24);
  CHECK(named_group(NamedGroup::G8).is_transitive());
  CHECK(named_group(NamedGroup::G9).is_transitive());
  CHECK(named_group(NamedGroup::G9).degree() == 9);
  CHECK(derived_series(named_group(NamedGroup::H7)).derived_length() == 2);
  CHECK(parse_named_group("G9") == NamedGroup::G9);
  CHECK_THROWS_AS(parse_named_group("nope"), Error);
}

TEST_CASE("unitriangular groups") {
  PermutationGroup u42 = unitriangular(2, 4);
  CHECK(u42.degree() == 16);
  CHECK(u42.order() == 64); // 2^(4*3/2)
  CHECK(u42.generators().size() == 3); // n - 1 transvections
  CHECK(composition_length(u42) == 6);
  CHECK(derived_series(u42).derived_length() == 2);

  PermutationGroup u33 = unitriangular(3, 3);
  CHECK(u33.order() == 27);
  CHECK(derived_series(u33).derived_length() == 2);

  PermutationGroup u22 = unitriangular(2, 2);
  CHECK(u22.order() == 2);
  CHECK(derived_series(u22).derived_length() == 1);

  // Faithfulness: the permutation image has the full matrix-group order.
  CHECK(u42.order() ==
        oracle::closure_elements(16, u42.generators(), 100).size());
  CHECK(unitriangular(3, 4).order() == 729);

  CHECK_THROWS_AS(unitriangular(2, 17), Error);
}

TEST_CASE("matrix text parsing") {
  auto m = parse_matrix("1 1;0 1", 3);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::vector<uint32_t>{1, 1});
  CHECK(m[1] == std::vector<uint32_t>{0, 1});
  CHECK(parse_matrix("5 0;0 5", 3)[0][0] == 2); // residues reduced mod p
  CHECK_THROWS_AS(parse_matrix("1 1;0", 3), Error);
  CHECK_THROWS_AS(parse_matrix("", 3), Error);
  CHECK_THROWS_AS(parse_matrix("a b;c d", 3), Error);
}
