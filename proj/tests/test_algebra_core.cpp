#include <doctest.h>

#include "liegeo/catalog.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/random.hpp"

using namespace liegeo;

namespace {

Vector ints(std::initializer_list<long> v) { return Vector::from_ints(v); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_scalar("-3/6") == Scalar(-1, 2));
  CHECK(to_string(parse_scalar("4/2")) == "2");
  CHECK_THROWS_AS(parse_scalar("1/0"), InvalidArgument);
  CHECK(parse_vector("1, -1/2, 0") == Vector{1, Scalar(-1, 2), 0});
  CHECK(to_string(Vector{1, Scalar(-1, 2)}) == "(1, -1/2)");
}

TEST_CASE("row reduction, kernel and inverse") {
  Matrix m = Matrix::from_rows({ints({1, 2, 3}), ints({2, 4, 6}), ints({1, 0, 1})}, 3);
  CHECK(rank(m) == 2);
  const Matrix k = kernel(m);
  REQUIRE(k.rows() == 1);
  CHECK((m * k.row(0)).is_zero());
  CHECK_FALSE(inverse(m).has_value());
  CHECK(determinant(m) == 0);

  const Matrix a = Matrix::from_rows({ints({2, 1}), ints({1, 1})}, 2);
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(2));
  CHECK(leading_principal_minors(a) == std::vector<Scalar>{2, 1});
}

TEST_CASE("particular solution keeps free variables at zero") {
  const Matrix m = Matrix::from_rows({ints({1, 1, 0}), ints({0, 0, 1})}, 3);
  const auto x = particular_solution(m, ints({2, 5}));
  REQUIRE(x);
  CHECK(*x == ints({2, 0, 5}));
  const Matrix bad = Matrix::from_rows({ints({1, 1}), ints({2, 2})}, 2);
  CHECK_FALSE(particular_solution(bad, ints({1, 1})).has_value());
}

TEST_CASE("subspaces are canonical") {
  const Subspace a = Subspace::span(3, {ints({1, 1, 0}), ints({0, 2, 2})});
  const Subspace b = Subspace::span(3, {ints({1, 0, -1}), ints({0, 1, 1}), ints({1, 1, 0})});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(ints({2, 3, 1})));
  CHECK_FALSE(a.contains(ints({0, 0, 1})));
  CHECK(a.coordinates(ints({2, 3, 1})) == ints({2, 3}));
  const Subspace c = Subspace::coordinate(3, {3});
  CHECK((a + c).is_whole());
  CHECK(a.intersect(Subspace::coordinate(3, {1, 2})).dim() == 1);
}

TEST_CASE("Jacobi identity on catalog entries and an injected failure") {
  for (const auto& g : all_fixtures()) CHECK_MESSAGE(verify_jacobi(g).holds, g.name());
  CHECK(verify_jacobi(dim6_example()).holds);

  const LieAlgebra broken = LieAlgebra::Builder(4).add(1, 2, 3, 1).add(1, 3, 4, 1).add(2, 3, 3, 1).build(JacobiCheck::skip);
  const auto v = verify_jacobi(broken);
  CHECK_FALSE(v.holds);
  REQUIRE(v.triple);
  CHECK(*v.triple == std::array<std::size_t, 3>{1, 2, 3});
  CHECK(v.residual == ints({0, 0, 0, -1}));
  CHECK_THROWS_AS(LieAlgebra::Builder(4).add(1, 2, 3, 1).add(1, 3, 4, 1).add(2, 3, 3, 1).build(), InvalidArgument);
}

TEST_CASE("builder rejects the diagonal and stores antisymmetrically") {
  CHECK_THROWS_AS(LieAlgebra::Builder(3).add(2, 2, 1, 1), InvalidArgument);
  const LieAlgebra g = LieAlgebra::Builder(3).add(2, 1, 3, 1).build();
  CHECK(g.basis_bracket(1, 2) == ints({0, 0, -1}));
  CHECK(g.basis_bracket(2, 1) == ints({0, 0, 1}));
}

TEST_CASE("lower central series of L4") {
  const auto s = lower_central_series(standard_filiform(4));
  REQUIRE(s.size() == 4);
  CHECK(s[0].is_whole());
  CHECK(s[1] == Subspace::coordinate(4, {3, 4}));
  CHECK(s[2] == Subspace::coordinate(4, {4}));
  CHECK(s[3].is_zero());
  const auto nil = is_nilpotent(standard_filiform(4));
  CHECK(nil.nilpotent);
  CHECK(nil.nilpotency_class == 3);
  CHECK_FALSE(is_nilpotent(so3()).nilpotent);
  CHECK_FALSE(is_nilpotent(solv_exp()).nilpotent);
}

TEST_CASE("ad matrices and derived data") {
  const LieAlgebra l3 = standard_filiform(3);
  CHECK(rank(l3.ad(Vector::unit(3, 1))) == 1);
  const LieAlgebra d6 = dim6_example();
  CHECK(power(d6.ad(Vector::unit(6, 1)), 4) * Vector::unit(6, 2) == Vector::unit(6, 6));
  CHECK(center(direct_sum(l3, LieAlgebra::abelian(1))).dim() == 2);
  CHECK(derived_algebra(so3()).is_whole());
  CHECK(center(heis6_2center()) == Subspace::coordinate(6, {5, 6}));
}

TEST_CASE("subalgebras, ideals and generated closures") {
  const LieAlgebra l4 = standard_filiform(4);
  CHECK(is_subalgebra(l4, Subspace::coordinate(4, {2, 4})));
  CHECK_FALSE(is_subalgebra(l4, Subspace::coordinate(4, {1, 2})));
  CHECK_THROWS_AS(Subalgebra(l4, Subspace::coordinate(4, {1, 2})), InvalidArgument);
  CHECK(is_ideal(l4, Subspace::coordinate(4, {2, 3, 4})));
  CHECK(generated_subalgebra(l4, {Vector::unit(4, 1), Vector::unit(4, 2)}).space().is_whole());
  CHECK_FALSE(generated_subalgebra_capped(l4, {Vector::unit(4, 1), Vector::unit(4, 2)}, 3).has_value());

  const Irreg6 irr = irreg6_example();
  const auto gen = generated_subalgebra(irr.algebra, {irr.e[0], irr.e[2], irr.e[3]}).space();
  CHECK(gen == Subspace::span(6, {ints({1, -1, 0, 0, 0, 0}), Vector::unit(6, 3), Vector::unit(6, 4),
                                  Vector::unit(6, 5), Vector::unit(6, 6)}));
}

TEST_CASE("change of basis and quotients") {
  Rng rng(11);
  const LieAlgebra g = dim6_example();
  const Matrix m = random_invertible(rng, 6);
  const LieAlgebra h = change_basis(g, m);
  CHECK(verify_jacobi(h).holds);
  CHECK(is_nilpotent(h).nilpotency_class == is_nilpotent(g).nilpotency_class);
  const Quotient q = quotient(standard_filiform(4), Subspace::coordinate(4, {4}));
  CHECK(q.algebra.dim() == 3);
  CHECK(verify_jacobi(q.algebra).holds);
  CHECK(derived_algebra(q.algebra).dim() == 1);
}

TEST_CASE("a proper subalgebra never surjects onto the abelianization") {
  const LieAlgebra l5 = standard_filiform(5);
  const Subalgebra a(l5, Subspace::coordinate(5, {2, 3, 4, 5}));
  const auto v = abelianization_surjectivity_check(l5, a);
  CHECK_FALSE(v.surjective);
  CHECK_THROWS_AS(abelianization_surjectivity_check(so3(), Subalgebra(so3(), Subspace::coordinate(3, {1}))),
                  InvalidArgument);
}
