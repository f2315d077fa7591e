#include <doctest.h>

#include "liegeo/catalog.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/filiform.hpp"
#include "liegeo/metric.hpp"

using namespace liegeo;

namespace {

Vector ints(std::initializer_list<long> v) { return Vector::from_ints(v); }

Matrix int_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> vs;
  for (auto r : rows) vs.push_back(Vector::from_ints(r));
  return Matrix::from_rows(vs, vs.front().size());
}

}  // namespace

TEST_CASE("metric construction rejects non-SPD Gram matrices") {
  CHECK_THROWS_AS(Metric(int_rows({{1, 2}, {2, 1}})), InvalidArgument);
  CHECK_THROWS_AS(Metric(int_rows({{1, 1}, {0, 1}})), InvalidArgument);
  CHECK_THROWS_AS(Metric(int_rows({{0, 0}, {0, 1}})), InvalidArgument);
  const Metric m(int_rows({{2, 1}, {1, 1}}));
  CHECK(m.inner(ints({1, 0}), ints({0, 1})) == 1);
  CHECK(m.raise(m.lower(ints({3, -2}))) == ints({3, -2}));
  CHECK(Metric::standard(3).is_standard());
}

TEST_CASE("orthogonal complement and projection") {
  const Metric m(int_rows({{2, 1, 0}, {1, 2, 0}, {0, 0, 1}}));
  const Subspace w = Subspace::coordinate(3, {1});
  const Subspace perp = orthogonal_complement(m, w);
  CHECK(perp == Subspace::span(3, {ints({1, -2, 0}), ints({0, 0, 1})}));
  const Vector x = ints({0, 1, 5});
  const Vector p = project(m, w, x);
  CHECK(p == Vector{Scalar(1, 2), 0, 0});
  CHECK(m.inner(x - p, Vector::unit(3, 1)) == 0);
}

TEST_CASE("Levi-Civita connection on the Heisenberg algebra") {
  const MetricLieAlgebra mg(standard_filiform(3));
  CHECK(levi_civita(mg, Vector::unit(3, 1), Vector::unit(3, 2)) == Vector{0, 0, Scalar(1, 2)});
  CHECK(levi_civita(mg, Vector::unit(3, 1), Vector::unit(3, 1)).is_zero());
  // torsion free
  const Vector x = ints({1, 2, -1}), y = ints({0, 3, 1});
  CHECK(levi_civita(mg, x, y) - levi_civita(mg, y, x) == mg.algebra.bracket(x, y));
}

TEST_CASE("so3 with principal moments 1, 2, 3 has the axes as geodesics") {
  const MetricLieAlgebra mg(so3(), Metric(Matrix::diagonal(ints({1, 2, 3}))));
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(geodesic_defect(mg, Vector::unit(3, i)).is_zero());
    CHECK(is_geodesic(mg, Vector::unit(3, i)).geodesic);
  }
  CHECK_FALSE(is_geodesic(mg, ints({1, 1, 0})).geodesic);
}

TEST_CASE("solvable exp algebra: Y is not a geodesic") {
  const MetricLieAlgebra mg(solv_exp());
  const auto r = is_geodesic(mg, Vector::unit(3, 2));
  CHECK_FALSE(r.geodesic);
  CHECK(r.defect == ints({1, 0, 0}));
  CHECK(levi_civita(mg, Vector::unit(3, 2), Vector::unit(3, 2)) == ints({1, 0, 0}));
  CHECK(r.residual_norm_sq == 1);
  CHECK(is_geodesic(mg, Vector::unit(3, 1)).geodesic);
  CHECK_THROWS_AS(is_geodesic(mg, Vector::zero(3)), InvalidArgument);
}

TEST_CASE("totally geodesic test with witness") {
  const MetricLieAlgebra mg(standard_filiform(4));
  const auto bad = is_totally_geodesic(mg, Subspace::coordinate(4, {2, 3, 4}));
  CHECK_FALSE(bad.totally_geodesic);
  REQUIRE(bad.witness);
  CHECK(bad.witness->value != 0);

  const auto r = is_totally_geodesic(mg, Subspace::coordinate(4, {2, 4}));
  CHECK(r.totally_geodesic);
  CHECK_FALSE(r.witness);

  const MetricLieAlgebra m3(standard_filiform(3));
  CHECK_THROWS_AS(is_totally_geodesic(m3, Subspace::coordinate(3, {1, 2})), InvalidArgument);
}

TEST_CASE("the L4 witness value for X1, X2, X3") {
  const LieAlgebra g = standard_filiform(4);
  const Metric m = Metric::standard(4);
  const Vector x1 = Vector::unit(4, 1), x2 = Vector::unit(4, 2), x3 = Vector::unit(4, 3);
  CHECK(m.inner(g.bracket(x1, x2), x3) + m.inner(g.bracket(x1, x3), x2) == 1);
}

TEST_CASE("bi-invariance") {
  CHECK(is_bi_invariant(MetricLieAlgebra(so3())));
  CHECK(is_bi_invariant(MetricLieAlgebra(LieAlgebra::abelian(3))));
  CHECK_FALSE(is_bi_invariant(MetricLieAlgebra(standard_filiform(3))));
  const LieAlgebra l3 = standard_filiform(3);
  const Metric m = Metric::standard(3);
  CHECK(m.inner(l3.bracket(Vector::unit(3, 1), Vector::unit(3, 2)), Vector::unit(3, 3)) +
            m.inner(l3.bracket(Vector::unit(3, 1), Vector::unit(3, 3)), Vector::unit(3, 2)) ==
        1);
}

TEST_CASE("Killing forms") {
  CHECK(killing_metric(so3()).gram() == 2 * Matrix::identity(3));
  CHECK(killing_form(sl2()) == int_rows({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
  CHECK_THROWS_AS(killing_metric(sl2()), InvalidArgument);
  CHECK(killing_form(standard_filiform(5)).is_zero());
}

TEST_CASE("downward Gram-Schmidt") {
  Matrix g = Matrix::identity(4);
  g(1, 2) = Scalar(1, 2);
  g(2, 1) = Scalar(1, 2);
  const Metric m(g);
  std::vector<Vector> b;
  for (std::size_t i = 1; i <= 4; ++i) b.push_back(Vector::unit(4, i));
  const auto e = gram_schmidt_adapted(m, b);
  CHECK(e[0] == Vector::unit(4, 1));
  CHECK(e[1] == Vector{0, 1, Scalar(-1, 2), 0});
  CHECK(e[2] == Vector::unit(4, 3));
  CHECK(e[3] == Vector::unit(4, 4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(m.inner(e[i], e[j]) == 0);
}

TEST_CASE("constructing a metric that makes a vector geodesic") {
  const LieAlgebra g = standard_filiform(5);
  const Vector y = ints({1, 2, 0, -1, 3});
  const Metric m = construct_geodesic_metric(g, y);
  CHECK(is_geodesic(MetricLieAlgebra(g, m), y).geodesic);

  try {
    construct_geodesic_metric(solv_exp(), Vector::unit(3, 2));
    FAIL("expected NoGeodesicMetric");
  } catch (const NoGeodesicMetric& e) {
    CHECK(solv_exp().bracket(e.witness(), Vector::unit(3, 2)) == Vector::unit(3, 2));
  }
  CHECK(is_geodesic(MetricLieAlgebra(solv_exp(), construct_geodesic_metric(solv_exp(), Vector::unit(3, 1))),
                    Vector::unit(3, 1))
            .geodesic);
}

TEST_CASE("invariant complements and the phi, psi maps") {
  const MetricLieAlgebra mg(standard_filiform(4));
  const Subalgebra h(mg.algebra, Subspace::coordinate(4, {2, 4}));
  CHECK(is_invariant_complement(mg, h));
  const Matrix psi = psi_map(mg, h, Vector::unit(4, 2));
  CHECK(psi.rows() == 2);
  CHECK(psi.cols() == 2);
  const MetricLieAlgebra sum(direct_sum(standard_filiform(3), LieAlgebra::abelian(1)));
  const Subalgebra ideal(sum.algebra, Subspace::coordinate(4, {1, 2, 3}));
  CHECK(is_invariant_complement(sum, ideal));
  CHECK(is_totally_geodesic(sum, ideal).totally_geodesic);
  CHECK(is_totally_geodesic(sum, ideal).complement_invariant);
}

TEST_CASE("restricted Gram matrix") {
  const Metric m(Matrix::diagonal(ints({1, 2, 3})));
  CHECK(restricted_gram(m, Subspace::span(3, {ints({1, 1, 0}), ints({0, 0, 1})})) ==
        int_rows({{3, 0}, {0, 3}}));
}
