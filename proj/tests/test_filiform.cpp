#include <doctest.h>

#include <set>

#include "liegeo/catalog.hpp"
#include "liegeo/errors.hpp"
#include "liegeo/filiform.hpp"
#include "liegeo/random.hpp"

using namespace liegeo;

namespace {

Vector ints(std::initializer_list<long> v) { return Vector::from_ints(v); }

Matrix int_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> vs;
  for (auto r : rows) vs.push_back(Vector::from_ints(r));
  return Matrix::from_rows(vs, vs.front().size());
}

}  // namespace

TEST_CASE("standard filiform brackets") {
  const LieAlgebra l5 = standard_filiform(5);
  CHECK(l5.basis_bracket(1, 4) == Vector::unit(5, 5));
  CHECK(l5.basis_bracket(2, 3).is_zero());
  CHECK_THROWS_AS(standard_filiform(2), InvalidArgument);
  CHECK_THROWS_AS(filiform_LC({Scalar(1), Scalar(0)}), InvalidArgument);
}

TEST_CASE("filiform detection") {
  for (const auto& g : filiform_fixtures()) CHECK_MESSAGE(is_filiform(g).filiform, g.name());
  CHECK_FALSE(is_filiform(heis6_2center()).filiform);
  CHECK_FALSE(is_filiform(direct_sum(standard_filiform(3), LieAlgebra::abelian(1))).filiform);
  const auto v = is_filiform(dim6_example());
  REQUIRE(v.witness);
  CHECK(has_maximal_nilpotency_rank(dim6_example(), *v.witness));
}

TEST_CASE("irreg6: X1 - X2 is not of maximal nilpotency") {
  const Irreg6 irr = irreg6_example();
  CHECK(irr.e[0] == ints({1, -1, 0, 0, 0, 0}));
  CHECK(rank(power(irr.algebra.ad(irr.e[0]), 4)) == 0);
  CHECK_FALSE(has_maximal_nilpotency_rank(irr.algebra, irr.e[0]));
  CHECK(is_totally_geodesic(MetricLieAlgebra(irr.algebra, irr.metric), irr.h).totally_geodesic);
}

TEST_CASE("Vergne bases satisfy their relations") {
  for (const auto& g : filiform_fixtures()) {
    const VergneBasis vb = vergne_basis(g);
    CHECK_NOTHROW(verify_vergne_relations(g, vb));
    CHECK(rank(vb.matrix()) == g.dim());
  }
  CHECK_THROWS_AS(vergne_basis(heis6_2center()), InvalidArgument);
  CHECK(vergne_basis(standard_filiform(6)).alpha == 0);
}

TEST_CASE("maximal nilpotency in Vergne coordinates agrees with the rank test") {
  Rng rng(5);
  for (const auto& g : filiform_fixtures()) {
    if (g.dim() < 5) continue;
    const VergneBasis vb = vergne_basis(g);
    for (int t = 0; t < 20; ++t) {
      const Vector x = random_int_vector(rng, g.dim(), 2);
      CHECK(has_maximal_nilpotency(g, vb, x) == has_maximal_nilpotency_rank(g, x));
    }
  }
}

TEST_CASE("regularity report on an even-dimensional algebra") {
  const auto r = regularity_report(dim6_example(), 7);
  CHECK_FALSE(r.verdict.empty());
  CHECK_NOTHROW(verify_vergne_relations(dim6_example(), r.computed));
  if (r.regular_basis) CHECK(r.regular_basis->alpha == 0);
  CHECK(regularity_report(standard_filiform(6), 7).regular_basis_found);
}

TEST_CASE("L_C rescaling factors") {
  const std::vector<Scalar> c = {2, 3, 4};
  const Matrix f = lc_rescaling_map(c);
  CHECK(f == Matrix::diagonal(Vector{1, 1, 2, Scalar(3, 2), Scalar(8, 3)}));
  CHECK_THROWS_AS(lc_rescaling_map({Scalar(1), Scalar(0)}), InvalidArgument);
}

TEST_CASE("codimension-2 construction in dimension 5") {
  const Cd2f c = cd2f_construction(5);
  CHECK(cd2f_bracket_identity(c));
  CHECK(c.e[1] == ints({0, 1, 0, 1, 0}));
  CHECK(c.metric.gram() == int_rows({{1, 0, 0, 0, 0},
                                     {0, 2, 0, -1, 0},
                                     {0, 0, 1, 0, 0},
                                     {0, -1, 0, 1, 0},
                                     {0, 0, 0, 0, 1}}));
  CHECK(c.h.space() == Subspace::coordinate(5, {2, 3, 5}));
  CHECK(orthogonal_complement(c.metric, c.h.space()) == Subspace::span(5, {ints({1, 0, 0, 0, 0}), ints({0, 1, 0, 2, 0})}));
  const MetricLieAlgebra mg(c.algebra, c.metric);
  CHECK(is_totally_geodesic(mg, c.h).totally_geodesic);
  CHECK_FALSE(is_invariant_complement(mg, c.h));
}

TEST_CASE("codimension-2 construction stays totally geodesic") {
  for (std::size_t n = 4; n <= 9; ++n) {
    const Cd2f c = cd2f_construction(n);
    CHECK(cd2f_bracket_identity(c));
    CHECK(c.h.dim() == n - 2);
    CHECK(is_totally_geodesic(MetricLieAlgebra(c.algebra, c.metric), c.h).totally_geodesic);
  }
}

TEST_CASE("4-dimensional normal form") {
  const MetricLieAlgebra mg(standard_filiform(4), Metric(Matrix::diagonal(ints({1, 4, 1, 1}))));
  const FourDimNormalForm nf = normalize_4d(mg);
  CHECK(nf.alpha_sq_normalized() == Scalar(1, 4));
  CHECK(nf.gamma_sq_normalized() == 1);
  CHECK(nf.beta_sq_signed_normalized() == 0);
  CHECK(sgn(nf.alpha) > 0);
  CHECK(sgn(nf.gamma) > 0);
  CHECK_THROWS_AS(normalize_4d(MetricLieAlgebra(heis3())), InvalidArgument);
}

TEST_CASE("L4 with the standard metric: exactly two totally geodesic planes") {
  const LieAlgebra g = standard_filiform(4);
  const FourDimNormalForm nf = normalize_4d(MetricLieAlgebra(g));
  const auto planes = tg_2d_subalgebras_4d(g, nf);
  REQUIRE(planes.size() == 2);
  std::set<Subspace> got;
  for (const auto& p : planes) got.insert(p.space());
  CHECK(got.count(Subspace::coordinate(4, {2, 4})));
  CHECK(got.count(Subspace::span(4, {ints({0, 1, 0, -1}), ints({0, 0, 1, 0})})));
}

TEST_CASE("the 4-dimensional geodesic cone matches the exact defect") {
  Rng rng(3);
  const LieAlgebra g = dim4_beta();
  const MetricLieAlgebra mg(g, Metric(random_spd_gram(rng, 4)));
  const FourDimNormalForm nf = normalize_4d(mg);
  const MetricLieAlgebra in = nf.in_basis(g);
  for (int t = 0; t < 50; ++t) {
    const Vector a = random_int_vector(rng, 4, 2);
    if (a.is_zero()) continue;
    CHECK(geodesic_4d(nf, a) == is_geodesic(in, a).geodesic);
  }
}

TEST_CASE("standard filiform recognition") {
  CHECK(is_standard_filiform(standard_filiform(7)));
  CHECK(is_standard_filiform(filiform_LC({Scalar(2), Scalar(3), Scalar(4)})));
  CHECK_FALSE(is_standard_filiform(dim6_example()));
}

TEST_CASE("Heisenberg-type condition") {
  CHECK(heis_condition_b(heis3(), 1).holds);
  CHECK(heis_condition_b(heis6_2center(), 1).holds);
  const auto l4 = heis_condition_b(standard_filiform(4), 1);
  CHECK_FALSE(l4.two_step);
  CHECK_FALSE(l4.holds);
  const auto d = heis_condition_b(direct_sum(heis3(), heis3()), 1);
  CHECK(d.two_step);
  CHECK_FALSE(d.holds);
  CHECK(d.counterexample);
}
